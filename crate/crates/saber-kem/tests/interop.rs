//! Cross-checks against an independent implementation of the same KEM:
//! keys, ciphertexts and shared secrets must interoperate in both
//! directions for every parameter set.

use pqcrypto_traits::kem::{Ciphertext as _, PublicKey as _, SecretKey as _, SharedSecret as _};

macro_rules! interop {
    ($name:ident, $m:ident, $params:expr) => {
        #[test]
        fn $name() {
            let params = $params;
            for trial in 0u8..5 {
                // their keypair -> our encapsulation -> their decapsulation
                let (pk_ref, sk_ref) = pqcrypto_saber::$m::keypair();
                let pk = saber_kem::PublicKey::from_bytes(params, pk_ref.as_bytes()).unwrap();
                let m_seed = [trial.wrapping_mul(3).wrapping_add(1); 32];
                let (ct, ss) = saber_kem::kem_encaps(params, &pk, &m_seed).unwrap();
                let ct_ref = pqcrypto_saber::$m::Ciphertext::from_bytes(&ct.to_bytes()).unwrap();
                let ss_ref = pqcrypto_saber::$m::decapsulate(&ct_ref, &sk_ref);
                assert_eq!(ss_ref.as_bytes(), ss.as_slice(), "ours -> theirs, trial {trial}");

                // their encapsulation -> our decapsulation via parsed secret key
                let (ss2_ref, ct2_ref) = pqcrypto_saber::$m::encapsulate(&pk_ref);
                let sk = saber_kem::SecretKey::from_bytes(params, sk_ref.as_bytes()).unwrap();
                let ct2 =
                    saber_kem::Ciphertext::from_bytes(params, ct2_ref.as_bytes()).unwrap();
                let ss2 = saber_kem::kem_decaps(params, &sk, &ct2).unwrap();
                assert_eq!(ss2_ref.as_bytes(), ss2.as_slice(), "theirs -> ours, trial {trial}");
            }
        }
    };
}

interop!(light_variant_interops, lightsaber, &saber_math::LIGHT_SABER);
interop!(middle_variant_interops, saber, &saber_math::SABER);
interop!(high_variant_interops, firesaber, &saber_math::FIRE_SABER);
