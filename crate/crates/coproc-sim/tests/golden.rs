//! The simulator must compute exactly what the portable KEM implementation
//! computes: same public key, same ciphertext, same shared secret — and the
//! same silent degradation on tampered ciphertexts.

mod common;

use std::collections::BTreeMap;

use coproc_sim::{run, Program};
use rand::rngs::StdRng;
use rand::{RngCore, SeedableRng};
use saber_kem::{kem_decaps, kem_encaps, kem_keygen, Ciphertext, SecretKey};
use saber_math::SABER;

fn inputs(pairs: &[(&str, &[u8])]) -> BTreeMap<String, Vec<u8>> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.to_vec())).collect()
}

fn rand32(rng: &mut StdRng) -> [u8; 32] {
    let mut out = [0u8; 32];
    rng.fill_bytes(&mut out);
    out
}

#[test]
fn keygen_matches_the_portable_model() {
    let profile = common::dp4();
    let program = Program::keygen();
    let mut rng = StdRng::seed_from_u64(0x6b67);
    for _ in 0..10 {
        let (seed_a, seed_s, z) = (rand32(&mut rng), rand32(&mut rng), rand32(&mut rng));
        let (pk, sk) = kem_keygen(&SABER, &seed_a, &seed_s, &z);
        let res = run(
            &profile,
            &program,
            &inputs(&[("seed_a", &seed_a), ("seed_s", &seed_s), ("z", &z)]),
        )
        .unwrap();
        assert_eq!(res.outputs["pk"], pk.to_bytes());
        assert_eq!(res.outputs["sk_s"], sk.s_hw_bytes());
        assert_eq!(res.outputs["sk_pkh"], sk.pk_hash.to_vec());
        assert_eq!(res.outputs["sk_z"], z.to_vec());
    }
}

#[test]
fn encaps_matches_the_portable_model() {
    let profile = common::dp4();
    let program = Program::encaps();
    let mut rng = StdRng::seed_from_u64(0x656e);
    for _ in 0..10 {
        let (seed_a, seed_s, z) = (rand32(&mut rng), rand32(&mut rng), rand32(&mut rng));
        let m_seed = rand32(&mut rng);
        let (pk, _) = kem_keygen(&SABER, &seed_a, &seed_s, &z);
        let (ct, ss) = kem_encaps(&SABER, &pk, &m_seed).unwrap();
        let res = run(
            &profile,
            &program,
            &inputs(&[("pk", &pk.to_bytes()), ("m_seed", &m_seed)]),
        )
        .unwrap();
        assert_eq!(res.outputs["ct"], ct.to_bytes());
        assert_eq!(res.outputs["ss"], ss.to_vec());
    }
}

#[test]
fn decaps_matches_the_portable_model_on_valid_and_tampered_input() {
    let profile = common::dp4();
    let program = Program::decaps();
    let mut rng = StdRng::seed_from_u64(0x6465);
    for trial in 0..10 {
        let (seed_a, seed_s, z) = (rand32(&mut rng), rand32(&mut rng), rand32(&mut rng));
        let m_seed = rand32(&mut rng);
        let (pk, sk) = kem_keygen(&SABER, &seed_a, &seed_s, &z);
        let (ct, ss) = kem_encaps(&SABER, &pk, &m_seed).unwrap();

        let mut ct_bytes = ct.to_bytes();
        if trial % 2 == 1 {
            // flip one bit, alternating between the vector part and the
            // message part of the ciphertext
            let pos = if trial % 4 == 1 { 17 } else { SABER.ct_bytes - 3 };
            ct_bytes[pos] ^= 0x40;
        }
        let golden_ss = kem_decaps(
            &SABER,
            &sk,
            &Ciphertext::from_bytes(&SABER, &ct_bytes).unwrap(),
        )
        .unwrap();

        let res = run(
            &profile,
            &program,
            &inputs(&[
                ("sk_s", &sk.s_hw_bytes()),
                ("ct", &ct_bytes),
                ("sk_z", &z),
                ("sk_pk", &pk.to_bytes()),
                ("sk_pkh", &sk.pk_hash),
            ]),
        )
        .unwrap();
        assert_eq!(res.outputs["ss"], golden_ss.to_vec(), "trial {trial}");
        if trial % 2 == 1 {
            assert_ne!(res.outputs["ss"], ss.to_vec(), "tampering must change the secret");
        } else {
            assert_eq!(res.outputs["ss"], ss.to_vec());
        }
    }
}

#[test]
fn full_chain_through_the_simulator_agrees_on_every_design_point() {
    let mut rng = StdRng::seed_from_u64(0x616c6c);
    let (seed_a, seed_s, z) = (rand32(&mut rng), rand32(&mut rng), rand32(&mut rng));
    let m_seed = rand32(&mut rng);
    for profile in common::shipped() {
        let kg = run(
            &profile,
            &Program::keygen(),
            &inputs(&[("seed_a", &seed_a), ("seed_s", &seed_s), ("z", &z)]),
        )
        .unwrap();
        let enc = run(
            &profile,
            &Program::encaps(),
            &inputs(&[("pk", &kg.outputs["pk"]), ("m_seed", &m_seed)]),
        )
        .unwrap();
        let dec = run(
            &profile,
            &Program::decaps(),
            &inputs(&[
                ("sk_s", &kg.outputs["sk_s"]),
                ("ct", &enc.outputs["ct"]),
                ("sk_z", &kg.outputs["sk_z"]),
                ("sk_pk", &kg.outputs["pk"]),
                ("sk_pkh", &kg.outputs["sk_pkh"]),
            ]),
        )
        .unwrap();
        assert_eq!(dec.outputs["ss"], enc.outputs["ss"], "profile {}", profile.name);

        // the scratchpad organization must never change the computation
        let (golden_pk, golden_sk) = kem_keygen(&SABER, &seed_a, &seed_s, &z);
        assert_eq!(kg.outputs["pk"], golden_pk.to_bytes(), "profile {}", profile.name);
        assert_eq!(kg.outputs["sk_s"], golden_sk.s_hw_bytes(), "profile {}", profile.name);
    }
}

#[test]
fn secret_key_interchange_reaches_the_simulator_intact() {
    // The portable model's interchange secret key carries everything the
    // decapsulation program needs; reconstruct the program inputs from it.
    let mut rng = StdRng::seed_from_u64(0x736b);
    let (seed_a, seed_s, z) = (rand32(&mut rng), rand32(&mut rng), rand32(&mut rng));
    let (pk, sk) = kem_keygen(&SABER, &seed_a, &seed_s, &z);
    let wire = sk.to_bytes();
    let parsed = SecretKey::from_bytes(&SABER, &wire).unwrap();
    assert_eq!(parsed.s_hw_bytes(), sk.s_hw_bytes());
    assert_eq!(parsed.pk.to_bytes(), pk.to_bytes());
}
