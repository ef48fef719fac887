//! The CCA-secure KEM: Fujisaki-Okamoto transform with implicit rejection
//! over the IND-CPA core.

use crate::pke::{pke_dec, pke_enc, pke_keygen, Ciphertext, PublicKey};
use crate::verify::{cmov, verify};
use crate::SaberKemError;
use keccak::{sha3_256, sha3_512};
use saber_math::{pack_vec, secret_to_bytes, unpack_vec, PolyVec, SaberParams, EPS_Q};

/// Decapsulation key: the secret vector, a full copy of the public key, the
/// cached public-key hash, and the implicit-rejection seed `z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SecretKey {
    pub s: PolyVec,
    pub pk: PublicKey,
    pub pk_hash: [u8; 32],
    pub z: [u8; 32],
}

impl SecretKey {
    /// Interchange format: 13-bit packed secret, public key, pk hash, z.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = pack_vec(&self.s, EPS_Q).expect("13 is a supported width");
        out.extend_from_slice(&self.pk.to_bytes());
        out.extend_from_slice(&self.pk_hash);
        out.extend_from_slice(&self.z);
        out
    }

    /// The secret vector alone, in the hardware's 14-bit signed storage form
    /// (length [`SaberParams::sk_bytes`]).
    pub fn s_hw_bytes(&self) -> Vec<u8> {
        secret_to_bytes(&self.s)
    }

    /// Parse the interchange format for the given parameter set.
    pub fn from_bytes(params: &SaberParams, bytes: &[u8]) -> Result<Self, SaberKemError> {
        if bytes.len() != params.kem_sk_bytes {
            return Err(SaberKemError::Length {
                what: "secret key",
                expected: params.kem_sk_bytes,
                got: bytes.len(),
            });
        }
        let s_len = params.l * SaberParams::poly_q_bytes();
        let s = unpack_vec(&bytes[..s_len], params.l, EPS_Q)?;
        let pk = PublicKey::from_bytes(params, &bytes[s_len..s_len + params.pk_bytes])?;
        let mut pk_hash = [0u8; 32];
        let mut z = [0u8; 32];
        let tail = &bytes[s_len + params.pk_bytes..];
        pk_hash.copy_from_slice(&tail[..32]);
        z.copy_from_slice(&tail[32..]);
        Ok(SecretKey { s, pk, pk_hash, z })
    }
}

/// Generate a keypair from three 32-byte seeds: matrix seed (hashed inside
/// the CPA core), secret seed, and the implicit-rejection seed `z`.
pub fn kem_keygen(
    params: &SaberParams,
    seed_a_raw: &[u8; 32],
    seed_s: &[u8; 32],
    z: &[u8; 32],
) -> (PublicKey, SecretKey) {
    let (pk, s) = pke_keygen(params, seed_a_raw, seed_s);
    let pk_hash = sha3_256(&pk.to_bytes());
    let sk = SecretKey { s, pk: pk.clone(), pk_hash, z: *z };
    (pk, sk)
}

/// Encapsulate: derive a shared secret and the ciphertext that transports
/// it. `m_seed` is the 32 bytes of fresh randomness; it is hashed before use
/// so raw RNG output never appears in the ciphertext derivation.
pub fn kem_encaps(
    params: &SaberParams,
    pk: &PublicKey,
    m_seed: &[u8; 32],
) -> Result<(Ciphertext, [u8; 32]), SaberKemError> {
    let m = sha3_256(m_seed);
    let pk_hash = sha3_256(&pk.to_bytes());
    let mut buf = [0u8; 64];
    buf[..32].copy_from_slice(&m);
    buf[32..].copy_from_slice(&pk_hash);
    let kr = sha3_512(&buf);
    let mut r = [0u8; 32];
    r.copy_from_slice(&kr[32..]);
    let ct = pke_enc(params, &m, &r, pk)?;
    let mut tail = [0u8; 64];
    tail[..32].copy_from_slice(&kr[..32]);
    tail[32..].copy_from_slice(&sha3_256(&ct.to_bytes()));
    Ok((ct, sha3_256(&tail)))
}

/// Decapsulate with implicit rejection: re-encrypt the decrypted message and
/// compare; on mismatch the shared secret silently degrades to a PRF of `z`
/// and the ciphertext.
pub fn kem_decaps(
    params: &SaberParams,
    sk: &SecretKey,
    ct: &Ciphertext,
) -> Result<[u8; 32], SaberKemError> {
    let m = pke_dec(params, &sk.s, ct)?;
    let mut buf = [0u8; 64];
    buf[..32].copy_from_slice(&m);
    buf[32..].copy_from_slice(&sk.pk_hash);
    let kr = sha3_512(&buf);
    let mut r = [0u8; 32];
    r.copy_from_slice(&kr[32..]);
    let recomputed = pke_enc(params, &m, &r, &sk.pk)?;
    let ct_bytes = ct.to_bytes();
    let flag = verify(&ct_bytes, &recomputed.to_bytes());
    // preload the candidate with z, then overwrite with K-hat only when the
    // re-encryption matched (flag == 0 means equal, which is when cmov copies)
    let mut tail = [0u8; 64];
    tail[..32].copy_from_slice(&sk.z);
    tail[32..].copy_from_slice(&sha3_256(&ct_bytes));
    cmov(&mut tail[..32], &kr[..32], flag);
    Ok(sha3_256(&tail))
}
