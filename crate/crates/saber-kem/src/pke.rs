//! The IND-CPA public-key core: rounded Mod-LWR encryption.
//!
//! All arithmetic runs on residues mod q = 2^13; values that conceptually
//! live mod p = 2^10 are handled by masking after the fact, which is exact
//! because p divides q. Wire formats pack the rounded vector first, then the
//! seed (public keys) or the message part (ciphertexts).

use crate::cbd::cbd_sample;
use crate::SaberKemError;
use keccak::shake128;
use saber_math::{
    add_round, inner_prod, matvec_mul, pack_poly, pack_vec, unpack_poly, unpack_vec, Poly,
    PolyMatrix, PolyVec, SaberParams, EPS_P, EPS_Q,
};

/// Expand a 32-byte seed into the public l x l matrix, row major: the SHAKE
/// output stream is split into l*l polynomials packed at 13 bits, and entry
/// (i, j) is chunk i*l + j.
pub fn gen_matrix(params: &SaberParams, seed: &[u8; 32]) -> PolyMatrix {
    let l = params.l;
    let per = SaberParams::poly_q_bytes();
    let stream = shake128(seed, l * l * per);
    let rows = stream
        .chunks_exact(l * per)
        .map(|row| unpack_vec(row, l, EPS_Q).expect("stream length is exact"))
        .collect();
    PolyMatrix { rows }
}

/// Expand a 32-byte seed into a secret vector: SHAKE the seed to coin bytes,
/// then run the centered binomial sampler.
pub fn gen_secret(params: &SaberParams, seed: &[u8; 32]) -> PolyVec {
    let coins = shake128(seed, params.coin_bytes);
    cbd_sample(params, &coins).expect("coin length is exact")
}

/// Public key: rounded vector `b` (packed at 10 bits) plus the matrix seed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PublicKey {
    pub seed_a: [u8; 32],
    pub b_packed: Vec<u8>,
}

impl PublicKey {
    /// Wire format: packed `b` first, seed last.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = self.b_packed.clone();
        out.extend_from_slice(&self.seed_a);
        out
    }

    /// Parse the wire format for the given parameter set.
    pub fn from_bytes(params: &SaberParams, bytes: &[u8]) -> Result<Self, SaberKemError> {
        if bytes.len() != params.pk_bytes {
            return Err(SaberKemError::Length {
                what: "public key",
                expected: params.pk_bytes,
                got: bytes.len(),
            });
        }
        let split = params.pk_seed_offset();
        let mut seed_a = [0u8; 32];
        seed_a.copy_from_slice(&bytes[split..]);
        Ok(PublicKey { seed_a, b_packed: bytes[..split].to_vec() })
    }

    /// Unpack the rounded vector.
    pub fn b(&self, params: &SaberParams) -> Result<PolyVec, SaberKemError> {
        Ok(unpack_vec(&self.b_packed, params.l, EPS_P)?)
    }
}

/// Ciphertext: rounded vector `b'` (10 bits) plus the rounded message part
/// (`eps_t` bits).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ciphertext {
    pub bp_packed: Vec<u8>,
    pub cm_packed: Vec<u8>,
}

impl Ciphertext {
    /// Wire format: packed `b'` first, message part last.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = self.bp_packed.clone();
        out.extend_from_slice(&self.cm_packed);
        out
    }

    /// Parse the wire format for the given parameter set.
    pub fn from_bytes(params: &SaberParams, bytes: &[u8]) -> Result<Self, SaberKemError> {
        if bytes.len() != params.ct_bytes {
            return Err(SaberKemError::Length {
                what: "ciphertext",
                expected: params.ct_bytes,
                got: bytes.len(),
            });
        }
        let split = params.l * SaberParams::poly_p_bytes();
        Ok(Ciphertext {
            bp_packed: bytes[..split].to_vec(),
            cm_packed: bytes[split..].to_vec(),
        })
    }
}

/// Key generation. `seed_a_raw` is hashed through SHAKE-128 before matrix
/// expansion (so the public seed never exposes raw RNG output); `seed_s`
/// drives the secret sampler. Returns the public key and the secret vector.
pub fn pke_keygen(
    params: &SaberParams,
    seed_a_raw: &[u8; 32],
    seed_s: &[u8; 32],
) -> (PublicKey, PolyVec) {
    let mut seed_a = [0u8; 32];
    seed_a.copy_from_slice(&shake128(seed_a_raw, 32));
    let a = gen_matrix(params, &seed_a);
    let s = gen_secret(params, seed_s);
    let b = matvec_mul(&a, &s, true).expect("generated ranks agree");
    let b_rounded = PolyVec {
        polys: b.polys.iter().map(|p| add_round(p, params.h1)).collect(),
    };
    let pk = PublicKey {
        seed_a,
        b_packed: pack_vec(&b_rounded, EPS_P).expect("10 is a supported width"),
    };
    (pk, s)
}

fn unpack_message(m: &[u8; 32]) -> Poly {
    unpack_poly(m, 1).expect("32 bytes at width 1")
}

/// Encrypt a 32-byte message under `pk` with secret randomness derived from
/// `seed_sp`.
pub fn pke_enc(
    params: &SaberParams,
    m: &[u8; 32],
    seed_sp: &[u8; 32],
    pk: &PublicKey,
) -> Result<Ciphertext, SaberKemError> {
    let a = gen_matrix(params, &pk.seed_a);
    let sp = gen_secret(params, seed_sp);
    let bp = matvec_mul(&a, &sp, false).expect("generated ranks agree");
    let bp_rounded = PolyVec {
        polys: bp.polys.iter().map(|p| add_round(p, params.h1)).collect(),
    };
    let b = pk.b(params)?;
    let vp = inner_prod(&b, &sp)?;
    let mp = unpack_message(m);
    // (v' - 2^(eps_p - 1) m + h1) >> (eps_p - eps_t), all mod p; computing
    // mod q first is exact because the discarded high bits shift out to
    // multiples of 2^eps_t
    let cm = vp
        .sub(&mp.shl(EPS_P - 1))
        .scale_round(params.h1, EPS_P - params.eps_t, params.eps_t);
    Ok(Ciphertext {
        bp_packed: pack_vec(&bp_rounded, EPS_P)?,
        cm_packed: pack_poly(&cm, params.eps_t)?,
    })
}

/// Decrypt a ciphertext with the secret vector; returns the 32-byte message.
pub fn pke_dec(
    params: &SaberParams,
    s: &PolyVec,
    ct: &Ciphertext,
) -> Result<[u8; 32], SaberKemError> {
    let bp = unpack_vec(&ct.bp_packed, params.l, EPS_P)?;
    let cm_narrow = unpack_poly(&ct.cm_packed, params.eps_t)?;
    let v = inner_prod(&bp, s)?;
    let mp = v
        .add_const(params.h2)
        .sub(&cm_narrow.shl(EPS_P - params.eps_t))
        .scale_round(0, EPS_P - 1, 1);
    let bytes = pack_poly(&mp, 1)?;
    let mut out = [0u8; 32];
    out.copy_from_slice(&bytes);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use saber_math::{ALL_VARIANTS, SABER};

    #[test]
    fn matrix_expansion_is_deterministic_and_nontrivial() {
        let seed = [7u8; 32];
        let a = gen_matrix(&SABER, &seed);
        let b = gen_matrix(&SABER, &seed);
        assert_eq!(a.rows.len(), 3);
        assert_eq!(a, b);
        assert_ne!(a.rows[0].polys[0], Poly::zero());
        assert_ne!(a, gen_matrix(&SABER, &[8u8; 32]));
    }

    #[test]
    fn roundtrip_all_variants() {
        for p in ALL_VARIANTS {
            let (pk, s) = pke_keygen(p, &[1u8; 32], &[2u8; 32]);
            assert_eq!(pk.to_bytes().len(), p.pk_bytes);
            let m = [0xa5u8; 32];
            let ct = pke_enc(p, &m, &[3u8; 32], &pk).unwrap();
            assert_eq!(ct.to_bytes().len(), p.ct_bytes);
            assert_eq!(pke_dec(p, &s, &ct).unwrap(), m, "{}", p.name);
        }
    }

    #[test]
    fn wire_formats_roundtrip() {
        let (pk, _) = pke_keygen(&SABER, &[4u8; 32], &[5u8; 32]);
        let parsed = PublicKey::from_bytes(&SABER, &pk.to_bytes()).unwrap();
        assert_eq!(parsed, pk);
        let ct = pke_enc(&SABER, &[1u8; 32], &[6u8; 32], &pk).unwrap();
        assert_eq!(Ciphertext::from_bytes(&SABER, &ct.to_bytes()).unwrap(), ct);
        assert!(PublicKey::from_bytes(&SABER, &[0u8; 10]).is_err());
        assert!(Ciphertext::from_bytes(&SABER, &[0u8; 10]).is_err());
    }
}
