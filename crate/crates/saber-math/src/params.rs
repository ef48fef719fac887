//! Parameter sets for the three security levels of the Mod-LWR KEM.
//!
//! All three share the ring (n = 256), the working modulus q = 2^13 and the
//! rounding modulus p = 2^10; they differ in module rank `l`, the centered
//! binomial width `mu` and the message-rounding width `eps_t`.

use crate::poly::{EPS_P, EPS_Q, N};

/// One parameter set, with every derived size the wire formats use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SaberParams {
    /// Human-readable variant name (CLI spelling).
    pub name: &'static str,
    /// Module rank: vectors have `l` polynomials, the public matrix is l x l.
    pub l: usize,
    /// Bits of randomness per coefficient for the centered binomial sampler.
    pub mu: usize,
    /// Coefficient width of the rounded message part of a ciphertext.
    pub eps_t: usize,
    /// Public key bytes: rounded vector at 10 bits plus the 32-byte matrix seed.
    pub pk_bytes: usize,
    /// Secret vector in the 14-bit two's-complement form the hardware stores.
    pub sk_bytes: usize,
    /// Ciphertext bytes: rounded vector at 10 bits plus the message part.
    pub ct_bytes: usize,
    /// Full decapsulation key: 13-bit secret, public key, pk hash, seed z.
    pub kem_sk_bytes: usize,
    /// Bytes of expanded randomness the binomial sampler consumes.
    pub coin_bytes: usize,
    /// Rounding constant folded in before the q -> p shift.
    pub h1: u16,
    /// Reconstruction constant used by decryption.
    pub h2: u16,
}

const fn derive(name: &'static str, l: usize, mu: usize, eps_t: usize) -> SaberParams {
    SaberParams {
        name,
        l,
        mu,
        eps_t,
        pk_bytes: l * (N * EPS_P / 8) + 32,
        sk_bytes: l * (N * 14 / 8),
        ct_bytes: l * (N * EPS_P / 8) + N * eps_t / 8,
        kem_sk_bytes: l * (N * EPS_Q / 8) + l * (N * EPS_P / 8) + 32 + 32 + 32,
        coin_bytes: l * mu * N / 8,
        h1: 1 << (EPS_Q - EPS_P - 1),
        h2: (1 << (EPS_P - 2)) - (1 << (EPS_P - eps_t - 1)) + (1 << (EPS_Q - EPS_P - 1)),
    }
}

/// Rank-2 variant (lightest level).
pub const LIGHT_SABER: SaberParams = derive("light", 2, 10, 3);
/// Rank-3 variant (middle level).
pub const SABER: SaberParams = derive("saber", 3, 8, 4);
/// Rank-4 variant (highest level).
pub const FIRE_SABER: SaberParams = derive("fire", 4, 6, 6);

/// All parameter sets, lightest first.
pub const ALL_VARIANTS: [&SaberParams; 3] = [&LIGHT_SABER, &SABER, &FIRE_SABER];

impl SaberParams {
    /// Look up a parameter set by its CLI name.
    pub fn by_name(name: &str) -> Option<&'static SaberParams> {
        ALL_VARIANTS.iter().copied().find(|p| p.name == name)
    }

    /// Bytes of one polynomial packed at the working modulus (13 bits).
    pub const fn poly_q_bytes() -> usize {
        N * EPS_Q / 8
    }

    /// Bytes of one polynomial packed at the rounding modulus (10 bits).
    pub const fn poly_p_bytes() -> usize {
        N * EPS_P / 8
    }

    /// Bytes of the packed message part of a ciphertext.
    pub const fn ct_msg_bytes(&self) -> usize {
        N * self.eps_t / 8
    }

    /// Offset of the 32-byte matrix seed inside a packed public key.
    pub const fn pk_seed_offset(&self) -> usize {
        self.l * (N * EPS_P / 8)
    }
}
