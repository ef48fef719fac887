//! Centered binomial sampling of secret vectors from expanded coins.
//!
//! Each coefficient consumes `mu` consecutive bits of the coin stream
//! (LSB-first within each byte): the Hamming weight of the high `mu/2` bits
//! is subtracted from the weight of the low `mu/2` bits, giving a value in
//! [-mu/2, mu/2] stored as a residue mod q.

use crate::SaberKemError;
use saber_math::{Poly, PolyVec, SaberParams, N, Q};

fn bit(bytes: &[u8], i: usize) -> u16 {
    ((bytes[i / 8] >> (i % 8)) & 1) as u16
}

/// Sample one polynomial from `mu * 32` coin bytes.
fn cbd_poly(coins: &[u8], mu: usize) -> Poly {
    debug_assert_eq!(coins.len(), mu * N / 8);
    let half = mu / 2;
    let mut p = Poly::zero();
    for (i, c) in p.coeffs.iter_mut().enumerate() {
        let base = i * mu;
        let mut a = 0u16;
        let mut b = 0u16;
        for t in 0..half {
            a += bit(coins, base + t);
            b += bit(coins, base + half + t);
        }
        *c = a.wrapping_sub(b) & (Q - 1);
    }
    p
}

/// Sample a rank-`l` secret vector; `coins` must be exactly
/// [`SaberParams::coin_bytes`] long.
pub fn cbd_sample(params: &SaberParams, coins: &[u8]) -> Result<PolyVec, SaberKemError> {
    if coins.len() != params.coin_bytes {
        return Err(SaberKemError::Length {
            what: "cbd coins",
            expected: params.coin_bytes,
            got: coins.len(),
        });
    }
    let per = params.mu * N / 8;
    Ok(PolyVec {
        polys: coins.chunks_exact(per).map(|c| cbd_poly(c, params.mu)).collect(),
    })
}
