//! Ring arithmetic for a Mod-LWR KEM: polynomials over Z_q[x]/(x^256 + 1)
//! with power-of-two moduli, the shift-based rounding the scheme uses in
//! place of explicit modular reduction, and LSB-first bit packing for every
//! coefficient width the wire formats need.
//!
//! Everything here is exact integer arithmetic on `u16` residues; the widest
//! working modulus is 2^13, so no intermediate value ever needs more than a
//! `u32` accumulator.

pub mod pack;
pub mod params;
pub mod poly;

pub use pack::{
    pack_poly, pack_vec, secret_from_bytes, secret_to_bytes, unpack_poly, unpack_vec,
    SUPPORTED_WIDTHS,
};
pub use params::{SaberParams, ALL_VARIANTS, FIRE_SABER, LIGHT_SABER, SABER};
pub use poly::{add_round, inner_prod, matvec_mul, poly_mul, Poly, PolyMatrix, PolyVec, EPS_P, EPS_Q, N, P, Q};

/// Errors from packing and dimension-checked vector arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SaberMathError {
    /// Requested a coefficient width no wire format uses.
    UnsupportedWidth(usize),
    /// Byte slice length does not match the packed size for the width.
    LengthMismatch { expected: usize, got: usize },
    /// Vector or matrix operands disagree on the module rank.
    DimensionMismatch { expected: usize, got: usize },
}

impl std::fmt::Display for SaberMathError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SaberMathError::UnsupportedWidth(w) => write!(f, "unsupported pack width {w}"),
            SaberMathError::LengthMismatch { expected, got } => {
                write!(f, "packed length mismatch: expected {expected} bytes, got {got}")
            }
            SaberMathError::DimensionMismatch { expected, got } => {
                write!(f, "rank mismatch: expected {expected}, got {got}")
            }
        }
    }
}

impl std::error::Error for SaberMathError {}
