//! Golden model of the Mod-LWR KEM: the IND-CPA public-key core, the
//! Fujisaki-Okamoto transform on top of it, the deterministic NIST DRBG used
//! by known-answer tests, and a replay harness for `.rsp` KAT files.
//!
//! Every function is deterministic in its seed inputs; randomness is always
//! supplied by the caller. That is what lets the transaction-level hardware
//! model be compared against this code byte for byte.

pub mod cbd;
pub mod drbg;
pub mod kat;
pub mod kem;
pub mod pke;
pub mod verify;

pub use cbd::cbd_sample;
pub use drbg::NistDrbg;
pub use kat::{detect_params, parse_rsp, run_vector, KatVector};
pub use kem::{kem_decaps, kem_encaps, kem_keygen, SecretKey};
pub use pke::{gen_matrix, gen_secret, pke_dec, pke_enc, pke_keygen, Ciphertext, PublicKey};
pub use verify::{cmov, verify};

use saber_math::SaberMathError;

/// Errors surfaced by the KEM layer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SaberKemError {
    /// A byte string has the wrong length for its role.
    #[error("{what}: expected {expected} bytes, got {got}")]
    Length {
        what: &'static str,
        expected: usize,
        got: usize,
    },
    /// A ring-arithmetic precondition failed (packing width, rank).
    #[error(transparent)]
    Math(#[from] SaberMathError),
}
