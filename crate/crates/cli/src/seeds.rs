//! Seed-argument parsing and expansion.
//!
//! All randomness enters a subcommand through these helpers, which is what
//! makes every subcommand reproducible from `--seed` alone:
//!
//! * no seed — fresh bytes from the operating system;
//! * 48 bytes (keygen) — replayed through the deterministic generator that
//!   known-answer files use, so a recorded seed regenerates the recorded
//!   keypair;
//! * the exact required size — used as-is (96 bytes for key generation,
//!   split as seed_a || seed_s || z; 32 bytes for encapsulation);
//! * any other size — expanded to the required size with SHAKE-128.

use keccak::shake128;
use rand::RngCore;
use saber_kem::NistDrbg;

use crate::CliError;

/// The three 32-byte inputs of deterministic key generation.
pub struct KeygenSeeds {
    pub seed_a: [u8; 32],
    pub seed_s: [u8; 32],
    pub z: [u8; 32],
}

/// Decode a hex CLI argument, tolerating embedded whitespace.
pub fn decode_hex(what: &str, text: &str) -> Result<Vec<u8>, CliError> {
    let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if cleaned.is_empty() {
        return Err(CliError::usage(format!("{what}: empty hex string")));
    }
    hex::decode(&cleaned).map_err(|e| CliError::usage(format!("{what}: {e}")))
}

/// The user's seed bytes, or `fresh` bytes of OS randomness.
fn seed_material(seed: Option<&str>, fresh: usize) -> Result<Vec<u8>, CliError> {
    match seed {
        Some(text) => decode_hex("--seed", text),
        None => {
            let mut bytes = vec![0u8; fresh];
            rand::thread_rng().fill_bytes(&mut bytes);
            Ok(bytes)
        }
    }
}

/// Expand a `--seed` argument into key-generation inputs.
pub fn keygen_seeds(seed: Option<&str>) -> Result<KeygenSeeds, CliError> {
    let material = seed_material(seed, 96)?;
    let expanded: Vec<u8> = match material.len() {
        48 => {
            let mut s48 = [0u8; 48];
            s48.copy_from_slice(&material);
            let mut drbg = NistDrbg::new(&s48);
            let mut out = Vec::with_capacity(96);
            out.extend_from_slice(&drbg.bytes32());
            out.extend_from_slice(&drbg.bytes32());
            out.extend_from_slice(&drbg.bytes32());
            out
        }
        96 => material,
        _ => shake128(&material, 96),
    };
    let mut seeds = KeygenSeeds { seed_a: [0; 32], seed_s: [0; 32], z: [0; 32] };
    seeds.seed_a.copy_from_slice(&expanded[0..32]);
    seeds.seed_s.copy_from_slice(&expanded[32..64]);
    seeds.z.copy_from_slice(&expanded[64..96]);
    Ok(seeds)
}

/// Expand a `--seed` argument into the 32-byte encapsulation message seed.
pub fn encaps_seed(seed: Option<&str>) -> Result<[u8; 32], CliError> {
    let material = seed_material(seed, 32)?;
    let expanded = if material.len() == 32 { material } else { shake128(&material, 32) };
    let mut m_seed = [0u8; 32];
    m_seed.copy_from_slice(&expanded);
    Ok(m_seed)
}
