//! The AES-256 counter-mode DRBG that known-answer files assume.
//!
//! This is not a general-purpose RNG: it exists so that KAT seeds expand to
//! exactly the byte stream the `.rsp` files were generated with. The state
//! update runs AES-256 in counter mode over a big-endian 128-bit counter,
//! re-keying after every request.

use aes::cipher::{BlockEncrypt, KeyInit};
use aes::Aes256;

/// Deterministic byte generator seeded with 48 bytes of entropy.
pub struct NistDrbg {
    key: [u8; 32],
    v: [u8; 16],
}

fn increment(v: &mut [u8; 16]) {
    for byte in v.iter_mut().rev() {
        let (next, carry) = byte.overflowing_add(1);
        *byte = next;
        if !carry {
            break;
        }
    }
}

impl NistDrbg {
    /// Instantiate from a 48-byte seed.
    pub fn new(seed: &[u8; 48]) -> Self {
        let mut drbg = NistDrbg { key: [0u8; 32], v: [0u8; 16] };
        drbg.update(Some(seed));
        drbg
    }

    fn update(&mut self, provided: Option<&[u8; 48]>) {
        let cipher = Aes256::new(&self.key.into());
        let mut tmp = [0u8; 48];
        for chunk in tmp.chunks_exact_mut(16) {
            increment(&mut self.v);
            let mut block = self.v.into();
            cipher.encrypt_block(&mut block);
            chunk.copy_from_slice(&block);
        }
        if let Some(data) = provided {
            for (t, d) in tmp.iter_mut().zip(data) {
                *t ^= d;
            }
        }
        self.key.copy_from_slice(&tmp[..32]);
        self.v.copy_from_slice(&tmp[32..]);
    }

    /// Fill `out` with the next bytes of the stream.
    pub fn fill(&mut self, out: &mut [u8]) {
        let cipher = Aes256::new(&self.key.into());
        let mut offset = 0;
        while offset < out.len() {
            increment(&mut self.v);
            let mut block = self.v.into();
            cipher.encrypt_block(&mut block);
            let take = (out.len() - offset).min(16);
            out[offset..offset + take].copy_from_slice(&block[..take]);
            offset += take;
        }
        self.update(None);
    }

    /// Convenience: the next 32 bytes.
    pub fn bytes32(&mut self) -> [u8; 32] {
        let mut out = [0u8; 32];
        self.fill(&mut out);
        out
    }
}
