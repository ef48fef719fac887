//! Per-instruction cycle model.
//!
//! Each functional unit is charged a fixed issue/drain base plus a term
//! proportional to the words it streams. The hash core additionally pays a
//! fixed cost per permutation of its state; extendable output overlaps
//! squeezing with permutations, while the fixed-digest modes pay a flush
//! term for the digest words. Units whose runtime is dominated by an
//! internal schedule (sampler, multiplier, unpack, copy) carry flat,
//! profile-calibrated costs.

use crate::isa::{Instr, PackMode};
use crate::profile::TimingSpec;
use keccak::{permutation_count, SHA3_256_RATE, SHA3_512_RATE, SHAKE128_RATE};

/// Module rank of the machine's parameter set.
pub const L: usize = 3;
/// Words per polynomial at the 13-bit working width.
pub const POLY_Q_WORDS: usize = 52;
/// Words per polynomial at the rounded 10-bit width.
pub const POLY_P_WORDS: usize = 40;
/// Words per polynomial in the signed 14-bit secret form.
pub const POLY_S_WORDS: usize = 56;
/// Words per polynomial at the 4-bit ciphertext-tail width.
pub const CM_WORDS: usize = 16;
/// Words per 1-bit message polynomial.
pub const MSG_WORDS: usize = 4;
/// Bytes of 13-bit packed matrix produced by the matrix expander.
pub const MATRIX_BYTES: usize = L * L * 416;
/// Bytes of sampler input consumed per secret vector.
pub const COIN_BYTES: usize = 768;
/// Bytes per secret vector in the signed 14-bit form.
pub const SECRET_BYTES: usize = L * POLY_S_WORDS * 8;

/// Datapath cycles for one instruction under a timing spec. Memory
/// scheduling is costed separately by the executor.
pub fn instruction_cycles(instr: &Instr, t: &TimingSpec) -> u64 {
    let hash = |rate: usize, in_bytes: usize, out_bytes: usize, tail_words: u64| {
        t.hash_base
            + (in_bytes / 8) as u64
            + t.keccak_perm_cycles * permutation_count(rate, in_bytes, out_bytes)
            + tail_words
    };
    match *instr {
        Instr::Shake128 { in_bytes, out_bytes, .. } => {
            hash(SHAKE128_RATE, in_bytes, out_bytes, 0)
        }
        Instr::Sha3_256 { in_bytes, .. } => hash(SHA3_256_RATE, in_bytes, 32, 4),
        Instr::Sha3_512 { in_bytes, .. } => hash(SHA3_512_RATE, in_bytes, 64, 8),
        Instr::GenMatrix { .. } => hash(SHAKE128_RATE, 32, MATRIX_BYTES, 0),
        Instr::CbdSample { .. } => t.sampler_cycles,
        Instr::Vvmul { .. } => t.vvmul_cycles,
        Instr::AddRound { npolys, .. } => {
            t.stream_base + (npolys * (POLY_Q_WORDS + POLY_P_WORDS)) as u64
        }
        Instr::Bs2Polvecp { .. } => {
            t.stream_base + (L * (POLY_P_WORDS + POLY_Q_WORDS)) as u64
        }
        Instr::AddPack { mode, .. } => {
            let streamed = match mode {
                // read v, read the message bits, write the packed tail
                PackMode::Enc => POLY_Q_WORDS + MSG_WORDS + CM_WORDS,
                // read v, read the widened tail, write the message bits
                PackMode::Dec => POLY_Q_WORDS + POLY_Q_WORDS + MSG_WORDS,
            };
            t.stream_base + streamed as u64
        }
        Instr::Unpack { .. } => t.unpack_cycles,
        Instr::CopyWords { .. } => t.copywords_cycles,
        Instr::Verify { len, .. } | Instr::Cmov { len, .. } => {
            t.compare_base + 2 * len as u64
        }
        Instr::Halt => 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isa::Instr;

    fn spec() -> TimingSpec {
        TimingSpec {
            keccak_perm_cycles: 28,
            hash_base: 10,
            stream_base: 16,
            compare_base: 8,
            sampler_cycles: 145,
            vvmul_cycles: 894,
            unpack_cycles: 167,
            copywords_cycles: 60,
            pipeline_overhead: 0,
            controller_overhead: crate::profile::ControllerOverhead {
                keygen: 0,
                encaps: 0,
                decaps: 0,
            },
        }
    }

    #[test]
    fn hash_costs() {
        let t = spec();
        let c = |i: Instr| instruction_cycles(&i, &t);
        assert_eq!(c(Instr::Shake128 { dst: 0, src: 0, in_bytes: 32, out_bytes: 32 }), 42);
        assert_eq!(c(Instr::Shake128 { dst: 0, src: 0, in_bytes: 32, out_bytes: 768 }), 154);
        assert_eq!(c(Instr::GenMatrix { dst: 0, seed: 0 }), 658);
        assert_eq!(c(Instr::Sha3_256 { dst: 0, src: 0, in_bytes: 32 }), 46);
        assert_eq!(c(Instr::Sha3_256 { dst: 0, src: 0, in_bytes: 64 }), 50);
        assert_eq!(c(Instr::Sha3_256 { dst: 0, src: 0, in_bytes: 992 }), 362);
        assert_eq!(c(Instr::Sha3_256 { dst: 0, src: 0, in_bytes: 1088 }), 402);
        assert_eq!(c(Instr::Sha3_512 { dst: 0, src: 0, in_bytes: 64 }), 54);
    }

    #[test]
    fn stream_and_compare_costs() {
        let t = spec();
        let c = |i: Instr| instruction_cycles(&i, &t);
        assert_eq!(c(Instr::AddRound { dst: 0, src: 0, npolys: 3 }), 292);
        assert_eq!(c(Instr::AddRound { dst: 0, src: 0, npolys: 1 }), 108);
        assert_eq!(c(Instr::Bs2Polvecp { dst: 0, src: 0 }), 292);
        assert_eq!(c(Instr::AddPack { dst: 0, v: 0, aux: 0, mode: PackMode::Enc }), 88);
        assert_eq!(c(Instr::AddPack { dst: 0, v: 0, aux: 0, mode: PackMode::Dec }), 124);
        assert_eq!(c(Instr::Verify { a: 0, b: 0, len: 136 }), 280);
        assert_eq!(c(Instr::Cmov { dst: 0, src: 0, len: 4 }), 16);
        assert_eq!(c(Instr::Halt), 0);
    }

    #[test]
    fn flat_costs_come_from_the_profile() {
        let t = spec();
        let c = |i: Instr| instruction_cycles(&i, &t);
        assert_eq!(c(Instr::CbdSample { dst: 0, coins: 0 }), 145);
        assert_eq!(c(Instr::Vvmul { dst: 0, mat: 0, idx: 0, transpose: false, vec: 0 }), 894);
        assert_eq!(c(Instr::Unpack { dst: 0, src: 0, npolys: 1, eps: 4 }), 167);
        assert_eq!(c(Instr::CopyWords { dst: 0, src: 0, len: 4 }), 60);
    }
}
