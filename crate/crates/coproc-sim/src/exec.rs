//! The transaction-level executor.
//!
//! Runs an assembled program against the functional scratchpad model,
//! producing the named outputs plus a per-instruction cycle ledger. Each
//! instruction executes as one atomic transaction (all reads happen before
//! any write lands), mirroring the real machine's sequential dispatch: the
//! controller issues one functional unit at a time, so there is no
//! instruction-level parallelism to model.
//!
//! Cycle accounting is two-sided. `cycles` comes from the calibrated
//! per-unit model in [`crate::timing`] and is what totals are built from;
//! `mem_cycles` is the raw scratchpad port schedule for the instruction's
//! word traffic under the profile's geometry, kept as a diagnostic for
//! comparing organizations.

use std::collections::BTreeMap;

use memsys::{Access, Memory, ShiftBuffer, SHIFT_BUFFER_BITS};
use saber_math::{
    add_round, pack_poly, poly_mul, secret_from_bytes, unpack_poly, Poly, EPS_P, EPS_Q, SABER,
};
use saber_kem::{cbd_sample, cmov, verify};

use crate::isa::{Instr, OpKind, PackMode, Program};
use crate::profile::TimingProfile;
use crate::timing::{
    instruction_cycles, CM_WORDS, COIN_BYTES, L, MATRIX_BYTES, MSG_WORDS, POLY_P_WORDS,
    POLY_Q_WORDS, SECRET_BYTES,
};
use crate::SimError;

/// One executed instruction's cycle record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LedgerEntry {
    /// Position in the program.
    pub index: usize,
    pub opcode: &'static str,
    /// Datapath cycles under the profile's calibrated unit model.
    pub cycles: u64,
    /// Cycles the instruction's raw word traffic needs on the profile's
    /// scratchpad geometry (diagnostic; not part of the block total).
    pub mem_cycles: u64,
}

/// Cycle accounting for one complete operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleLedger {
    pub entries: Vec<LedgerEntry>,
    /// Fill/drain cost of the scratchpad output register, charged once per
    /// operation (zero for unpipelined geometries).
    pub pipeline_overhead: u64,
    /// Fixed controller sequencing cost for this operation.
    pub controller_overhead: u64,
}

impl CycleLedger {
    /// Sum of per-instruction datapath cycles.
    pub fn block_cycles(&self) -> u64 {
        self.entries.iter().map(|e| e.cycles).sum()
    }

    /// Complete operation cost: instruction blocks plus the per-operation
    /// overheads.
    pub fn total(&self) -> u64 {
        self.block_cycles() + self.pipeline_overhead + self.controller_overhead
    }

    /// Sum of the diagnostic scratchpad schedule cycles.
    pub fn mem_cycles(&self) -> u64 {
        self.entries.iter().map(|e| e.mem_cycles).sum()
    }
}

/// Outputs and accounting from one program run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunResult {
    /// Output bytes keyed by the program's `.out` slot names.
    pub outputs: BTreeMap<String, Vec<u8>>,
    pub ledger: CycleLedger,
}

/// Run a program under a profile. `inputs` must supply exactly the
/// program's `.in` slots, each with its exact byte length.
pub fn run(
    profile: &TimingProfile,
    program: &Program,
    inputs: &BTreeMap<String, Vec<u8>>,
) -> Result<RunResult, SimError> {
    let config = profile.memory_config()?;
    for name in inputs.keys() {
        if program.input(name).is_none() {
            return Err(SimError::UnknownInput(name.clone()));
        }
    }

    let mut machine = Machine {
        mem: Memory::new(config),
        buffer: ShiftBuffer::default(),
        flag: 0,
    };
    for slot in &program.inputs {
        let data = inputs
            .get(&slot.name)
            .ok_or_else(|| SimError::MissingInput(slot.name.clone()))?;
        if data.len() != slot.bytes() {
            return Err(SimError::InputLength {
                name: slot.name.clone(),
                expected: slot.bytes(),
                got: data.len(),
            });
        }
        machine.mem.write_bytes(slot.word, data)?;
    }

    let mut entries = Vec::with_capacity(program.instrs.len());
    for (index, instr) in program.instrs.iter().enumerate() {
        let accesses = machine.step(instr)?;
        entries.push(LedgerEntry {
            index,
            opcode: instr.mnemonic(),
            cycles: instruction_cycles(instr, &profile.timing),
            mem_cycles: config.schedule_cycles(&accesses)?,
        });
        if *instr == Instr::Halt {
            break;
        }
    }

    let mut outputs = BTreeMap::new();
    for slot in &program.outputs {
        outputs.insert(slot.name.clone(), machine.mem.read_bytes(slot.word, slot.bytes())?);
    }
    Ok(RunResult {
        outputs,
        ledger: CycleLedger {
            entries,
            pipeline_overhead: profile.pipeline_overhead(),
            controller_overhead: profile.controller_overhead(program.op),
        },
    })
}

/// Convenience: run an operation's shipped program.
pub fn run_op(
    profile: &TimingProfile,
    op: OpKind,
    inputs: &BTreeMap<String, Vec<u8>>,
) -> Result<RunResult, SimError> {
    run(profile, &Program::for_op(op), inputs)
}

struct Machine {
    mem: Memory,
    buffer: ShiftBuffer,
    /// Comparison flag: 0 after a matching verify, 1 after a mismatch.
    flag: u8,
}

const POLY_Q_BYTES: usize = POLY_Q_WORDS * 8;
const POLY_P_BYTES: usize = POLY_P_WORDS * 8;
const MSG_BYTES: usize = MSG_WORDS * 8;

fn reads(acc: &mut Vec<Access>, word: usize, n: usize) {
    acc.extend((word..word + n).map(Access::read));
}

fn writes(acc: &mut Vec<Access>, word: usize, n: usize) {
    acc.extend((word..word + n).map(Access::write));
}

/// Stream a polynomial's coefficients through the shared shift buffer in
/// full-buffer bursts, the way the multiplier's operand path does. The
/// traffic is FIFO so the values come back unchanged; what this models is
/// the exclusive-use discipline of the buffer.
fn stage_coeffs(
    buf: &mut ShiftBuffer,
    owner: &'static str,
    coeffs: &[u16],
) -> Result<Vec<u16>, SimError> {
    buf.acquire(owner)?;
    let mut out = Vec::with_capacity(coeffs.len());
    for &c in coeffs {
        buf.push_bits(owner, u64::from(c), EPS_Q)?;
        if buf.fill_bits() == SHIFT_BUFFER_BITS {
            while buf.fill_bits() > 0 {
                out.push(buf.pop_bits(owner, EPS_Q)? as u16);
            }
        }
    }
    while buf.fill_bits() > 0 {
        out.push(buf.pop_bits(owner, EPS_Q)? as u16);
    }
    buf.release(owner)?;
    Ok(out)
}

/// Stream raw scratchpad words through the shared buffer in five-word
/// (320-bit) bursts, the way the add-pack unit stages its wide operand.
fn stage_words(
    buf: &mut ShiftBuffer,
    owner: &'static str,
    words: &[u64],
) -> Result<Vec<u64>, SimError> {
    buf.acquire(owner)?;
    let mut out = Vec::with_capacity(words.len());
    for chunk in words.chunks(5) {
        for &w in chunk {
            buf.push_bits(owner, w, 64)?;
        }
        for _ in chunk {
            out.push(buf.pop_bits(owner, 64)?);
        }
    }
    buf.release(owner)?;
    Ok(out)
}

fn words_from_bytes(bytes: &[u8]) -> Vec<u64> {
    bytes
        .chunks_exact(8)
        .map(|c| u64::from_le_bytes(c.try_into().expect("chunk is 8 bytes")))
        .collect()
}

fn bytes_from_words(words: &[u64]) -> Vec<u8> {
    let mut out = Vec::with_capacity(words.len() * 8);
    for w in words {
        out.extend_from_slice(&w.to_le_bytes());
    }
    out
}

impl Machine {
    /// Execute one instruction, returning its word traffic.
    fn step(&mut self, instr: &Instr) -> Result<Vec<Access>, SimError> {
        let mut acc = Vec::new();
        match *instr {
            Instr::Shake128 { dst, src, in_bytes, out_bytes } => {
                let data = self.mem.read_bytes(src, in_bytes)?;
                let out = keccak::shake128(&data, out_bytes);
                self.mem.write_bytes(dst, &out)?;
                reads(&mut acc, src, in_bytes / 8);
                writes(&mut acc, dst, out_bytes / 8);
            }
            Instr::Sha3_256 { dst, src, in_bytes } => {
                let data = self.mem.read_bytes(src, in_bytes)?;
                self.mem.write_bytes(dst, &keccak::sha3_256(&data))?;
                reads(&mut acc, src, in_bytes / 8);
                writes(&mut acc, dst, 4);
            }
            Instr::Sha3_512 { dst, src, in_bytes } => {
                let data = self.mem.read_bytes(src, in_bytes)?;
                self.mem.write_bytes(dst, &keccak::sha3_512(&data))?;
                reads(&mut acc, src, in_bytes / 8);
                writes(&mut acc, dst, 8);
            }
            Instr::GenMatrix { dst, seed } => {
                let seed_bytes = self.mem.read_bytes(seed, 32)?;
                let out = keccak::shake128(&seed_bytes, MATRIX_BYTES);
                self.mem.write_bytes(dst, &out)?;
                reads(&mut acc, seed, 4);
                writes(&mut acc, dst, MATRIX_BYTES / 8);
            }
            Instr::CbdSample { dst, coins } => {
                let coin_bytes = self.mem.read_bytes(coins, COIN_BYTES)?;
                let s = cbd_sample(&SABER, &coin_bytes)?;
                self.mem.write_bytes(dst, &saber_math::secret_to_bytes(&s))?;
                reads(&mut acc, coins, COIN_BYTES / 8);
                writes(&mut acc, dst, SECRET_BYTES / 8);
            }
            Instr::Vvmul { dst, mat, idx, transpose, vec } => {
                let s_bytes = self.mem.read_bytes(vec, SECRET_BYTES)?;
                let s = secret_from_bytes(&s_bytes, L)?;
                reads(&mut acc, vec, SECRET_BYTES / 8);
                let mut sum = Poly::zero();
                for (j, s_poly) in s.polys.iter().enumerate() {
                    let entry = if transpose { j * L + idx } else { idx * L + j };
                    let word = mat + entry * POLY_Q_WORDS;
                    let packed = self.mem.read_bytes(word, POLY_Q_BYTES)?;
                    reads(&mut acc, word, POLY_Q_WORDS);
                    let a = unpack_poly(&packed, EPS_Q)?;
                    let streamed = stage_coeffs(&mut self.buffer, "multiplier", &a.coeffs)?;
                    let mut a_poly = Poly::zero();
                    a_poly.coeffs.copy_from_slice(&streamed);
                    sum = sum.add(&poly_mul(&a_poly, s_poly));
                }
                self.mem.write_bytes(dst, &pack_poly(&sum, EPS_Q)?)?;
                writes(&mut acc, dst, POLY_Q_WORDS);
            }
            Instr::AddRound { dst, src, npolys } => {
                for k in 0..npolys {
                    let src_word = src + k * POLY_Q_WORDS;
                    let dst_word = dst + k * POLY_P_WORDS;
                    let x = unpack_poly(&self.mem.read_bytes(src_word, POLY_Q_BYTES)?, EPS_Q)?;
                    let rounded = add_round(&x, SABER.h1);
                    self.mem.write_bytes(dst_word, &pack_poly(&rounded, EPS_P)?)?;
                    reads(&mut acc, src_word, POLY_Q_WORDS);
                    writes(&mut acc, dst_word, POLY_P_WORDS);
                }
            }
            Instr::Bs2Polvecp { dst, src } => {
                for k in 0..L {
                    let src_word = src + k * POLY_P_WORDS;
                    let dst_word = dst + k * POLY_Q_WORDS;
                    let p = unpack_poly(&self.mem.read_bytes(src_word, POLY_P_BYTES)?, EPS_P)?;
                    self.mem.write_bytes(dst_word, &pack_poly(&p, EPS_Q)?)?;
                    reads(&mut acc, src_word, POLY_P_WORDS);
                    writes(&mut acc, dst_word, POLY_Q_WORDS);
                }
            }
            Instr::AddPack { dst, v, aux, mode } => {
                let v_words = words_from_bytes(&self.mem.read_bytes(v, POLY_Q_BYTES)?);
                let staged = stage_words(&mut self.buffer, "addpack", &v_words)?;
                let v_poly = unpack_poly(&bytes_from_words(&staged), EPS_Q)?;
                reads(&mut acc, v, POLY_Q_WORDS);
                match mode {
                    PackMode::Enc => {
                        let m = unpack_poly(&self.mem.read_bytes(aux, MSG_BYTES)?, 1)?;
                        reads(&mut acc, aux, MSG_WORDS);
                        let cm = v_poly
                            .sub(&m.shl(EPS_P - 1))
                            .scale_round(SABER.h1, EPS_P - SABER.eps_t, SABER.eps_t);
                        self.mem.write_bytes(dst, &pack_poly(&cm, SABER.eps_t)?)?;
                        writes(&mut acc, dst, CM_WORDS);
                    }
                    PackMode::Dec => {
                        let cm = unpack_poly(&self.mem.read_bytes(aux, POLY_Q_BYTES)?, EPS_Q)?;
                        reads(&mut acc, aux, POLY_Q_WORDS);
                        let m = v_poly
                            .add_const(SABER.h2)
                            .sub(&cm.shl(EPS_P - SABER.eps_t))
                            .scale_round(0, EPS_P - 1, 1);
                        self.mem.write_bytes(dst, &pack_poly(&m, 1)?)?;
                        writes(&mut acc, dst, MSG_WORDS);
                    }
                }
            }
            Instr::Unpack { dst, src, npolys, eps } => {
                let src_words = 4 * eps;
                for k in 0..npolys {
                    let src_word = src + k * src_words;
                    let dst_word = dst + k * POLY_Q_WORDS;
                    let p = unpack_poly(&self.mem.read_bytes(src_word, src_words * 8)?, eps)?;
                    self.mem.write_bytes(dst_word, &pack_poly(&p, EPS_Q)?)?;
                    reads(&mut acc, src_word, src_words);
                    writes(&mut acc, dst_word, POLY_Q_WORDS);
                }
            }
            Instr::CopyWords { dst, src, len } => {
                let data = self.mem.read_bytes(src, len * 8)?;
                self.mem.write_bytes(dst, &data)?;
                reads(&mut acc, src, len);
                writes(&mut acc, dst, len);
            }
            Instr::Verify { a, b, len } => {
                let lhs = self.mem.read_bytes(a, len * 8)?;
                let rhs = self.mem.read_bytes(b, len * 8)?;
                self.flag = verify(&lhs, &rhs);
                reads(&mut acc, a, len);
                reads(&mut acc, b, len);
            }
            Instr::Cmov { dst, src, len } => {
                let mut kept = self.mem.read_bytes(dst, len * 8)?;
                let replacement = self.mem.read_bytes(src, len * 8)?;
                cmov(&mut kept, &replacement, self.flag);
                self.mem.write_bytes(dst, &kept)?;
                reads(&mut acc, src, len);
                writes(&mut acc, dst, len);
            }
            Instr::Halt => {}
        }
        Ok(acc)
    }
}
