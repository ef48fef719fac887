//! Transaction-level, cycle-accounted model of a KEM coprocessor.
//!
//! The machine executes small straight-line programs (one per KEM
//! operation) over a 1024-word scratchpad. Functional results come from the
//! same ring arithmetic as the golden model, so simulator output is
//! byte-comparable against it; cycle counts come from a calibrated
//! per-instruction model plus per-profile controller and pipeline
//! overheads, recorded in a ledger that always adds up to the reported
//! total.
//!
//! The modeled datapath is the rank-3 parameter set — the shipped programs
//! have its operand layout baked into their addresses.

pub mod exec;
pub mod isa;
pub mod profile;
pub mod timing;

pub use exec::{run, run_op, CycleLedger, LedgerEntry, RunResult};
pub use isa::{Instr, IoSlot, OpKind, PackMode, Program};
pub use profile::{ControllerOverhead, MemorySpec, TimingProfile, TimingSpec};
pub use timing::instruction_cycles;

use memsys::MemsysError;
use saber_kem::SaberKemError;
use saber_math::SaberMathError;

/// Errors from assembling, configuring or running a program.
#[derive(Debug, thiserror::Error)]
pub enum SimError {
    #[error("assembly error at line {line}: {msg}")]
    Asm { line: usize, msg: String },
    #[error("input {name:?}: expected {expected} bytes, got {got}")]
    InputLength { name: String, expected: usize, got: usize },
    #[error("missing input {0:?}")]
    MissingInput(String),
    #[error("unknown input {0:?}")]
    UnknownInput(String),
    #[error("invalid profile: {0}")]
    Profile(String),
    #[error(transparent)]
    Mem(#[from] MemsysError),
    #[error(transparent)]
    Math(#[from] SaberMathError),
    #[error(transparent)]
    Kem(#[from] SaberKemError),
    #[error("profile parse: {0}")]
    Toml(#[from] toml::de::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
