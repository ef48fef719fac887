//! Architecture profiles: clock frequency, scratchpad geometry, and the
//! per-unit timing constants the cycle model consumes.
//!
//! Profiles are TOML documents so a design-space sweep can add a new point
//! without recompiling.

use crate::isa::OpKind;
use crate::SimError;
use memsys::{MemoryConfig, PortKind};
use serde::Deserialize;

/// Scratchpad geometry, mirrored into [`memsys::MemoryConfig`].
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MemorySpec {
    /// `"dual"` or `"single"`.
    pub port: String,
    pub instances: usize,
    pub depth: usize,
    pub width: usize,
    #[serde(default)]
    pub pipelined: bool,
}

impl MemorySpec {
    pub fn port_kind(&self) -> Result<PortKind, SimError> {
        match self.port.as_str() {
            "dual" => Ok(PortKind::Dual),
            "single" => Ok(PortKind::Single),
            other => Err(SimError::Profile(format!(
                "memory port must be \"dual\" or \"single\", got {other:?}"
            ))),
        }
    }
}

/// Fixed controller sequencing cost charged once per operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ControllerOverhead {
    pub keygen: u64,
    pub encaps: u64,
    pub decaps: u64,
}

impl ControllerOverhead {
    pub fn for_op(&self, op: OpKind) -> u64 {
        match op {
            OpKind::Keygen => self.keygen,
            OpKind::Encaps => self.encaps,
            OpKind::Decaps => self.decaps,
        }
    }
}

/// Per-unit timing constants. Fields that end in `_base` are fixed
/// start-up costs; `*_cycles` are flat per-invocation costs for units whose
/// runtime does not depend on operand addresses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TimingSpec {
    /// Cost of one permutation of the hash core.
    pub keccak_perm_cycles: u64,
    /// Issue/drain cost of any hash instruction.
    pub hash_base: u64,
    /// Issue/drain cost of the streaming units (addround, widen, addpack).
    pub stream_base: u64,
    /// Issue/drain cost of verify/cmov.
    pub compare_base: u64,
    /// Flat cost of one binomial-sampler invocation.
    pub sampler_cycles: u64,
    /// Flat cost of one vector-vector multiply.
    pub vvmul_cycles: u64,
    /// Flat cost of one unpack invocation.
    pub unpack_cycles: u64,
    /// Flat cost of one word-copy invocation.
    pub copywords_cycles: u64,
    /// Charged once per operation when the scratchpad is pipelined.
    pub pipeline_overhead: u64,
    pub controller_overhead: ControllerOverhead,
}

/// One architecture point: a name, a clock, a scratchpad geometry, and the
/// timing constants calibrated for that datapath.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TimingProfile {
    pub name: String,
    /// Free-form grouping label (e.g. which datapath generation the
    /// constants were calibrated against).
    #[serde(default)]
    pub timing_class: String,
    pub freq_mhz: f64,
    pub memory: MemorySpec,
    pub timing: TimingSpec,
}

impl TimingProfile {
    /// Parse and validate a profile from TOML text.
    pub fn from_toml_str(text: &str) -> Result<TimingProfile, SimError> {
        let profile: TimingProfile = toml::from_str(text)?;
        profile.validate()?;
        Ok(profile)
    }

    /// Parse and validate a profile from a file.
    pub fn from_path(path: &std::path::Path) -> Result<TimingProfile, SimError> {
        TimingProfile::from_toml_str(&std::fs::read_to_string(path)?)
    }

    fn validate(&self) -> Result<(), SimError> {
        if self.name.is_empty() {
            return Err(SimError::Profile("profile name must not be empty".into()));
        }
        if !(self.freq_mhz.is_finite() && self.freq_mhz > 0.0) {
            return Err(SimError::Profile(format!(
                "freq_mhz must be positive, got {}",
                self.freq_mhz
            )));
        }
        // Surface geometry problems at load time rather than first use.
        self.memory_config()?;
        Ok(())
    }

    /// The validated scratchpad configuration.
    pub fn memory_config(&self) -> Result<MemoryConfig, SimError> {
        let port = self.memory.port_kind()?;
        MemoryConfig::new(
            self.memory.instances,
            self.memory.depth,
            self.memory.width,
            port,
            self.memory.pipelined,
        )
        .map_err(SimError::from)
    }

    /// Controller sequencing cost for one operation.
    pub fn controller_overhead(&self, op: OpKind) -> u64 {
        self.timing.controller_overhead.for_op(op)
    }

    /// Pipeline fill/drain cost for one operation (zero for unpipelined
    /// scratchpads).
    pub fn pipeline_overhead(&self) -> u64 {
        if self.memory.pipelined {
            self.timing.pipeline_overhead
        } else {
            0
        }
    }
}
