//! Schema for the embedded reference figures.

use std::collections::BTreeMap;

use coproc_sim::OpKind;
use serde::Deserialize;

/// Reference figure for one operation on one design point.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OpExpectation {
    /// Total clock cycles, matched exactly.
    pub cycles: u64,
    /// Latency in microseconds as originally reported, kept verbatim.
    pub latency: String,
    /// True when the reported latency is known not to follow from the
    /// cycle count and clock frequency; the comparison then reports the
    /// mismatch as a documented deviation.
    #[serde(default)]
    pub latency_flagged: bool,
}

/// Reference figures for one design point.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArchExpectation {
    pub name: String,
    pub freq_mhz: f64,
    pub keygen: OpExpectation,
    pub encaps: OpExpectation,
    pub decaps: OpExpectation,
}

impl ArchExpectation {
    pub fn op(&self, op: OpKind) -> &OpExpectation {
        match op {
            OpKind::Keygen => &self.keygen,
            OpKind::Encaps => &self.encaps,
            OpKind::Decaps => &self.decaps,
        }
    }
}

/// Flat per-invocation unit costs of one timing class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlockCosts {
    pub sampler: u64,
    pub multiplier: u64,
    pub unpack: u64,
    pub copywords: u64,
}

/// The complete set of reference figures.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expectations {
    pub arch: Vec<ArchExpectation>,
    /// Unit costs keyed by timing class.
    pub blocks: BTreeMap<String, BlockCosts>,
}

impl Expectations {
    /// The figures shipped with the crate.
    pub fn embedded() -> Expectations {
        toml::from_str(include_str!("../data/expectations.toml"))
            .expect("embedded reference figures parse")
    }

    pub fn by_name(&self, name: &str) -> Option<&ArchExpectation> {
        self.arch.iter().find(|a| a.name == name)
    }
}
