//! Design-space sweep over the coprocessor's scratchpad organizations.
//!
//! Six design points ship as TOML profiles: four baseline dual-port
//! geometries (1, 2, 4, or 8 RAM instances), one pipelined dual-port
//! point, and one pipelined single-port register-file point. The sweep
//! runs the three KEM operations on each point, reports cycle totals and
//! truncated latencies, and checks them against embedded reference
//! figures — flagging, rather than hiding, the one reference latency that
//! disagrees with its own cycle count and clock.

mod expect;
mod sweep;

pub use coproc_sim::{OpKind, TimingProfile};
pub use expect::{ArchExpectation, BlockCosts, Expectations, OpExpectation};
pub use sweep::{
    compare, latency_string, latency_us, sweep, sweep_profiles, Comparison, Finding,
    FindingKind, SweepRow,
};

/// Errors from running the sweep.
#[derive(Debug, thiserror::Error)]
pub enum DseError {
    #[error(transparent)]
    Sim(#[from] coproc_sim::SimError),
}

/// Names of the shipped design points, in sweep order.
pub const PROFILE_NAMES: [&str; 6] = ["dp_1", "dp_2", "dp_4", "dp_8", "pip_dp_4", "pip_sp_4"];

const PROFILE_SOURCES: [&str; 6] = [
    include_str!("../profiles/dp_1.toml"),
    include_str!("../profiles/dp_2.toml"),
    include_str!("../profiles/dp_4.toml"),
    include_str!("../profiles/dp_8.toml"),
    include_str!("../profiles/pip_dp_4.toml"),
    include_str!("../profiles/pip_sp_4.toml"),
];

/// The shipped design points, in sweep order.
pub fn shipped_profiles() -> Vec<TimingProfile> {
    PROFILE_SOURCES
        .iter()
        .map(|src| TimingProfile::from_toml_str(src).expect("shipped profile parses"))
        .collect()
}

/// One shipped design point by name.
pub fn profile_by_name(name: &str) -> Option<TimingProfile> {
    let idx = PROFILE_NAMES.iter().position(|n| *n == name)?;
    Some(TimingProfile::from_toml_str(PROFILE_SOURCES[idx]).expect("shipped profile parses"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_profiles_parse_and_match_their_names() {
        let profiles = shipped_profiles();
        assert_eq!(profiles.len(), PROFILE_NAMES.len());
        for (p, name) in profiles.iter().zip(PROFILE_NAMES) {
            assert_eq!(p.name, name);
            assert!(p.memory_config().is_ok());
        }
        assert_eq!(profile_by_name("pip_sp_4").unwrap().freq_mhz, 1002.0);
        assert!(profile_by_name("dp_16").is_none());
    }

    #[test]
    fn embedded_expectations_cover_every_profile() {
        let exp = Expectations::embedded();
        for name in PROFILE_NAMES {
            assert!(exp.by_name(name).is_some(), "no expectation for {name}");
        }
        assert_eq!(exp.arch.len(), PROFILE_NAMES.len());
        assert!(exp.blocks.contains_key("baseline_dp"));
        assert!(exp.blocks.contains_key("pipelined_sp"));
    }
}
