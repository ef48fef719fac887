//! Shared architecture profiles for the simulator tests: the six shipped
//! design points, built inline so the tests pin every constant.

// each test binary uses its own subset of these helpers
#![allow(dead_code)]

use coproc_sim::{ControllerOverhead, MemorySpec, TimingProfile, TimingSpec};

/// Timing constants calibrated for the baseline dual-port datapath.
pub fn dp_timing() -> TimingSpec {
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
        controller_overhead: ControllerOverhead { keygen: 1249, encaps: 871, decaps: 1088 },
    }
}

/// The dual-port datapath behind a pipelined scratchpad.
pub fn pip_dp_timing() -> TimingSpec {
    TimingSpec { pipeline_overhead: 97, ..dp_timing() }
}

/// Timing constants calibrated for the single-port datapath.
pub fn sp_timing() -> TimingSpec {
    TimingSpec {
        keccak_perm_cycles: 28,
        hash_base: 10,
        stream_base: 16,
        compare_base: 8,
        sampler_cycles: 246,
        vvmul_cycles: 970,
        unpack_cycles: 295,
        copywords_cycles: 211,
        pipeline_overhead: 97,
        controller_overhead: ControllerOverhead { keygen: 2182, encaps: 515, decaps: 926 },
    }
}

pub fn mem(port: &str, instances: usize, depth: usize, width: usize, pipelined: bool) -> MemorySpec {
    MemorySpec { port: port.into(), instances, depth, width, pipelined }
}

pub fn profile(name: &str, freq_mhz: f64, memory: MemorySpec, timing: TimingSpec) -> TimingProfile {
    TimingProfile { name: name.into(), timing_class: String::new(), freq_mhz, memory, timing }
}

/// The six shipped design points.
pub fn shipped() -> Vec<TimingProfile> {
    vec![
        profile("dp_1", 500.0, mem("dual", 1, 1024, 64, false), dp_timing()),
        profile("dp_2", 582.0, mem("dual", 2, 1024, 32, false), dp_timing()),
        profile("dp_4", 610.0, mem("dual", 4, 1024, 16, false), dp_timing()),
        profile("dp_8", 615.0, mem("dual", 8, 512, 16, false), dp_timing()),
        profile("pip_dp_4", 663.0, mem("dual", 4, 1024, 16, true), pip_dp_timing()),
        profile("pip_sp_4", 1002.0, mem("single", 4, 256, 64, true), sp_timing()),
    ]
}

/// A convenient default point for functional tests.
pub fn dp4() -> TimingProfile {
    profile("dp_4", 610.0, mem("dual", 4, 1024, 16, false), dp_timing())
}
