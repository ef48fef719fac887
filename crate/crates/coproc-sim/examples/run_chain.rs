//! Run a full keygen → encaps → decaps chain on one architecture profile
//! and print the cycle accounting.
//!
//!     cargo run -p coproc-sim --example run_chain

use std::collections::BTreeMap;

use coproc_sim::{run, OpKind, Program, RunResult, TimingProfile};

const PROFILE: &str = r#"
name = "dp_4"
timing_class = "baseline_dp"
freq_mhz = 610.0

[memory]
port = "dual"
instances = 4
depth = 1024
width = 16

[timing]
keccak_perm_cycles = 28
hash_base = 10
stream_base = 16
compare_base = 8
sampler_cycles = 145
vvmul_cycles = 894
unpack_cycles = 167
copywords_cycles = 60
pipeline_overhead = 0

[timing.controller_overhead]
keygen = 1249
encaps = 871
decaps = 1088
"#;

fn to_map(pairs: &[(&str, &[u8])]) -> BTreeMap<String, Vec<u8>> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.to_vec())).collect()
}

fn report(op: OpKind, res: &RunResult) {
    println!(
        "{:<7} blocks {:>5}  + pipeline {:>3} + controller {:>4}  = {:>5} cycles",
        op.as_str(),
        res.ledger.block_cycles(),
        res.ledger.pipeline_overhead,
        res.ledger.controller_overhead,
        res.ledger.total(),
    );
    for e in &res.ledger.entries {
        println!(
            "    [{:>2}] {:<10} {:>4} cycles  (raw scratchpad schedule {:>3})",
            e.index, e.opcode, e.cycles, e.mem_cycles
        );
    }
}

fn main() {
    let profile = TimingProfile::from_toml_str(PROFILE).expect("profile parses");
    println!(
        "profile {} @ {} MHz, {}x{}x{} {} port{}\n",
        profile.name,
        profile.freq_mhz,
        profile.memory.instances,
        profile.memory.depth,
        profile.memory.width,
        profile.memory.port,
        if profile.memory.pipelined { ", pipelined" } else { "" },
    );

    let seed_a = [0x01u8; 32];
    let seed_s = [0x02u8; 32];
    let z = [0x03u8; 32];
    let m_seed = [0x04u8; 32];

    let kg = run(
        &profile,
        &Program::keygen(),
        &to_map(&[("seed_a", &seed_a), ("seed_s", &seed_s), ("z", &z)]),
    )
    .expect("keygen runs");
    report(OpKind::Keygen, &kg);

    let enc = run(
        &profile,
        &Program::encaps(),
        &to_map(&[("pk", &kg.outputs["pk"]), ("m_seed", &m_seed)]),
    )
    .expect("encaps runs");
    report(OpKind::Encaps, &enc);

    let dec = run(
        &profile,
        &Program::decaps(),
        &to_map(&[
            ("sk_s", &kg.outputs["sk_s"]),
            ("ct", &enc.outputs["ct"]),
            ("sk_z", &kg.outputs["sk_z"]),
            ("sk_pk", &kg.outputs["pk"]),
            ("sk_pkh", &kg.outputs["sk_pkh"]),
        ]),
    )
    .expect("decaps runs");
    report(OpKind::Decaps, &dec);

    let agree = dec.outputs["ss"] == enc.outputs["ss"];
    println!(
        "\nshared secret: {}  ({})",
        enc.outputs["ss"].iter().map(|b| format!("{b:02x}")).collect::<String>(),
        if agree { "decapsulation agrees" } else { "MISMATCH" },
    );
    std::process::exit(i32::from(!agree));
}
