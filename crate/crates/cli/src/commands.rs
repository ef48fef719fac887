//! Implementations of the six subcommands.

use std::collections::BTreeMap;
use std::fs;

use coproc_sim::{run_op, CycleLedger, OpKind, TimingProfile};
use dse::{compare, latency_string, sweep_profiles, Expectations, SweepRow};
use saber_kem::{
    detect_params, kem_decaps, kem_encaps, kem_keygen, parse_rsp, run_vector, Ciphertext,
    PublicKey, SecretKey,
};
use saber_math::SaberParams;

use crate::arch::{profile_dir_from_env, resolve_profile};
use crate::artifacts::{artifact_path, read_bytes_file, write_bytes_file};
use crate::seeds::{encaps_seed, keygen_seeds};
use crate::{
    CliError, DecapsArgs, EncapsArgs, Format, KatArgs, KeygenArgs, SimulateArgs, SweepArgs,
};

fn variant_params(name: &str) -> Result<&'static SaberParams, CliError> {
    SaberParams::by_name(&name.to_ascii_lowercase()).ok_or_else(|| {
        CliError::usage(format!("unknown variant {name:?}; expected light, saber, or fire"))
    })
}

pub fn keygen(args: &KeygenArgs) -> Result<(), CliError> {
    let params = variant_params(&args.variant)?;
    let seeds = keygen_seeds(args.seed.as_deref())?;
    let (pk, sk) = kem_keygen(params, &seeds.seed_a, &seeds.seed_s, &seeds.z);
    let pk_path = artifact_path(&args.out, "pk", args.binary);
    let sk_path = artifact_path(&args.out, "sk", args.binary);
    write_bytes_file(&pk_path, &pk.to_bytes(), args.binary)?;
    write_bytes_file(&sk_path, &sk.to_bytes(), args.binary)?;
    println!("{}: pk {} bytes -> {}", params.name, params.pk_bytes, pk_path.display());
    println!("{}: sk {} bytes -> {}", params.name, params.kem_sk_bytes, sk_path.display());
    Ok(())
}

pub fn encaps(args: &EncapsArgs) -> Result<(), CliError> {
    let params = variant_params(&args.variant)?;
    let pk_bytes = read_bytes_file(&args.input, args.binary)?;
    let pk = PublicKey::from_bytes(params, &pk_bytes)
        .map_err(|e| CliError::usage(format!("{}: {e}", args.input.display())))?;
    let m_seed = encaps_seed(args.seed.as_deref())?;
    let (ct, ss) =
        kem_encaps(params, &pk, &m_seed).map_err(|e| CliError::usage(e.to_string()))?;
    let ct_path = artifact_path(&args.out, "ct", args.binary);
    let ss_path = artifact_path(&args.out, "ss", args.binary);
    write_bytes_file(&ct_path, &ct.to_bytes(), args.binary)?;
    write_bytes_file(&ss_path, &ss, args.binary)?;
    println!("{}: ct {} bytes -> {}", params.name, params.ct_bytes, ct_path.display());
    println!("ss = {}", hex::encode(ss));
    Ok(())
}

pub fn decaps(args: &DecapsArgs) -> Result<(), CliError> {
    let params = variant_params(&args.variant)?;
    let sk_bytes = read_bytes_file(&args.sk, args.binary)?;
    let sk = SecretKey::from_bytes(params, &sk_bytes)
        .map_err(|e| CliError::usage(format!("{}: {e}", args.sk.display())))?;
    let ct_bytes = read_bytes_file(&args.input, args.binary)?;
    let ct = Ciphertext::from_bytes(params, &ct_bytes)
        .map_err(|e| CliError::usage(format!("{}: {e}", args.input.display())))?;
    let ss = kem_decaps(params, &sk, &ct).map_err(|e| CliError::usage(e.to_string()))?;
    println!("ss = {}", hex::encode(ss));
    if let Some(out) = &args.out {
        write_bytes_file(out, &ss, args.binary)?;
        println!("ss 32 bytes -> {}", out.display());
    }
    Ok(())
}

pub fn kat(args: &KatArgs) -> Result<(), CliError> {
    let required = args.variant.as_deref().map(variant_params).transpose()?;
    let text = fs::read_to_string(&args.path)
        .map_err(|e| CliError::usage(format!("{}: {e}", args.path.display())))?;
    let vectors = parse_rsp(&text)
        .map_err(|e| CliError::usage(format!("{}: {e}", args.path.display())))?;
    let mut failed = 0usize;
    for v in &vectors {
        let params = match detect_params(v) {
            Ok(p) => p,
            Err(e) => {
                println!("vector {:>3}: FAIL ({e})", v.count);
                failed += 1;
                continue;
            }
        };
        if let Some(req) = required {
            if params.name != req.name {
                return Err(CliError::usage(format!(
                    "vector {} carries {} artifacts, but --variant {} was requested",
                    v.count, params.name, req.name
                )));
            }
        }
        match run_vector(params, v) {
            Ok(()) => println!("vector {:>3}: ok ({})", v.count, params.name),
            Err(e) => {
                println!("vector {:>3}: FAIL ({e})", v.count);
                failed += 1;
            }
        }
    }
    println!("{} of {} vectors passed", vectors.len() - failed, vectors.len());
    if failed > 0 {
        return Err(CliError::failure(format!("{failed} of {} vectors failed", vectors.len())));
    }
    Ok(())
}

pub fn simulate(args: &SimulateArgs) -> Result<(), CliError> {
    let op: OpKind = args.op.parse().expect("clap constrains the operation names");
    let params = variant_params(&args.variant)?;
    if params.name != "saber" {
        return Err(CliError::usage(format!(
            "the timing model implements the rank-3 parameter set only; --variant {} has no \
             design point (the golden-model subcommands support it)",
            params.name
        )));
    }
    let profile = resolve_profile(&args.arch, profile_dir_from_env().as_deref())?;
    let inputs = simulation_inputs(params, op, args.seed.as_deref())?;
    let result =
        run_op(&profile, op, &inputs).map_err(|e| CliError::failure(format!("simulation: {e}")))?;
    match args.format {
        Format::Text => print_ledger_text(&profile, op, &result.ledger),
        Format::Csv => print_ledger_csv(&profile, op, &result.ledger),
    }
    Ok(())
}

/// Build the input slots for one simulated operation. Encapsulation and
/// decapsulation consume artifacts of the preceding operations, which the
/// portable golden model supplies (the simulator is bit-identical to it).
fn simulation_inputs(
    params: &'static SaberParams,
    op: OpKind,
    seed: Option<&str>,
) -> Result<BTreeMap<String, Vec<u8>>, CliError> {
    let seeds = keygen_seeds(seed)?;
    let mut inputs = BTreeMap::new();
    match op {
        OpKind::Keygen => {
            inputs.insert("seed_a".to_string(), seeds.seed_a.to_vec());
            inputs.insert("seed_s".to_string(), seeds.seed_s.to_vec());
            inputs.insert("z".to_string(), seeds.z.to_vec());
        }
        OpKind::Encaps => {
            let (pk, _sk) = kem_keygen(params, &seeds.seed_a, &seeds.seed_s, &seeds.z);
            inputs.insert("pk".to_string(), pk.to_bytes());
            inputs.insert("m_seed".to_string(), encaps_seed(seed)?.to_vec());
        }
        OpKind::Decaps => {
            let (pk, sk) = kem_keygen(params, &seeds.seed_a, &seeds.seed_s, &seeds.z);
            let m_seed = encaps_seed(seed)?;
            let (ct, _ss) = kem_encaps(params, &pk, &m_seed)
                .map_err(|e| CliError::failure(e.to_string()))?;
            inputs.insert("sk_s".to_string(), sk.s_hw_bytes());
            inputs.insert("ct".to_string(), ct.to_bytes());
            inputs.insert("sk_z".to_string(), sk.z.to_vec());
            inputs.insert("sk_pk".to_string(), pk.to_bytes());
            inputs.insert("sk_pkh".to_string(), sk.pk_hash.to_vec());
        }
    }
    Ok(inputs)
}

fn print_ledger_text(profile: &TimingProfile, op: OpKind, ledger: &CycleLedger) {
    println!(
        "design point {} ({}, {} MHz) — {}",
        profile.name, profile.timing_class, profile.freq_mhz, op.as_str()
    );
    println!();
    println!("  idx   block         cycles  scratchpad");
    for e in &ledger.entries {
        println!("  [{:>2}]  {:<12} {:>6}  {:>10}", e.index, e.opcode, e.cycles, e.mem_cycles);
    }
    println!();
    println!("  block cycles        {:>6}", ledger.block_cycles());
    println!("  pipeline overhead   {:>6}", ledger.pipeline_overhead);
    println!("  controller overhead {:>6}", ledger.controller_overhead);
    println!("  total cycles        {:>6}", ledger.total());
    println!(
        "  latency             {} us  ({} cycles at {} MHz)",
        latency_string(ledger.total(), profile.freq_mhz),
        ledger.total(),
        profile.freq_mhz
    );
}

fn print_ledger_csv(profile: &TimingProfile, op: OpKind, ledger: &CycleLedger) {
    println!(
        "arch,timing_class,freq_mhz,op,block_cycles,pipeline_overhead,controller_overhead,\
         total_cycles,latency_us"
    );
    println!(
        "{},{},{},{},{},{},{},{},{}",
        profile.name,
        profile.timing_class,
        profile.freq_mhz,
        op.as_str(),
        ledger.block_cycles(),
        ledger.pipeline_overhead,
        ledger.controller_overhead,
        ledger.total(),
        latency_string(ledger.total(), profile.freq_mhz)
    );
}

pub fn sweep(args: &SweepArgs) -> Result<(), CliError> {
    let dir = profile_dir_from_env();
    let (rows, comparison) = match &args.arch {
        Some(spec) => {
            let profile = resolve_profile(spec, dir.as_deref())?;
            let rows =
                sweep_profiles(&[profile]).map_err(|e| CliError::failure(e.to_string()))?;
            (rows, None)
        }
        None => {
            let profiles = dse::PROFILE_NAMES
                .iter()
                .map(|name| resolve_profile(name, dir.as_deref()))
                .collect::<Result<Vec<_>, CliError>>()?;
            let rows =
                sweep_profiles(&profiles).map_err(|e| CliError::failure(e.to_string()))?;
            let comparison = compare(&rows, &Expectations::embedded());
            (rows, Some(comparison))
        }
    };
    let report = match args.format {
        Format::Csv => render_csv(&rows),
        Format::Text => render_text(&rows),
    };
    match &args.out {
        Some(path) => {
            fs::write(path, &report)
                .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
            println!("report ({} rows) -> {}", rows.len(), path.display());
        }
        None => print!("{report}"),
    }
    if let Some(cmp) = comparison {
        for finding in &cmp.findings {
            eprintln!("deviation: {finding}");
        }
        let documented = cmp.findings.iter().filter(|f| f.documented).count();
        let unexpected = cmp.findings.len() - documented;
        eprintln!(
            "sweep: {} rows, {} documented deviation(s), {} unexpected",
            rows.len(),
            documented,
            unexpected
        );
        if unexpected > 0 {
            return Err(CliError::failure(format!(
                "{unexpected} unexpected deviation(s) from the reference figures"
            )));
        }
        if args.strict && !cmp.findings.is_empty() {
            return Err(CliError::failure(format!(
                "strict mode: {documented} documented deviation(s) present"
            )));
        }
    }
    Ok(())
}

fn render_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from("arch,timing_class,freq_mhz,op,block_cycles,total_cycles,latency_us\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.arch,
            r.timing_class,
            r.freq_mhz,
            r.op.as_str(),
            r.block_cycles,
            r.total_cycles,
            latency_string(r.total_cycles, r.freq_mhz)
        ));
    }
    out
}

fn render_text(rows: &[SweepRow]) -> String {
    let mut out = format!(
        "{:<10} {:<13} {:>6}  {:<7} {:>7} {:>7}  {:>7}\n",
        "arch", "class", "MHz", "op", "blocks", "total", "latency"
    );
    for r in rows {
        out.push_str(&format!(
            "{:<10} {:<13} {:>6}  {:<7} {:>7} {:>7}  {:>4} us\n",
            r.arch,
            r.timing_class,
            r.freq_mhz,
            r.op.as_str(),
            r.block_cycles,
            r.total_cycles,
            latency_string(r.total_cycles, r.freq_mhz)
        ));
    }
    out
}
