//! `saber` — command-line front end for the Mod-LWR KEM and its
//! coprocessor timing models.
//!
//! The six subcommands split into two groups. `keygen`, `encaps`, `decaps`,
//! and `kat` run the portable golden model: they exchange hex-encoded
//! artifact files (raw bytes behind `--binary`) and replay known-answer
//! files. `simulate` and `sweep` run the transaction-level hardware model:
//! they time the same operations on a chosen scratchpad design point and
//! check the results against the embedded reference figures.
//!
//! Exit codes are a stable contract: 0 success, 1 verification or
//! expectation failure, 2 usage or input-format error.

mod arch;
mod artifacts;
mod commands;
mod seeds;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Errors carried up to the exit-code mapping.
#[derive(Debug)]
pub enum CliError {
    /// Bad flags, malformed inputs, unreadable or unwritable paths — exit 2.
    Usage(String),
    /// The command ran but what it checked did not hold — exit 1.
    Failure(String),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn failure(msg: impl Into<String>) -> Self {
        CliError::Failure(msg.into())
    }
}

/// Report rendering for `simulate` and `sweep`.
#[derive(Debug, Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Human-readable aligned text.
    Text,
    /// One header line plus comma-separated rows.
    Csv,
}

#[derive(Parser)]
#[command(
    name = "saber",
    version,
    about = "Mod-LWR KEM operations, known-answer replay, and coprocessor timing models",
    after_help = "Exit codes: 0 success, 1 verification/expectation failure, 2 usage/format error."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a keypair and write <out>.pk.hex and <out>.sk.hex
    Keygen(KeygenArgs),
    /// Encapsulate to a public key and write <out>.ct.hex and <out>.ss.hex
    Encaps(EncapsArgs),
    /// Recover the shared secret from a ciphertext with a secret key
    Decaps(DecapsArgs),
    /// Replay a known-answer .rsp file, reporting every vector
    Kat(KatArgs),
    /// Time one operation on a design point and dump its cycle ledger
    Simulate(SimulateArgs),
    /// Time all operations on the shipped design points and check the reference figures
    Sweep(SweepArgs),
}

#[derive(Args)]
pub struct KeygenArgs {
    /// Parameter set: light, saber, or fire
    #[arg(long, default_value = "saber")]
    pub variant: String,
    /// Hex seed. 48 bytes replays the known-answer generator; 96 bytes is
    /// used directly as seed_a || seed_s || z; other lengths are expanded
    /// with SHAKE-128. Omit for fresh OS randomness.
    #[arg(long)]
    pub seed: Option<String>,
    /// Output prefix; the keypair lands in <out>.pk.hex and <out>.sk.hex
    #[arg(long, value_name = "PREFIX")]
    pub out: PathBuf,
    /// Write raw bytes (.pk.bin / .sk.bin) instead of hex
    #[arg(long)]
    pub binary: bool,
}

#[derive(Args)]
pub struct EncapsArgs {
    /// Parameter set: light, saber, or fire
    #[arg(long, default_value = "saber")]
    pub variant: String,
    /// Hex seed for the message: 32 bytes used directly, other lengths
    /// expanded with SHAKE-128. Omit for fresh OS randomness.
    #[arg(long)]
    pub seed: Option<String>,
    /// Public-key file (hex; raw bytes with --binary)
    #[arg(long = "in", value_name = "PK_FILE")]
    pub input: PathBuf,
    /// Output prefix; results land in <out>.ct.hex and <out>.ss.hex
    #[arg(long, value_name = "PREFIX")]
    pub out: PathBuf,
    /// Read and write raw bytes instead of hex
    #[arg(long)]
    pub binary: bool,
}

#[derive(Args)]
pub struct DecapsArgs {
    /// Parameter set: light, saber, or fire
    #[arg(long, default_value = "saber")]
    pub variant: String,
    /// Secret-key file (hex; raw bytes with --binary)
    #[arg(long, value_name = "SK_FILE")]
    pub sk: PathBuf,
    /// Ciphertext file (hex; raw bytes with --binary)
    #[arg(long = "in", value_name = "CT_FILE")]
    pub input: PathBuf,
    /// Also write the recovered shared secret to this file
    #[arg(long, value_name = "SS_FILE")]
    pub out: Option<PathBuf>,
    /// Read and write raw bytes instead of hex
    #[arg(long)]
    pub binary: bool,
}

#[derive(Args)]
pub struct KatArgs {
    /// Require every vector to use this parameter set (default: detect per vector)
    #[arg(long)]
    pub variant: Option<String>,
    /// Known-answer .rsp file
    #[arg(value_name = "RSP_FILE")]
    pub path: PathBuf,
}

#[derive(Args)]
pub struct SimulateArgs {
    /// Operation to time
    #[arg(value_parser = ["keygen", "encaps", "decaps"])]
    pub op: String,
    /// Design point: a shipped name (dp_1, dp_2, dp_4, dp_8, pip_dp_4,
    /// pip_sp_4, case-insensitive) or a path to a profile TOML
    #[arg(long)]
    pub arch: String,
    /// Parameter set; the timing model implements the rank-3 set (saber) only
    #[arg(long, default_value = "saber")]
    pub variant: String,
    /// Hex seed for the data inputs. Cycle counts are data-independent,
    /// so this only changes the bytes flowing through the model.
    #[arg(long)]
    pub seed: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args)]
pub struct SweepArgs {
    /// Restrict to one design point (name or profile TOML path); this
    /// skips the reference comparison
    #[arg(long)]
    pub arch: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Exit nonzero on any deviation from the reference figures, even the
    /// documented one (full sweeps only)
    #[arg(long)]
    pub strict: bool,
    /// Write the report to this file instead of stdout
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

fn dispatch(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Keygen(args) => commands::keygen(args),
        Command::Encaps(args) => commands::encaps(args),
        Command::Decaps(args) => commands::decaps(args),
        Command::Kat(args) => commands::kat(args),
        Command::Simulate(args) => commands::simulate(args),
        Command::Sweep(args) => commands::sweep(args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
