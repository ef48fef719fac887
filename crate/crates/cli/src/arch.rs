//! Mapping `--arch` values to timing profiles.
//!
//! Resolution order: an explicit TOML path wins; otherwise the
//! (case-insensitive) name is looked up first in the directory named by
//! `SABER_PROFILE_DIR`, then among the embedded shipped design points.
//! The environment variable lets retuned profiles shadow the shipped ones
//! without touching the binary.

use std::path::{Path, PathBuf};

use coproc_sim::TimingProfile;

use crate::CliError;

/// Directory whose `<name>.toml` files shadow the shipped design points.
pub const PROFILE_DIR_ENV: &str = "SABER_PROFILE_DIR";

pub fn profile_dir_from_env() -> Option<PathBuf> {
    std::env::var_os(PROFILE_DIR_ENV).map(PathBuf::from)
}

/// Resolve a `--arch` argument against an optional override directory.
pub fn resolve_profile(spec: &str, profile_dir: Option<&Path>) -> Result<TimingProfile, CliError> {
    let as_path = Path::new(spec);
    if spec.ends_with(".toml") || spec.contains(std::path::MAIN_SEPARATOR) || as_path.is_file() {
        return TimingProfile::from_path(as_path)
            .map_err(|e| CliError::usage(format!("{spec}: {e}")));
    }
    let name = spec.to_ascii_lowercase();
    if let Some(dir) = profile_dir {
        let candidate = dir.join(format!("{name}.toml"));
        if candidate.is_file() {
            return TimingProfile::from_path(&candidate)
                .map_err(|e| CliError::usage(format!("{}: {e}", candidate.display())));
        }
    }
    dse::profile_by_name(&name).ok_or_else(|| {
        CliError::usage(format!(
            "unknown design point {spec:?}; shipped: {} — or pass a profile TOML path",
            dse::PROFILE_NAMES.join(", ")
        ))
    })
}
