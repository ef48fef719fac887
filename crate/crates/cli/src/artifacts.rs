//! Reading and writing keypair/ciphertext/secret files.
//!
//! The default interchange format is a single line of lowercase hex —
//! trivial to diff and to paste between machines — with `--binary`
//! switching both directions to raw bytes.

use std::fs;
use std::path::{Path, PathBuf};

use crate::CliError;

/// `<prefix>.<kind>.hex`, or `<prefix>.<kind>.bin` in binary mode.
pub fn artifact_path(prefix: &Path, kind: &str, binary: bool) -> PathBuf {
    let ext = if binary { "bin" } else { "hex" };
    let mut name = prefix.as_os_str().to_os_string();
    name.push(format!(".{kind}.{ext}"));
    PathBuf::from(name)
}

/// Write one artifact, hex-encoded unless `binary`.
pub fn write_bytes_file(path: &Path, bytes: &[u8], binary: bool) -> Result<(), CliError> {
    let payload = if binary {
        bytes.to_vec()
    } else {
        let mut line = hex::encode(bytes);
        line.push('\n');
        line.into_bytes()
    };
    fs::write(path, payload).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}

/// Read one artifact, decoding hex (whitespace tolerated) unless `binary`.
pub fn read_bytes_file(path: &Path, binary: bool) -> Result<Vec<u8>, CliError> {
    let raw = fs::read(path).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
    if binary {
        return Ok(raw);
    }
    let text = String::from_utf8(raw).map_err(|_| {
        CliError::usage(format!(
            "{}: not a hex text file (raw bytes? pass --binary)",
            path.display()
        ))
    })?;
    let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    hex::decode(&cleaned).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn artifact_paths_append_kind_and_extension() {
        assert_eq!(artifact_path(Path::new("alice"), "pk", false), PathBuf::from("alice.pk.hex"));
        assert_eq!(artifact_path(Path::new("d/alice"), "sk", true), PathBuf::from("d/alice.sk.bin"));
    }

    #[test]
    fn hex_roundtrip_and_whitespace_tolerance() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("x.hex");
        write_bytes_file(&path, &[0xde, 0xad, 0xbe, 0xef], false).unwrap();
        let text = fs::read_to_string(&path).unwrap();
        assert_eq!(text, "deadbeef\n");
        assert_eq!(read_bytes_file(&path, false).unwrap(), vec![0xde, 0xad, 0xbe, 0xef]);

        fs::write(&path, "de ad\nbe\tef\n").unwrap();
        assert_eq!(read_bytes_file(&path, false).unwrap(), vec![0xde, 0xad, 0xbe, 0xef]);
    }

    #[test]
    fn binary_roundtrip_is_byte_exact() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("x.bin");
        let bytes: Vec<u8> = (0..=255).collect();
        write_bytes_file(&path, &bytes, true).unwrap();
        assert_eq!(read_bytes_file(&path, true).unwrap(), bytes);
    }

    #[test]
    fn missing_file_and_bad_hex_are_usage_errors() {
        let dir = tempfile::tempdir().unwrap();
        let missing = dir.path().join("nope.hex");
        assert!(matches!(read_bytes_file(&missing, false), Err(CliError::Usage(_))));

        let bad = dir.path().join("bad.hex");
        fs::write(&bad, "zz").unwrap();
        assert!(matches!(read_bytes_file(&bad, false), Err(CliError::Usage(_))));

        let not_text = dir.path().join("raw.hex");
        fs::write(&not_text, [0xff, 0xfe, 0x00, 0x01]).unwrap();
        let err = read_bytes_file(&not_text, false).unwrap_err();
        match err {
            CliError::Usage(msg) => assert!(msg.contains("--binary"), "{msg}"),
            other => panic!("expected usage error, got {other:?}"),
        }
    }
}
