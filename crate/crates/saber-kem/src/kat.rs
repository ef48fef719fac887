//! Parsing and replaying `.rsp` known-answer files.
//!
//! A file is a sequence of `name = hexvalue` records; `#` starts a comment
//! and a `count = N` line opens a new vector. Replaying a vector re-derives
//! the keypair, ciphertext and shared secret from the recorded seed through
//! the deterministic DRBG and checks every recorded byte.

use crate::drbg::NistDrbg;
use crate::kem::{kem_decaps, kem_encaps, kem_keygen, SecretKey};
use crate::pke::Ciphertext;
use saber_math::{SaberParams, ALL_VARIANTS};

/// One record of a `.rsp` file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KatVector {
    pub count: u32,
    pub seed: Vec<u8>,
    pub pk: Vec<u8>,
    pub sk: Vec<u8>,
    pub ct: Vec<u8>,
    pub ss: Vec<u8>,
}

/// Errors from parsing or replaying KAT files.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KatError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("vector {count}: missing field {field}")]
    MissingField { count: u32, field: &'static str },
    #[error("no vectors found")]
    Empty,
    #[error("vector sizes match no known parameter set (pk {pk}, sk {sk}, ct {ct})")]
    UnknownVariant { pk: usize, sk: usize, ct: usize },
    #[error("vector {count}: recomputed {field} differs from recorded value")]
    Mismatch { count: u32, field: &'static str },
}

#[derive(Default)]
struct Partial {
    count: Option<u32>,
    seed: Option<Vec<u8>>,
    pk: Option<Vec<u8>>,
    sk: Option<Vec<u8>>,
    ct: Option<Vec<u8>>,
    ss: Option<Vec<u8>>,
}

impl Partial {
    fn is_empty(&self) -> bool {
        self.count.is_none()
            && self.seed.is_none()
            && self.pk.is_none()
            && self.sk.is_none()
            && self.ct.is_none()
            && self.ss.is_none()
    }

    fn finish(self) -> Result<KatVector, KatError> {
        let count = self.count.ok_or(KatError::MissingField { count: 0, field: "count" })?;
        let field = |v: Option<Vec<u8>>, field: &'static str| {
            v.ok_or(KatError::MissingField { count, field })
        };
        Ok(KatVector {
            count,
            seed: field(self.seed, "seed")?,
            pk: field(self.pk, "pk")?,
            sk: field(self.sk, "sk")?,
            ct: field(self.ct, "ct")?,
            ss: field(self.ss, "ss")?,
        })
    }
}

/// Parse a `.rsp` file. Unknown keys are ignored so files with extra
/// bookkeeping fields still load.
pub fn parse_rsp(text: &str) -> Result<Vec<KatVector>, KatError> {
    let mut vectors = Vec::new();
    let mut cur = Partial::default();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or(KatError::Parse {
            line: line_no,
            msg: format!("expected 'name = value', got {line:?}"),
        })?;
        let key = key.trim();
        let value = value.trim();
        if key == "count" {
            if !cur.is_empty() {
                vectors.push(cur.finish()?);
                cur = Partial::default();
            }
            cur.count = Some(value.parse().map_err(|_| KatError::Parse {
                line: line_no,
                msg: format!("bad count {value:?}"),
            })?);
            continue;
        }
        let bytes = hex::decode(value).map_err(|e| KatError::Parse {
            line: line_no,
            msg: format!("bad hex for {key}: {e}"),
        })?;
        match key {
            "seed" => cur.seed = Some(bytes),
            "pk" => cur.pk = Some(bytes),
            "sk" => cur.sk = Some(bytes),
            "ct" => cur.ct = Some(bytes),
            "ss" => cur.ss = Some(bytes),
            _ => {} // tolerated: files may carry extra fields
        }
    }
    if !cur.is_empty() {
        vectors.push(cur.finish()?);
    }
    if vectors.is_empty() {
        return Err(KatError::Empty);
    }
    Ok(vectors)
}

/// Pick the parameter set whose wire sizes match the vector.
pub fn detect_params(v: &KatVector) -> Result<&'static SaberParams, KatError> {
    ALL_VARIANTS
        .iter()
        .copied()
        .find(|p| {
            v.pk.len() == p.pk_bytes && v.sk.len() == p.kem_sk_bytes && v.ct.len() == p.ct_bytes
        })
        .ok_or(KatError::UnknownVariant { pk: v.pk.len(), sk: v.sk.len(), ct: v.ct.len() })
}

/// Replay one vector: derive everything from the seed and compare against
/// the recorded bytes. Also decapsulates via the recorded (parsed) secret
/// key so the interchange parsing path is exercised, not just generation.
pub fn run_vector(params: &SaberParams, v: &KatVector) -> Result<(), KatError> {
    if v.seed.len() != 48 {
        return Err(KatError::Mismatch { count: v.count, field: "seed length" });
    }
    let mut seed = [0u8; 48];
    seed.copy_from_slice(&v.seed);
    let mut drbg = NistDrbg::new(&seed);
    let seed_a = drbg.bytes32();
    let seed_s = drbg.bytes32();
    let z = drbg.bytes32();
    let (pk, sk) = kem_keygen(params, &seed_a, &seed_s, &z);
    if pk.to_bytes() != v.pk {
        return Err(KatError::Mismatch { count: v.count, field: "pk" });
    }
    if sk.to_bytes() != v.sk {
        return Err(KatError::Mismatch { count: v.count, field: "sk" });
    }
    let m_seed = drbg.bytes32();
    let (ct, ss) = kem_encaps(params, &pk, &m_seed)
        .map_err(|_| KatError::Mismatch { count: v.count, field: "encaps" })?;
    if ct.to_bytes() != v.ct {
        return Err(KatError::Mismatch { count: v.count, field: "ct" });
    }
    if ss.as_slice() != v.ss {
        return Err(KatError::Mismatch { count: v.count, field: "ss" });
    }
    let parsed_sk = SecretKey::from_bytes(params, &v.sk)
        .map_err(|_| KatError::Mismatch { count: v.count, field: "sk parse" })?;
    let parsed_ct = Ciphertext::from_bytes(params, &v.ct)
        .map_err(|_| KatError::Mismatch { count: v.count, field: "ct parse" })?;
    let ss2 = kem_decaps(params, &parsed_sk, &parsed_ct)
        .map_err(|_| KatError::Mismatch { count: v.count, field: "decaps" })?;
    if ss2.as_slice() != v.ss {
        return Err(KatError::Mismatch { count: v.count, field: "decaps ss" });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "\
# Comment line\n\
count = 0\n\
seed = 00FF\n\
pk = AA\n\
sk = BB\n\
ct = CC\n\
ss = DD\n\
\n\
count = 1\n\
seed = 0102\n\
pk = 11\n\
sk = 22\n\
ct = 33\n\
ss = 44\n";

    #[test]
    fn parses_multiple_vectors() {
        let vs = parse_rsp(SAMPLE).unwrap();
        assert_eq!(vs.len(), 2);
        assert_eq!(vs[0].count, 0);
        assert_eq!(vs[0].seed, vec![0x00, 0xff]);
        assert_eq!(vs[1].count, 1);
        assert_eq!(vs[1].ss, vec![0x44]);
    }

    #[test]
    fn missing_field_is_reported() {
        let err = parse_rsp("count = 3\nseed = 00\npk = AA\nsk = BB\nct = CC\n").unwrap_err();
        assert_eq!(err, KatError::MissingField { count: 3, field: "ss" });
    }

    #[test]
    fn bad_hex_names_the_line() {
        let err = parse_rsp("count = 0\nseed = XYZ\n").unwrap_err();
        assert!(matches!(err, KatError::Parse { line: 2, .. }));
    }

    #[test]
    fn empty_input_is_an_error() {
        assert_eq!(parse_rsp("# only comments\n"), Err(KatError::Empty));
    }
}
