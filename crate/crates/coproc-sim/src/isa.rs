//! The coprocessor's instruction set and the `.sasm` program format.
//!
//! A program is a header (`.op`, `.in`, `.out` directives) followed by
//! straight-line instructions, one per line, ending in `halt`. Addresses
//! and lengths are 64-bit words of the scratchpad unless an operand is
//! explicitly a byte count (hash input/output lengths).

use crate::SimError;
use memsys::LOGICAL_WORDS;

/// Which KEM operation a program implements; selects the controller
/// overhead bucket of the timing profile.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OpKind {
    Keygen,
    Encaps,
    Decaps,
}

impl OpKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            OpKind::Keygen => "keygen",
            OpKind::Encaps => "encaps",
            OpKind::Decaps => "decaps",
        }
    }

}

impl std::str::FromStr for OpKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "keygen" => Ok(OpKind::Keygen),
            "encaps" => Ok(OpKind::Encaps),
            "decaps" => Ok(OpKind::Decaps),
            other => Err(format!("unknown operation {other:?}")),
        }
    }
}

/// Direction of the combined add-and-pack unit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PackMode {
    /// Encryption side: fold a 1-bit message into the inner product and
    /// round down to the narrow ciphertext width.
    Enc,
    /// Decryption side: subtract the widened message part and threshold to
    /// one bit.
    Dec,
}

/// One instruction. Operand names: `dst`/`src`/`a`/`b` are word addresses,
/// `*_bytes` are byte counts, `len`/`npolys` are element counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[allow(non_camel_case_types)]
pub enum Instr {
    /// Extendable-output hash: `in_bytes` at `src` to `out_bytes` at `dst`.
    Shake128 { dst: usize, src: usize, in_bytes: usize, out_bytes: usize },
    /// 32-byte digest of `in_bytes` at `src`.
    Sha3_256 { dst: usize, src: usize, in_bytes: usize },
    /// 64-byte digest of `in_bytes` at `src`.
    Sha3_512 { dst: usize, src: usize, in_bytes: usize },
    /// Expand the 32-byte seed at `seed` into the 9-polynomial public
    /// matrix at `dst` (row major, 13-bit packed).
    GenMatrix { dst: usize, seed: usize },
    /// Run the binomial sampler over the coin block at `coins`, writing the
    /// 3-polynomial secret vector at `dst` in signed 14-bit form.
    CbdSample { dst: usize, coins: usize },
    /// Vector-vector multiply: dot product of matrix row/column `idx` (at
    /// `mat`, 13-bit packed) with the secret vector at `vec` (14-bit form),
    /// result 13-bit packed at `dst`.
    Vvmul { dst: usize, mat: usize, idx: usize, transpose: bool, vec: usize },
    /// Add the rounding constant and shift `npolys` polynomials from the
    /// working width to 10 bits.
    AddRound { dst: usize, src: usize, npolys: usize },
    /// Widen the 3-polynomial 10-bit vector at `src` to 13-bit packing.
    Bs2Polvecp { dst: usize, src: usize },
    /// Combined add-and-pack over the inner product at `v` and the operand
    /// at `aux` (message bits when `Enc`, widened message part when `Dec`).
    AddPack { dst: usize, v: usize, aux: usize, mode: PackMode },
    /// Widen `npolys` polynomials packed at `eps` bits to 13-bit packing.
    Unpack { dst: usize, src: usize, npolys: usize, eps: usize },
    /// Plain word copy.
    CopyWords { dst: usize, src: usize, len: usize },
    /// Compare `len` words at `a` and `b`; sets the machine flag to 0 on
    /// equality, 1 otherwise.
    Verify { a: usize, b: usize, len: usize },
    /// Copy `len` words from `src` to `dst` when the flag is 0; leave `dst`
    /// untouched when it is 1.
    Cmov { dst: usize, src: usize, len: usize },
    /// End of program.
    Halt,
}

impl Instr {
    pub fn mnemonic(&self) -> &'static str {
        match self {
            Instr::Shake128 { .. } => "shake128",
            Instr::Sha3_256 { .. } => "sha3_256",
            Instr::Sha3_512 { .. } => "sha3_512",
            Instr::GenMatrix { .. } => "gen_matrix",
            Instr::CbdSample { .. } => "cbd_sample",
            Instr::Vvmul { .. } => "vvmul",
            Instr::AddRound { .. } => "addround",
            Instr::Bs2Polvecp { .. } => "bs2polvecp",
            Instr::AddPack { .. } => "addpack",
            Instr::Unpack { .. } => "unpack",
            Instr::CopyWords { .. } => "copywords",
            Instr::Verify { .. } => "verify",
            Instr::Cmov { .. } => "cmov",
            Instr::Halt => "halt",
        }
    }
}

/// A named input or output region of the scratchpad.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IoSlot {
    pub name: String,
    pub word: usize,
    pub words: usize,
}

impl IoSlot {
    pub fn bytes(&self) -> usize {
        self.words * 8
    }
}

/// An assembled program.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Program {
    pub op: OpKind,
    pub inputs: Vec<IoSlot>,
    pub outputs: Vec<IoSlot>,
    pub instrs: Vec<Instr>,
}

const KEYGEN_SASM: &str = include_str!("../programs/keygen.sasm");
const ENCAPS_SASM: &str = include_str!("../programs/encaps.sasm");
const DECAPS_SASM: &str = include_str!("../programs/decaps.sasm");

impl Program {
    /// The shipped key-generation program.
    pub fn keygen() -> Program {
        Program::parse(KEYGEN_SASM).expect("shipped program assembles")
    }

    /// The shipped encapsulation program.
    pub fn encaps() -> Program {
        Program::parse(ENCAPS_SASM).expect("shipped program assembles")
    }

    /// The shipped decapsulation program.
    pub fn decaps() -> Program {
        Program::parse(DECAPS_SASM).expect("shipped program assembles")
    }

    /// The shipped program for an operation.
    pub fn for_op(op: OpKind) -> Program {
        match op {
            OpKind::Keygen => Program::keygen(),
            OpKind::Encaps => Program::encaps(),
            OpKind::Decaps => Program::decaps(),
        }
    }

    /// Assemble a program from a file on disk.
    pub fn from_path(path: &std::path::Path) -> Result<Program, SimError> {
        Program::parse(&std::fs::read_to_string(path)?)
    }

    /// Assemble a program from source text.
    pub fn parse(text: &str) -> Result<Program, SimError> {
        let mut op = None;
        let mut inputs = Vec::new();
        let mut outputs = Vec::new();
        let mut instrs: Vec<Instr> = Vec::new();

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let err = |msg: String| SimError::Asm { line: line_no, msg };
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if instrs.last() == Some(&Instr::Halt) {
                return Err(err("code after halt".into()));
            }
            match tokens[0] {
                ".op" => {
                    let name = *tokens.get(1).ok_or_else(|| err(".op needs a name".into()))?;
                    op = Some(name.parse::<OpKind>().map_err(err)?);
                }
                ".in" | ".out" => {
                    if tokens.len() != 4 {
                        return Err(err(format!("{} needs: name word words", tokens[0])));
                    }
                    let word = parse_num(tokens[2], line_no)?;
                    let words = parse_num(tokens[3], line_no)?;
                    if word + words > LOGICAL_WORDS {
                        return Err(err(format!(
                            "slot {} overruns memory ({} + {} words)",
                            tokens[1], word, words
                        )));
                    }
                    let slot = IoSlot { name: tokens[1].to_string(), word, words };
                    if tokens[0] == ".in" {
                        inputs.push(slot);
                    } else {
                        outputs.push(slot);
                    }
                }
                mnemonic => instrs.push(parse_instr(mnemonic, &tokens, line_no)?),
            }
        }

        let op = op.ok_or(SimError::Asm { line: 0, msg: "missing .op directive".into() })?;
        if instrs.last() != Some(&Instr::Halt) {
            return Err(SimError::Asm { line: 0, msg: "program must end with halt".into() });
        }
        Ok(Program { op, inputs, outputs, instrs })
    }

    /// Look up an input slot by name.
    pub fn input(&self, name: &str) -> Option<&IoSlot> {
        self.inputs.iter().find(|s| s.name == name)
    }

    /// Look up an output slot by name.
    pub fn output(&self, name: &str) -> Option<&IoSlot> {
        self.outputs.iter().find(|s| s.name == name)
    }
}

fn parse_num(tok: &str, line: usize) -> Result<usize, SimError> {
    tok.parse()
        .map_err(|_| SimError::Asm { line, msg: format!("expected a number, got {tok:?}") })
}

fn parse_instr(mnemonic: &str, tokens: &[&str], line: usize) -> Result<Instr, SimError> {
    let err = |msg: String| SimError::Asm { line, msg };
    let num = |i: usize| -> Result<usize, SimError> {
        let tok = tokens
            .get(i)
            .ok_or_else(|| err(format!("{mnemonic} is missing operand {i}")))?;
        parse_num(tok, line)
    };
    let arity = |n: usize| -> Result<(), SimError> {
        if tokens.len() == n + 1 {
            Ok(())
        } else {
            Err(err(format!("{mnemonic} takes {n} operands, got {}", tokens.len() - 1)))
        }
    };
    let instr = match mnemonic.to_ascii_lowercase().as_str() {
        "shake128" => {
            arity(4)?;
            Instr::Shake128 { dst: num(1)?, src: num(2)?, in_bytes: num(3)?, out_bytes: num(4)? }
        }
        "sha3_256" => {
            arity(3)?;
            Instr::Sha3_256 { dst: num(1)?, src: num(2)?, in_bytes: num(3)? }
        }
        "sha3_512" => {
            arity(3)?;
            Instr::Sha3_512 { dst: num(1)?, src: num(2)?, in_bytes: num(3)? }
        }
        "gen_matrix" => {
            arity(2)?;
            Instr::GenMatrix { dst: num(1)?, seed: num(2)? }
        }
        "cbd_sample" => {
            arity(2)?;
            Instr::CbdSample { dst: num(1)?, coins: num(2)? }
        }
        "vvmul" => {
            arity(5)?;
            let t = match tokens[4] {
                "t" | "T" => true,
                "n" | "N" => false,
                other => return Err(err(format!("vvmul transpose must be t or n, got {other:?}"))),
            };
            Instr::Vvmul { dst: num(1)?, mat: num(2)?, idx: num(3)?, transpose: t, vec: num(5)? }
        }
        "addround" => {
            arity(3)?;
            Instr::AddRound { dst: num(1)?, src: num(2)?, npolys: num(3)? }
        }
        "bs2polvecp" => {
            arity(2)?;
            Instr::Bs2Polvecp { dst: num(1)?, src: num(2)? }
        }
        "addpack" => {
            arity(4)?;
            let mode = match tokens[4] {
                "enc" => PackMode::Enc,
                "dec" => PackMode::Dec,
                other => return Err(err(format!("addpack mode must be enc or dec, got {other:?}"))),
            };
            Instr::AddPack { dst: num(1)?, v: num(2)?, aux: num(3)?, mode }
        }
        "unpack" => {
            arity(4)?;
            Instr::Unpack { dst: num(1)?, src: num(2)?, npolys: num(3)?, eps: num(4)? }
        }
        "copywords" => {
            arity(3)?;
            Instr::CopyWords { dst: num(1)?, src: num(2)?, len: num(3)? }
        }
        "verify" => {
            arity(3)?;
            Instr::Verify { a: num(1)?, b: num(2)?, len: num(3)? }
        }
        "cmov" => {
            arity(3)?;
            Instr::Cmov { dst: num(1)?, src: num(2)?, len: num(3)? }
        }
        "halt" => {
            arity(0)?;
            Instr::Halt
        }
        other => return Err(err(format!("unknown mnemonic {other:?}"))),
    };
    Ok(instr)
}
