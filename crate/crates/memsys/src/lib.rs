//! Model of the coprocessor's banked data scratchpad.
//!
//! The datapath sees a flat space of 1024 64-bit words; physically the same
//! 65536 bits can be organized as 1 to 8 block-RAM instances of varying
//! depth and width, with dual- or single-port access and an optional
//! one-cycle output register (pipelined mode). The organization never
//! changes what a program computes — only how many cycles the raw memory
//! traffic needs — so this crate keeps a flat functional backing store and
//! derives per-instance traffic from the geometry for the cycle side.
//!
//! Also here: the 676-bit shift buffer shared by the streaming functional
//! units, with exclusive acquire/release semantics.

mod shift;

pub use shift::{ShiftBuffer, SHIFT_BUFFER_BITS};

/// Total scratchpad capacity in bits; every valid geometry multiplies out
/// to exactly this.
pub const CAPACITY_BITS: usize = 65536;
/// Logical word size in bits.
pub const WORD_BITS: usize = 64;
/// Number of logical words.
pub const LOGICAL_WORDS: usize = CAPACITY_BITS / WORD_BITS;

/// Errors from geometry validation, addressing and buffer misuse.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MemsysError {
    #[error("geometry {instances}x{depth}x{width} holds {got} bits, need {CAPACITY_BITS}")]
    BadCapacity { instances: usize, depth: usize, width: usize, got: usize },
    #[error("geometry {instances}x{depth}x{width} does not tile 64-bit words")]
    BadTiling { instances: usize, depth: usize, width: usize },
    #[error("word {word} out of range (memory has {LOGICAL_WORDS} words)")]
    OutOfRange { word: usize },
    #[error("byte length {len} is not a whole number of 64-bit words")]
    RaggedBytes { len: usize },
    #[error("shift buffer held by {holder}, requested by {requester}")]
    BufferHeld { holder: &'static str, requester: &'static str },
    #[error("shift buffer operation by {requester}, but buffer is {state}")]
    BufferNotOwned { requester: &'static str, state: &'static str },
    #[error("shift buffer overflow: {fill} + {push} bits exceeds {capacity}")]
    BufferOverflow { fill: usize, push: usize, capacity: usize },
    #[error("shift buffer underflow: asked for {pop} bits, holds {fill}")]
    BufferUnderflow { pop: usize, fill: usize },
}

/// Port discipline of one RAM instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PortKind {
    /// One read and one write may proceed in the same cycle.
    Dual,
    /// One access total (read or write) per cycle.
    Single,
}

/// A physical organization of the scratchpad.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MemoryConfig {
    pub instances: usize,
    pub depth: usize,
    pub width: usize,
    pub port: PortKind,
    /// Registered outputs: read data is valid one cycle after the address.
    pub pipelined: bool,
}

/// Where one logical word lives: equal-width slices across one or more
/// instances, all at the same row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordPlacement {
    pub row: usize,
    /// Instance index of each slice, lowest word bits first.
    pub instances: Vec<usize>,
    /// Bits per slice (the instance width).
    pub slice_bits: usize,
}

/// One word-granular memory access, for traffic accounting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Access {
    pub word: usize,
    pub is_write: bool,
}

impl Access {
    pub fn read(word: usize) -> Self {
        Access { word, is_write: false }
    }

    pub fn write(word: usize) -> Self {
        Access { word, is_write: true }
    }
}

impl MemoryConfig {
    /// Validate a geometry: capacity must be exactly 64 Kibit and the
    /// instances must tile logical words evenly (whole words per row group,
    /// or whole rows per word for wide single-word instances).
    pub fn new(
        instances: usize,
        depth: usize,
        width: usize,
        port: PortKind,
        pipelined: bool,
    ) -> Result<Self, MemsysError> {
        let got = instances * depth * width;
        if got != CAPACITY_BITS {
            return Err(MemsysError::BadCapacity { instances, depth, width, got });
        }
        let ok = if width == WORD_BITS {
            // one whole word per instance row, words interleaved round-robin
            instances * depth == LOGICAL_WORDS
        } else {
            // words striped across instances; each row group holds a whole
            // number of words
            width < WORD_BITS
                && (instances * width).is_multiple_of(WORD_BITS)
                && depth * (instances * width / WORD_BITS) == LOGICAL_WORDS
        };
        if !ok {
            return Err(MemsysError::BadTiling { instances, depth, width });
        }
        Ok(MemoryConfig { instances, depth, width, port, pipelined })
    }

    /// Total capacity in bits (always [`CAPACITY_BITS`] for a valid config).
    pub fn capacity_bits(&self) -> usize {
        self.instances * self.depth * self.width
    }

    /// Words that fit in one row across all instances.
    fn words_per_row(&self) -> usize {
        if self.width == WORD_BITS {
            self.instances
        } else {
            self.instances * self.width / WORD_BITS
        }
    }

    /// Physical placement of a logical word.
    pub fn map_word(&self, word: usize) -> Result<WordPlacement, MemsysError> {
        if word >= LOGICAL_WORDS {
            return Err(MemsysError::OutOfRange { word });
        }
        if self.width == WORD_BITS {
            // round-robin interleave: consecutive words land on consecutive
            // instances, wrapping to the next row
            Ok(WordPlacement {
                row: word / self.instances,
                instances: vec![word % self.instances],
                slice_bits: WORD_BITS,
            })
        } else {
            // striped: a word spans a group of instances at one shared row
            let wpr = self.words_per_row();
            let per_word = self.instances / wpr;
            let group = word % wpr;
            Ok(WordPlacement {
                row: word / wpr,
                instances: (group * per_word..(group + 1) * per_word).collect(),
                slice_bits: self.width,
            })
        }
    }

    /// Cycles the raw traffic of one transaction needs: each instance
    /// honors its port discipline per cycle, requests have no ordering
    /// constraints, and pipelined outputs add one cycle when anything is
    /// read. This is a bandwidth figure for traces and cross-checks, not
    /// the instruction cost model (which is calibrated at block level).
    pub fn schedule_cycles(&self, accesses: &[Access]) -> Result<u64, MemsysError> {
        let mut reads = vec![0u64; self.instances];
        let mut writes = vec![0u64; self.instances];
        let mut any_read = false;
        for a in accesses {
            let placement = self.map_word(a.word)?;
            for inst in placement.instances {
                if a.is_write {
                    writes[inst] += 1;
                } else {
                    reads[inst] += 1;
                    any_read = true;
                }
            }
        }
        let busiest = (0..self.instances)
            .map(|i| match self.port {
                PortKind::Dual => reads[i].max(writes[i]),
                PortKind::Single => reads[i] + writes[i],
            })
            .max()
            .unwrap_or(0);
        Ok(busiest + u64::from(self.pipelined && any_read))
    }
}

/// The scratchpad: a flat word array behind a physical organization.
#[derive(Debug, Clone)]
pub struct Memory {
    config: MemoryConfig,
    words: Vec<u64>,
}

impl Memory {
    pub fn new(config: MemoryConfig) -> Self {
        Memory { config, words: vec![0u64; LOGICAL_WORDS] }
    }

    pub fn config(&self) -> &MemoryConfig {
        &self.config
    }

    pub fn read_word(&self, word: usize) -> Result<u64, MemsysError> {
        self.words.get(word).copied().ok_or(MemsysError::OutOfRange { word })
    }

    pub fn write_word(&mut self, word: usize, value: u64) -> Result<(), MemsysError> {
        *self.words.get_mut(word).ok_or(MemsysError::OutOfRange { word })? = value;
        Ok(())
    }

    /// Read `len` bytes starting at a word boundary; `len` must be a whole
    /// number of words (all wire objects in this design are).
    pub fn read_bytes(&self, word: usize, len: usize) -> Result<Vec<u8>, MemsysError> {
        if !len.is_multiple_of(8) {
            return Err(MemsysError::RaggedBytes { len });
        }
        let n = len / 8;
        if word + n > LOGICAL_WORDS {
            return Err(MemsysError::OutOfRange { word: word + n - 1 });
        }
        let mut out = Vec::with_capacity(len);
        for w in &self.words[word..word + n] {
            out.extend_from_slice(&w.to_le_bytes());
        }
        Ok(out)
    }

    /// Write bytes starting at a word boundary; same whole-word rule.
    pub fn write_bytes(&mut self, word: usize, bytes: &[u8]) -> Result<(), MemsysError> {
        if !bytes.len().is_multiple_of(8) {
            return Err(MemsysError::RaggedBytes { len: bytes.len() });
        }
        let n = bytes.len() / 8;
        if word + n > LOGICAL_WORDS {
            return Err(MemsysError::OutOfRange { word: word + n - 1 });
        }
        for (slot, chunk) in self.words[word..word + n].iter_mut().zip(bytes.chunks_exact(8)) {
            *slot = u64::from_le_bytes(chunk.try_into().expect("chunk is 8 bytes"));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invalid_geometries_are_rejected() {
        assert!(matches!(
            MemoryConfig::new(1, 1024, 32, PortKind::Dual, false),
            Err(MemsysError::BadCapacity { got: 32768, .. })
        ));
        // right capacity, but a lone 32-bit instance cannot tile 64-bit words
        assert!(matches!(
            MemoryConfig::new(1, 2048, 32, PortKind::Dual, false),
            Err(MemsysError::BadTiling { .. })
        ));
    }

    #[test]
    fn bytes_roundtrip_and_reject_ragged_lengths() {
        let cfg = MemoryConfig::new(4, 1024, 16, PortKind::Dual, false).unwrap();
        let mut mem = Memory::new(cfg);
        let data: Vec<u8> = (0..64u8).collect();
        mem.write_bytes(10, &data).unwrap();
        assert_eq!(mem.read_bytes(10, 64).unwrap(), data);
        assert_eq!(mem.read_word(10).unwrap(), u64::from_le_bytes(data[..8].try_into().unwrap()));
        assert_eq!(mem.write_bytes(0, &[1, 2, 3]), Err(MemsysError::RaggedBytes { len: 3 }));
        assert!(mem.write_bytes(1023, &[0u8; 16]).is_err());
    }
}
