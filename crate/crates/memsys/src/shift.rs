//! The shared shift buffer: one 676-bit FIFO register sitting between the
//! scratchpad and the streaming functional units (676 bits is exactly one
//! polynomial's worth of 13-bit coefficients). Units must acquire it before
//! streaming and release it afterwards; concurrent acquisition is a
//! modeling error and is reported, not silently serialized.

use crate::MemsysError;

/// Capacity of the shared buffer in bits: 52 coefficients x 13 bits.
pub const SHIFT_BUFFER_BITS: usize = 676;

/// Exclusive-use FIFO bit buffer.
#[derive(Debug, Clone)]
pub struct ShiftBuffer {
    capacity: usize,
    owner: Option<&'static str>,
    /// Bits in flight, oldest first. A modeling structure, not a hardware
    /// mirror: correctness of streaming order is what matters here.
    bits: std::collections::VecDeque<bool>,
}

impl Default for ShiftBuffer {
    fn default() -> Self {
        Self::new(SHIFT_BUFFER_BITS)
    }
}

impl ShiftBuffer {
    pub fn new(capacity: usize) -> Self {
        ShiftBuffer { capacity, owner: None, bits: std::collections::VecDeque::new() }
    }

    pub fn capacity_bits(&self) -> usize {
        self.capacity
    }

    pub fn fill_bits(&self) -> usize {
        self.bits.len()
    }

    /// Claim the buffer. Fails if another unit holds it.
    pub fn acquire(&mut self, requester: &'static str) -> Result<(), MemsysError> {
        match self.owner {
            None => {
                self.owner = Some(requester);
                Ok(())
            }
            Some(holder) if holder == requester => Ok(()),
            Some(holder) => Err(MemsysError::BufferHeld { holder, requester }),
        }
    }

    /// Release the buffer; must be the current holder. Residual bits are
    /// discarded (the next user starts clean).
    pub fn release(&mut self, requester: &'static str) -> Result<(), MemsysError> {
        match self.owner {
            Some(holder) if holder == requester => {
                self.owner = None;
                self.bits.clear();
                Ok(())
            }
            Some(_) => Err(MemsysError::BufferNotOwned { requester, state: "held by another unit" }),
            None => Err(MemsysError::BufferNotOwned { requester, state: "not held" }),
        }
    }

    fn check_owner(&self, requester: &'static str) -> Result<(), MemsysError> {
        match self.owner {
            Some(holder) if holder == requester => Ok(()),
            Some(_) => Err(MemsysError::BufferNotOwned { requester, state: "held by another unit" }),
            None => Err(MemsysError::BufferNotOwned { requester, state: "not held" }),
        }
    }

    /// Shift in the low `n` bits of `value`, LSB first.
    pub fn push_bits(&mut self, requester: &'static str, value: u64, n: usize) -> Result<(), MemsysError> {
        self.check_owner(requester)?;
        debug_assert!(n <= 64);
        if self.bits.len() + n > self.capacity {
            return Err(MemsysError::BufferOverflow {
                fill: self.bits.len(),
                push: n,
                capacity: self.capacity,
            });
        }
        for i in 0..n {
            self.bits.push_back((value >> i) & 1 == 1);
        }
        Ok(())
    }

    /// Shift out `n` bits, oldest first, returned LSB first.
    pub fn pop_bits(&mut self, requester: &'static str, n: usize) -> Result<u64, MemsysError> {
        self.check_owner(requester)?;
        debug_assert!(n <= 64);
        if n > self.bits.len() {
            return Err(MemsysError::BufferUnderflow { pop: n, fill: self.bits.len() });
        }
        let mut out = 0u64;
        for i in 0..n {
            if self.bits.pop_front().expect("length checked") {
                out |= 1 << i;
            }
        }
        Ok(out)
    }
}
