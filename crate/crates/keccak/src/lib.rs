//! FIPS-202 Keccak permutation and the three sponge instances used by the
//! KEM: SHAKE-128 (rate 168, domain 0x1F), SHA3-256 (rate 136, domain 0x06)
//! and SHA3-512 (rate 72, domain 0x06).
//!
//! Every sponge counts how many times the underlying permutation runs.
//! The hardware model charges a fixed cycle cost per permutation, so the
//! counter is part of the public contract, not a debugging aid.

/// Lane count of the Keccak-f[1600] state (5 x 5 x 64 bits).
pub const STATE_LANES: usize = 25;
/// Byte rate of SHAKE-128.
pub const SHAKE128_RATE: usize = 168;
/// Byte rate of SHA3-256.
pub const SHA3_256_RATE: usize = 136;
/// Byte rate of SHA3-512.
pub const SHA3_512_RATE: usize = 72;

const ROUND_CONSTANTS: [u64; 24] = [
    0x0000000000000001,
    0x0000000000008082,
    0x800000000000808a,
    0x8000000080008000,
    0x000000000000808b,
    0x0000000080000001,
    0x8000000080008081,
    0x8000000000008009,
    0x000000000000008a,
    0x0000000000000088,
    0x0000000080008009,
    0x000000008000000a,
    0x000000008000808b,
    0x800000000000008b,
    0x8000000000008089,
    0x8000000000008003,
    0x8000000000008002,
    0x8000000000000080,
    0x000000000000800a,
    0x800000008000000a,
    0x8000000080008081,
    0x8000000000008080,
    0x0000000080000001,
    0x8000000080008008,
];

const RHO: [u32; 24] = [
    1, 3, 6, 10, 15, 21, 28, 36, 45, 55, 2, 14, 27, 41, 56, 8, 25, 43, 62, 18, 39, 61, 20, 44,
];

const PI: [usize; 24] = [
    10, 7, 11, 17, 18, 3, 5, 16, 8, 21, 24, 4, 15, 23, 19, 13, 12, 2, 20, 14, 22, 9, 6, 1,
];

/// One application of Keccak-f[1600] to a 25-lane state.
pub fn keccak_f(a: &mut [u64; STATE_LANES]) {
    for &rc in ROUND_CONSTANTS.iter() {
        // theta
        let mut c = [0u64; 5];
        for x in 0..5 {
            c[x] = a[x] ^ a[x + 5] ^ a[x + 10] ^ a[x + 15] ^ a[x + 20];
        }
        for x in 0..5 {
            let d = c[(x + 4) % 5] ^ c[(x + 1) % 5].rotate_left(1);
            for y in 0..5 {
                a[x + 5 * y] ^= d;
            }
        }
        // rho and pi combined: walk the cycle starting at lane 1
        let mut last = a[1];
        for i in 0..24 {
            let j = PI[i];
            let tmp = a[j];
            a[j] = last.rotate_left(RHO[i]);
            last = tmp;
        }
        // chi
        for y in 0..5 {
            let row = [a[5 * y], a[5 * y + 1], a[5 * y + 2], a[5 * y + 3], a[5 * y + 4]];
            for x in 0..5 {
                a[5 * y + x] = row[x] ^ (!row[(x + 1) % 5] & row[(x + 2) % 5]);
            }
        }
        // iota
        a[0] ^= rc;
    }
}

/// Absorbing into a sponge that has already started squeezing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AbsorbAfterSqueeze;

impl std::fmt::Display for AbsorbAfterSqueeze {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "cannot absorb into a sponge that has started squeezing")
    }
}

impl std::error::Error for AbsorbAfterSqueeze {}

/// Incremental sponge over Keccak-f[1600].
///
/// The lifecycle is absorb* -> squeeze*; once `squeeze` has been called the
/// sponge rejects further input. `permutations()` reports how many times the
/// permutation has run so far: `floor(absorbed / rate)` during absorption
/// plus `ceil(squeezed / rate)` once squeezing starts.
#[derive(Clone)]
pub struct SpongeState {
    lanes: [u64; STATE_LANES],
    rate: usize,
    domain: u8,
    pos: usize,
    squeezing: bool,
    perms: u64,
}

impl SpongeState {
    fn new(rate: usize, domain: u8) -> Self {
        debug_assert!(rate < STATE_LANES * 8);
        SpongeState {
            lanes: [0u64; STATE_LANES],
            rate,
            domain,
            pos: 0,
            squeezing: false,
            perms: 0,
        }
    }

    /// Fresh SHAKE-128 sponge.
    pub fn shake128() -> Self {
        Self::new(SHAKE128_RATE, 0x1f)
    }

    /// Fresh SHA3-256 sponge.
    pub fn sha3_256() -> Self {
        Self::new(SHA3_256_RATE, 0x06)
    }

    /// Fresh SHA3-512 sponge.
    pub fn sha3_512() -> Self {
        Self::new(SHA3_512_RATE, 0x06)
    }

    /// Byte rate of this instance.
    pub fn rate(&self) -> usize {
        self.rate
    }

    /// Number of times Keccak-f[1600] has run so far.
    pub fn permutations(&self) -> u64 {
        self.perms
    }

    /// True once `squeeze` has been called at least once (with output).
    pub fn is_squeezing(&self) -> bool {
        self.squeezing
    }

    fn xor_byte(&mut self, i: usize, b: u8) {
        self.lanes[i / 8] ^= (b as u64) << (8 * (i % 8));
    }

    fn read_byte(&self, i: usize) -> u8 {
        (self.lanes[i / 8] >> (8 * (i % 8))) as u8
    }

    fn permute(&mut self) {
        keccak_f(&mut self.lanes);
        self.perms += 1;
        self.pos = 0;
    }

    /// Feed message bytes. Fails once squeezing has begun.
    pub fn absorb(&mut self, data: &[u8]) -> Result<(), AbsorbAfterSqueeze> {
        if self.squeezing {
            return Err(AbsorbAfterSqueeze);
        }
        for &b in data {
            self.xor_byte(self.pos, b);
            self.pos += 1;
            if self.pos == self.rate {
                self.permute();
            }
        }
        Ok(())
    }

    fn pad_and_switch(&mut self) {
        self.xor_byte(self.pos, self.domain);
        self.xor_byte(self.rate - 1, 0x80);
        self.permute();
        self.squeezing = true;
    }

    /// Produce output bytes; may be called repeatedly to stream.
    ///
    /// The first call with non-empty output pads the message and switches the
    /// sponge to the squeeze phase. A zero-length request is a no-op and does
    /// not switch phases.
    pub fn squeeze(&mut self, out: &mut [u8]) {
        if out.is_empty() {
            return;
        }
        if !self.squeezing {
            self.pad_and_switch();
        }
        for slot in out.iter_mut() {
            if self.pos == self.rate {
                self.permute();
            }
            *slot = self.read_byte(self.pos);
            self.pos += 1;
        }
    }
}

/// One-shot SHAKE-128: `out_len` bytes of output for `input`.
pub fn shake128(input: &[u8], out_len: usize) -> Vec<u8> {
    let mut sponge = SpongeState::shake128();
    sponge.absorb(input).expect("fresh sponge");
    let mut out = vec![0u8; out_len];
    sponge.squeeze(&mut out);
    out
}

/// One-shot SHA3-256 digest.
pub fn sha3_256(input: &[u8]) -> [u8; 32] {
    let mut sponge = SpongeState::sha3_256();
    sponge.absorb(input).expect("fresh sponge");
    let mut out = [0u8; 32];
    sponge.squeeze(&mut out);
    out
}

/// One-shot SHA3-512 digest.
pub fn sha3_512(input: &[u8]) -> [u8; 64] {
    let mut sponge = SpongeState::sha3_512();
    sponge.absorb(input).expect("fresh sponge");
    let mut out = [0u8; 64];
    sponge.squeeze(&mut out);
    out
}

/// Permutation count for a one-shot sponge call: full input blocks during
/// absorption, then one permutation per started output block (the padding
/// permutation produces the first output block).
pub fn permutation_count(rate: usize, in_len: usize, out_len: usize) -> u64 {
    let absorb = (in_len / rate) as u64;
    let squeeze = (out_len as u64).div_ceil(rate as u64);
    absorb + squeeze
}
