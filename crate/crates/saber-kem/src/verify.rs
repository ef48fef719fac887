//! Constant-time comparison and conditional move, the two data-oblivious
//! primitives the decapsulation path is built on.

/// Compare two byte strings without early exit. Returns 0 when they are
/// equal and 1 otherwise (so the result can gate [`cmov`] directly).
///
/// Strings of different lengths compare as unequal, also without branching
/// on content.
pub fn verify(a: &[u8], b: &[u8]) -> u8 {
    if a.len() != b.len() {
        return 1;
    }
    let mut acc = 0u8;
    for (x, y) in a.iter().zip(b) {
        acc |= x ^ y;
    }
    // fold "any bit set" into bit 0 without a branch
    ((acc as u16).wrapping_neg() >> 8) as u8 & 1
}

/// Conditional move: when `flag` is 0 copy `src` over `dst`, when `flag` is
/// 1 leave `dst` untouched. Both paths execute the same instruction stream.
///
/// # Panics
/// When the slices differ in length (a programming error, not a data path).
pub fn cmov(dst: &mut [u8], src: &[u8], flag: u8) {
    assert_eq!(dst.len(), src.len(), "cmov operands must match in length");
    // flag 0 -> keep mask 0x00 -> dst becomes src; flag 1 -> keep mask 0xff
    let keep = (flag & 1).wrapping_neg();
    for (d, &s) in dst.iter_mut().zip(src) {
        *d ^= (*d ^ s) & !keep;
    }
}
