//! LSB-first bit packing between coefficient arrays and byte strings.
//!
//! All wire formats share one convention: coefficients are laid out in
//! order, each contributing its `eps` low bits starting at the current bit
//! offset, with bit 0 of each byte filled first. Widths 1, 3, 4, 6, 10, 13
//! and 14 cover the message, the three ciphertext message parts, the rounded
//! vectors, the working modulus and the hardware's signed secret form.

use crate::poly::{mask, Poly, N, Q};
use crate::{PolyVec, SaberMathError};

/// Coefficient widths with a defined wire format.
pub const SUPPORTED_WIDTHS: [usize; 7] = [1, 3, 4, 6, 10, 13, 14];

fn check_width(eps: usize) -> Result<(), SaberMathError> {
    if SUPPORTED_WIDTHS.contains(&eps) {
        Ok(())
    } else {
        Err(SaberMathError::UnsupportedWidth(eps))
    }
}

/// Packed size in bytes of one polynomial at width `eps`.
pub const fn packed_len(eps: usize) -> usize {
    N * eps / 8
}

/// Pack one polynomial at width `eps`; coefficients are masked to `eps` bits.
pub fn pack_poly(p: &Poly, eps: usize) -> Result<Vec<u8>, SaberMathError> {
    check_width(eps)?;
    let m = mask(eps) as u32;
    let mut out = vec![0u8; packed_len(eps)];
    let mut acc: u32 = 0;
    let mut nbits = 0;
    let mut idx = 0;
    for &c in p.coeffs.iter() {
        acc |= (c as u32 & m) << nbits;
        nbits += eps;
        while nbits >= 8 {
            out[idx] = acc as u8;
            idx += 1;
            acc >>= 8;
            nbits -= 8;
        }
    }
    debug_assert_eq!(idx, out.len());
    Ok(out)
}

/// Unpack one polynomial packed at width `eps`; the slice length must be
/// exactly `packed_len(eps)`.
pub fn unpack_poly(bytes: &[u8], eps: usize) -> Result<Poly, SaberMathError> {
    check_width(eps)?;
    if bytes.len() != packed_len(eps) {
        return Err(SaberMathError::LengthMismatch { expected: packed_len(eps), got: bytes.len() });
    }
    let m = mask(eps) as u32;
    let mut out = Poly::zero();
    let mut acc: u32 = 0;
    let mut nbits = 0;
    let mut idx = 0;
    for c in out.coeffs.iter_mut() {
        while nbits < eps {
            acc |= (bytes[idx] as u32) << nbits;
            idx += 1;
            nbits += 8;
        }
        *c = (acc & m) as u16;
        acc >>= eps;
        nbits -= eps;
    }
    Ok(out)
}

/// Pack every polynomial of a vector back to back.
pub fn pack_vec(v: &PolyVec, eps: usize) -> Result<Vec<u8>, SaberMathError> {
    let mut out = Vec::with_capacity(v.len() * packed_len(eps));
    for p in &v.polys {
        out.extend_from_slice(&pack_poly(p, eps)?);
    }
    Ok(out)
}

/// Unpack a rank-`l` vector packed at width `eps`.
pub fn unpack_vec(bytes: &[u8], l: usize, eps: usize) -> Result<PolyVec, SaberMathError> {
    check_width(eps)?;
    let per = packed_len(eps);
    if bytes.len() != l * per {
        return Err(SaberMathError::LengthMismatch { expected: l * per, got: bytes.len() });
    }
    let mut polys = Vec::with_capacity(l);
    for chunk in bytes.chunks_exact(per) {
        polys.push(unpack_poly(chunk, eps)?);
    }
    Ok(PolyVec { polys })
}

/// Serialize a secret vector in the hardware's storage format: each residue
/// mod q is recentered to (-q/2, q/2] and written as a 14-bit two's-complement
/// value. The map is a bijection on residues, so nothing is lost.
pub fn secret_to_bytes(v: &PolyVec) -> Vec<u8> {
    let mut wide = PolyVec::zero(v.len());
    for (dst, src) in wide.polys.iter_mut().zip(&v.polys) {
        for (d, &c) in dst.coeffs.iter_mut().zip(&src.coeffs) {
            let centered = if c >= Q / 2 { c as i32 - Q as i32 } else { c as i32 };
            *d = (centered & 0x3fff) as u16;
        }
    }
    pack_vec(&wide, 14).expect("14 is a supported width")
}

/// Inverse of [`secret_to_bytes`]: sign-extend each 14-bit field and reduce
/// back into [0, q).
pub fn secret_from_bytes(bytes: &[u8], l: usize) -> Result<PolyVec, SaberMathError> {
    let wide = unpack_vec(bytes, l, 14)?;
    let mut out = PolyVec::zero(l);
    for (dst, src) in out.polys.iter_mut().zip(&wide.polys) {
        for (d, &raw) in dst.coeffs.iter_mut().zip(&src.coeffs) {
            let signed = if raw & 0x2000 != 0 { raw as i32 - (1 << 14) } else { raw as i32 };
            *d = signed.rem_euclid(Q as i32) as u16;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ten_bit_layout_first_bytes() {
        // coefficients 0..256 at 10 bits: c0 = 0x000, c1 = 0x001, c2 = 0x002 ...
        // byte 0 = low 8 bits of c0; byte 1 = high 2 bits of c0 | low 6 of c1
        let mut p = Poly::zero();
        for (i, c) in p.coeffs.iter_mut().enumerate() {
            *c = i as u16;
        }
        let bytes = pack_poly(&p, 10).unwrap();
        assert_eq!(bytes.len(), 320);
        assert_eq!(bytes[0], 0x00);
        assert_eq!(bytes[1], 0b0000_0100); // c1 = 1 enters at bit offset 10
        assert_eq!(unpack_poly(&bytes, 10).unwrap(), p);
    }

    #[test]
    fn one_bit_layout_packs_eight_per_byte() {
        let mut p = Poly::zero();
        p.coeffs[0] = 1;
        p.coeffs[3] = 1;
        p.coeffs[8] = 1;
        let bytes = pack_poly(&p, 1).unwrap();
        assert_eq!(bytes.len(), 32);
        assert_eq!(bytes[0], 0b0000_1001);
        assert_eq!(bytes[1], 0b0000_0001);
    }

    #[test]
    fn unsupported_width_and_bad_length() {
        let p = Poly::zero();
        assert_eq!(pack_poly(&p, 5), Err(SaberMathError::UnsupportedWidth(5)));
        assert_eq!(
            unpack_poly(&[0u8; 100], 10),
            Err(SaberMathError::LengthMismatch { expected: 320, got: 100 })
        );
    }

    #[test]
    fn secret_form_is_a_bijection_on_residues() {
        // push every residue mod q through the signed 14-bit form
        for base in (0..Q as usize).step_by(N) {
            let mut v = PolyVec::zero(1);
            for (i, c) in v.polys[0].coeffs.iter_mut().enumerate() {
                *c = (base + i) as u16;
            }
            let bytes = secret_to_bytes(&v);
            assert_eq!(bytes.len(), 448);
            assert_eq!(secret_from_bytes(&bytes, 1).unwrap(), v);
        }
    }

    #[test]
    fn small_negative_secret_is_all_ones_prefix() {
        // -1 mod q recenters to -1 = 0b11_1111_1111_1111
        let mut v = PolyVec::zero(1);
        v.polys[0].coeffs[0] = Q - 1;
        let bytes = secret_to_bytes(&v);
        assert_eq!(bytes[0], 0xff);
        assert_eq!(bytes[1], 0x3f);
    }
}
