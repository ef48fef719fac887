//! Bit packing checked two ways: against byte-twiddling oracles written in
//! the chunked per-8-coefficients style hardware reference code uses, and as
//! roundtrip properties over random inputs.

use proptest::prelude::*;
use saber_math::poly::mask;
use saber_math::{pack_poly, unpack_poly, Poly, SUPPORTED_WIDTHS};

/// 13-bit packing written as the classic 8-coefficients-to-13-bytes ladder.
fn pack13_oracle(data: &[u16; 256]) -> Vec<u8> {
    let mut bytes = vec![0u8; 416];
    for j in 0..32 {
        let b = &mut bytes[13 * j..13 * (j + 1)];
        let d = &data[8 * j..8 * (j + 1)];
        b[0] = (d[0] & 0xff) as u8;
        b[1] = (((d[0] >> 8) & 0x1f) | ((d[1] & 0x07) << 5)) as u8;
        b[2] = ((d[1] >> 3) & 0xff) as u8;
        b[3] = (((d[1] >> 11) & 0x03) | ((d[2] & 0x3f) << 2)) as u8;
        b[4] = (((d[2] >> 6) & 0x7f) | ((d[3] & 0x01) << 7)) as u8;
        b[5] = ((d[3] >> 1) & 0xff) as u8;
        b[6] = (((d[3] >> 9) & 0x0f) | ((d[4] & 0x0f) << 4)) as u8;
        b[7] = ((d[4] >> 4) & 0xff) as u8;
        b[8] = (((d[4] >> 12) & 0x01) | ((d[5] & 0x7f) << 1)) as u8;
        b[9] = (((d[5] >> 7) & 0x3f) | ((d[6] & 0x03) << 6)) as u8;
        b[10] = ((d[6] >> 2) & 0xff) as u8;
        b[11] = (((d[6] >> 10) & 0x07) | ((d[7] & 0x1f) << 3)) as u8;
        b[12] = ((d[7] >> 5) & 0xff) as u8;
    }
    bytes
}

/// 10-bit packing as the 4-coefficients-to-5-bytes ladder.
fn pack10_oracle(data: &[u16; 256]) -> Vec<u8> {
    let mut bytes = vec![0u8; 320];
    for j in 0..64 {
        let b = &mut bytes[5 * j..5 * (j + 1)];
        let d = &data[4 * j..4 * (j + 1)];
        b[0] = (d[0] & 0xff) as u8;
        b[1] = (((d[0] >> 8) & 0x03) | ((d[1] & 0x3f) << 2)) as u8;
        b[2] = (((d[1] >> 6) & 0x0f) | ((d[2] & 0x0f) << 4)) as u8;
        b[3] = (((d[2] >> 4) & 0x3f) | ((d[3] & 0x03) << 6)) as u8;
        b[4] = ((d[3] >> 2) & 0xff) as u8;
    }
    bytes
}

/// 4-bit packing: two coefficients per byte, low nibble first.
fn pack4_oracle(data: &[u16; 256]) -> Vec<u8> {
    (0..128)
        .map(|j| ((data[2 * j] & 0x0f) | ((data[2 * j + 1] & 0x0f) << 4)) as u8)
        .collect()
}

fn poly_from(data: [u16; 256]) -> Poly {
    Poly { coeffs: data }
}

proptest! {
    #[test]
    fn pack13_matches_chunked_oracle(data in prop::array::uniform32(0u16..(1 << 13))) {
        let mut coeffs = [0u16; 256];
        for (i, c) in coeffs.iter_mut().enumerate() {
            *c = data[i % 32].wrapping_mul((i as u16).wrapping_add(1)) & 0x1fff;
        }
        prop_assert_eq!(pack_poly(&poly_from(coeffs), 13).unwrap(), pack13_oracle(&coeffs));
    }

    #[test]
    fn pack10_matches_chunked_oracle(data in prop::array::uniform32(0u16..(1 << 10))) {
        let mut coeffs = [0u16; 256];
        for (i, c) in coeffs.iter_mut().enumerate() {
            *c = data[i % 32].wrapping_add(i as u16) & 0x3ff;
        }
        prop_assert_eq!(pack_poly(&poly_from(coeffs), 10).unwrap(), pack10_oracle(&coeffs));
    }

    #[test]
    fn pack4_matches_nibble_oracle(data in prop::array::uniform32(0u16..16)) {
        let mut coeffs = [0u16; 256];
        for (i, c) in coeffs.iter_mut().enumerate() {
            *c = data[(i * 7) % 32] & 0x0f;
        }
        prop_assert_eq!(pack_poly(&poly_from(coeffs), 4).unwrap(), pack4_oracle(&coeffs));
    }

    #[test]
    fn coefficients_roundtrip_through_every_width(seed in 0u16..u16::MAX) {
        for &eps in SUPPORTED_WIDTHS.iter() {
            let m = mask(eps);
            let mut coeffs = [0u16; 256];
            for (i, c) in coeffs.iter_mut().enumerate() {
                *c = seed.wrapping_mul(2654435761u32 as u16).wrapping_add((i as u16).wrapping_mul(40503)) & m;
            }
            let p = poly_from(coeffs);
            let bytes = pack_poly(&p, eps).unwrap();
            prop_assert_eq!(bytes.len(), 256 * eps / 8);
            prop_assert_eq!(unpack_poly(&bytes, eps).unwrap(), p);
        }
    }

    #[test]
    fn bytes_roundtrip_through_every_width(seed in any::<u64>()) {
        for &eps in SUPPORTED_WIDTHS.iter() {
            let mut state = seed | 1;
            let bytes: Vec<u8> = (0..256 * eps / 8)
                .map(|_| {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    (state >> 56) as u8
                })
                .collect();
            let p = unpack_poly(&bytes, eps).unwrap();
            prop_assert_eq!(pack_poly(&p, eps).unwrap(), bytes);
        }
    }
}

#[test]
fn packing_masks_out_of_range_coefficients() {
    let mut p = Poly::zero();
    p.coeffs[0] = 0x1fff; // wider than 10 bits
    let bytes = pack_poly(&p, 10).unwrap();
    assert_eq!(unpack_poly(&bytes, 10).unwrap().coeffs[0], 0x03ff);
}
