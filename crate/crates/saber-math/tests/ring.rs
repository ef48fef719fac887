//! The negacyclic multiplier checked against a textbook oracle, plus the
//! ring laws the rest of the scheme silently relies on.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use saber_math::{inner_prod, matvec_mul, poly_mul, Poly, PolyMatrix, PolyVec, N, Q};

fn rand_poly(rng: &mut StdRng) -> Poly {
    let mut p = Poly::zero();
    for c in p.coeffs.iter_mut() {
        *c = rng.gen_range(0..Q);
    }
    p
}

/// Textbook negacyclic product: signed double loop with exact i64 sums and a
/// final reduction. Deliberately a different route than the library's folded
/// convolution over wrapping u32.
fn mul_oracle(a: &Poly, b: &Poly) -> Poly {
    let mut acc = [0i64; N];
    for i in 0..N {
        for j in 0..N {
            let prod = a.coeffs[i] as i64 * b.coeffs[j] as i64;
            let k = (i + j) % N;
            if i + j >= N {
                acc[k] -= prod;
            } else {
                acc[k] += prod;
            }
        }
    }
    let mut out = Poly::zero();
    for (c, a) in out.coeffs.iter_mut().zip(acc.iter()) {
        *c = a.rem_euclid(Q as i64) as u16;
    }
    out
}

#[test]
fn multiplier_matches_textbook_oracle() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0001);
    for trial in 0..100 {
        let a = rand_poly(&mut rng);
        let b = rand_poly(&mut rng);
        assert_eq!(poly_mul(&a, &b), mul_oracle(&a, &b), "trial {trial}");
    }
}

#[test]
fn one_is_the_multiplicative_identity() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0002);
    let mut one = Poly::zero();
    one.coeffs[0] = 1;
    for _ in 0..10 {
        let a = rand_poly(&mut rng);
        assert_eq!(poly_mul(&a, &one), a);
    }
}

#[test]
fn multiplication_commutes() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0003);
    for _ in 0..20 {
        let a = rand_poly(&mut rng);
        let b = rand_poly(&mut rng);
        assert_eq!(poly_mul(&a, &b), poly_mul(&b, &a));
    }
}

#[test]
fn multiplication_distributes_over_addition() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0004);
    for _ in 0..20 {
        let a = rand_poly(&mut rng);
        let b = rand_poly(&mut rng);
        let c = rand_poly(&mut rng);
        let left = poly_mul(&a, &b.add(&c));
        let right = poly_mul(&a, &b).add(&poly_mul(&a, &c));
        assert_eq!(left, right);
    }
}

#[test]
fn multiplication_associates() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0005);
    for _ in 0..10 {
        let a = rand_poly(&mut rng);
        let b = rand_poly(&mut rng);
        let c = rand_poly(&mut rng);
        assert_eq!(poly_mul(&poly_mul(&a, &b), &c), poly_mul(&a, &poly_mul(&b, &c)));
    }
}

#[test]
fn matvec_is_rowwise_inner_products() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0006);
    for l in [2usize, 3, 4] {
        let a = PolyMatrix {
            rows: (0..l).map(|_| PolyVec { polys: (0..l).map(|_| rand_poly(&mut rng)).collect() }).collect(),
        };
        let s = PolyVec { polys: (0..l).map(|_| rand_poly(&mut rng)).collect() };
        let direct = matvec_mul(&a, &s, false).unwrap();
        for i in 0..l {
            assert_eq!(direct.polys[i], inner_prod(&a.rows[i], &s).unwrap());
        }
        // transposed form: row i gathers column i
        let transposed = matvec_mul(&a, &s, true).unwrap();
        for i in 0..l {
            let col = PolyVec { polys: (0..l).map(|j| a.rows[j].polys[i]).collect() };
            assert_eq!(transposed.polys[i], inner_prod(&col, &s).unwrap());
        }
        assert_ne!(direct, transposed, "random matrix should not be symmetric");
    }
}
