//! Polynomials over Z_{2^13}[x]/(x^256 + 1) and the module operations built
//! on them: negacyclic multiplication, matrix-vector products and the
//! shift-with-offset rounding the scheme uses instead of reduction mod p.

use crate::SaberMathError;

/// Ring degree.
pub const N: usize = 256;
/// Bit width of the working modulus q.
pub const EPS_Q: usize = 13;
/// Working modulus q = 2^13.
pub const Q: u16 = 1 << EPS_Q;
/// Bit width of the rounding modulus p.
pub const EPS_P: usize = 10;
/// Rounding modulus p = 2^10.
pub const P: u16 = 1 << EPS_P;

const Q_MASK: u16 = Q - 1;

/// Bit mask selecting the low `eps` bits of a coefficient.
pub const fn mask(eps: usize) -> u16 {
    ((1u32 << eps) - 1) as u16
}

/// One ring element; coefficients are residues mod 2^13 (or a narrower
/// power of two after rounding — the container does not track the width).
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct Poly {
    pub coeffs: [u16; N],
}

impl Default for Poly {
    fn default() -> Self {
        Poly::zero()
    }
}

impl std::fmt::Debug for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poly[{}, {}, {}, ...]", self.coeffs[0], self.coeffs[1], self.coeffs[2])
    }
}

impl Poly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Poly { coeffs: [0u16; N] }
    }

    /// Coefficient-wise sum mod q.
    pub fn add(&self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for i in 0..N {
            out.coeffs[i] = (self.coeffs[i].wrapping_add(rhs.coeffs[i])) & Q_MASK;
        }
        out
    }

    /// Coefficient-wise difference mod q.
    pub fn sub(&self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for i in 0..N {
            out.coeffs[i] = (self.coeffs[i].wrapping_sub(rhs.coeffs[i])) & Q_MASK;
        }
        out
    }

    /// Add the same constant to every coefficient, mod q.
    pub fn add_const(&self, c: u16) -> Poly {
        let mut out = Poly::zero();
        for i in 0..N {
            out.coeffs[i] = (self.coeffs[i].wrapping_add(c)) & Q_MASK;
        }
        out
    }

    /// Multiply every coefficient by 2^k, mod q.
    pub fn shl(&self, k: usize) -> Poly {
        let mut out = Poly::zero();
        for i in 0..N {
            out.coeffs[i] = (self.coeffs[i] << k) & Q_MASK;
        }
        out
    }

    /// The scheme's rounding primitive: `((c + add) >> shift) mod 2^out_bits`
    /// applied to every coefficient.
    pub fn scale_round(&self, add: u16, shift: usize, out_bits: usize) -> Poly {
        let m = mask(out_bits);
        let mut out = Poly::zero();
        for i in 0..N {
            out.coeffs[i] = (self.coeffs[i].wrapping_add(add) >> shift) & m;
        }
        out
    }
}

/// Negacyclic product in Z_q[x]/(x^256 + 1).
///
/// Accumulates the full 511-term linear convolution and then folds the upper
/// half back with a sign flip (x^256 = -1). `u32` accumulators may wrap, but
/// only the low 13 bits of each sum are kept, so wrapping is harmless.
pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut wide = [0u32; 2 * N - 1];
    for i in 0..N {
        let ai = a.coeffs[i] as u32;
        for j in 0..N {
            wide[i + j] = wide[i + j].wrapping_add(ai * b.coeffs[j] as u32);
        }
    }
    let mut out = Poly::zero();
    // degree k picks up -wide[k + 256] when that term exists; the linear
    // convolution tops out at degree 510, so k = 255 has no upper partner
    for k in 0..N {
        let mut v = wide[k];
        if k + N < 2 * N - 1 {
            v = v.wrapping_sub(wide[k + N]);
        }
        out.coeffs[k] = (v as u16) & Q_MASK;
    }
    out
}

/// Key-generation rounding: `((x + h) >> (eps_q - eps_p)) mod p`.
pub fn add_round(x: &Poly, h: u16) -> Poly {
    x.scale_round(h, EPS_Q - EPS_P, EPS_P)
}

/// A module vector of `l` ring elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyVec {
    pub polys: Vec<Poly>,
}

impl PolyVec {
    /// Zero vector of rank `l`.
    pub fn zero(l: usize) -> Self {
        PolyVec { polys: vec![Poly::zero(); l] }
    }

    /// Module rank.
    pub fn len(&self) -> usize {
        self.polys.len()
    }

    /// True for the rank-0 vector (never used by the scheme, kept for hygiene).
    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Coefficient-wise sum; ranks must match.
    pub fn add(&self, rhs: &PolyVec) -> Result<PolyVec, SaberMathError> {
        if self.len() != rhs.len() {
            return Err(SaberMathError::DimensionMismatch { expected: self.len(), got: rhs.len() });
        }
        Ok(PolyVec {
            polys: self.polys.iter().zip(&rhs.polys).map(|(a, b)| a.add(b)).collect(),
        })
    }

    /// Apply `scale_round` to every polynomial.
    pub fn scale_round(&self, add: u16, shift: usize, out_bits: usize) -> PolyVec {
        PolyVec { polys: self.polys.iter().map(|p| p.scale_round(add, shift, out_bits)).collect() }
    }
}

/// A square l x l matrix of ring elements, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    pub rows: Vec<PolyVec>,
}

impl PolyMatrix {
    /// Zero matrix of rank `l`.
    pub fn zero(l: usize) -> Self {
        PolyMatrix { rows: vec![PolyVec::zero(l); l] }
    }

    /// Module rank.
    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// Inner product of two module vectors.
pub fn inner_prod(a: &PolyVec, b: &PolyVec) -> Result<Poly, SaberMathError> {
    if a.len() != b.len() {
        return Err(SaberMathError::DimensionMismatch { expected: a.len(), got: b.len() });
    }
    let mut acc = Poly::zero();
    for (pa, pb) in a.polys.iter().zip(&b.polys) {
        acc = acc.add(&poly_mul(pa, pb));
    }
    Ok(acc)
}

/// Matrix-vector product `A s` (or `A^T s` when `transpose` is set).
///
/// Key generation uses the transposed form, encryption the direct form; both
/// directions reduce to `l` inner products over rows or columns.
pub fn matvec_mul(a: &PolyMatrix, s: &PolyVec, transpose: bool) -> Result<PolyVec, SaberMathError> {
    let l = a.rank();
    for row in &a.rows {
        if row.len() != l {
            return Err(SaberMathError::DimensionMismatch { expected: l, got: row.len() });
        }
    }
    if s.len() != l {
        return Err(SaberMathError::DimensionMismatch { expected: l, got: s.len() });
    }
    let mut out = PolyVec::zero(l);
    for i in 0..l {
        let mut acc = Poly::zero();
        for j in 0..l {
            let entry = if transpose { &a.rows[j].polys[i] } else { &a.rows[i].polys[j] };
            acc = acc.add(&poly_mul(entry, &s.polys[j]));
        }
        out.polys[i] = acc;
    }
    Ok(out)
}
