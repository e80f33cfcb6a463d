//! Exact arithmetic in the binary fields GF(2^m), m <= 16, and canonical
//! points of the projective line over them.
//!
//! Elements are stored in the polynomial basis as bit masks: bit j is the
//! coefficient of x^j. Addition is XOR; multiplication reduces modulo the
//! irreducible polynomial carried by the [`FieldContext`].

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// An element of GF(2^m), `bits < 2^m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FieldElement(pub u16);

pub const ZERO: FieldElement = FieldElement(0);
pub const ONE: FieldElement = FieldElement(1);

impl FieldElement {
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl std::fmt::Display for FieldElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Degree of a polynomial bit mask; degree of 0 is defined as 0 here.
fn poly_degree(p: u32) -> u32 {
    31 - p.leading_zeros()
}

/// Remainder of polynomial division over GF(2).
fn poly_rem(mut a: u32, b: u32) -> u32 {
    debug_assert!(b != 0);
    let db = poly_degree(b);
    while a != 0 && poly_degree(a) >= db {
        a ^= b << (poly_degree(a) - db);
    }
    a
}

/// Trial division against every polynomial of degree up to deg(f)/2.
pub fn is_irreducible(f: u32) -> bool {
    if f < 2 {
        return false;
    }
    let d = poly_degree(f);
    if d == 0 {
        return false;
    }
    for g_deg in 1..=(d / 2) {
        for g in (1u32 << g_deg)..(1u32 << (g_deg + 1)) {
            if poly_rem(f, g) == 0 {
                return false;
            }
        }
    }
    true
}

/// The default modulus for degree m: the numerically smallest irreducible
/// polynomial of degree m with nonzero constant term. Reproduces x+1, x^2+x+1,
/// x^3+x+1, x^4+x+1 for m = 1..4.
pub fn default_modulus(m: u32) -> u32 {
    let mut cand = (1u32 << m) | 1;
    loop {
        if is_irreducible(cand) {
            return cand;
        }
        cand += 2;
    }
}

/// Arithmetic context for GF(2^m): the degree and the irreducible modulus.
///
/// Immutable and `Copy`; safe to share freely across threads. Serializes to
/// {"degree": m, "modulus": bits}; deserialization goes through
/// [`FieldContext::with_modulus`] so invalid moduli cannot sneak in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FieldContext {
    degree: u32,
    modulus: u32,
}

impl FieldContext {
    /// Context with an explicit modulus, verified irreducible of degree m.
    pub fn with_modulus(m: u32, modulus: u32) -> Result<Self> {
        if m == 0 || m > 16 {
            return Err(Error::BadDegree(m));
        }
        if modulus >> m != 1 {
            return Err(Error::BadModulusDegree(modulus, m));
        }
        if !is_irreducible(modulus) {
            return Err(Error::ReducibleModulus(modulus));
        }
        Ok(FieldContext { degree: m, modulus })
    }

    /// Context with the fixed default modulus for degree m.
    pub fn new(m: u32) -> Result<Self> {
        if m == 0 || m > 16 {
            return Err(Error::BadDegree(m));
        }
        Ok(FieldContext {
            degree: m,
            modulus: default_modulus(m),
        })
    }

    /// GF(2), the prime field.
    pub fn gf2() -> Self {
        FieldContext::new(1).expect("degree 1 is valid")
    }

    /// GF(4), the default working field.
    pub fn gf4() -> Self {
        FieldContext::new(2).expect("degree 2 is valid")
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Number of field elements, 2^m.
    pub fn order(&self) -> u32 {
        1 << self.degree
    }

    pub fn element(&self, bits: u32) -> Result<FieldElement> {
        if bits >> self.degree != 0 {
            return Err(Error::ElementOutOfRange(bits, self.degree));
        }
        Ok(FieldElement(bits as u16))
    }

    pub fn zero(&self) -> FieldElement {
        ZERO
    }

    pub fn one(&self) -> FieldElement {
        ONE
    }

    /// The class of x, a generator of the polynomial basis (not necessarily of
    /// the multiplicative group).
    pub fn gen(&self) -> FieldElement {
        if self.degree == 1 {
            ONE
        } else {
            FieldElement(2)
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.order() as u16).map(FieldElement)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(a.0 ^ b.0)
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let mut acc: u32 = 0;
        let mut x = a.0 as u32;
        let mut y = b.0 as u32;
        while y != 0 {
            if y & 1 != 0 {
                acc ^= x;
            }
            x <<= 1;
            y >>= 1;
        }
        // reduce a polynomial of degree <= 2m-2
        let m = self.degree;
        let mut bit = 2 * m;
        while bit > m {
            bit -= 1;
            if (acc >> bit) & 1 != 0 {
                acc ^= self.modulus << (bit - m);
            }
        }
        FieldElement(acc as u16)
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = ONE;
        while e != 0 {
            if e & 1 != 0 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::ZeroInverse(self.degree));
        }
        // a^(2^m - 2) = a^(-1) since the multiplicative group has order 2^m - 1
        Ok(self.pow(a, (self.order() - 2) as u64))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Multiplication by a fixed scalar as an F2-linear map on the polynomial
    /// basis: entry j of the result is the bit mask of lambda * x^j.
    pub fn scalar_columns(&self, lambda: FieldElement) -> [u16; 16] {
        let mut cols = [0u16; 16];
        let mut cur = lambda;
        for col in cols.iter_mut().take(self.degree as usize) {
            *col = cur.0;
            cur = self.mul(cur, self.gen_x());
        }
        cols
    }

    /// The class of x itself (even for m = 1, where it reduces to 1).
    fn gen_x(&self) -> FieldElement {
        if self.degree == 1 {
            FieldElement(self.modulus as u16 & 1)
        } else {
            FieldElement(2)
        }
    }
}

/// A canonical point of the projective line P^1 over GF(2^m): exactly one of
/// (1, lambda) or (0, 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ProjPoint {
    pub x1: FieldElement,
    pub x2: FieldElement,
}

impl ProjPoint {
    /// Canonicalize a nonzero pair up to scalar.
    pub fn normalize(ctx: &FieldContext, x1: FieldElement, x2: FieldElement) -> Result<ProjPoint> {
        if x1.is_zero() && x2.is_zero() {
            return Err(Error::ZeroProjectivePoint);
        }
        if x1.is_zero() {
            Ok(ProjPoint { x1: ZERO, x2: ONE })
        } else {
            let inv = ctx.inv(x1)?;
            Ok(ProjPoint {
                x1: ONE,
                x2: ctx.mul(x2, inv),
            })
        }
    }

    /// The point at infinity (0 : 1).
    pub fn infinity() -> ProjPoint {
        ProjPoint { x1: ZERO, x2: ONE }
    }

    /// The affine point (1 : lambda).
    pub fn affine(lambda: FieldElement) -> ProjPoint {
        ProjPoint {
            x1: ONE,
            x2: lambda,
        }
    }

    pub fn is_infinity(&self) -> bool {
        self.x1.is_zero()
    }
}

impl std::fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}:{})", self.x1.0, self.x2.0)
    }
}

/// All 2^m + 1 canonical points: (1, 0), (1, 1), ..., then (0, 1).
pub fn enumerate_projective_line(ctx: &FieldContext) -> Vec<ProjPoint> {
    let mut pts: Vec<ProjPoint> = ctx.elements().map(ProjPoint::affine).collect();
    pts.push(ProjPoint::infinity());
    pts
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn default_moduli_match_fixed_table() {
        assert_eq!(default_modulus(1), 0b11); // x + 1
        assert_eq!(default_modulus(2), 0b111); // x^2 + x + 1
        assert_eq!(default_modulus(3), 0b1011); // x^3 + x + 1
        assert_eq!(default_modulus(4), 0b10011); // x^4 + x + 1
    }

    #[test]
    fn contexts_build_for_all_supported_degrees() {
        for m in 1..=16 {
            let ctx = FieldContext::new(m).unwrap();
            assert_eq!(ctx.order(), 1 << m);
            // every nonzero element has multiplicative order dividing 2^m - 1
            let probe = ctx.gen();
            assert_eq!(ctx.pow(probe, (ctx.order() - 1) as u64), ONE);
        }
    }

    #[test]
    fn gf2_one_plus_one_is_zero() {
        let ctx = FieldContext::gf2();
        assert_eq!(ctx.add(ONE, ONE), ZERO);
    }

    #[test]
    fn gf4_generator_squares_to_gen_plus_one() {
        // reduce g^2 modulo x^2 + x + 1 by hand: g^2 = g + 1
        let ctx = FieldContext::gf4();
        let g = ctx.gen();
        assert_eq!(ctx.mul(g, g), FieldElement(0b11));
    }

    #[test]
    fn gf4_inverse_of_generator() {
        // g * (g + 1) = g^2 + g = 1 under x^2 + x + 1
        let ctx = FieldContext::gf4();
        let g = ctx.gen();
        assert_eq!(ctx.inv(g).unwrap(), FieldElement(0b11));
        assert_eq!(ctx.mul(g, ctx.inv(g).unwrap()), ONE);
    }

    #[test]
    fn inversion_of_zero_is_an_error() {
        let ctx = FieldContext::gf4();
        assert!(ctx.inv(ZERO).is_err());
    }

    #[test]
    fn reducible_modulus_rejected() {
        // x^2 + 1 = (x+1)^2
        assert!(FieldContext::with_modulus(2, 0b101).is_err());
        assert!(FieldContext::with_modulus(2, 0b111).is_ok());
    }

    #[test]
    fn proj_normalize_canonical_forms() {
        let ctx = FieldContext::gf4();
        let g = ctx.gen();
        for lambda in ctx.elements() {
            let p = ProjPoint::normalize(&ctx, g, ctx.mul(g, lambda)).unwrap();
            assert_eq!(p, ProjPoint::affine(lambda));
        }
        assert_eq!(
            ProjPoint::normalize(&ctx, ZERO, g).unwrap(),
            ProjPoint::infinity()
        );
        assert_eq!(
            ProjPoint::normalize(&ctx, ONE, ZERO).unwrap(),
            ProjPoint::affine(ZERO)
        );
        assert!(ProjPoint::normalize(&ctx, ZERO, ZERO).is_err());
    }

    #[test]
    fn projective_line_sizes() {
        for (m, expect) in [(1u32, 3usize), (2, 5), (3, 9)] {
            let ctx = FieldContext::new(m).unwrap();
            let pts = enumerate_projective_line(&ctx);
            assert_eq!(pts.len(), expect);
            let mut dedup = pts.clone();
            dedup.sort();
            dedup.dedup();
            assert_eq!(dedup.len(), expect);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

        #[test]
        fn field_axioms_gf16(a in 0u16..16, b in 0u16..16, c in 0u16..16) {
            let ctx = FieldContext::new(4).unwrap();
            let (a, b, c) = (FieldElement(a), FieldElement(b), FieldElement(c));
            prop_assert_eq!(ctx.add(ctx.add(a, b), c), ctx.add(a, ctx.add(b, c)));
            prop_assert_eq!(ctx.mul(ctx.mul(a, b), c), ctx.mul(a, ctx.mul(b, c)));
            prop_assert_eq!(ctx.mul(a, ctx.add(b, c)), ctx.add(ctx.mul(a, b), ctx.mul(a, c)));
            prop_assert_eq!(ctx.add(a, a), ZERO);
        }

        #[test]
        fn frobenius_is_additive(a in 0u16..16, b in 0u16..16) {
            let ctx = FieldContext::new(4).unwrap();
            let (a, b) = (FieldElement(a), FieldElement(b));
            let s = ctx.add(a, b);
            prop_assert_eq!(ctx.mul(s, s), ctx.add(ctx.mul(a, a), ctx.mul(b, b)));
        }

        #[test]
        fn proj_normalize_scale_invariant(x1 in 0u16..4, x2 in 0u16..4, l in 1u16..4) {
            let ctx = FieldContext::gf4();
            prop_assume!(x1 != 0 || x2 != 0);
            let (x1, x2, l) = (FieldElement(x1), FieldElement(x2), FieldElement(l));
            let p = ProjPoint::normalize(&ctx, x1, x2).unwrap();
            let q = ProjPoint::normalize(&ctx, ctx.mul(l, x1), ctx.mul(l, x2)).unwrap();
            prop_assert_eq!(p, q);
        }
    }
}
