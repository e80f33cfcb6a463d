//! The 32-dimensional algebra itself: generators a, b, c subject to
//!
//! ```text
//! ab + ba = c,   ac + ca = a,   bc + cb = b,   a^4 = b^4 = 0,   c^2 = c
//! ```
//!
//! over a field of characteristic 2. Elements are GF(2) combinations of the
//! 32 basis monomials a^i b^j c^k (i, j in 0..=3, k in 0..=1), stored as bit
//! masks with index i*8 + j*2 + k. All structure constants live in GF(2), so
//! one context serves every coefficient field.

use crate::error::RelationViolation;
use crate::field::{FieldContext, ONE};
use crate::linalg::{Matrix, Subspace};
use crate::rep::Representation;

/// One of the three algebra generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    A,
    B,
    C,
}

/// A GF(2) combination of the 32 basis monomials, as a bit mask.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlgebraElement(pub u32);

#[allow(clippy::should_implement_trait)]
impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement(0)
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn add(self, other: Self) -> Self {
        AlgebraElement(self.0 ^ other.0)
    }

    pub fn monomials(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&h| (self.0 >> h) & 1 != 0)
    }
}

impl std::fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for h in self.monomials() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let (i, j, k) = monomial_exponents(h);
            if (i, j, k) == (0, 0, 0) {
                f.write_str("1")?;
                continue;
            }
            let mut parts = Vec::new();
            if i > 0 {
                parts.push(if i == 1 {
                    "a".to_string()
                } else {
                    format!("a^{i}")
                });
            }
            if j > 0 {
                parts.push(if j == 1 {
                    "b".to_string()
                } else {
                    format!("b^{j}")
                });
            }
            if k > 0 {
                parts.push("c".to_string());
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

pub fn monomial_index(i: usize, j: usize, k: usize) -> usize {
    debug_assert!(i < 4 && j < 4 && k < 2);
    i * 8 + j * 2 + k
}

pub fn monomial_exponents(h: usize) -> (usize, usize, usize) {
    (h / 8, (h / 2) % 4, h % 2)
}

/// Action matrices of the 3-dimensional simple module, as 0/1 tables.
/// The entry [row][col] is the coefficient of basis vector `row` in the image
/// of basis vector `col` (column convention).
pub(crate) const SIMPLE_A: [[u32; 3]; 3] = [[0, 0, 0], [1, 0, 0], [0, 1, 0]];
pub(crate) const SIMPLE_B: [[u32; 3]; 3] = [[0, 1, 0], [0, 0, 1], [0, 0, 0]];
pub(crate) const SIMPLE_C: [[u32; 3]; 3] = [[1, 0, 0], [0, 0, 0], [0, 0, 1]];

/// Straighten a word in the generators to a combination of basis monomials.
fn straighten(word: &[Generator]) -> u32 {
    use Generator::*;
    for t in 0..word.len().saturating_sub(1) {
        let (x, y) = (word[t], word[t + 1]);
        let rewrite = |repl: &[&[Generator]]| -> u32 {
            let mut acc = 0u32;
            for r in repl {
                let mut w: Vec<Generator> = Vec::with_capacity(word.len() + 1);
                w.extend_from_slice(&word[..t]);
                w.extend_from_slice(r);
                w.extend_from_slice(&word[t + 2..]);
                acc ^= straighten(&w);
            }
            acc
        };
        match (x, y) {
            // ba = ab + c
            (B, A) => return rewrite(&[&[A, B], &[C]]),
            // ca = ac + a
            (C, A) => return rewrite(&[&[A, C], &[A]]),
            // cb = bc + b
            (C, B) => return rewrite(&[&[B, C], &[B]]),
            _ => {}
        }
    }
    // the word is ordered a..a b..b c..c
    let i = word.iter().filter(|&&g| g == A).count();
    let j = word.iter().filter(|&&g| g == B).count();
    let k = word.iter().filter(|&&g| g == C).count();
    if i >= 4 || j >= 4 {
        return 0; // a^4 = b^4 = 0
    }
    // c^2 = c collapses any positive c power to c
    1u32 << monomial_index(i, j, k.min(1))
}

/// Structure constants, radical data, and normal forms for the algebra.
pub struct AlgebraContext {
    mul_table: Vec<[u32; 32]>,
    j_basis: Vec<u32>,
    j2_basis: Vec<u32>,
}

impl AlgebraContext {
    pub fn new() -> AlgebraContext {
        use Generator::*;
        let mut mul_table = vec![[0u32; 32]; 32];
        for (h1, row) in mul_table.iter_mut().enumerate() {
            let (i1, j1, k1) = monomial_exponents(h1);
            for (h2, cell) in row.iter_mut().enumerate() {
                let (i2, j2, k2) = monomial_exponents(h2);
                let mut word = Vec::with_capacity(14);
                word.extend(std::iter::repeat_n(A, i1));
                word.extend(std::iter::repeat_n(B, j1));
                word.extend(std::iter::repeat_n(C, k1));
                word.extend(std::iter::repeat_n(A, i2));
                word.extend(std::iter::repeat_n(B, j2));
                word.extend(std::iter::repeat_n(C, k2));
                *cell = straighten(&word);
            }
        }

        // J = kernel of the action on V0 + V1, computed over GF(2)
        let gf2 = FieldContext::gf2();
        let mut action = Matrix::zeros(gf2, 10, 32);
        for h in 0..32 {
            let (i, j, k) = monomial_exponents(h);
            if (i, j, k) == (0, 0, 0) {
                action.set(0, h, ONE);
            }
            let rho = simple_action_of_monomial(i, j, k);
            for (r, row) in rho.iter().enumerate() {
                for (c, &entry) in row.iter().enumerate() {
                    if entry != 0 {
                        action.set(1 + 3 * r + c, h, ONE);
                    }
                }
            }
        }
        let j_basis: Vec<u32> = rows_to_masks(&action.kernel());
        debug_assert_eq!(j_basis.len(), 22);

        let mut ctx = AlgebraContext {
            mul_table,
            j_basis,
            j2_basis: Vec::new(),
        };
        let mut prods = Matrix::zeros(gf2, ctx.j_basis.len() * ctx.j_basis.len(), 32);
        for (r, (x, y)) in ctx
            .j_basis
            .iter()
            .flat_map(|&x| ctx.j_basis.iter().map(move |&y| (x, y)))
            .enumerate()
        {
            let p = ctx.mul(AlgebraElement(x), AlgebraElement(y));
            for h in p.monomials() {
                prods.set(r, h, ONE);
            }
        }
        ctx.j2_basis = rows_to_masks(&Subspace::from_rows(&prods).basis().clone());
        debug_assert!({
            let cube_zero = ctx.j2_basis.iter().all(|&x| {
                ctx.j_basis
                    .iter()
                    .all(|&y| ctx.mul(AlgebraElement(x), AlgebraElement(y)).is_zero())
            });
            cube_zero
        });
        ctx
    }

    pub fn dimension(&self) -> usize {
        32
    }

    pub fn mul(&self, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement {
        let mut acc = 0u32;
        for h1 in x.monomials() {
            for h2 in y.monomials() {
                acc ^= self.mul_table[h1][h2];
            }
        }
        AlgebraElement(acc)
    }

    /// Normal form of an arbitrary word in the generators.
    pub fn normal_form(&self, word: &[Generator]) -> AlgebraElement {
        AlgebraElement(straighten(word))
    }

    pub fn generator(&self, g: Generator) -> AlgebraElement {
        let h = match g {
            Generator::A => monomial_index(1, 0, 0),
            Generator::B => monomial_index(0, 1, 0),
            Generator::C => monomial_index(0, 0, 1),
        };
        AlgebraElement(1 << h)
    }

    /// GF(2) masks spanning the Jacobson radical (dimension 22).
    pub fn radical_masks(&self) -> &[u32] {
        &self.j_basis
    }

    /// GF(2) masks spanning the square of the radical.
    pub fn radical_square_masks(&self) -> &[u32] {
        &self.j2_basis
    }

    /// The radical as a subspace of the 32-dimensional algebra over `field`.
    pub fn jacobson_radical(&self, field: FieldContext) -> RadicalBasis {
        RadicalBasis {
            subspace: masks_to_subspace(&self.j_basis, field),
        }
    }

    /// Matrix of left multiplication by x on the monomial basis.
    pub fn left_mult_matrix(&self, x: AlgebraElement, field: FieldContext) -> Matrix {
        let mut out = Matrix::zeros(field, 32, 32);
        for h in 0..32 {
            let img = self.mul(x, AlgebraElement(1 << h));
            for t in img.monomials() {
                out.set(t, h, ONE);
            }
        }
        out
    }

    /// The algebra as a module over itself by left multiplication.
    pub fn regular_representation(&self, field: FieldContext) -> Representation {
        let a = self.left_mult_matrix(self.generator(Generator::A), field);
        let b = self.left_mult_matrix(self.generator(Generator::B), field);
        let c = self.left_mult_matrix(self.generator(Generator::C), field);
        Representation::new(field, a, b, c).expect("regular representation satisfies the relations")
    }
}

impl Default for AlgebraContext {
    fn default() -> Self {
        AlgebraContext::new()
    }
}

/// The Jacobson radical of the algebra over a chosen coefficient field.
pub struct RadicalBasis {
    pub subspace: Subspace,
}

fn simple_action_of_monomial(i: usize, j: usize, k: usize) -> [[u32; 3]; 3] {
    let mut acc = [[1u32, 0, 0], [0, 1, 0], [0, 0, 1]];
    for _ in 0..i {
        acc = mat3_mul_gf2(acc, SIMPLE_A);
    }
    for _ in 0..j {
        acc = mat3_mul_gf2(acc, SIMPLE_B);
    }
    for _ in 0..k {
        acc = mat3_mul_gf2(acc, SIMPLE_C);
    }
    acc
}

fn mat3_mul_gf2(x: [[u32; 3]; 3], y: [[u32; 3]; 3]) -> [[u32; 3]; 3] {
    let mut out = [[0u32; 3]; 3];
    for r in 0..3 {
        for c in 0..3 {
            let mut acc = 0;
            for t in 0..3 {
                acc ^= x[r][t] & y[t][c];
            }
            out[r][c] = acc;
        }
    }
    out
}

fn rows_to_masks(mat: &Matrix) -> Vec<u32> {
    (0..mat.rows())
        .map(|i| {
            let mut mask = 0u32;
            for j in 0..mat.cols() {
                if !mat.get(i, j).is_zero() {
                    mask |= 1 << j;
                }
            }
            mask
        })
        .collect()
}

fn masks_to_subspace(masks: &[u32], field: FieldContext) -> Subspace {
    let mut mat = Matrix::zeros(field, masks.len(), 32);
    for (i, &mask) in masks.iter().enumerate() {
        for j in 0..32 {
            if (mask >> j) & 1 != 0 {
                mat.set(i, j, ONE);
            }
        }
    }
    Subspace::from_rows(&mat)
}

/// Checks the five defining relations against candidate action matrices.
/// Returns the list of violated relations; a valid module yields an empty list.
pub fn check_relations(a: &Matrix, b: &Matrix, c: &Matrix) -> Vec<RelationViolation> {
    let mut out = Vec::new();
    let ab_ba_c = a.mul(b).add(&b.mul(a)).add(c);
    if !ab_ba_c.is_zero() {
        out.push(RelationViolation::Commutator);
    }
    if !a.mul(c).add(&c.mul(a)).add(a).is_zero() {
        out.push(RelationViolation::WeightA);
    }
    if !b.mul(c).add(&c.mul(b)).add(b).is_zero() {
        out.push(RelationViolation::WeightB);
    }
    if !a.pow(4).is_zero() {
        out.push(RelationViolation::NilpotentA);
    }
    if !b.pow(4).is_zero() {
        out.push(RelationViolation::NilpotentB);
    }
    if !c.mul(c).add(c).is_zero() {
        out.push(RelationViolation::IdempotentC);
    }
    out
}

/// Evaluate a scalar coefficient (0/1 over GF(2) masks) times module action:
/// the matrix by which `x` acts on a representation with generator matrices
/// given by `monomial_mats[h]` for each basis monomial h.
pub fn element_action(x: AlgebraElement, monomial_mats: &[Matrix]) -> Matrix {
    let ctx = monomial_mats[0].ctx();
    let n = monomial_mats[0].rows();
    let mut acc = Matrix::zeros(ctx, n, n);
    for h in x.monomials() {
        acc = acc.add(&monomial_mats[h]);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    #[test]
    fn algebra_dimension_is_32() {
        let alg = AlgebraContext::new();
        assert_eq!(alg.dimension(), 32);
    }

    #[test]
    fn straightening_matches_defining_relations() {
        let alg = AlgebraContext::new();
        // ba = ab + c (the monomial basis orders a before b)
        let ab = AlgebraElement(1 << monomial_index(1, 1, 0));
        let c = alg.generator(C);
        assert_eq!(alg.normal_form(&[B, A]), ab.add(c));
        // ab is already a basis monomial
        assert_eq!(alg.normal_form(&[A, B]), ab);
        // c^2 = c
        assert_eq!(alg.normal_form(&[C, C]), c);
        // a^4 = 0
        assert_eq!(alg.normal_form(&[A, A, A, A]), AlgebraElement::zero());
        // ca = ac + a
        let ac = AlgebraElement(1 << monomial_index(1, 0, 1));
        assert_eq!(alg.normal_form(&[C, A]), ac.add(alg.generator(A)));
    }

    #[test]
    fn multiplication_is_associative() {
        // exhaustive over all monomial triples
        let alg = AlgebraContext::new();
        for h1 in 0..32usize {
            let x = AlgebraElement(1 << h1);
            for h2 in 0..32usize {
                let y = AlgebraElement(1 << h2);
                let xy = alg.mul(x, y);
                for h3 in 0..32usize {
                    let z = AlgebraElement(1 << h3);
                    assert_eq!(alg.mul(xy, z), alg.mul(x, alg.mul(y, z)));
                }
            }
        }
    }

    #[test]
    fn unit_is_neutral() {
        let alg = AlgebraContext::new();
        let one = AlgebraElement(1);
        for h in 0..32usize {
            let x = AlgebraElement(1 << h);
            assert_eq!(alg.mul(one, x), x);
            assert_eq!(alg.mul(x, one), x);
        }
    }

    #[test]
    fn radical_has_dimension_22_and_cube_zero() {
        let alg = AlgebraContext::new();
        assert_eq!(alg.radical_masks().len(), 22);
        // J^3 = 0: products of J^2 with J vanish
        for &x in alg.radical_square_masks() {
            for &y in alg.radical_masks() {
                assert!(alg.mul(AlgebraElement(x), AlgebraElement(y)).is_zero());
            }
        }
        // J^2 != 0
        assert!(!alg.radical_square_masks().is_empty());
    }

    #[test]
    fn radical_annihilates_both_simples() {
        let alg = AlgebraContext::new();
        for &mask in alg.radical_masks() {
            let x = AlgebraElement(mask);
            // on V0 everything with no constant term acts as zero; the
            // constant-term coefficient of a radical element must vanish
            assert_eq!(mask & 1, 0);
            // on V1
            let mut acc = [[0u32; 3]; 3];
            for h in x.monomials() {
                let (i, j, k) = monomial_exponents(h);
                let rho = simple_action_of_monomial(i, j, k);
                for r in 0..3 {
                    for c in 0..3 {
                        acc[r][c] ^= rho[r][c];
                    }
                }
            }
            assert_eq!(acc, [[0u32; 3]; 3]);
        }
    }

    #[test]
    fn radical_subspace_over_gf4() {
        let alg = AlgebraContext::new();
        let rad = alg.jacobson_radical(FieldContext::gf4());
        assert_eq!(rad.subspace.dim(), 22);
    }
}
