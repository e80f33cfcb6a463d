//! Modules over the algebra: three action matrices plus the operations the
//! rest of the crate is built from (direct sum, tensor product, dual, Hom
//! spaces, radical and socle filtrations, quotients).
//!
//! The tensor product action uses that a, b, c are primitive: each generator
//! acts on M (x) N as x (x) 1 + 1 (x) x. The dual uses the antipode, which
//! fixes all three generators in characteristic 2, so dual actions are plain
//! transposes.

use crate::algebra::{check_relations, AlgebraContext};
use crate::error::{Error, Result};
use crate::field::{FieldContext, FieldElement};
use crate::linalg::{Matrix, Subspace};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gen {
    A = 0,
    B = 1,
    C = 2,
}

pub const GENS: [Gen; 3] = [Gen::A, Gen::B, Gen::C];

/// A finite-dimensional module, held as its three action matrices in column
/// convention: `act(g) * v` is the action of the generator g on v.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    ctx: FieldContext,
    dim: usize,
    a: Matrix,
    b: Matrix,
    c: Matrix,
}

impl Representation {
    /// Builds a representation, verifying the five defining relations.
    pub fn new(ctx: FieldContext, a: Matrix, b: Matrix, c: Matrix) -> Result<Representation> {
        let dim = a.rows();
        for m in [&a, &b, &c] {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::DimensionMismatch(m.rows(), dim));
            }
            if m.ctx() != ctx {
                return Err(Error::ContextMismatch);
            }
        }
        let violations = check_relations(&a, &b, &c);
        if !violations.is_empty() {
            return Err(Error::RelationsViolated(violations));
        }
        Ok(Representation { ctx, dim, a, b, c })
    }

    /// For internal constructions that preserve the relations by design.
    pub(crate) fn new_unchecked(
        ctx: FieldContext,
        a: Matrix,
        b: Matrix,
        c: Matrix,
    ) -> Representation {
        let dim = a.rows();
        debug_assert!(check_relations(&a, &b, &c).is_empty());
        Representation { ctx, dim, a, b, c }
    }

    pub fn zero(ctx: FieldContext) -> Representation {
        let z = Matrix::zeros(ctx, 0, 0);
        Representation {
            ctx,
            dim: 0,
            a: z.clone(),
            b: z.clone(),
            c: z,
        }
    }

    pub fn ctx(&self) -> FieldContext {
        self.ctx
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn act(&self, g: Gen) -> &Matrix {
        match g {
            Gen::A => &self.a,
            Gen::B => &self.b,
            Gen::C => &self.c,
        }
    }

    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch);
        }
        let n = self.dim + other.dim;
        let block = |x: &Matrix, y: &Matrix| {
            let mut out = Matrix::zeros(self.ctx, n, n);
            for i in 0..x.rows() {
                for j in 0..x.cols() {
                    let v = x.get(i, j);
                    if !v.is_zero() {
                        out.set(i, j, v);
                    }
                }
            }
            for i in 0..y.rows() {
                for j in 0..y.cols() {
                    let v = y.get(i, j);
                    if !v.is_zero() {
                        out.set(self.dim + i, self.dim + j, v);
                    }
                }
            }
            out
        };
        Ok(Representation::new_unchecked(
            self.ctx,
            block(&self.a, &other.a),
            block(&self.b, &other.b),
            block(&self.c, &other.c),
        ))
    }

    /// Tensor product with the primitive-element action
    /// x (x) 1 + 1 (x) x, basis ordered left factor major.
    pub fn tensor(&self, other: &Representation) -> Result<Representation> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch);
        }
        let il = Matrix::identity(self.ctx, self.dim);
        let ir = Matrix::identity(self.ctx, other.dim);
        let mix = |x: &Matrix, y: &Matrix| Matrix::kron(x, &ir).add(&Matrix::kron(&il, y));
        Ok(Representation::new_unchecked(
            self.ctx,
            mix(&self.a, &other.a),
            mix(&self.b, &other.b),
            mix(&self.c, &other.c),
        ))
    }

    /// Dual module: transposed actions (the antipode fixes a, b, c).
    pub fn dual(&self) -> Representation {
        Representation::new_unchecked(
            self.ctx,
            self.a.transpose(),
            self.b.transpose(),
            self.c.transpose(),
        )
    }

    /// Restriction of the action to an invariant subspace, in the basis given
    /// by the subspace's echelon rows.
    pub fn restrict(&self, u: &Subspace) -> Result<Representation> {
        let mut acts = Vec::with_capacity(3);
        for g in GENS {
            let imgs = u.basis().mul(&self.act(g).transpose());
            let k = u.dim();
            let mut coords = Matrix::zeros(self.ctx, k, k);
            for i in 0..k {
                for (j, &p) in u.pivots().iter().enumerate() {
                    let v = imgs.get(i, p);
                    if !v.is_zero() {
                        coords.set(i, j, v);
                    }
                }
            }
            if coords.mul(u.basis()) != imgs {
                return Err(Error::NotInvariant);
            }
            acts.push(coords.transpose());
        }
        let c = acts.pop().unwrap();
        let b = acts.pop().unwrap();
        let a = acts.pop().unwrap();
        Ok(Representation::new_unchecked(self.ctx, a, b, c))
    }

    /// Quotient by an invariant subspace; the quotient basis is indexed by
    /// the non-pivot coordinates of U.
    pub fn quotient(&self, u: &Subspace) -> Result<Representation> {
        for g in GENS {
            if !u.contains(&u.apply(&self.act(g).transpose())) {
                return Err(Error::NotInvariant);
            }
        }
        let free: Vec<usize> = (0..self.dim).filter(|c| !u.pivots().contains(c)).collect();
        let q = free.len();
        // projection pi: k^n -> k^q, v |-> (v reduced mod U) at free coords
        let mut pi = Matrix::zeros(self.ctx, q, self.dim);
        for (r, &fc) in free.iter().enumerate() {
            pi.set(r, fc, crate::field::ONE);
        }
        for (j, &p) in u.pivots().iter().enumerate() {
            for (r, &fc) in free.iter().enumerate() {
                let v = u.basis().get(j, fc);
                if !v.is_zero() {
                    // e_p reduces by subtracting row j; char 2 drops the sign
                    pi.add_entry(r, p, v);
                }
            }
        }
        let mut iota = Matrix::zeros(self.ctx, self.dim, q);
        for (r, &fc) in free.iter().enumerate() {
            iota.set(fc, r, crate::field::ONE);
        }
        let project = |x: &Matrix| pi.mul(&x.mul(&iota));
        Ok(Representation::new_unchecked(
            self.ctx,
            project(&self.a),
            project(&self.b),
            project(&self.c),
        ))
    }

    /// Smallest invariant subspace containing the given vectors.
    pub fn submodule_closure(&self, vectors: &[Vec<FieldElement>]) -> Subspace {
        let mut mat = Matrix::zeros(self.ctx, vectors.len(), self.dim);
        for (i, v) in vectors.iter().enumerate() {
            assert_eq!(v.len(), self.dim);
            for (j, &x) in v.iter().enumerate() {
                if !x.is_zero() {
                    mat.set(i, j, x);
                }
            }
        }
        let mut span = Subspace::from_rows(&mat);
        loop {
            let mut next = span.clone();
            for g in GENS {
                next = next.sum(&span.apply(&self.act(g).transpose()));
            }
            if next.dim() == span.dim() {
                return next;
            }
            span = next;
        }
    }

    pub fn to_json(&self) -> RepJson {
        let dump = |m: &Matrix| {
            (0..self.dim)
                .map(|i| (0..self.dim).map(|j| m.get(i, j).0 as u32).collect())
                .collect()
        };
        RepJson {
            field: FieldJson {
                degree: self.ctx.degree(),
                modulus: self.ctx.modulus(),
            },
            dim: self.dim,
            a: dump(&self.a),
            b: dump(&self.b),
            c: dump(&self.c),
        }
    }

    /// Loads and validates a representation; rejects relation violators.
    pub fn from_json(json: &RepJson) -> Result<Representation> {
        let ctx = FieldContext::with_modulus(json.field.degree, json.field.modulus)?;
        let load = |rows: &Vec<Vec<u32>>| -> Result<Matrix> {
            if rows.len() != json.dim {
                return Err(Error::DimensionMismatch(rows.len(), json.dim));
            }
            Matrix::from_int_rows(ctx, rows)
        };
        Representation::new(ctx, load(&json.a)?, load(&json.b)?, load(&json.c)?)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FieldJson {
    pub degree: u32,
    pub modulus: u32,
}

/// Wire form of a representation: field description plus integer matrices.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RepJson {
    pub field: FieldJson,
    pub dim: usize,
    pub a: Vec<Vec<u32>>,
    pub b: Vec<Vec<u32>>,
    pub c: Vec<Vec<u32>>,
}

/// Basis of the space of module maps M -> N, each element an
/// (dim N) x (dim M) matrix F with F a_M = a_N F for every generator.
pub fn hom_space(m: &Representation, n: &Representation) -> Result<Vec<Matrix>> {
    if m.ctx() != n.ctx() {
        return Err(Error::ContextMismatch);
    }
    let ctx = m.ctx();
    let (dm, dn) = (m.dim(), n.dim());
    let unknowns = dm * dn;
    if unknowns == 0 {
        return Ok(Vec::new());
    }
    let mut sys = Matrix::zeros(ctx, 3 * unknowns, unknowns);
    for (gi, g) in GENS.iter().enumerate() {
        let xm = m.act(*g);
        let xn = n.act(*g);
        for i in 0..dn {
            for j in 0..dm {
                let row = gi * unknowns + i * dm + j;
                // (F xm)[i][j] = sum_k F[i][k] xm[k][j]
                for k in 0..dm {
                    let v = xm.get(k, j);
                    if !v.is_zero() {
                        sys.add_entry(row, i * dm + k, v);
                    }
                }
                // (xn F)[i][j] = sum_l xn[i][l] F[l][j]
                for l in 0..dn {
                    let v = xn.get(i, l);
                    if !v.is_zero() {
                        sys.add_entry(row, l * dm + j, v);
                    }
                }
            }
        }
    }
    let ker = sys.kernel();
    let mut out = Vec::with_capacity(ker.rows());
    for r in 0..ker.rows() {
        let mut f = Matrix::zeros(ctx, dn, dm);
        for i in 0..dn {
            for j in 0..dm {
                let v = ker.get(r, i * dm + j);
                if !v.is_zero() {
                    f.set(i, j, v);
                }
            }
        }
        out.push(f);
    }
    Ok(out)
}

pub fn hom_dim(m: &Representation, n: &Representation) -> Result<usize> {
    Ok(hom_space(m, n)?.len())
}

/// A radical or socle filtration together with the composition multiplicities
/// of each semisimple layer.
#[derive(Debug, Clone)]
pub struct Filtration {
    /// Monotone chain of subspaces including both endpoints.
    pub layers: Vec<Subspace>,
    /// (V0-multiplicity, V1-multiplicity) of each successive quotient.
    pub layer_mults: Vec<(usize, usize)>,
}

/// Cached action data for one representation: the matrices by which each of
/// the 32 basis monomials acts, plus transposes for row-space application.
pub struct Analysis<'a> {
    pub alg: &'a AlgebraContext,
    pub rep: &'a Representation,
    monomial_mats: Vec<Matrix>,
    monomial_mats_t: Vec<Matrix>,
}

impl<'a> Analysis<'a> {
    pub fn new(alg: &'a AlgebraContext, rep: &'a Representation) -> Analysis<'a> {
        let ctx = rep.ctx();
        let n = rep.dim();
        let id = Matrix::identity(ctx, n);
        let mut a_pow = vec![id.clone()];
        let mut b_pow = vec![id.clone()];
        for t in 1..4 {
            a_pow.push(a_pow[t - 1].mul(rep.act(Gen::A)));
            b_pow.push(b_pow[t - 1].mul(rep.act(Gen::B)));
        }
        let mut monomial_mats = Vec::with_capacity(32);
        for h in 0..32 {
            let (i, j, k) = crate::algebra::monomial_exponents(h);
            let mut m = a_pow[i].mul(&b_pow[j]);
            if k == 1 {
                m = m.mul(rep.act(Gen::C));
            }
            monomial_mats.push(m);
        }
        let monomial_mats_t = monomial_mats.iter().map(|m| m.transpose()).collect();
        Analysis {
            alg,
            rep,
            monomial_mats,
            monomial_mats_t,
        }
    }

    /// Action matrix of a GF(2)-mask algebra element.
    pub fn mask_action(&self, mask: u32) -> Matrix {
        let mut acc = Matrix::zeros(self.rep.ctx(), self.rep.dim(), self.rep.dim());
        for h in 0..32 {
            if (mask >> h) & 1 != 0 {
                acc = acc.add(&self.monomial_mats[h]);
            }
        }
        acc
    }

    pub fn mask_action_t(&self, mask: u32) -> Matrix {
        let mut acc = Matrix::zeros(self.rep.ctx(), self.rep.dim(), self.rep.dim());
        for h in 0..32 {
            if (mask >> h) & 1 != 0 {
                acc = acc.add(&self.monomial_mats_t[h]);
            }
        }
        acc
    }

    /// J * U for a subspace U (in ambient coordinates).
    pub fn radical_of(&self, u: &Subspace) -> Subspace {
        let parts: Vec<Matrix> = self
            .alg
            .radical_masks()
            .iter()
            .map(|&mask| u.basis().mul(&self.mask_action_t(mask)))
            .collect();
        let refs: Vec<&Matrix> = parts.iter().collect();
        Subspace::from_rows(&Matrix::stack(&refs))
    }

    /// rad M = J M.
    pub fn radical(&self) -> Subspace {
        self.radical_of(&Subspace::full(self.rep.ctx(), self.rep.dim()))
    }

    /// {v : x v = 0 for every mask element x}.
    pub fn joint_kernel(&self, masks: &[u32]) -> Subspace {
        if self.rep.dim() == 0 {
            return Subspace::zero(self.rep.ctx(), 0);
        }
        let mats: Vec<Matrix> = masks.iter().map(|&m| self.mask_action(m)).collect();
        let refs: Vec<&Matrix> = mats.iter().collect();
        Subspace::from_rows(&Matrix::stack(&refs).kernel())
    }

    /// soc M: the annihilator of the radical.
    pub fn socle(&self) -> Subspace {
        self.joint_kernel(self.alg.radical_masks())
    }

    /// soc^2 M: the annihilator of the radical square.
    pub fn socle2(&self) -> Subspace {
        self.joint_kernel(self.alg.radical_square_masks())
    }

    /// Descending chain M > JM > J^2 M > ... > 0.
    pub fn radical_chain(&self) -> Vec<Subspace> {
        let mut chain = vec![Subspace::full(self.rep.ctx(), self.rep.dim())];
        while chain.last().unwrap().dim() > 0 {
            let next = self.radical_of(chain.last().unwrap());
            debug_assert!(next.dim() < chain.last().unwrap().dim());
            chain.push(next);
        }
        chain
    }

    /// Smallest i with J^i M = 0.
    pub fn radical_length(&self) -> usize {
        self.radical_chain().len() - 1
    }

    /// (V0, V1) multiplicities of the semisimple layer upper/lower, split by
    /// the rank of the induced c-action: each V1 contributes rank 2, V0 none.
    pub fn layer_mults(&self, upper: &Subspace, lower: &Subspace) -> (usize, usize) {
        let layer_dim = upper.dim() - lower.dim();
        let c_img = upper.apply(&self.rep.act(Gen::C).transpose());
        let c_rank = c_img.sum(lower).dim() - lower.dim();
        debug_assert_eq!(c_rank % 2, 0);
        let n1 = c_rank / 2;
        debug_assert!(layer_dim >= 3 * n1);
        (layer_dim - 3 * n1, n1)
    }

    /// Radical series with layer multiplicities (descending).
    pub fn radical_series(&self) -> Filtration {
        let chain = self.radical_chain();
        let mut layer_mults = Vec::new();
        for w in chain.windows(2) {
            layer_mults.push(self.layer_mults(&w[0], &w[1]));
        }
        Filtration {
            layers: chain,
            layer_mults,
        }
    }

    /// Socle series with layer multiplicities (ascending); soc^k is the
    /// annihilator of J^k and the cube of the radical vanishes.
    pub fn socle_series(&self) -> Filtration {
        let ctx = self.rep.ctx();
        let n = self.rep.dim();
        let mut chain = vec![Subspace::zero(ctx, n)];
        if n > 0 {
            chain.push(self.socle());
            if chain.last().unwrap().dim() < n {
                chain.push(self.socle2());
            }
            if chain.last().unwrap().dim() < n {
                chain.push(Subspace::full(ctx, n));
            }
        }
        let mut layer_mults = Vec::new();
        for w in chain.windows(2) {
            layer_mults.push(self.layer_mults(&w[1], &w[0]));
        }
        Filtration {
            layers: chain,
            layer_mults,
        }
    }

    /// Composition multiplicities (n0, n1) with n0 + 3 n1 = dim.
    pub fn comp_mults(&self) -> (usize, usize) {
        let series = self.radical_series();
        let mut n0 = 0;
        let mut n1 = 0;
        for (a, b) in series.layer_mults {
            n0 += a;
            n1 += b;
        }
        debug_assert_eq!(n0 + 3 * n1, self.rep.dim());
        (n0, n1)
    }

    /// Multiplicities of the head M / rad M.
    pub fn top_mults(&self) -> (usize, usize) {
        let full = Subspace::full(self.rep.ctx(), self.rep.dim());
        self.layer_mults(&full, &self.radical())
    }

    /// Multiplicities of soc M.
    pub fn socle_mults(&self) -> (usize, usize) {
        let zero = Subspace::zero(self.rep.ctx(), self.rep.dim());
        self.layer_mults(&self.socle(), &zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraContext;
    use crate::catalog;
    use crate::field::{FieldContext, ZERO};

    fn gf4() -> FieldContext {
        FieldContext::gf4()
    }

    #[test]
    fn trivial_module_is_the_tensor_unit() {
        let ctx = gf4();
        let v0 = catalog::make_simple(ctx, 0).unwrap();
        let p1 = catalog::make_projective(ctx, 1).unwrap();
        let t = v0.tensor(&p1).unwrap();
        // equal matrices, not just isomorphic
        assert_eq!(t, p1);
        assert_eq!(p1.tensor(&v0).unwrap(), p1);
        assert_eq!(t.dim(), v0.dim() * p1.dim());
    }

    #[test]
    fn tensor_of_simples_reproduces_displayed_block_matrices() {
        let ctx = gf4();
        let v1 = catalog::make_simple(ctx, 1).unwrap();
        let t = v1.tensor(&v1).unwrap();
        assert_eq!(t.dim(), 9);
        // a: diagonal blocks A, identity blocks below the diagonal
        let expect_a = Matrix::from_int_rows(
            ctx,
            &[
                vec![0, 0, 0, 0, 0, 0, 0, 0, 0],
                vec![1, 0, 0, 0, 0, 0, 0, 0, 0],
                vec![0, 1, 0, 0, 0, 0, 0, 0, 0],
                vec![1, 0, 0, 0, 0, 0, 0, 0, 0],
                vec![0, 1, 0, 1, 0, 0, 0, 0, 0],
                vec![0, 0, 1, 0, 1, 0, 0, 0, 0],
                vec![0, 0, 0, 1, 0, 0, 0, 0, 0],
                vec![0, 0, 0, 0, 1, 0, 1, 0, 0],
                vec![0, 0, 0, 0, 0, 1, 0, 1, 0],
            ],
        )
        .unwrap();
        assert_eq!(t.act(Gen::A), &expect_a);
        // b: diagonal blocks B, identity blocks above the diagonal
        let expect_b = Matrix::from_int_rows(
            ctx,
            &[
                vec![0, 1, 0, 1, 0, 0, 0, 0, 0],
                vec![0, 0, 1, 0, 1, 0, 0, 0, 0],
                vec![0, 0, 0, 0, 0, 1, 0, 0, 0],
                vec![0, 0, 0, 0, 1, 0, 1, 0, 0],
                vec![0, 0, 0, 0, 0, 1, 0, 1, 0],
                vec![0, 0, 0, 0, 0, 0, 0, 0, 1],
                vec![0, 0, 0, 0, 0, 0, 0, 1, 0],
                vec![0, 0, 0, 0, 0, 0, 0, 0, 1],
                vec![0, 0, 0, 0, 0, 0, 0, 0, 0],
            ],
        )
        .unwrap();
        assert_eq!(t.act(Gen::B), &expect_b);
        // c: diag(C + 1, C, C + 1)
        let expect_c = Matrix::from_int_rows(
            ctx,
            &[
                vec![0, 0, 0, 0, 0, 0, 0, 0, 0],
                vec![0, 1, 0, 0, 0, 0, 0, 0, 0],
                vec![0, 0, 0, 0, 0, 0, 0, 0, 0],
                vec![0, 0, 0, 1, 0, 0, 0, 0, 0],
                vec![0, 0, 0, 0, 0, 0, 0, 0, 0],
                vec![0, 0, 0, 0, 0, 1, 0, 0, 0],
                vec![0, 0, 0, 0, 0, 0, 0, 0, 0],
                vec![0, 0, 0, 0, 0, 0, 0, 1, 0],
                vec![0, 0, 0, 0, 0, 0, 0, 0, 0],
            ],
        )
        .unwrap();
        assert_eq!(t.act(Gen::C), &expect_c);
    }

    #[test]
    fn dual_is_involutive() {
        let ctx = gf4();
        let p0 = catalog::make_projective(ctx, 0).unwrap();
        assert_eq!(p0.dual().dual(), p0);
    }

    #[test]
    fn radical_and_socle_of_simples_and_projectives() {
        let ctx = gf4();
        let alg = AlgebraContext::new();
        let v0 = catalog::make_simple(ctx, 0).unwrap();
        let an = Analysis::new(&alg, &v0);
        assert_eq!(an.radical().dim(), 0);
        assert_eq!(an.socle().dim(), 1);
        assert_eq!(an.radical_length(), 1);

        let p0 = catalog::make_projective(ctx, 0).unwrap();
        let an = Analysis::new(&alg, &p0);
        assert_eq!(an.socle().dim(), 1);
        assert_eq!(an.socle_mults(), (1, 0));
        assert_eq!(an.radical_length(), 3);
        assert_eq!(an.comp_mults(), (2, 2));

        let p1 = catalog::make_projective(ctx, 1).unwrap();
        let an = Analysis::new(&alg, &p1);
        assert_eq!(an.radical_length(), 3);
        assert_eq!(an.socle_mults(), (0, 1));
        assert_eq!(an.top_mults(), (0, 1));
        assert_eq!(an.comp_mults(), (2, 2));
    }

    #[test]
    fn radical_of_string_module() {
        let ctx = gf4();
        let alg = AlgebraContext::new();
        let u12 = catalog::make_string(ctx, catalog::StringFamily::U1, 2).unwrap();
        let an = Analysis::new(&alg, &u12);
        let rad = an.radical();
        assert_eq!(rad.dim(), 6);
        assert_eq!(an.socle_mults(), (0, 2));
        assert_eq!(an.radical_length(), 2);
        // rad M = soc M for all radical-length-2 indecomposables
        assert_eq!(rad, an.socle());
    }

    #[test]
    fn comp_mults_examples() {
        let ctx = gf4();
        let alg = AlgebraContext::new();
        let v1 = catalog::make_simple(ctx, 1).unwrap();
        assert_eq!(Analysis::new(&alg, &v1).comp_mults(), (0, 1));
        // first syzygy of the trivial module: dim 7 = 1 + 3*2
        let om1 = catalog::make_syzygy(ctx, 1, 0).unwrap();
        assert_eq!(Analysis::new(&alg, &om1).comp_mults(), (1, 2));
        assert_eq!(Analysis::new(&alg, &om1).radical_length(), 2);
    }

    #[test]
    fn quotient_and_closure_examples() {
        let ctx = gf4();
        let alg = AlgebraContext::new();
        let p0 = catalog::make_projective(ctx, 0).unwrap();
        let an = Analysis::new(&alg, &p0);
        let soc = an.socle();
        let q = p0.quotient(&soc).unwrap();
        assert_eq!(q.dim(), 7);
        let qan = Analysis::new(&alg, &q);
        assert_eq!(qan.socle_mults(), (0, 2));

        let z = crate::linalg::Subspace::zero(ctx, p0.dim());
        assert_eq!(p0.quotient(&z).unwrap(), p0);

        // closure of the first four basis vectors of a type-A module
        let x = crate::field::ProjPoint::affine(ctx.element(2).unwrap());
        let a3 = catalog::make_type_a(ctx, x, 3).unwrap();
        let vecs: Vec<Vec<FieldElement>> = (0..4)
            .map(|i| {
                (0..a3.dim())
                    .map(|j| if i == j { crate::field::ONE } else { ZERO })
                    .collect()
            })
            .collect();
        let sub = a3.submodule_closure(&vecs);
        assert_eq!(sub.dim(), 4);
        assert_eq!(a3.restrict(&sub).unwrap().dim(), 4);
        assert_eq!(a3.quotient(&sub).unwrap().dim(), 8);
    }

    #[test]
    fn hom_space_examples() {
        let ctx = gf4();
        let v0 = catalog::make_simple(ctx, 0).unwrap();
        let v1 = catalog::make_simple(ctx, 1).unwrap();
        assert_eq!(hom_dim(&v0, &v1).unwrap(), 0);
        assert_eq!(hom_dim(&v1, &v1).unwrap(), 1);
        let p0 = catalog::make_projective(ctx, 0).unwrap();
        assert_eq!(hom_dim(&p0, &p0).unwrap(), 2);
        for f in hom_space(&p0, &p0).unwrap() {
            for g in GENS {
                assert_eq!(f.mul(p0.act(g)), p0.act(g).mul(&f));
            }
        }
    }

    #[test]
    fn json_round_trip_rejects_violators() {
        let ctx = gf4();
        let v1 = catalog::make_simple(ctx, 1).unwrap();
        let json = v1.to_json();
        let back = Representation::from_json(&json).unwrap();
        assert_eq!(back, v1);
        let mut bad = v1.to_json();
        bad.a[0][0] = 1;
        assert!(Representation::from_json(&bad).is_err());
    }
}
