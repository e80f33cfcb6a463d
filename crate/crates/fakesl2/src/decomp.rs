//! Krull-Schmidt machinery: splitting a representation into indecomposable
//! summands, isomorphism testing, and the decompose-and-identify oracle that
//! cross-checks every closed-form fusion rule.
//!
//! Projective summands are peeled structurally first: a projective cover P_i
//! is cyclic with simple socle, so split embeddings P_i -> M correspond to
//! vectors m with Ann(w1) m = 0 whose socle images s m are linearly
//! independent, and the same data on the dual module yields split
//! surjections whose joint kernel is a module complement. The remaining
//! projective-free part has radical length at most 2 and is split by Fitting
//! decompositions along endomorphisms; a candidate endomorphism that is
//! invertible or nilpotent is mined further for idempotents inside the
//! commutative subalgebra it generates, which needs no polynomial
//! factorization in characteristic 2 because squaring is additive there and
//! the idempotents of k[e] form an F2-linear kernel.
//!
//! Indecomposability certificates compute the radical of the endomorphism
//! ring: for commutative rings the nilpotents are the F2-kernel of a high
//! squaring map; otherwise the characteristic-2 filtration by the
//! characteristic-polynomial coefficients c_1, c_2, c_4, ... of products is
//! used.

use crate::algebra::AlgebraContext;
use crate::catalog::identify;
use crate::error::{Error, Result};
use crate::field::{FieldContext, FieldElement, ONE, ZERO};
use crate::green::GreenElement;
use crate::linalg::{Matrix, Subspace};
use crate::rep::{hom_space, Analysis, Representation, GENS};
use crate::rng::SplitMix64;

/// Default seed for the deterministic endomorphism enumeration.
pub const DEFAULT_SEED: u64 = 0x5EED_C0DE_2026_0001;

/// Outcome of a Fitting decomposition along one endomorphism.
#[derive(Debug)]
pub enum Fitting {
    /// The endomorphism was nilpotent or invertible.
    Whole,
    /// M = ker(e^d) (+) im(e^d), both parts nonzero.
    Split(Subspace, Subspace),
}

/// Fitting decomposition of M along an endomorphism e: for d = dim M the
/// power e^d has ker e^d (+) im e^d = M, and both sides are submodules.
pub fn fitting_split(rep: &Representation, e: &Matrix) -> Result<Fitting> {
    for g in GENS {
        if e.mul(rep.act(g)) != rep.act(g).mul(e) {
            return Err(Error::BadParameter(
                "matrix is not an endomorphism of the module".into(),
            ));
        }
    }
    let d = rep.dim();
    if d == 0 {
        return Ok(Fitting::Whole);
    }
    let mut pow = 1u64;
    while (pow as usize) < d {
        pow *= 2;
    }
    let stable = e.pow(pow);
    let ker = Subspace::from_rows(&stable.kernel());
    if ker.dim() == 0 || ker.dim() == d {
        return Ok(Fitting::Whole);
    }
    let im = Subspace::from_rows(&stable.transpose());
    debug_assert_eq!(ker.dim() + im.dim(), d);
    Ok(Fitting::Split(ker, im))
}

/// Monic minimal polynomial of a square matrix, low coefficients first.
fn min_poly(m: &Matrix) -> Vec<FieldElement> {
    let ctx = m.ctx();
    let n = m.rows();
    let vec_len = n * n;
    let mut powers: Vec<Matrix> = vec![Matrix::identity(ctx, n)];
    loop {
        let k = powers.len();
        let next = powers.last().unwrap().mul(m);
        let mut sys = Matrix::zeros(ctx, vec_len, k);
        let mut rhs = vec![ZERO; vec_len];
        for i in 0..n {
            for j in 0..n {
                for (t, p) in powers.iter().enumerate() {
                    let v = p.get(i, j);
                    if !v.is_zero() {
                        sys.set(i * n + j, t, v);
                    }
                }
                rhs[i * n + j] = next.get(i, j);
            }
        }
        if let Some(coeffs) = sys.solve(&rhs) {
            // m^k = sum c_t m^t, so mu = T^k + sum c_t T^t (char 2)
            let mut poly = coeffs;
            poly.push(ONE);
            return poly;
        }
        powers.push(next);
    }
}

/// Characteristic polynomial by Hessenberg reduction, monic, low
/// coefficients first. Plain dense arithmetic; only used on small matrices.
fn char_poly(m: &Matrix) -> Vec<FieldElement> {
    let ctx = m.ctx();
    let n = m.rows();
    let mut h: Vec<Vec<FieldElement>> = (0..n).map(|i| m.row_to_vec(i)).collect();
    // similarity reduction to upper Hessenberg form
    #[allow(clippy::needless_range_loop)]
    for j in 0..n.saturating_sub(2) {
        let pivot = (j + 1..n).find(|&r| !h[r][j].is_zero());
        let Some(p) = pivot else { continue };
        if p != j + 1 {
            h.swap(p, j + 1);
            for row in h.iter_mut() {
                row.swap(p, j + 1);
            }
        }
        let inv = ctx.inv(h[j + 1][j]).expect("pivot nonzero");
        for r in j + 2..n {
            let f = ctx.mul(h[r][j], inv);
            if f.is_zero() {
                continue;
            }
            for c in 0..n {
                let sub = ctx.mul(f, h[j + 1][c]);
                h[r][c] = ctx.add(h[r][c], sub);
            }
            // inverse similarity: column j+1 += f * column r
            for row in h.iter_mut() {
                let add = ctx.mul(f, row[r]);
                row[j + 1] = ctx.add(row[j + 1], add);
            }
        }
    }
    // recurrence p_k(T) = (T + h[k-1][k-1]) p_{k-1} + sum of subdiagonal
    // products (all signs vanish in characteristic 2)
    let mut polys: Vec<Vec<FieldElement>> = vec![vec![ONE]];
    for k in 1..=n {
        let mut p = vec![ZERO; k + 1];
        // T * p_{k-1}
        for (t, &c) in polys[k - 1].iter().enumerate() {
            p[t + 1] = c;
        }
        // + h[k-1][k-1] * p_{k-1}
        let d = h[k - 1][k - 1];
        for (t, &c) in polys[k - 1].iter().enumerate() {
            p[t] = ctx.add(p[t], ctx.mul(d, c));
        }
        // + sum_{i<k-1} h[i][k-1] (prod_{j=i+1..k-1} h[j][j-1]) p_i
        let mut beta = ONE;
        for i in (0..k.saturating_sub(1)).rev() {
            beta = ctx.mul(beta, h[i + 1][i]);
            if beta.is_zero() {
                break;
            }
            let coef = ctx.mul(h[i][k - 1], beta);
            if coef.is_zero() {
                continue;
            }
            for (t, &c) in polys[i].iter().enumerate() {
                p[t] = ctx.add(p[t], ctx.mul(coef, c));
            }
        }
        polys.push(p);
    }
    polys.pop().unwrap()
}

/// Coefficient c_k of the characteristic polynomial (the T^{n-k}
/// coefficient; c_0 = 1, c_n = det).
fn char_coeff(poly: &[FieldElement], k: usize) -> FieldElement {
    let n = poly.len() - 1;
    if k > n {
        ZERO
    } else {
        poly[n - k]
    }
}

/// A nontrivial idempotent in the commutative algebra k[e], when one exists.
///
/// k[e] = k[T]/(mu). Squaring is F2-linear there, so the idempotents form the
/// F2-kernel of x -> x^2 + x; a kernel of F2-dimension > 1 contains an
/// element other than 0 and 1, and evaluating it at e gives a nontrivial
/// idempotent endomorphism.
fn idempotent_in_generated_algebra(e: &Matrix) -> Option<Matrix> {
    let ctx = e.ctx();
    let mu = min_poly(e);
    let d = mu.len() - 1;
    if d <= 1 {
        return None;
    }
    let m = ctx.degree() as usize;
    // T^j mod mu for j < 2d
    let mut tpow: Vec<Vec<FieldElement>> = vec![vec![ZERO; d]];
    tpow[0][0] = ONE;
    for j in 1..2 * d {
        let prev = tpow[j - 1].clone();
        let mut cur = vec![ZERO; d];
        cur[1..d].copy_from_slice(&prev[..(d - 1)]);
        let lead = prev[d - 1];
        if !lead.is_zero() {
            for t in 0..d {
                cur[t] = ctx.add(cur[t], ctx.mul(lead, mu[t]));
            }
        }
        tpow.push(cur);
    }
    let gf2 = FieldContext::gf2();
    let f2dim = m * d;
    let mut phi = Matrix::zeros(gf2, f2dim, f2dim);
    for t in 0..d {
        for bit in 0..m {
            let scalar = FieldElement(1 << bit);
            let sq_scalar = ctx.mul(scalar, scalar);
            // (scalar T^t)^2 + scalar T^t
            let mut val = vec![ZERO; d];
            for (u, &c) in tpow[2 * t].iter().enumerate() {
                val[u] = ctx.mul(sq_scalar, c);
            }
            val[t] = ctx.add(val[t], scalar);
            let col = t * m + bit;
            for (u, &c) in val.iter().enumerate() {
                for vb in 0..m {
                    if (c.0 >> vb) & 1 != 0 {
                        phi.set(u * m + vb, col, ONE);
                    }
                }
            }
        }
    }
    let ker = phi.kernel();
    if ker.rows() <= 1 {
        return None;
    }
    let is_constant_one = |row: usize| -> bool {
        (0..f2dim).all(|c| {
            let set = !ker.get(row, c).is_zero();
            if c == 0 {
                set
            } else {
                !set
            }
        })
    };
    let row = (0..ker.rows()).find(|&r| !is_constant_one(r))?;
    let mut coeffs = vec![ZERO; d];
    for (t, cf) in coeffs.iter_mut().enumerate() {
        let mut bits = 0u16;
        for bit in 0..m {
            if !ker.get(row, t * m + bit).is_zero() {
                bits |= 1 << bit;
            }
        }
        *cf = FieldElement(bits);
    }
    // Horner evaluation at e
    let n = e.rows();
    let mut acc = Matrix::zeros(ctx, n, n);
    for &c in coeffs.iter().rev() {
        acc = acc.mul(e);
        if !c.is_zero() {
            for i in 0..n {
                acc.add_entry(i, i, c);
            }
        }
    }
    debug_assert_eq!(acc.mul(&acc), acc);
    debug_assert!(!acc.is_zero());
    Some(acc)
}

/// Certification outcome for an endomorphism ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EndCertificate {
    /// End/rad is one-dimensional over the coefficient field.
    Local { end_dim: usize },
    /// End/rad is a field extension of the given degree (> 1): the module is
    /// indecomposable but not absolutely so.
    FieldExtension { end_dim: usize, degree: usize },
    /// End/rad has a nontrivial idempotent: the module is decomposable.
    NotLocal { end_dim: usize },
}

/// F2-basis of the algebra spanned by `basis` (all scalar multiples).
fn f2_span(basis: &[Matrix]) -> Vec<Matrix> {
    let ctx = basis[0].ctx();
    let m = ctx.degree() as usize;
    let mut out = Vec::with_capacity(basis.len() * m);
    for f in basis {
        for bit in 0..m {
            out.push(f.scaled(FieldElement(1 << bit)));
        }
    }
    out
}

/// Radical of a matrix algebra with the given F_q-basis, returned as an
/// F2-basis of matrices. Uses the characteristic-2 filtration
/// L_{j+1} = {x in L_j : c_{2^j}(x y) = 0 for all y in L_j}, starting from
/// the trace and ending once 2^j reaches the matrix size; each condition is
/// F2-linear on the layer it filters.
fn algebra_radical_f2(basis: &[Matrix]) -> Vec<Matrix> {
    if basis.is_empty() {
        return Vec::new();
    }
    let ctx = basis[0].ctx();
    let n = basis[0].rows();
    let m = ctx.degree() as usize;
    let gf2 = FieldContext::gf2();
    let mut layer = f2_span(basis);
    let mut j = 0u32;
    while !layer.is_empty() && (1usize << j) <= n {
        let k = 1usize << j;
        let mut sys = Matrix::zeros(gf2, layer.len() * m, layer.len());
        for (xi, x) in layer.iter().enumerate() {
            for (yi, y) in layer.iter().enumerate() {
                let cp = char_poly(&x.mul(y));
                let val = char_coeff(&cp, k);
                for bit in 0..m {
                    if (val.0 >> bit) & 1 != 0 {
                        sys.set(yi * m + bit, xi, ONE);
                    }
                }
            }
        }
        let ker = sys.kernel();
        layer = (0..ker.rows())
            .map(|r| {
                let mut acc = Matrix::zeros(ctx, n, n);
                for (xi, x) in layer.iter().enumerate() {
                    if !ker.get(r, xi).is_zero() {
                        acc = acc.add(x);
                    }
                }
                acc
            })
            .collect();
        j += 1;
    }
    debug_assert!(layer.iter().all(|x| {
        let mut pow = 1u64;
        while (pow as usize) < n.max(1) {
            pow *= 2;
        }
        x.pow(pow).is_zero()
    }));
    layer
}

fn vectorize(f: &Matrix) -> Vec<FieldElement> {
    let n = f.rows();
    let mut out = vec![ZERO; n * n];
    for i in 0..n {
        for j in 0..n {
            out[i * n + j] = f.get(i, j);
        }
    }
    out
}

fn matrices_to_subspace(mats: &[Matrix], ctx: FieldContext, n: usize) -> Subspace {
    let mut rows = Matrix::zeros(ctx, mats.len(), n * n);
    for (r, f) in mats.iter().enumerate() {
        for (c, v) in vectorize(f).into_iter().enumerate() {
            if !v.is_zero() {
                rows.set(r, c, v);
            }
        }
    }
    Subspace::from_rows(&rows)
}

/// Number of field blocks of a commutative semisimple quotient, counted as
/// the F2-dimension of the solution space of x^2 = x modulo the radical,
/// minus the F2-dimension of the radical itself.
fn commutative_block_count(f2_elems: &[Matrix], rad_space: &Subspace, rad_f2_dim: usize) -> usize {
    let gf2 = FieldContext::gf2();
    let n = f2_elems[0].rows();
    let m = f2_elems[0].ctx().degree() as usize;
    let rows = n * n * m;
    let mut sys = Matrix::zeros(gf2, rows, f2_elems.len());
    for (c, u) in f2_elems.iter().enumerate() {
        let val = u.mul(u).add(u);
        let red = rad_space.reduce_vec(vectorize(&val));
        for (idx, v) in red.into_iter().enumerate() {
            for vb in 0..m {
                if (v.0 >> vb) & 1 != 0 {
                    sys.set(idx * m + vb, c, ONE);
                }
            }
        }
    }
    let solutions = sys.kernel().rows();
    debug_assert!(solutions > rad_f2_dim);
    solutions - rad_f2_dim
}

/// Certify whether the algebra spanned by `basis` (an endomorphism ring) is
/// local, and measure its semisimple quotient.
pub fn certify_end(basis: &[Matrix]) -> EndCertificate {
    let e = basis.len();
    if e == 1 {
        return EndCertificate::Local { end_dim: 1 };
    }
    let ctx = basis[0].ctx();
    let n = basis[0].rows();
    let m = ctx.degree() as usize;
    let commutative = basis
        .iter()
        .enumerate()
        .all(|(i, f)| basis.iter().skip(i + 1).all(|g| f.mul(g) == g.mul(f)));
    let f2_elems = f2_span(basis);
    let rad_f2: Vec<Matrix> = if commutative {
        // nilpotents form the F2-kernel of a high squaring map
        let mut pow = 1u64;
        while (pow as usize) < n.max(1) {
            pow *= 2;
        }
        f2_kernel_of(&f2_elems, |x| x.pow(pow))
    } else {
        algebra_radical_f2(basis)
    };
    debug_assert_eq!(rad_f2.len() % m, 0);
    let quot_dim = e - rad_f2.len() / m;
    if quot_dim == 1 {
        return EndCertificate::Local { end_dim: e };
    }
    let rad_space = matrices_to_subspace(&rad_f2, ctx, n);
    if !commutative {
        // commutativity modulo the radical decides between a matrix block
        // and a commutative semisimple quotient
        for (i, f) in basis.iter().enumerate() {
            for g in basis.iter().skip(i + 1) {
                let comm = f.mul(g).add(&g.mul(f));
                if !rad_space.contains_vec(&vectorize(&comm)) {
                    return EndCertificate::NotLocal { end_dim: e };
                }
            }
        }
    }
    let blocks = commutative_block_count(&f2_elems, &rad_space, rad_f2.len());
    if blocks == 1 {
        EndCertificate::FieldExtension {
            end_dim: e,
            degree: quot_dim,
        }
    } else {
        EndCertificate::NotLocal { end_dim: e }
    }
}

/// Kernel of an additive map on the F2-span of the given elements, returned
/// as combinations of them.
fn f2_kernel_of(f2_elems: &[Matrix], map: impl Fn(&Matrix) -> Matrix) -> Vec<Matrix> {
    let gf2 = FieldContext::gf2();
    let n = f2_elems[0].rows();
    let m = f2_elems[0].ctx().degree() as usize;
    let mut sys = Matrix::zeros(gf2, n * n * m, f2_elems.len());
    for (c, u) in f2_elems.iter().enumerate() {
        let val = map(u);
        for (idx, v) in vectorize(&val).into_iter().enumerate() {
            for vb in 0..m {
                if (v.0 >> vb) & 1 != 0 {
                    sys.set(idx * m + vb, c, ONE);
                }
            }
        }
    }
    let ker = sys.kernel();
    (0..ker.rows())
        .map(|r| {
            let ctx = f2_elems[0].ctx();
            let mut acc = Matrix::zeros(ctx, n, n);
            for (c, u) in f2_elems.iter().enumerate() {
                if !ker.get(r, c).is_zero() {
                    acc = acc.add(u);
                }
            }
            acc
        })
        .collect()
}

/// One indecomposable summand of a splitting with its certificate.
#[derive(Debug, Clone)]
pub struct SplitSummand {
    pub rep: Representation,
    pub multiplicity: usize,
    /// Dimension of the endomorphism ring of the summand.
    pub end_dim: usize,
    /// Dimension of End/rad over the field; 1 certifies absolute
    /// indecomposability.
    pub end_local_dim: usize,
}

/// A full direct-sum decomposition.
#[derive(Debug, Clone)]
pub struct Splitting {
    pub summands: Vec<SplitSummand>,
}

impl Splitting {
    pub fn total_dim(&self) -> usize {
        self.summands
            .iter()
            .map(|s| s.rep.dim() * s.multiplicity)
            .sum()
    }

    /// Soundness witness: the direct sum of the summands (with
    /// multiplicity) is isomorphic to the given module.
    pub fn verify_against(
        &self,
        alg: &AlgebraContext,
        rep: &Representation,
        seed: u64,
    ) -> Result<bool> {
        let mut acc = Representation::zero(rep.ctx());
        for s in &self.summands {
            for _ in 0..s.multiplicity {
                acc = acc.direct_sum(&s.rep)?;
            }
        }
        is_isomorphic(alg, &acc, rep, seed)
    }
}

/// The decomposition engine: algebra data, peel tables for the two
/// projective covers, and the seed driving the endomorphism enumeration.
pub struct Decomposer {
    pub alg: AlgebraContext,
    seed: u64,
    /// masks spanning Ann(w1) inside the algebra, one set per projective
    ann: [Vec<u32>; 2],
    /// an element of J^2 moving the generator into the socle, per projective
    soc_elt: [u32; 2],
}

impl Decomposer {
    pub fn new(seed: u64) -> Decomposer {
        let alg = AlgebraContext::new();
        let gf2 = FieldContext::gf2();
        let mut ann: [Vec<u32>; 2] = [Vec::new(), Vec::new()];
        let mut soc_elt = [0u32; 2];
        for i in 0..2u8 {
            let p = crate::catalog::make_projective(gf2, i).expect("projective over GF(2)");
            let an = Analysis::new(&alg, &p);
            // each projective cover is cyclic on basis vector w1 = index 4
            let mut act_on_gen = Matrix::zeros(gf2, 8, 32);
            for h in 0..32usize {
                let col = an.mask_action(1 << h);
                for r in 0..8 {
                    let v = col.get(r, 4);
                    if !v.is_zero() {
                        act_on_gen.set(r, h, v);
                    }
                }
            }
            let ker = act_on_gen.kernel();
            debug_assert_eq!(ker.rows(), 24);
            ann[i as usize] = (0..ker.rows())
                .map(|r| {
                    let mut mask = 0u32;
                    for h in 0..32 {
                        if !ker.get(r, h).is_zero() {
                            mask |= 1 << h;
                        }
                    }
                    mask
                })
                .collect();
            let soc = an.socle();
            soc_elt[i as usize] = alg
                .radical_square_masks()
                .iter()
                .copied()
                .find(|&mask| {
                    let img = an.mask_action(mask);
                    let v: Vec<FieldElement> = (0..8).map(|r| img.get(r, 4)).collect();
                    v.iter().any(|x| !x.is_zero()) && soc.contains_vec(&v)
                })
                .expect("socle reached from the generator by J^2");
        }
        Decomposer {
            alg,
            seed,
            ann,
            soc_elt,
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Vectors parametrizing split embeddings of P_i into the module of `an`:
    /// annihilated by Ann(w1) (hence defining maps from P_i) with linearly
    /// independent socle images.
    fn peel_vectors(&self, an: &Analysis, i: usize) -> Vec<Vec<FieldElement>> {
        let hom = an.joint_kernel(&self.ann[i]);
        if hom.dim() == 0 {
            return Vec::new();
        }
        let sigma_t = an.mask_action_t(self.soc_elt[i]);
        let images = hom.basis().mul(&sigma_t);
        let ctx = an.rep.ctx();
        let dim = an.rep.dim();
        let mut acc = Subspace::zero(ctx, dim);
        let mut out = Vec::new();
        for r in 0..hom.dim() {
            let v = images.row_to_vec(r);
            if v.iter().all(|x| x.is_zero()) {
                continue;
            }
            if !acc.contains_vec(&v) {
                out.push(hom.basis().row_to_vec(r));
                let mut one = Matrix::zeros(ctx, 1, dim);
                for (j, &x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        one.set(0, j, x);
                    }
                }
                acc = acc.sum(&Subspace::from_rows(&one));
            }
        }
        out
    }

    /// The cyclic submodule generated by one vector.
    fn cyclic_submodule(&self, an: &Analysis, v: &[FieldElement]) -> Subspace {
        let ctx = an.rep.ctx();
        let dim = an.rep.dim();
        let mut vm = Matrix::zeros(ctx, 1, dim);
        for (j, &x) in v.iter().enumerate() {
            if !x.is_zero() {
                vm.set(0, j, x);
            }
        }
        let mut rows = Matrix::zeros(ctx, 32, dim);
        for h in 0..32usize {
            let img = vm.mul(&an.mask_action_t(1 << h));
            for j in 0..dim {
                let x = img.get(0, j);
                if !x.is_zero() {
                    rows.set(h, j, x);
                }
            }
        }
        Subspace::from_rows(&rows)
    }

    /// Strips all projective summands: returns the extracted copies (as
    /// submodule representations, tagged 0 or 1) and a complementary
    /// projective-free part.
    pub fn peel_projectives(
        &self,
        rep: &Representation,
    ) -> Result<(Vec<(u8, Representation)>, Representation)> {
        if rep.dim() == 0 {
            return Ok((Vec::new(), rep.clone()));
        }
        let an = Analysis::new(&self.alg, rep);
        let mut extracted = Vec::new();
        let mut counts = [0usize; 2];
        for (i, count) in counts.iter_mut().enumerate() {
            for v in self.peel_vectors(&an, i) {
                let sub = self.cyclic_submodule(&an, &v);
                debug_assert_eq!(sub.dim(), 8);
                extracted.push((i as u8, rep.restrict(&sub)?));
                *count += 1;
            }
        }
        // complement from the dual side: split surjections onto projectives
        let dual = rep.dual();
        let an_d = Analysis::new(&self.alg, &dual);
        let mut dual_span = Subspace::zero(rep.ctx(), rep.dim());
        let mut dual_counts = [0usize; 2];
        for (i, count) in dual_counts.iter_mut().enumerate() {
            for v in self.peel_vectors(&an_d, i) {
                dual_span = dual_span.sum(&self.cyclic_submodule(&an_d, &v));
                *count += 1;
            }
        }
        debug_assert_eq!(counts, dual_counts);
        debug_assert_eq!(dual_span.dim(), 8 * (counts[0] + counts[1]));
        let complement_space = dual_span.perp();
        let complement = rep.restrict(&complement_space)?;
        debug_assert_eq!(complement.dim() + dual_span.dim(), rep.dim());
        Ok((extracted, complement))
    }

    /// Recursive Fitting splitting of a (projective-free) representation.
    fn split_into_pieces(&self, rep: Representation, out: &mut Vec<Representation>) -> Result<()> {
        if rep.dim() == 0 {
            return Ok(());
        }
        let endo = hom_space(&rep, &rep)?;
        let e = endo.len();
        if e == 1 {
            out.push(rep);
            return Ok(());
        }
        let ctx = rep.ctx();
        let pair_count = e * (e - 1) / 2;
        let budget = 4 * e;
        let mut rng = SplitMix64::new(self.seed ^ (rep.dim() as u64).wrapping_mul(0x9E37_79B9));
        for t in 0..budget {
            let cand: Matrix = if t < e {
                endo[t].clone()
            } else if t < e + pair_count {
                let mut t2 = t - e;
                let mut i = 0usize;
                while t2 >= e - 1 - i {
                    t2 -= e - 1 - i;
                    i += 1;
                }
                endo[i].add(&endo[i + 1 + t2])
            } else {
                let mut acc = Matrix::zeros(ctx, rep.dim(), rep.dim());
                for f in &endo {
                    let lam = FieldElement(rng.below(ctx.order() as u64) as u16);
                    acc.acc_scaled(f, lam);
                }
                acc
            };
            if let Some((u, w)) = self.try_split(&rep, &cand)? {
                let left = rep.restrict(&u)?;
                let right = rep.restrict(&w)?;
                self.split_into_pieces(left, out)?;
                self.split_into_pieces(right, out)?;
                return Ok(());
            }
        }
        out.push(rep);
        Ok(())
    }

    fn try_split(&self, rep: &Representation, e: &Matrix) -> Result<Option<(Subspace, Subspace)>> {
        match fitting_split(rep, e)? {
            Fitting::Split(u, w) => Ok(Some((u, w))),
            Fitting::Whole => {
                if rep.dim() == 0 {
                    return Ok(None);
                }
                if let Some(p) = idempotent_in_generated_algebra(e) {
                    let ker = Subspace::from_rows(&p.kernel());
                    let im = Subspace::from_rows(&p.transpose());
                    debug_assert!(ker.dim() > 0 && im.dim() > 0);
                    Ok(Some((ker, im)))
                } else {
                    Ok(None)
                }
            }
        }
    }

    /// Full decomposition into indecomposable summands with certificates.
    pub fn decompose(&self, rep: &Representation) -> Result<Splitting> {
        let (projectives, complement) = self.peel_projectives(rep)?;
        let mut pieces: Vec<Representation> = Vec::new();
        self.split_into_pieces(complement, &mut pieces)?;
        let mut summands: Vec<SplitSummand> = Vec::new();
        for i in 0..2u8 {
            let mine: Vec<&(u8, Representation)> =
                projectives.iter().filter(|(t, _)| *t == i).collect();
            if let Some((_, first)) = mine.first() {
                summands.push(SplitSummand {
                    rep: first.clone(),
                    multiplicity: mine.len(),
                    end_dim: 0,
                    end_local_dim: 0,
                });
            }
        }
        let mut groups: Vec<(Representation, usize)> = Vec::new();
        'outer: for p in pieces {
            for (rep0, mult) in groups.iter_mut() {
                if is_isomorphic(&self.alg, rep0, &p, self.seed)? {
                    *mult += 1;
                    continue 'outer;
                }
            }
            groups.push((p, 1));
        }
        for (rep0, mult) in groups {
            summands.push(SplitSummand {
                rep: rep0,
                multiplicity: mult,
                end_dim: 0,
                end_local_dim: 0,
            });
        }
        for s in summands.iter_mut() {
            let endo = hom_space(&s.rep, &s.rep)?;
            match certify_end(&endo) {
                EndCertificate::Local { end_dim } => {
                    s.end_dim = end_dim;
                    s.end_local_dim = 1;
                }
                EndCertificate::FieldExtension { degree, .. } => {
                    return Err(Error::FieldTooSmall(degree));
                }
                EndCertificate::NotLocal { .. } => {
                    return Err(Error::SplitBudget {
                        dim: s.rep.dim(),
                        stuck: serde_json::to_string(&s.rep.to_json()).unwrap_or_default(),
                    });
                }
            }
        }
        let split = Splitting { summands };
        debug_assert_eq!(split.total_dim(), rep.dim());
        #[cfg(debug_assertions)]
        if rep.dim() <= 48 {
            debug_assert!(split.verify_against(&self.alg, rep, self.seed)?);
        }
        Ok(split)
    }

    /// Decompose, then identify every summand: the oracle side of the
    /// closed-form fusion rules.
    pub fn decompose_and_identify(&self, rep: &Representation) -> Result<GreenElement> {
        let split = self.decompose(rep)?;
        let mut out = GreenElement::zero();
        for s in &split.summands {
            let label = identify(&self.alg, &s.rep, self.seed)?;
            out.add_term(label, s.multiplicity as i64);
        }
        Ok(out)
    }
}

impl Default for Decomposer {
    fn default() -> Self {
        Decomposer::new(DEFAULT_SEED)
    }
}

/// Exact isomorphism test. Cheap invariants first; then the Hom space is
/// searched for an invertible element: basis elements (sufficient whenever
/// both sides are indecomposable, because the isomorphisms then form the
/// complement of a proper subspace and a basis cannot avoid it), pairwise
/// sums, exhaustive enumeration when the space has at most 2^16 elements,
/// and finally 64 seeded random combinations with a deterministic two-term
/// affine slice as fallback.
pub fn is_isomorphic(
    alg: &AlgebraContext,
    m: &Representation,
    n: &Representation,
    seed: u64,
) -> Result<bool> {
    if m.ctx() != n.ctx() {
        return Err(Error::ContextMismatch);
    }
    if m.dim() != n.dim() {
        return Ok(false);
    }
    if m.dim() == 0 {
        return Ok(true);
    }
    let am = Analysis::new(alg, m);
    let an = Analysis::new(alg, n);
    if am.comp_mults() != an.comp_mults()
        || am.radical_length() != an.radical_length()
        || am.socle_mults() != an.socle_mults()
        || am.top_mults() != an.top_mults()
    {
        return Ok(false);
    }
    let hom = hom_space(m, n)?;
    if hom.is_empty() {
        return Ok(false);
    }
    let d = m.dim();
    let invertible = |f: &Matrix| f.rank() == d;
    for f in &hom {
        if invertible(f) {
            return Ok(true);
        }
    }
    for i in 0..hom.len() {
        for j in (i + 1)..hom.len() {
            if invertible(&hom[i].add(&hom[j])) {
                return Ok(true);
            }
        }
    }
    let ctx = m.ctx();
    let q = ctx.order() as u64;
    let h = hom.len() as u32;
    if h as u64 * (64 - q.leading_zeros() as u64 - 1) <= 16 {
        // exhaustive over all coefficient vectors (at most 2^16 of them)
        let total = q.pow(h);
        for code in 1..total {
            let mut rest = code;
            let mut acc = Matrix::zeros(ctx, d, d);
            for f in &hom {
                let lam = FieldElement((rest % q) as u16);
                rest /= q;
                acc.acc_scaled(f, lam);
            }
            if invertible(&acc) {
                return Ok(true);
            }
        }
        return Ok(false);
    }
    let mut rng = SplitMix64::new(seed ^ 0xA5A5_5A5A_0000_0001);
    for _ in 0..64 {
        let mut acc = Matrix::zeros(ctx, d, d);
        for f in &hom {
            let lam = FieldElement(rng.below(q) as u16);
            acc.acc_scaled(f, lam);
        }
        if invertible(&acc) {
            return Ok(true);
        }
    }
    for i in 0..hom.len() {
        for j in 0..hom.len() {
            if i == j {
                continue;
            }
            for lam in ctx.elements() {
                if lam.is_zero() {
                    continue;
                }
                let mut acc = hom[i].clone();
                acc.acc_scaled(&hom[j], lam);
                if invertible(&acc) {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, make_band, make_projective, make_simple, BandFamily, Label};
    use crate::field::ProjPoint;

    fn gf4() -> FieldContext {
        FieldContext::gf4()
    }

    #[test]
    fn char_poly_knowns() {
        let ctx = gf4();
        // identity: (T + 1)^3 = T^3 + T^2 + T + 1 in characteristic 2
        let id = Matrix::identity(ctx, 3);
        let cp = char_poly(&id);
        assert_eq!(cp, vec![ONE, ONE, ONE, ONE]);
        // nilpotent Jordan block: T^3
        let mut nl = Matrix::zeros(ctx, 3, 3);
        nl.set(1, 0, ONE);
        nl.set(2, 1, ONE);
        assert_eq!(char_poly(&nl), vec![ZERO, ZERO, ZERO, ONE]);
        // companion matrix of T^2 + T + g
        let g = ctx.gen();
        let mut comp = Matrix::zeros(ctx, 2, 2);
        comp.set(0, 1, g);
        comp.set(1, 0, ONE);
        comp.set(1, 1, ONE);
        assert_eq!(char_poly(&comp), vec![g, ONE, ONE]);
    }

    #[test]
    fn char_poly_cayley_hamilton() {
        let ctx = gf4();
        let mut rng = SplitMix64::new(42);
        for _ in 0..40 {
            let n = 1 + (rng.below(6) as usize);
            let m = Matrix::from_fn(ctx, n, n, |_, _| FieldElement(rng.below(4) as u16));
            let cp = char_poly(&m);
            assert_eq!(cp.len(), n + 1);
            let mut acc = Matrix::zeros(ctx, n, n);
            for &c in cp.iter().rev() {
                acc = acc.mul(&m);
                if !c.is_zero() {
                    for i in 0..n {
                        acc.add_entry(i, i, c);
                    }
                }
            }
            assert!(acc.is_zero(), "Cayley-Hamilton failed");
        }
    }

    #[test]
    fn fitting_on_identity_and_zero_is_whole() {
        let ctx = gf4();
        let p1 = make_projective(ctx, 1).unwrap();
        let id = Matrix::identity(ctx, 8);
        assert!(matches!(fitting_split(&p1, &id).unwrap(), Fitting::Whole));
        let z = Matrix::zeros(ctx, 8, 8);
        assert!(matches!(fitting_split(&p1, &z).unwrap(), Fitting::Whole));
    }

    #[test]
    fn fitting_splits_a_block_sum() {
        let ctx = gf4();
        let v0 = make_simple(ctx, 0).unwrap();
        let p1 = make_projective(ctx, 1).unwrap();
        let m = v0.direct_sum(&p1).unwrap();
        let mut e = Matrix::zeros(ctx, 9, 9);
        e.set(0, 0, ONE);
        match fitting_split(&m, &e).unwrap() {
            Fitting::Split(u, w) => {
                let mut dims = [u.dim(), w.dim()];
                dims.sort();
                assert_eq!(dims, [1, 8]);
            }
            Fitting::Whole => panic!("expected a split"),
        }
        let mut bad = Matrix::zeros(ctx, 9, 9);
        bad.set(0, 1, ONE);
        assert!(fitting_split(&m, &bad).is_err());
    }

    #[test]
    fn min_poly_knowns() {
        let ctx = gf4();
        let mut n = Matrix::zeros(ctx, 3, 3);
        n.set(1, 0, ONE);
        n.set(2, 1, ONE);
        assert_eq!(min_poly(&n), vec![ZERO, ZERO, ZERO, ONE]);
        let mut p = Matrix::zeros(ctx, 2, 2);
        p.set(0, 0, ONE);
        assert_eq!(min_poly(&p), vec![ZERO, ONE, ONE]);
    }

    #[test]
    fn certify_end_on_known_rings() {
        let ctx = gf4();
        // End(P0) is 2-dimensional local: identity plus a socle-valued map
        let p0 = make_projective(ctx, 0).unwrap();
        let endo = hom_space(&p0, &p0).unwrap();
        assert_eq!(endo.len(), 2);
        assert_eq!(certify_end(&endo), EndCertificate::Local { end_dim: 2 });
        // End(V0 + V1) = k x k
        let v0 = make_simple(ctx, 0).unwrap();
        let v1 = make_simple(ctx, 1).unwrap();
        let s = v0.direct_sum(&v1).unwrap();
        let endo = hom_space(&s, &s).unwrap();
        assert_eq!(certify_end(&endo), EndCertificate::NotLocal { end_dim: 2 });
        // End(2 V0) = M_2(k), noncommutative
        let s = v0.direct_sum(&v0).unwrap();
        let endo = hom_space(&s, &s).unwrap();
        assert_eq!(certify_end(&endo), EndCertificate::NotLocal { end_dim: 4 });
        // the field GF(16) inside M_2(GF(4)): local with a degree-2 quotient
        let g = ctx.gen();
        let mut x = Matrix::zeros(ctx, 2, 2);
        x.set(0, 1, g);
        x.set(1, 0, ONE);
        x.set(1, 1, ONE);
        let basis = vec![Matrix::identity(ctx, 2), x];
        match certify_end(&basis) {
            EndCertificate::FieldExtension { degree, .. } => assert_eq!(degree, 2),
            other => panic!("expected a field extension, got {other:?}"),
        }
        // truncated polynomials on an even-dimensional space: local, and the
        // trace form alone cannot see it
        let mut nil = Matrix::zeros(ctx, 4, 4);
        nil.set(1, 0, ONE);
        nil.set(3, 2, ONE);
        let basis = vec![Matrix::identity(ctx, 4), nil];
        assert_eq!(certify_end(&basis), EndCertificate::Local { end_dim: 2 });
    }

    #[test]
    fn decompose_simple_examples() {
        let ctx = gf4();
        let dec = Decomposer::default();
        // the tensor square of the 3-dimensional simple
        let v1 = make_simple(ctx, 1).unwrap();
        let t = v1.tensor(&v1).unwrap();
        let g = dec.decompose_and_identify(&t).unwrap();
        assert_eq!(g.get(Label::Simple(0)), 1);
        assert_eq!(g.get(Label::Projective(1)), 1);
        // the regular module: P0 + 3 P1
        let reg = dec.alg.regular_representation(ctx);
        let g = dec.decompose_and_identify(&reg).unwrap();
        assert_eq!(g.get(Label::Projective(0)), 1);
        assert_eq!(g.get(Label::Projective(1)), 3);
        // a projective cover is already indecomposable
        let p0 = make_projective(ctx, 0).unwrap();
        let split = dec.decompose(&p0).unwrap();
        assert_eq!(split.summands.len(), 1);
        assert_eq!(split.summands[0].multiplicity, 1);
        assert_eq!(split.summands[0].end_local_dim, 1);
    }

    #[test]
    fn decompose_is_seed_stable() {
        let ctx = gf4();
        let v1 = make_simple(ctx, 1).unwrap();
        let om = catalog::make_syzygy(ctx, 1, 0).unwrap();
        let t = om.tensor(&v1).unwrap();
        let g1 = Decomposer::new(1).decompose_and_identify(&t).unwrap();
        let g2 = Decomposer::new(0xFEED).decompose_and_identify(&t).unwrap();
        assert_eq!(g1, g2);
    }

    #[test]
    fn iso_examples() {
        let ctx = gf4();
        let dec = Decomposer::default();
        let p0 = make_projective(ctx, 0).unwrap();
        let p1 = make_projective(ctx, 1).unwrap();
        assert!(!is_isomorphic(&dec.alg, &p0, &p1, 0).unwrap());
        assert!(is_isomorphic(&dec.alg, &p0, &p0.dual(), 0).unwrap());
        let lam = ctx.element(2).unwrap();
        for r in 1..=3 {
            let a = catalog::make_type_a(ctx, ProjPoint::affine(lam), r).unwrap();
            let b = catalog::make_type_b(ctx, ProjPoint::affine(lam), r).unwrap();
            assert!(is_isomorphic(&dec.alg, &a.dual(), &b, 0).unwrap());
            let band_b = make_band(ctx, BandFamily::B, lam, r).unwrap();
            assert!(is_isomorphic(&dec.alg, &b, &band_b, 0).unwrap());
        }
    }

    #[test]
    fn identify_round_trip_small() {
        let ctx = gf4();
        let dec = Decomposer::default();
        for label in catalog::sweep_labels(ctx, 2, 2) {
            let rep = catalog::construct(ctx, label).unwrap();
            let back = identify(&dec.alg, &rep, dec.seed()).unwrap();
            assert_eq!(back, label);
        }
    }
}
