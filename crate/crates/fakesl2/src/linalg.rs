//! Dense exact linear algebra over GF(2^m).
//!
//! Matrices are stored bit-sliced: each row holds m bit planes of 64 packed
//! entries per machine word, so row operations are word-wide XORs for every
//! field degree, and GF(2) degenerates to the classic one-plane packed form.

use crate::error::{Error, Result};
use crate::field::{FieldContext, FieldElement, ONE, ZERO};

#[derive(Clone)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    ctx: FieldContext,
    wpr: usize,
    data: Vec<u64>,
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.ctx == other.ctx
            && self.data == other.data
    }
}
impl Eq for Matrix {}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "Matrix {}x{} over GF(2^{})",
            self.rows,
            self.cols,
            self.ctx.degree()
        )?;
        for i in 0..self.rows.min(24) {
            let row: Vec<String> = (0..self.cols.min(24))
                .map(|j| self.get(i, j).to_string())
                .collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(ctx: FieldContext, rows: usize, cols: usize) -> Matrix {
        let wpr = cols.div_ceil(64);
        let m = ctx.degree() as usize;
        Matrix {
            rows,
            cols,
            ctx,
            wpr,
            data: vec![0u64; rows * m * wpr],
        }
    }

    pub fn identity(ctx: FieldContext, n: usize) -> Matrix {
        let mut out = Matrix::zeros(ctx, n, n);
        for i in 0..n {
            out.set(i, i, ONE);
        }
        out
    }

    pub fn from_fn(
        ctx: FieldContext,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> FieldElement,
    ) -> Matrix {
        let mut out = Matrix::zeros(ctx, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                let v = f(i, j);
                if !v.is_zero() {
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Builds a matrix from integer entries (field element bit values).
    pub fn from_int_rows(ctx: FieldContext, entries: &[Vec<u32>]) -> Result<Matrix> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, |r| r.len());
        let mut out = Matrix::zeros(ctx, rows, cols);
        for (i, row) in entries.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(row.len(), cols));
            }
            for (j, &bits) in row.iter().enumerate() {
                out.set(i, j, ctx.element(bits)?);
            }
        }
        Ok(out)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ctx(&self) -> FieldContext {
        self.ctx
    }

    fn stride(&self) -> usize {
        self.ctx.degree() as usize * self.wpr
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        debug_assert!(i < self.rows && j < self.cols);
        let m = self.ctx.degree() as usize;
        let base = i * self.stride() + j / 64;
        let bit = j % 64;
        let mut v = 0u16;
        for p in 0..m {
            v |= (((self.data[base + p * self.wpr] >> bit) & 1) as u16) << p;
        }
        FieldElement(v)
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        debug_assert!(i < self.rows && j < self.cols);
        let m = self.ctx.degree() as usize;
        let base = i * self.stride() + j / 64;
        let bit = j % 64;
        let wpr = self.wpr;
        for p in 0..m {
            let w = &mut self.data[base + p * wpr];
            *w = (*w & !(1u64 << bit)) | ((((v.0 >> p) & 1) as u64) << bit);
        }
    }

    pub fn add_entry(&mut self, i: usize, j: usize, v: FieldElement) {
        let cur = self.get(i, j);
        self.set(i, j, self.ctx.add(cur, v));
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn row_to_vec(&self, i: usize) -> Vec<FieldElement> {
        (0..self.cols).map(|j| self.get(i, j)).collect()
    }

    pub fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        let s = self.stride();
        let (i, j) = (i.min(j), i.max(j));
        let (a, b) = self.data.split_at_mut(j * s);
        a[i * s..i * s + s].swap_with_slice(&mut b[..s]);
    }

    /// row_dst += lambda * row_src, dst != src.
    pub fn axpy_rows(&mut self, dst: usize, src: usize, lambda: FieldElement) {
        if lambda.is_zero() || dst == src {
            return;
        }
        let s = self.stride();
        let (lo, hi) = (dst.min(src), dst.max(src));
        let (a, b) = self.data.split_at_mut(hi * s);
        let (first, second) = (&mut a[lo * s..lo * s + s], &mut b[..s]);
        let (d, srow): (&mut [u64], &[u64]) = if dst < src {
            (first, second)
        } else {
            (second, first)
        };
        Self::axpy_planes(&self.ctx, self.wpr, d, srow, lambda);
    }

    /// self.row(dst) += lambda * other.row(src).
    pub fn axpy_from(&mut self, dst: usize, other: &Matrix, src: usize, lambda: FieldElement) {
        debug_assert_eq!(self.cols, other.cols);
        if lambda.is_zero() {
            return;
        }
        let s = self.stride();
        let d = &mut self.data[dst * s..dst * s + s];
        let srow = &other.data[src * s..src * s + s];
        Self::axpy_planes(&self.ctx, self.wpr, d, srow, lambda);
    }

    fn axpy_planes(
        ctx: &FieldContext,
        wpr: usize,
        dst: &mut [u64],
        src: &[u64],
        lambda: FieldElement,
    ) {
        let m = ctx.degree() as usize;
        if lambda == ONE {
            for (d, s) in dst.iter_mut().zip(src.iter()) {
                *d ^= *s;
            }
            return;
        }
        let colmap = ctx.scalar_columns(lambda);
        for i in 0..m {
            for w in 0..wpr {
                let mut acc = 0u64;
                for (j, &cm) in colmap.iter().enumerate().take(m) {
                    if (cm >> i) & 1 != 0 {
                        acc ^= src[j * wpr + w];
                    }
                }
                dst[i * wpr + w] ^= acc;
            }
        }
    }

    pub fn scale_row(&mut self, r: usize, lambda: FieldElement) {
        if lambda == ONE {
            return;
        }
        let s = self.stride();
        let m = self.ctx.degree() as usize;
        let old: Vec<u64> = self.data[r * s..r * s + s].to_vec();
        let colmap = self.ctx.scalar_columns(lambda);
        let wpr = self.wpr;
        let row = &mut self.data[r * s..r * s + s];
        for i in 0..m {
            for w in 0..wpr {
                let mut acc = 0u64;
                for (j, &cm) in colmap.iter().enumerate().take(m) {
                    if (cm >> i) & 1 != 0 {
                        acc ^= old[j * wpr + w];
                    }
                }
                row[i * wpr + w] = acc;
            }
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        debug_assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (d, s) in out.data.iter_mut().zip(other.data.iter()) {
            *d ^= *s;
        }
        out
    }

    /// self += lambda * other, entrywise over the whole matrix.
    pub fn acc_scaled(&mut self, other: &Matrix, lambda: FieldElement) {
        debug_assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if lambda.is_zero() {
            return;
        }
        for r in 0..self.rows {
            self.axpy_from(r, other, r, lambda);
        }
    }

    /// lambda * self.
    pub fn scaled(&self, lambda: FieldElement) -> Matrix {
        let mut out = Matrix::zeros(self.ctx, self.rows, self.cols);
        out.acc_scaled(self, lambda);
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.ctx, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let lambda = self.get(i, k);
                if !lambda.is_zero() {
                    out.axpy_from(i, other, k, lambda);
                }
            }
        }
        out
    }

    pub fn mat_vec(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![ZERO; self.rows];
        for (i, o) in out.iter_mut().enumerate() {
            let mut acc = ZERO;
            for (j, &x) in v.iter().enumerate() {
                if !x.is_zero() {
                    acc = self.ctx.add(acc, self.ctx.mul(self.get(i, j), x));
                }
            }
            *o = acc;
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.ctx, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if !v.is_zero() {
                    out.set(j, i, v);
                }
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.ctx, self.rows);
        while e != 0 {
            if e & 1 != 0 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e != 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn trace(&self) -> FieldElement {
        debug_assert_eq!(self.rows, self.cols);
        let mut acc = ZERO;
        for i in 0..self.rows {
            acc = self.ctx.add(acc, self.get(i, i));
        }
        acc
    }

    /// Vertical concatenation.
    pub fn stack(parts: &[&Matrix]) -> Matrix {
        assert!(!parts.is_empty());
        let cols = parts[0].cols;
        let ctx = parts[0].ctx;
        let rows = parts.iter().map(|p| p.rows).sum();
        let mut out = Matrix::zeros(ctx, rows, cols);
        let s = out.stride();
        let mut at = 0usize;
        for p in parts {
            assert_eq!(p.cols, cols);
            assert_eq!(p.ctx, ctx);
            out.data[at * s..(at + p.rows) * s].copy_from_slice(&p.data);
            at += p.rows;
        }
        out
    }

    /// Kronecker product, left factor major: entry ((i,p),(j,q)) = A[i,j]*B[p,q].
    pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
        assert_eq!(a.ctx, b.ctx, "kron over mismatched field contexts");
        let ctx = a.ctx;
        let mut out = Matrix::zeros(ctx, a.rows * b.rows, a.cols * b.cols);
        for i in 0..a.rows {
            for j in 0..a.cols {
                let aij = a.get(i, j);
                if aij.is_zero() {
                    continue;
                }
                for p in 0..b.rows {
                    for q in 0..b.cols {
                        let v = ctx.mul(aij, b.get(p, q));
                        if !v.is_zero() {
                            out.set(i * b.rows + p, j * b.cols + q, v);
                        }
                    }
                }
            }
        }
        out
    }

    /// In-place Gauss-Jordan to the unique reduced row echelon form.
    /// Returns the rank and the pivot columns.
    pub fn rref_in_place(&mut self) -> (usize, Vec<usize>) {
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for col in 0..self.cols {
            if r == self.rows {
                break;
            }
            let mut pr = None;
            for i in r..self.rows {
                if !self.get(i, col).is_zero() {
                    pr = Some(i);
                    break;
                }
            }
            let Some(pr) = pr else { continue };
            self.swap_rows(r, pr);
            let piv = self.get(r, col);
            if piv != ONE {
                self.scale_row(r, self.ctx.inv(piv).expect("pivot is nonzero"));
            }
            for i in 0..self.rows {
                if i != r {
                    let v = self.get(i, col);
                    if !v.is_zero() {
                        self.axpy_rows(i, r, v);
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
        (r, pivots)
    }

    pub fn rref(&self) -> (Matrix, usize, Vec<usize>) {
        let mut m = self.clone();
        let (rank, pivots) = m.rref_in_place();
        (m, rank, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Basis of the right kernel {v : self * v = 0}, one vector per row.
    pub fn kernel(&self) -> Matrix {
        let (r, rank, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(self.ctx, free.len(), self.cols);
        for (k, &f) in free.iter().enumerate() {
            out.set(k, f, ONE);
            for (j, &p) in pivots.iter().enumerate().take(rank) {
                // char 2: -x = x
                let v = r.get(j, f);
                if !v.is_zero() {
                    out.set(k, p, v);
                }
            }
        }
        out
    }

    /// One solution of self * x = b, or None when inconsistent.
    /// In debug builds the solution is verified by substitution.
    pub fn solve(&self, b: &[FieldElement]) -> Option<Vec<FieldElement>> {
        assert_eq!(self.rows, b.len());
        let mut aug = Matrix::zeros(self.ctx, self.rows, self.cols + 1);
        for (i, &bi) in b.iter().enumerate() {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if !v.is_zero() {
                    aug.set(i, j, v);
                }
            }
            if !bi.is_zero() {
                aug.set(i, self.cols, bi);
            }
        }
        let (r, _, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![ZERO; self.cols];
        for (j, &p) in pivots.iter().enumerate() {
            x[p] = r.get(j, self.cols);
        }
        debug_assert_eq!(self.mat_vec(&x), b.to_vec());
        Some(x)
    }
}

/// The right nullspace {v : m v = 0} as a subspace.
pub fn nullspace(m: &Matrix) -> Subspace {
    Subspace::from_rows(&m.kernel())
}

/// A subspace of k^n held as a reduced-echelon row basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace dim {} of k^{}", self.dim(), self.ambient())
    }
}

impl Subspace {
    pub fn zero(ctx: FieldContext, ambient: usize) -> Subspace {
        Subspace {
            basis: Matrix::zeros(ctx, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ctx: FieldContext, ambient: usize) -> Subspace {
        Subspace {
            basis: Matrix::identity(ctx, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Row space of an arbitrary matrix.
    pub fn from_rows(mat: &Matrix) -> Subspace {
        let (r, rank, pivots) = mat.rref();
        let mut basis = Matrix::zeros(mat.ctx(), rank, mat.cols());
        let s_words = basis.stride();
        basis.data.copy_from_slice(&r.data[..rank * s_words]);
        Subspace { basis, pivots }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }

    pub fn ctx(&self) -> FieldContext {
        self.basis.ctx()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Remainder of v after subtracting its projection onto the basis rows.
    pub fn reduce_vec(&self, mut v: Vec<FieldElement>) -> Vec<FieldElement> {
        let ctx = self.ctx();
        for (j, &p) in self.pivots.iter().enumerate() {
            let c = v[p];
            if !c.is_zero() {
                for (t, vt) in v.iter_mut().enumerate() {
                    let b = self.basis.get(j, t);
                    if !b.is_zero() {
                        *vt = ctx.add(*vt, ctx.mul(c, b));
                    }
                }
            }
        }
        v
    }

    pub fn contains_vec(&self, v: &[FieldElement]) -> bool {
        self.reduce_vec(v.to_vec()).iter().all(|x| x.is_zero())
    }

    /// Coordinates of v with respect to the echelon basis, if v lies inside.
    pub fn coords_of(&self, v: &[FieldElement]) -> Option<Vec<FieldElement>> {
        let coords: Vec<FieldElement> = self.pivots.iter().map(|&p| v[p]).collect();
        if self.contains_vec(v) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        (0..other.dim()).all(|i| self.contains_vec(&other.basis.row_to_vec(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient(), other.ambient());
        Subspace::from_rows(&Matrix::stack(&[&self.basis, &other.basis]))
    }

    /// Zassenhaus intersection.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient(), other.ambient());
        let n = self.ambient();
        let ctx = self.ctx();
        let du = self.dim();
        let dw = other.dim();
        let mut big = Matrix::zeros(ctx, du + dw, 2 * n);
        for i in 0..du {
            for j in 0..n {
                let v = self.basis.get(i, j);
                if !v.is_zero() {
                    big.set(i, j, v);
                    big.set(i, n + j, v);
                }
            }
        }
        #[allow(clippy::needless_range_loop)]
        for i in 0..dw {
            for j in 0..n {
                let v = other.basis.get(i, j);
                if !v.is_zero() {
                    big.set(du + i, j, v);
                }
            }
        }
        let (r, rank, _) = big.rref();
        // rows whose left half vanished: right halves span the intersection
        let mut rows = Vec::new();
        for i in 0..rank {
            if (0..n).all(|j| r.get(i, j).is_zero()) {
                rows.push((0..n).map(|j| r.get(i, n + j)).collect::<Vec<_>>());
            }
        }
        let mut mat = Matrix::zeros(ctx, rows.len(), n);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if !v.is_zero() {
                    mat.set(i, j, v);
                }
            }
        }
        Subspace::from_rows(&mat)
    }

    /// Annihilator under the standard dot pairing: {w : <w, v> = 0 for v here}.
    pub fn perp(&self) -> Subspace {
        Subspace::from_rows(&self.basis.kernel())
    }

    /// Image of the subspace under the column-convention operator X
    /// (rows v map to v * X^T).
    pub fn apply(&self, op_transposed: &Matrix) -> Subspace {
        Subspace::from_rows(&self.basis.mul(op_transposed))
    }
}
