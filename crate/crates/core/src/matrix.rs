//! Dense linear algebra over a finite field.
//!
//! Matrices act on column vectors: `A.mul_vec(v)` is the image of `v`, and
//! `A.mul(B)` composes as functions (`(A*B)v = A(Bv)`). Subspaces are stored
//! as canonical reduced row echelon bases (pivots normalized to 1, pivot
//! columns increasing top to bottom, zero rows dropped), so two subspaces are
//! equal if and only if their stored bases are identical.

use crate::field::{FiniteField, Scalar};
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    field: FiniteField,
    pub rows: usize,
    pub cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl Mat {
    pub fn zeros(field: FiniteField, rows: usize, cols: usize) -> Self {
        Mat {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: FiniteField, n: usize) -> Self {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: FiniteField, rows: Vec<Vec<Scalar>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in &rows {
            assert_eq!(r.len(), ncols, "ragged rows");
            data.extend_from_slice(r);
        }
        Mat {
            field,
            rows: nrows,
            cols: ncols,
            data,
        }
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> Scalar {
        debug_assert!(r < self.rows && c < self.cols);
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        debug_assert!(r < self.rows && c < self.cols);
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.field.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.at(r, c));
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        debug_assert!(self.field == rhs.field);
        let f = &self.field;
        let mut out = Mat::zeros(self.field.clone(), self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.at(k, c);
                    if b != 0 {
                        let cur = out.at(r, c);
                        out.set(r, c, f.add(cur, f.mul(a, b)));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        let f = &self.field;
        let mut out = vec![0; self.rows];
        for r in 0..self.rows {
            let mut acc = 0;
            let row = self.row(r);
            for (a, x) in row.iter().zip(v) {
                if *a != 0 && *x != 0 {
                    acc = f.add(acc, f.mul(*a, *x));
                }
            }
            out[r] = acc;
        }
        out
    }

    /// Add `s * block` into this matrix with its top-left corner at (r0, c0).
    pub fn add_scaled_block(&mut self, r0: usize, c0: usize, s: Scalar, block: &Mat) {
        if s == 0 {
            return;
        }
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        let f = self.field.clone();
        for r in 0..block.rows {
            for c in 0..block.cols {
                let v = block.at(r, c);
                if v != 0 {
                    let cur = self.at(r0 + r, c0 + c);
                    self.set(r0 + r, c0 + c, f.add(cur, f.mul(s, v)));
                }
            }
        }
    }

    /// In-place reduced row echelon form. Returns the pivot columns in
    /// increasing order; nonzero rows end up on top in pivot order.
    pub fn rref(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut row = 0usize;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| self.at(r, col) != 0) else {
                continue;
            };
            if pr != row {
                for c in 0..self.cols {
                    let tmp = self.at(row, c);
                    self.set(row, c, self.at(pr, c));
                    self.set(pr, c, tmp);
                }
            }
            let inv = f.inv(self.at(row, col));
            if inv != 1 {
                for c in col..self.cols {
                    self.set(row, c, f.mul(self.at(row, c), inv));
                }
            }
            for r in 0..self.rows {
                if r != row {
                    let factor = self.at(r, col);
                    if factor != 0 {
                        for c in col..self.cols {
                            let v = f.sub(self.at(r, c), f.mul(factor, self.at(row, c)));
                            self.set(r, c, v);
                        }
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Canonical basis of the right nullspace {v : A v = 0}.
    pub fn nullspace(&self) -> Subspace {
        let mut a = self.clone();
        let pivots = a.rref();
        let pivot_rank = pivots.len();
        let mut basis = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![0; self.cols];
            v[free] = 1;
            for (i, &pc) in pivots.iter().enumerate().take(pivot_rank) {
                v[pc] = self.field.neg(a.at(i, free));
            }
            basis.push(v);
        }
        Subspace::from_span(self.field.clone(), self.cols, &basis)
    }

    /// One solution x of A x = b, if any.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Mat::zeros(self.field.clone(), self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.at(r, c));
            }
            aug.set(r, self.cols, b[r]);
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent: pivot in the augmented column
        }
        let mut x = vec![0; self.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.at(i, self.cols);
        }
        Some(x)
    }

    /// Coefficients c_0..c_n of the characteristic polynomial det(tI - A),
    /// monic of degree n, computed by Hessenberg reduction.
    pub fn charpoly(&self) -> Vec<Scalar> {
        assert_eq!(self.rows, self.cols, "charpoly needs a square matrix");
        let n = self.rows;
        let f = self.field.clone();
        if n == 0 {
            return vec![1];
        }
        let mut h = self.clone();
        // Similarity reduction to upper Hessenberg form.
        for j in 0..n.saturating_sub(2) {
            let Some(pr) = ((j + 1)..n).find(|&r| h.at(r, j) != 0) else {
                continue;
            };
            if pr != j + 1 {
                for c in 0..n {
                    let tmp = h.at(j + 1, c);
                    h.set(j + 1, c, h.at(pr, c));
                    h.set(pr, c, tmp);
                }
                for r in 0..n {
                    let tmp = h.at(r, j + 1);
                    h.set(r, j + 1, h.at(r, pr));
                    h.set(r, pr, tmp);
                }
            }
            let pivot_inv = f.inv(h.at(j + 1, j));
            for i in (j + 2)..n {
                let factor = f.mul(h.at(i, j), pivot_inv);
                if factor == 0 {
                    continue;
                }
                // rows: R_i <- R_i - factor * R_{j+1}
                for c in 0..n {
                    let v = f.sub(h.at(i, c), f.mul(factor, h.at(j + 1, c)));
                    h.set(i, c, v);
                }
                // columns: C_{j+1} <- C_{j+1} + factor * C_i (inverse similarity)
                for r in 0..n {
                    let v = f.add(h.at(r, j + 1), f.mul(factor, h.at(r, i)));
                    h.set(r, j + 1, v);
                }
            }
        }
        // Charpoly of the Hessenberg matrix by the leading-minor recurrence.
        let mut polys: Vec<Vec<Scalar>> = Vec::with_capacity(n + 1);
        polys.push(vec![1]); // p_0 = 1
        for k in 1..=n {
            // p_k = (t - H[k-1][k-1]) p_{k-1} - sum_m H[k-1-m][k-1] * prod * p_{k-1-m}
            let prev = &polys[k - 1];
            let mut pk = vec![0; k + 1];
            let d = h.at(k - 1, k - 1);
            for (i, &c) in prev.iter().enumerate() {
                pk[i + 1] = f.add(pk[i + 1], c);
                pk[i] = f.sub(pk[i], f.mul(d, c));
            }
            let mut subdiag_prod: Scalar = 1;
            for m in 1..k {
                subdiag_prod = f.mul(subdiag_prod, h.at(k - m, k - m - 1));
                if subdiag_prod == 0 {
                    break;
                }
                let coef = f.mul(h.at(k - 1 - m, k - 1), subdiag_prod);
                if coef == 0 {
                    continue;
                }
                for (i, &c) in polys[k - 1 - m].iter().enumerate() {
                    pk[i] = f.sub(pk[i], f.mul(coef, c));
                }
            }
            polys.push(pk);
        }
        polys.pop().unwrap()
    }
}

/// A subspace of F^ambient with a canonical reduced-row-echelon basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    field: FiniteField,
    pub ambient: usize,
    basis: Mat,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} of F^{}, pivots {:?})",
            self.dim(),
            self.ambient,
            self.pivots
        )
    }
}

impl Subspace {
    pub fn zero(field: FiniteField, ambient: usize) -> Self {
        Subspace {
            basis: Mat::zeros(field.clone(), 0, ambient),
            pivots: Vec::new(),
            field,
            ambient,
        }
    }

    pub fn full(field: FiniteField, ambient: usize) -> Self {
        Subspace {
            basis: Mat::identity(field.clone(), ambient),
            pivots: (0..ambient).collect(),
            field,
            ambient,
        }
    }

    pub fn from_span(field: FiniteField, ambient: usize, vectors: &[Vec<Scalar>]) -> Self {
        if vectors.is_empty() {
            return Subspace::zero(field, ambient);
        }
        let mut m = Mat::from_rows(field.clone(), vectors.to_vec());
        assert_eq!(m.cols, ambient);
        let pivots = m.rref();
        let dim = pivots.len();
        let mut basis = Mat::zeros(field.clone(), dim, ambient);
        for r in 0..dim {
            for c in 0..ambient {
                basis.set(r, c, m.at(r, c));
            }
        }
        Subspace {
            field,
            ambient,
            basis,
            pivots,
        }
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = &[Scalar]> {
        (0..self.basis.rows).map(|r| self.basis.row(r))
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residual of v after reduction against the basis (zero iff contained).
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient);
        let f = &self.field;
        let mut w = v.to_vec();
        for (i, &pc) in self.pivots.iter().enumerate() {
            let coef = w[pc];
            if coef != 0 {
                let row = self.basis.row(i);
                for (wj, rj) in w.iter_mut().zip(row) {
                    if *rj != 0 {
                        *wj = f.sub(*wj, f.mul(coef, *rj));
                    }
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.basis_rows().all(|row| self.contains(row))
    }

    /// Coordinates of v in the stored basis, if v lies in the subspace.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        // With an RREF basis the coordinate on row i is just v[pivot_i].
        Some(self.pivots.iter().map(|&pc| v[pc]).collect())
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut rows: Vec<Vec<Scalar>> = self.basis_rows().map(|r| r.to_vec()).collect();
        rows.extend(other.basis_rows().map(|r| r.to_vec()));
        Subspace::from_span(self.field.clone(), self.ambient, &rows)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let da = self.dim();
        let db = other.dim();
        if da == 0 || db == 0 {
            return Subspace::zero(self.field.clone(), self.ambient);
        }
        // Coefficient vectors (x, y) with x*A + y*B = 0 are the left nullspace
        // of the stacked basis; each such x*A lies in the intersection, and
        // together they span it.
        let mut stacked = Mat::zeros(self.field.clone(), da + db, self.ambient);
        for (r, row) in self.basis_rows().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                stacked.set(r, c, v);
            }
        }
        for (r, row) in other.basis_rows().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                stacked.set(da + r, c, v);
            }
        }
        let left_null = stacked.transpose().nullspace();
        let f = &self.field;
        let mut span = Vec::new();
        for k in left_null.basis_rows() {
            let mut w = vec![0; self.ambient];
            for (i, arow) in self.basis_rows().enumerate() {
                let coef = k[i];
                if coef != 0 {
                    for (wj, aj) in w.iter_mut().zip(arow) {
                        *wj = f.add(*wj, f.mul(coef, *aj));
                    }
                }
            }
            span.push(w);
        }
        Subspace::from_span(self.field.clone(), self.ambient, &span)
    }
}
