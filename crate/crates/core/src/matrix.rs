//! Dense matrices over a prime field `F_p`.
//!
//! Every other part of the crate stores its linear data here: module actions,
//! structure constants, Hom bases and the quotient-space bookkeeping used for
//! homotopy categories. Entries are residues in `[0, p)`; all arithmetic is exact.

use std::fmt;

use crate::error::{Error, Result};

/// Returns true when `n` is prime.
pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n as u64 {
        if n as u64 % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Scalar arithmetic in `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    p: u32,
}

impl Fp {
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p) || p > (1 << 30) {
            return Err(Error::NotPrime(p));
        }
        Ok(Fp { p })
    }

    pub(crate) fn unchecked(p: u32) -> Self {
        Fp { p }
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(self, mut a: u32, mut e: u64) -> u32 {
        let mut r = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero in F_{}", self.p);
        self.pow(a, self.p as u64 - 2)
    }
}

/// Result of Gauss-Jordan elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowReduction {
    pub rank: usize,
    pub rref: Matrix,
    pub pivots: Vec<usize>,
}

/// Output of [`Matrix::solve`]: one optional particular solution per target
/// column, plus a basis of the kernel (as columns).
#[derive(Clone, Debug)]
pub struct Solutions {
    pub particular: Vec<Option<Vec<u32>>>,
    pub kernel: Matrix,
}

impl Solutions {
    /// All particular solutions as the columns of one matrix, if every target
    /// was solvable.
    pub fn all(&self, p: u32, n: usize) -> Option<Matrix> {
        let cols: Option<Vec<&Vec<u32>>> = self.particular.iter().map(|x| x.as_ref()).collect();
        cols.map(|c| Matrix::from_columns(p, n, &c.into_iter().cloned().collect::<Vec<_>>()))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}{}x{}{}", self.p, self.rows, self.cols, self)
    }
}

/// Matrix literal: rows separated by `;`, e.g. `[1 0; 0 1]`. The empty matrix is `[]`.
impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        Matrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % p;
        }
        m
    }

    /// Builds a matrix from raw row-major residues; rejects out-of-range entries.
    pub fn from_vec(p: u32, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(x) = data.iter().find(|&&x| x >= p) {
            return Err(Error::DimensionMismatch(format!("entry {x} not reduced mod {p}")));
        }
        Ok(Matrix { p, rows, cols, data })
    }

    /// Builds a matrix from signed integer rows, reducing every entry mod `p`.
    pub fn from_rows(p: u32, rows: &[Vec<i64>]) -> Self {
        let f = Fp::unchecked(p);
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix rows");
            data.extend(row.iter().map(|&x| f.reduce(x)));
        }
        Matrix { p, rows: r, cols: c, data }
    }

    pub fn from_fn(p: u32, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u32) -> Self {
        let mut m = Self::zeros(p, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.data[r * cols + c] = f(r, c) % p;
            }
        }
        m
    }

    /// Matrix whose columns are the given vectors (each of length `n`).
    pub fn from_columns(p: u32, n: usize, cols: &[Vec<u32>]) -> Self {
        let mut m = Self::zeros(p, n, cols.len());
        for (c, v) in cols.iter().enumerate() {
            assert_eq!(v.len(), n);
            for r in 0..n {
                m.data[r * cols.len() + c] = v[r];
            }
        }
        m
    }

    pub fn column_vector(p: u32, v: &[u32]) -> Self {
        Matrix {
            p,
            rows: v.len(),
            cols: 1,
            data: v.to_vec(),
        }
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn field(&self) -> Fp {
        Fp::unchecked(self.p)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn data(&self) -> &[u32] {
        &self.data
    }

    pub fn into_data(self) -> Vec<u32> {
        self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        debug_assert!(v < self.p);
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u32>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.p, self.rows)
    }

    fn check_same_shape(&self, other: &Matrix) {
        assert_eq!(self.p, other.p, "field mismatch");
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.check_same_shape(other);
        let f = self.field();
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Matrix { data, ..*self }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.check_same_shape(other);
        let f = self.field();
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Matrix { data, ..*self }
    }

    pub fn add_assign(&mut self, other: &Matrix) {
        self.check_same_shape(other);
        let f = self.field();
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = f.add(*a, b);
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: u32, other: &Matrix) {
        self.check_same_shape(other);
        if c == 0 {
            return;
        }
        let f = self.field();
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = f.add(*a, f.mul(c, b));
        }
    }

    pub fn scale(&self, c: u32) -> Matrix {
        let f = self.field();
        let data = self.data.iter().map(|&a| f.mul(a, c)).collect();
        Matrix { data, ..*self }
    }

    pub fn neg(&self) -> Matrix {
        let f = self.field();
        let data = self.data.iter().map(|&a| f.neg(a)).collect();
        Matrix { data, ..*self }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.p, other.p, "field mismatch");
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let (n, k, m) = (self.rows, self.cols, other.cols);
        let p = self.p as u64;
        let mut acc = vec![0u64; n * m];
        // Accumulate unreduced products; reduce before the accumulator can overflow.
        let limit = u64::MAX / ((p - 1).max(1) * (p - 1).max(1)) - 1;
        let mut pending = 0u64;
        for t in 0..k {
            for i in 0..n {
                let a = self.data[i * k + t] as u64;
                if a == 0 {
                    continue;
                }
                let row = &other.data[t * m..(t + 1) * m];
                let out = &mut acc[i * m..(i + 1) * m];
                for (o, &b) in out.iter_mut().zip(row) {
                    *o += a * b as u64;
                }
            }
            pending += 1;
            if pending >= limit {
                for x in acc.iter_mut() {
                    *x %= p;
                }
                pending = 0;
            }
        }
        let data = acc.into_iter().map(|x| (x % p) as u32).collect();
        Matrix {
            p: self.p,
            rows: n,
            cols: m,
            data,
        }
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len());
        let p = self.p as u64;
        (0..self.rows)
            .map(|r| {
                let s: u64 = self.row(r).iter().zip(v).map(|(&a, &b)| a as u64 * b as u64 % p).sum();
                (s % p) as u32
            })
            .collect()
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut r = Self::identity(self.p, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        r
    }

    pub fn transpose(&self) -> Matrix {
        Self::from_fn(self.p, self.cols, self.rows, |r, c| self.get(c, r))
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        Self::from_fn(self.p, rows, cols, |r, c| self.get(r0 + r, c0 + c))
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Matrix) {
        for r in 0..b.rows {
            for c in 0..b.cols {
                self.set(r0 + r, c0 + c, b.get(r, c));
            }
        }
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        Self::from_fn(self.p, self.rows, idx.len(), |r, c| self.get(r, idx[c]))
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        Self::from_fn(self.p, idx.len(), self.cols, |r, c| self.get(idx[r], c))
    }

    /// Concatenates matrices side by side; all must share the row count `rows`.
    pub fn hstack(p: u32, rows: usize, parts: &[&Matrix]) -> Matrix {
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Self::zeros(p, rows, cols);
        let mut c0 = 0;
        for m in parts {
            assert_eq!(m.rows, rows);
            out.set_block(0, c0, m);
            c0 += m.cols;
        }
        out
    }

    pub fn vstack(p: u32, cols: usize, parts: &[&Matrix]) -> Matrix {
        let rows = parts.iter().map(|m| m.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for m in parts {
            assert_eq!(m.cols, cols);
            data.extend_from_slice(&m.data);
        }
        Matrix { p, rows, cols, data }
    }

    pub fn block_diagonal(p: u32, parts: &[&Matrix]) -> Matrix {
        let rows = parts.iter().map(|m| m.rows).sum();
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Self::zeros(p, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for m in parts {
            out.set_block(r0, c0, m);
            r0 += m.rows;
            c0 += m.cols;
        }
        out
    }

    /// Gauss-Jordan elimination to the unique reduced row-echelon form.
    pub fn row_reduce(&self) -> RowReduction {
        let mut m = self.clone();
        let pivots = m.rref_in_place(None);
        RowReduction {
            rank: pivots.len(),
            rref: m,
            pivots,
        }
    }

    /// In-place elimination. When `track` is given, the same row operations are
    /// applied to it (it must have as many rows as `self`).
    fn rref_in_place(&mut self, mut track: Option<&mut Matrix>) -> Vec<usize> {
        let f = self.field();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                self.swap_rows(pr, r);
                if let Some(t) = track.as_deref_mut() {
                    t.swap_rows(pr, r);
                }
            }
            let inv = f.inv(self.data[r * cols + c]);
            if inv != 1 {
                self.scale_row(r, inv);
                if let Some(t) = track.as_deref_mut() {
                    t.scale_row(r, inv);
                }
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = self.data[i * cols + c];
                if factor != 0 {
                    let coef = f.neg(factor);
                    self.axpy_row(i, r, coef);
                    if let Some(t) = track.as_deref_mut() {
                        t.axpy_row(i, r, coef);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let cols = self.cols;
        for c in 0..cols {
            self.data.swap(a * cols + c, b * cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, s: u32) {
        let f = self.field();
        for x in &mut self.data[r * self.cols..(r + 1) * self.cols] {
            *x = f.mul(*x, s);
        }
    }

    /// `row[dst] += coef * row[src]`.
    fn axpy_row(&mut self, dst: usize, src: usize, coef: u32) {
        let cols = self.cols;
        let p = self.p;
        let (d, s) = if dst < src {
            let (lo, hi) = self.data.split_at_mut(src * cols);
            (&mut lo[dst * cols..(dst + 1) * cols], &hi[..cols])
        } else {
            let (lo, hi) = self.data.split_at_mut(dst * cols);
            (&mut hi[..cols], &lo[src * cols..(src + 1) * cols])
        };
        if p == 2 {
            for (a, &b) in d.iter_mut().zip(s) {
                *a ^= b;
            }
        } else {
            let c = coef as u64;
            let pp = p as u64;
            for (a, &b) in d.iter_mut().zip(s) {
                if b != 0 {
                    *a = ((*a as u64 + c * b as u64) % pp) as u32;
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.row_reduce().rank
    }

    /// Basis of `{x : self * x = 0}` as the columns of the result.
    pub fn kernel(&self) -> Matrix {
        let rr = self.row_reduce();
        kernel_from_rref(&rr, self.cols)
    }

    /// Basis of the column space, chosen as the pivot columns of `self`.
    pub fn column_space(&self) -> Matrix {
        let rr = self.row_reduce();
        self.select_columns(&rr.pivots)
    }

    /// Solves `self * x = t` for every column `t` of `targets`.
    pub fn solve(&self, targets: &Matrix) -> Result<Solutions> {
        if targets.rows != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "system has {} equations but targets have {} rows",
                self.rows, targets.rows
            )));
        }
        let aug = Matrix::hstack(self.p, self.rows, &[self, targets]);
        let rr = aug.row_reduce();
        let n = self.cols;
        let f = self.field();
        let mut particular = Vec::with_capacity(targets.cols);
        // pivots inside the coefficient block
        let coef_pivots: Vec<(usize, usize)> = rr
            .pivots
            .iter()
            .enumerate()
            .filter(|(_, &c)| c < n)
            .map(|(r, &c)| (r, c))
            .collect();
        for t in 0..targets.cols {
            let tc = n + t;
            // inconsistent iff some row has zero coefficient part but nonzero rhs
            let inconsistent = (coef_pivots.len()..rr.rref.rows).any(|r| rr.rref.get(r, tc) != 0);
            if inconsistent {
                particular.push(None);
                continue;
            }
            let mut x = vec![0u32; n];
            for &(r, c) in &coef_pivots {
                x[c] = rr.rref.get(r, tc);
            }
            let _ = f;
            particular.push(Some(x));
        }
        let coef_rr = RowReduction {
            rank: coef_pivots.len(),
            rref: rr.rref.block(0, 0, self.rows, n),
            pivots: coef_pivots.iter().map(|&(_, c)| c).collect(),
        };
        Ok(Solutions {
            particular,
            kernel: kernel_from_rref(&coef_rr, n),
        })
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let mut m = self.clone();
        let mut t = Matrix::identity(self.p, self.rows);
        let piv = m.rref_in_place(Some(&mut t));
        (piv.len() == self.rows).then_some(t)
    }

    /// Row-reduces `self`, returning the transformation `T` with `T * self = rref`.
    pub fn row_reduce_with_transform(&self) -> (RowReduction, Matrix) {
        let mut m = self.clone();
        let mut t = Matrix::identity(self.p, self.rows);
        let pivots = m.rref_in_place(Some(&mut t));
        (
            RowReduction {
                rank: pivots.len(),
                rref: m,
                pivots,
            },
            t,
        )
    }
}

fn kernel_from_rref(rr: &RowReduction, cols: usize) -> Matrix {
    let p = rr.rref.p;
    let f = Fp::unchecked(p);
    let mut is_pivot = vec![false; cols];
    for &c in &rr.pivots {
        is_pivot[c] = true;
    }
    let free: Vec<usize> = (0..cols).filter(|&c| !is_pivot[c]).collect();
    let mut k = Matrix::zeros(p, cols, free.len());
    for (j, &fc) in free.iter().enumerate() {
        k.set(fc, j, 1 % p);
        for (r, &pc) in rr.pivots.iter().enumerate() {
            let v = rr.rref.get(r, fc);
            if v != 0 {
                k.set(pc, j, f.neg(v));
            }
        }
    }
    k
}

/// Parses a matrix literal such as `[1 0; 0 1]`, reducing entries mod `p`.
pub fn parse_matrix(p: u32, s: &str) -> Result<Matrix> {
    let t = s.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|x| x.strip_suffix(']'))
        .ok_or_else(|| Error::Parse {
            line: 0,
            msg: format!("matrix literal must be bracketed: {t}"),
        })?;
    if inner.trim().is_empty() {
        return Ok(Matrix::zeros(p, 0, 0));
    }
    let f = Fp::unchecked(p);
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for row in inner.split(';') {
        let vals = row
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|x| !x.is_empty())
            .map(|x| {
                x.parse::<i64>().map(|v| f.reduce(v)).map_err(|e| Error::Parse {
                    line: 0,
                    msg: format!("bad matrix entry {x:?}: {e}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(vals);
    }
    let c = rows[0].len();
    if rows.iter().any(|r| r.len() != c) {
        return Err(Error::Parse {
            line: 0,
            msg: "ragged matrix literal".into(),
        });
    }
    let r = rows.len();
    Matrix::from_vec(p, r, c, rows.concat())
}

/// A subspace of `F_p^n` given by a basis, with fast coordinate extraction.
#[derive(Clone, Debug)]
pub struct Subspace {
    basis: Matrix,
    rref: Matrix,
    pivots: Vec<usize>,
    transform: Matrix,
}

impl Subspace {
    /// Spans the columns of `gens`; the stored basis is a maximal independent
    /// subset of them (first-come order).
    pub fn span(gens: &Matrix) -> Self {
        let basis = gens.column_space();
        Self::from_basis(basis)
    }

    /// `basis` must have independent columns.
    pub fn from_basis(basis: Matrix) -> Self {
        let (rr, t) = basis.transpose().row_reduce_with_transform();
        debug_assert_eq!(rr.rank, basis.cols(), "basis columns are dependent");
        Subspace {
            basis,
            rref: rr.rref,
            pivots: rr.pivots,
            transform: t,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    /// Coordinates of `v` in the stored basis, or `None` if `v` is outside.
    pub fn coords(&self, v: &[u32]) -> Option<Vec<u32>> {
        let f = self.basis.field();
        let n = self.ambient_dim();
        debug_assert_eq!(v.len(), n);
        let mut rest = v.to_vec();
        let mut y = Vec::with_capacity(self.pivots.len());
        for (k, &pc) in self.pivots.iter().enumerate() {
            let a = rest[pc];
            y.push(a);
            if a != 0 {
                let row = self.rref.row(k);
                for c in 0..n {
                    rest[c] = f.sub(rest[c], f.mul(a, row[c]));
                }
            }
        }
        if rest.iter().any(|&x| x != 0) {
            return None;
        }
        // rref = T * basis^T, so v^T = y^T T basis^T and the coordinates are T^T y.
        let d = self.dim();
        let mut c = vec![0u32; d];
        for (k, &yk) in y.iter().enumerate() {
            if yk == 0 {
                continue;
            }
            for (j, cj) in c.iter_mut().enumerate() {
                *cj = f.add(*cj, f.mul(yk, self.transform.get(k, j)));
            }
        }
        Some(c)
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.coords(v).is_some()
    }

    /// Coordinates of every column of `m`; `None` if any column lies outside.
    pub fn coords_matrix(&self, m: &Matrix) -> Option<Matrix> {
        let cols: Option<Vec<Vec<u32>>> = (0..m.cols()).map(|c| self.coords(&m.column(c))).collect();
        cols.map(|c| Matrix::from_columns(m.p(), self.dim(), &c))
    }
}

/// Pivot-based complement used to represent quotient spaces `F_p^n / W`.
#[derive(Clone, Debug)]
pub struct Quotient {
    /// rref rows spanning `W`
    rref: Matrix,
    pivots: Vec<usize>,
    /// ambient coordinates that survive in the quotient
    free: Vec<usize>,
    n: usize,
}

impl Quotient {
    /// Quotient of `F_p^n` by the column span of `w` (an `n x k` matrix).
    pub fn new(w: &Matrix) -> Self {
        let n = w.rows();
        let rr = w.transpose().row_reduce();
        let mut is_piv = vec![false; n];
        for &c in &rr.pivots {
            is_piv[c] = true;
        }
        let rref = rr.rref.block(0, 0, rr.rank, n);
        Quotient {
            rref,
            pivots: rr.pivots,
            free: (0..n).filter(|&c| !is_piv[c]).collect(),
            n,
        }
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn sub_dim(&self) -> usize {
        self.pivots.len()
    }

    /// Image of `v` in the quotient (coordinates on the complement).
    pub fn project(&self, v: &[u32]) -> Vec<u32> {
        let f = Fp::unchecked(self.rref.p());
        let mut rest = v.to_vec();
        for (k, &pc) in self.pivots.iter().enumerate() {
            let a = rest[pc];
            if a != 0 {
                let row = self.rref.row(k);
                for c in 0..self.n {
                    rest[c] = f.sub(rest[c], f.mul(a, row[c]));
                }
            }
        }
        self.free.iter().map(|&c| rest[c]).collect()
    }

    /// Projection matrix `dim x n`.
    pub fn projection(&self, p: u32) -> Matrix {
        let cols: Vec<Vec<u32>> = (0..self.n)
            .map(|j| {
                let mut e = vec![0u32; self.n];
                e[j] = 1;
                self.project(&e)
            })
            .collect();
        Matrix::from_columns(p, self.dim(), &cols)
    }

    /// Section `n x dim`: the complement basis vectors.
    pub fn section(&self, p: u32) -> Matrix {
        let mut s = Matrix::zeros(p, self.n, self.dim());
        for (j, &c) in self.free.iter().enumerate() {
            s.set(c, j, 1);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_over_f2() {
        let rr = Matrix::identity(2, 2).row_reduce();
        assert_eq!(rr.rank, 2);
        assert_eq!(rr.pivots, vec![0, 1]);
    }

    #[test]
    fn zero_matrix_has_rank_zero() {
        let rr = Matrix::zeros(2, 3, 3).row_reduce();
        assert_eq!(rr.rank, 0);
        assert!(rr.rref.is_zero());
    }

    #[test]
    fn all_ones_over_f2_has_rank_one() {
        // [[1,1],[1,1]] -> [[1,1],[0,0]]
        let rr = Matrix::from_rows(2, &[vec![1, 1], vec![1, 1]]).row_reduce();
        assert_eq!(rr.rank, 1);
        assert_eq!(rr.rref, Matrix::from_rows(2, &[vec![1, 1], vec![0, 0]]));
    }

    #[test]
    fn solve_identity() {
        let b = Matrix::from_rows(3, &[vec![2], vec![1]]);
        let s = Matrix::identity(3, 2).solve(&b).unwrap();
        assert_eq!(s.particular[0].as_deref(), Some(&[2, 1][..]));
        assert_eq!(s.kernel.cols(), 0);
    }

    #[test]
    fn solve_zero_map() {
        let s = Matrix::zeros(2, 2, 2).solve(&Matrix::zeros(2, 2, 1)).unwrap();
        assert_eq!(s.kernel.cols(), 2);
        assert!(s.particular[0].is_some());
    }

    #[test]
    fn solve_single_row_against_enumeration() {
        let m = Matrix::from_rows(2, &[vec![1, 1]]);
        let t = Matrix::from_rows(2, &[vec![1]]);
        let s = m.solve(&t).unwrap();
        // oracle: enumerate all of F_2^2
        let sols: Vec<[u32; 2]> = (0..4)
            .map(|k| [k & 1, (k >> 1) & 1])
            .filter(|x| (x[0] + x[1]) % 2 == 1)
            .collect();
        let kern: Vec<[u32; 2]> = (0..4)
            .map(|k| [k & 1, (k >> 1) & 1])
            .filter(|x| (x[0] + x[1]) % 2 == 0)
            .collect();
        assert_eq!(sols.len(), 2);
        assert_eq!(kern.len(), 2); // kernel dimension 1
        let x = s.particular[0].clone().unwrap();
        assert!(sols.iter().any(|v| v[..] == x[..]));
        assert_eq!(s.kernel.cols(), 1);
    }

    #[test]
    fn unsolvable_target_is_reported() {
        let m = Matrix::from_rows(5, &[vec![1, 0], vec![2, 0]]);
        let t = Matrix::from_rows(5, &[vec![1, 1], vec![2, 0]]);
        let s = m.solve(&t).unwrap();
        assert!(s.particular[0].is_some());
        assert!(s.particular[1].is_none());
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let m = Matrix::zeros(2, 2, 2);
        assert!(m.solve(&Matrix::zeros(2, 3, 1)).is_err());
    }

    #[test]
    fn literal_round_trip() {
        let m = parse_matrix(3, "[1 0 2; 4 -1 0]").unwrap();
        assert_eq!(m, Matrix::from_rows(3, &[vec![1, 0, 2], vec![1, 2, 0]]));
        assert_eq!(parse_matrix(3, &m.to_string()).unwrap(), m);
        assert_eq!(parse_matrix(2, "[]").unwrap().rows(), 0);
    }

    #[test]
    fn subspace_coordinates() {
        let b = Matrix::from_rows(3, &[vec![1, 0], vec![1, 1], vec![0, 2]]);
        let s = Subspace::from_basis(b.clone());
        let v = b.mul_vec(&[2, 1]);
        assert_eq!(s.coords(&v), Some(vec![2, 1]));
        assert_eq!(s.coords(&[1, 0, 0]), None);
    }

    #[test]
    fn quotient_projection_kills_subspace() {
        let w = Matrix::from_rows(2, &[vec![1], vec![1], vec![0]]);
        let q = Quotient::new(&w);
        assert_eq!(q.dim(), 2);
        assert_eq!(q.project(&[1, 1, 0]), vec![0, 0]);
        let pr = q.projection(2);
        let sec = q.section(2);
        assert!(pr.mul(&sec).is_identity());
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_rows(7, &[vec![1, 2], vec![3, 4]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(Matrix::from_rows(2, &[vec![1, 1], vec![1, 1]]).inverse().is_none());
    }

    use proptest::prelude::*;

    fn arb_matrix() -> impl Strategy<Value = Matrix> {
        (prop_oneof![Just(2u32), Just(3), Just(5)], 0usize..7, 0usize..7).prop_flat_map(|(p, r, c)| {
            proptest::collection::vec(0..p, r * c).prop_map(move |d| Matrix::from_vec(p, r, c, d).unwrap())
        })
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(m in arb_matrix()) {
            let once = m.row_reduce().rref;
            prop_assert_eq!(once.row_reduce().rref, once);
        }

        #[test]
        fn rank_nullity(m in arb_matrix()) {
            prop_assert_eq!(m.rank() + m.kernel().cols(), m.cols());
            prop_assert!(m.mul(&m.kernel()).is_zero());
        }

        #[test]
        fn solutions_satisfy_the_system(m in arb_matrix(), seed in 0u64..1000) {
            let p = m.p();
            let x = Matrix::from_fn(p, m.cols(), 2, |r, c| ((r as u64 * 7 + c as u64 * 13 + seed) % p as u64) as u32);
            let t = m.mul(&x);
            let s = m.solve(&t).unwrap();
            for (c, sol) in s.particular.iter().enumerate() {
                let sol = sol.as_ref().expect("consistent by construction");
                prop_assert_eq!(m.mul_vec(sol), t.column(c));
            }
        }
    }
}
