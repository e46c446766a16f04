//! Dense exact matrices tagged with their base ring.
//!
//! A map `A^c -> A^r` is an `r x c` matrix acting on column vectors, and
//! composition is the matrix product. Matrices with zero rows or zero columns
//! are ordinary values; they stand for maps to or from the zero module.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::RingSpec;
use crate::scalar::{int, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    ring: RingSpec<T>,
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    /// Builds a matrix from row-major entries, reducing them into the ring.
    pub fn new(ring: RingSpec<T>, rows: usize, cols: usize, entries: Vec<T>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        let entries = entries.into_iter().map(|x| ring.reduce(x)).collect();
        Ok(Matrix {
            ring,
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from a list of rows. An empty list gives the `0 x 0` matrix;
    /// use [`Matrix::new`] or [`Matrix::zeros`] for `0 x c`.
    pub fn from_rows(ring: RingSpec<T>, rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|row| row.len() != c) {
            return Err(Error::Dimension(format!(
                "row {bad} has {} entries, expected {c}",
                rows[bad].len()
            )));
        }
        Matrix::new(ring, r, c, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor from small literals.
    pub fn from_i64(ring: RingSpec<T>, rows: usize, cols: usize, entries: &[i64]) -> Result<Self> {
        Matrix::new(ring, rows, cols, entries.iter().map(|&v| int(v)).collect())
    }

    pub fn zeros(ring: RingSpec<T>, rows: usize, cols: usize) -> Self {
        Matrix {
            ring,
            rows,
            cols,
            entries: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(ring: RingSpec<T>, n: usize) -> Self {
        Self::scalar(ring, n, T::one())
    }

    /// `c` times the `n x n` identity.
    pub fn scalar(ring: RingSpec<T>, n: usize, c: T) -> Self {
        let mut m = Self::zeros(ring, n, n);
        let c = m.ring.reduce(c);
        for i in 0..n {
            m.entries[i * n + i] = c.clone();
        }
        m
    }

    /// Diagonal `rows x cols` matrix with the given leading diagonal entries.
    pub fn diagonal(ring: RingSpec<T>, rows: usize, cols: usize, diag: &[T]) -> Self {
        let mut m = Self::zeros(ring, rows, cols);
        for (i, d) in diag.iter().enumerate().take(rows.min(cols)) {
            m.set(i, i, d.clone());
        }
        m
    }

    pub fn ring(&self) -> &RingSpec<T> {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        let v = self.ring.reduce(v);
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|x| x.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        Matrix {
            ring: self.ring.clone(),
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    /// The same entries viewed over ℤ.
    pub fn lift(&self) -> Self {
        Matrix {
            ring: RingSpec::Integers,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.clone(),
        }
    }

    /// Reinterprets the entries in another ring.
    pub fn reduce_into(&self, ring: &RingSpec<T>) -> Self {
        Matrix {
            ring: ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| ring.reduce(x.clone())).collect(),
        }
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        self.ring.ensure_same(&rhs.ring)?;
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Vec::with_capacity(self.rows * rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    if a.is_zero() {
                        continue;
                    }
                    acc = acc + a.clone() * rhs.get(k, j).clone();
                }
                out.push(self.ring.reduce(acc));
            }
        }
        Ok(Matrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: rhs.cols,
            entries: out,
        })
    }

    /// Matrix product. Panics on shape or ring mismatch; use
    /// [`Matrix::checked_mul`] for untrusted input.
    pub fn mul(&self, rhs: &Self) -> Self {
        self.checked_mul(rhs).expect("matrix product")
    }

    fn zip_with(&self, rhs: &Self, op: impl Fn(T, T) -> T) -> Result<Self> {
        self.ring.ensure_same(&rhs.ring)?;
        if self.shape() != rhs.shape() {
            return Err(Error::Dimension(format!(
                "shapes {}x{} and {}x{} differ",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| self.ring.reduce(op(a.clone(), b.clone())))
            .collect();
        Ok(Matrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, |a, b| a - b)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.checked_add(rhs).expect("matrix sum")
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.checked_sub(rhs).expect("matrix difference")
    }

    pub fn neg(&self) -> Self {
        self.scale(&-T::one())
    }

    pub fn scale(&self, c: &T) -> Self {
        Matrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|x| self.ring.reduce(x.clone() * c.clone()))
                .collect(),
        }
    }

    /// Side-by-side concatenation `[A | B | ...]`. All parts need the same row count.
    pub fn hstack(parts: &[&Self]) -> Result<Self> {
        let first = parts
            .first()
            .ok_or_else(|| Error::Dimension("hstack of no matrices".into()))?;
        let rows = first.rows;
        let mut cols = 0;
        for p in parts {
            first.ring.ensure_same(&p.ring)?;
            if p.rows != rows {
                return Err(Error::Dimension(format!(
                    "hstack: {} rows vs {rows}",
                    p.rows
                )));
            }
            cols += p.cols;
        }
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for p in parts {
                entries.extend_from_slice(p.row(i));
            }
        }
        Ok(Matrix {
            ring: first.ring.clone(),
            rows,
            cols,
            entries,
        })
    }

    /// Stacked concatenation. All parts need the same column count.
    pub fn vstack(parts: &[&Self]) -> Result<Self> {
        let first = parts
            .first()
            .ok_or_else(|| Error::Dimension("vstack of no matrices".into()))?;
        let cols = first.cols;
        let mut rows = 0;
        let mut entries = Vec::new();
        for p in parts {
            first.ring.ensure_same(&p.ring)?;
            if p.cols != cols {
                return Err(Error::Dimension(format!(
                    "vstack: {} columns vs {cols}",
                    p.cols
                )));
            }
            rows += p.rows;
            entries.extend_from_slice(&p.entries);
        }
        Ok(Matrix {
            ring: first.ring.clone(),
            rows,
            cols,
            entries,
        })
    }

    /// The block matrix `[[a, b], [c, d]]`.
    pub fn block(a: &Self, b: &Self, c: &Self, d: &Self) -> Result<Self> {
        let top = Self::hstack(&[a, b])?;
        let bottom = Self::hstack(&[c, d])?;
        Self::vstack(&[&top, &bottom])
    }

    /// Block diagonal `diag(a, b)`.
    pub fn direct_sum(a: &Self, b: &Self) -> Result<Self> {
        a.ring.ensure_same(&b.ring)?;
        Self::block(
            a,
            &Self::zeros(a.ring.clone(), a.rows, b.cols),
            &Self::zeros(a.ring.clone(), b.rows, a.cols),
            b,
        )
    }

    /// Kronecker product `a ⊗ b`.
    pub fn kron(a: &Self, b: &Self) -> Self {
        a.ring.ensure_same(&b.ring).expect("kron ring");
        let rows = a.rows * b.rows;
        let cols = a.cols * b.cols;
        let mut m = Self::zeros(a.ring.clone(), rows, cols);
        for i in 0..a.rows {
            for j in 0..a.cols {
                let x = a.get(i, j);
                if x.is_zero() {
                    continue;
                }
                for k in 0..b.rows {
                    for l in 0..b.cols {
                        m.set(i * b.rows + k, j * b.cols + l, x.clone() * b.get(k, l).clone());
                    }
                }
            }
        }
        m
    }

    /// Rows `range` as a new matrix.
    pub fn row_slice(&self, range: std::ops::Range<usize>) -> Self {
        Matrix {
            ring: self.ring.clone(),
            rows: range.len(),
            cols: self.cols,
            entries: self.entries[range.start * self.cols..range.end * self.cols].to_vec(),
        }
    }

    /// Columns `range` as a new matrix.
    pub fn col_slice(&self, range: std::ops::Range<usize>) -> Self {
        let cols = range.len();
        let mut entries = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            entries.extend_from_slice(&self.row(i)[range.clone()]);
        }
        Matrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols,
            entries,
        }
    }

    /// Column-major vectorisation as an `(rows*cols) x 1` matrix.
    pub fn vectorize(&self) -> Self {
        self.transpose().reshape(self.rows * self.cols, 1)
    }

    /// Inverse of [`Matrix::vectorize`].
    pub fn unvectorize(v: &Self, rows: usize, cols: usize) -> Self {
        v.reshape(cols, rows).transpose()
    }

    fn reshape(&self, rows: usize, cols: usize) -> Self {
        assert_eq!(rows * cols, self.entries.len());
        Matrix {
            ring: self.ring.clone(),
            rows,
            cols,
            entries: self.entries.clone(),
        }
    }

    // in-place elementary operations over ℤ, used by the elimination code

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += c * row[src]
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, c: &T) {
        if c.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let s = self.entries[src * self.cols + j].clone();
            if s.is_zero() {
                continue;
            }
            let d = &mut self.entries[dst * self.cols + j];
            *d = self.ring.reduce(d.clone() + c.clone() * s);
        }
    }

    /// col[dst] += c * col[src]
    pub(crate) fn add_col_multiple(&mut self, dst: usize, src: usize, c: &T) {
        if c.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let s = self.entries[i * self.cols + src].clone();
            if s.is_zero() {
                continue;
            }
            let d = &mut self.entries[i * self.cols + dst];
            *d = self.ring.reduce(d.clone() + c.clone() * s);
        }
    }

    pub(crate) fn scale_row(&mut self, i: usize, c: &T) {
        for j in 0..self.cols {
            let d = &mut self.entries[i * self.cols + j];
            *d = self.ring.reduce(d.clone() * c.clone());
        }
    }
}

impl<T: Scalar> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows == 0 {
            return write!(f, "[] (0x{})", self.cols);
        }
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(rows: usize, cols: usize, e: &[i64]) -> Matrix<i64> {
        Matrix::from_i64(RingSpec::Integers, rows, cols, e).unwrap()
    }

    #[test]
    fn modular_entries_are_canonical() {
        let r = RingSpec::modulo(4).unwrap();
        let m = Matrix::<i64>::from_i64(r, 1, 3, &[-1, 5, 4]).unwrap();
        assert_eq!(m.entries(), &[3, 1, 0]);
    }

    #[test]
    fn empty_shapes_multiply() {
        let a = z(2, 0, &[]);
        let b = z(0, 3, &[]);
        let p = a.mul(&b);
        assert_eq!(p.shape(), (2, 3));
        assert!(p.is_zero());
        assert_eq!(b.mul(&z(3, 1, &[1, 2, 3])).shape(), (0, 1));
    }

    #[test]
    fn mismatched_product_is_an_error() {
        assert!(matches!(
            z(2, 2, &[1, 0, 0, 1]).checked_mul(&z(3, 1, &[1, 2, 3])),
            Err(Error::Dimension(_))
        ));
        let m4 = Matrix::<i64>::identity(RingSpec::modulo(4).unwrap(), 1);
        assert!(matches!(
            z(1, 1, &[1]).checked_mul(&m4),
            Err(Error::RingMismatch { .. })
        ));
    }

    #[test]
    fn kron_and_vectorize_agree() {
        // vec(L X R) = (R^T ⊗ L) vec(X)
        let l = z(2, 2, &[1, 2, 3, 4]);
        let x = z(2, 3, &[1, -1, 0, 2, 5, 7]);
        let r = z(3, 1, &[2, 0, -3]);
        let lhs = l.mul(&x).mul(&r).vectorize();
        let rhs = Matrix::kron(&r.transpose(), &l).mul(&x.vectorize());
        assert_eq!(lhs, rhs);
        assert_eq!(Matrix::unvectorize(&x.vectorize(), 2, 3), x);
    }

    #[test]
    fn blocks() {
        let a = z(1, 1, &[1]);
        let e = z(1, 0, &[]);
        let s = Matrix::direct_sum(&a, &z(0, 2, &[])).unwrap();
        assert_eq!(s.shape(), (1, 3));
        assert_eq!(s.entries(), &[1, 0, 0]);
        let h = Matrix::hstack(&[&a, &e, &a]).unwrap();
        assert_eq!(h.entries(), &[1, 1]);
    }
}
