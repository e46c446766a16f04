//! Matrix equations `Σ L_k · X_k · R_k = B` in matrix unknowns, flattened
//! with column-major vectorisation: `vec(L X R) = (Rᵀ ⊗ L) vec(X)`.

use std::ops::Range;

use crate::error::Result;
use crate::matrix::Matrix;
use crate::ring::RingSpec;
use crate::scalar::Scalar;
use crate::snf::{kernel_generators, solve_linear};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Unknown(usize);

struct Equation<T> {
    terms: Vec<(Matrix<T>, Unknown, Matrix<T>)>,
    rhs: Matrix<T>,
}

pub(crate) struct LinearSystem<T> {
    ring: RingSpec<T>,
    unknowns: Vec<(usize, usize)>,
    equations: Vec<Equation<T>>,
}

impl<T: Scalar> LinearSystem<T> {
    pub fn new(ring: RingSpec<T>) -> Self {
        LinearSystem {
            ring,
            unknowns: Vec::new(),
            equations: Vec::new(),
        }
    }

    pub fn unknown(&mut self, rows: usize, cols: usize) -> Unknown {
        self.unknowns.push((rows, cols));
        Unknown(self.unknowns.len() - 1)
    }

    pub fn identity(&self, n: usize) -> Matrix<T> {
        Matrix::identity(self.ring.clone(), n)
    }

    /// Adds `Σ left · X · right = rhs`.
    pub fn equation(&mut self, terms: Vec<(Matrix<T>, Unknown, Matrix<T>)>, rhs: Matrix<T>) {
        for (l, x, r) in &terms {
            let (ur, uc) = self.unknowns[x.0];
            debug_assert_eq!(l.cols(), ur);
            debug_assert_eq!(r.rows(), uc);
            debug_assert_eq!((l.rows(), r.cols()), rhs.shape());
        }
        self.equations.push(Equation { terms, rhs });
    }

    /// Homogeneous equation of the given shape.
    pub fn homogeneous(&mut self, terms: Vec<(Matrix<T>, Unknown, Matrix<T>)>, rows: usize, cols: usize) {
        let rhs = Matrix::zeros(self.ring.clone(), rows, cols);
        self.equation(terms, rhs);
    }

    fn offset(&self, x: Unknown) -> usize {
        self.unknowns[..x.0].iter().map(|(r, c)| r * c).sum()
    }

    pub fn shape_of(&self, x: Unknown) -> (usize, usize) {
        self.unknowns[x.0]
    }

    pub fn range(&self, x: Unknown) -> Range<usize> {
        let start = self.offset(x);
        let (r, c) = self.unknowns[x.0];
        start..start + r * c
    }

    fn width(&self) -> usize {
        self.unknowns.iter().map(|(r, c)| r * c).sum()
    }

    pub fn coefficients(&self) -> Matrix<T> {
        let width = self.width();
        let height: usize = self.equations.iter().map(|e| e.rhs.rows() * e.rhs.cols()).sum();
        let mut out = Matrix::zeros(self.ring.clone(), height, width);
        let mut row0 = 0;
        for eq in &self.equations {
            for (l, x, r) in &eq.terms {
                let block = Matrix::kron(&r.transpose(), l);
                let col0 = self.offset(*x);
                for i in 0..block.rows() {
                    for j in 0..block.cols() {
                        let v = block.get(i, j);
                        if !v.is_zero() {
                            let cur = out.get(row0 + i, col0 + j).clone();
                            out.set(row0 + i, col0 + j, cur + v.clone());
                        }
                    }
                }
            }
            row0 += eq.rhs.rows() * eq.rhs.cols();
        }
        out
    }

    fn rhs(&self) -> Matrix<T> {
        let parts: Vec<Matrix<T>> = self.equations.iter().map(|e| e.rhs.vectorize()).collect();
        if parts.is_empty() {
            return Matrix::zeros(self.ring.clone(), 0, 1);
        }
        let refs: Vec<&Matrix<T>> = parts.iter().collect();
        Matrix::vstack(&refs).expect("column vectors")
    }

    /// A solution, split back into one matrix per unknown.
    pub fn solve(&self) -> Result<Option<Vec<Matrix<T>>>> {
        let Some(x) = solve_linear(&self.coefficients(), &self.rhs())? else {
            return Ok(None);
        };
        let mut out = Vec::with_capacity(self.unknowns.len());
        for (i, &(r, c)) in self.unknowns.iter().enumerate() {
            let part = x.row_slice(self.range(Unknown(i)));
            out.push(Matrix::unvectorize(&part, r, c));
        }
        Ok(Some(out))
    }

    /// Integer generators of the homogeneous solution set (right-hand sides ignored).
    pub fn kernel(&self) -> Matrix<T> {
        kernel_generators(&self.coefficients())
    }
}
