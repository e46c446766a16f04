//! Subquotients of free ℤ-modules, the common carrier of every module
//! computation in the crate.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::module::FpModule;
use crate::ring::RingSpec;
use crate::scalar::Scalar;
use crate::snf::{integer_kernel, solve_linear};

/// `(span(numerator) + span(denominator)) / span(denominator)` inside `ℤ^dim`.
///
/// Both generator sets are integer column matrices. For modules over ℤ/n the
/// denominator is expected to contain `n·ℤ^dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subquotient<T> {
    ring: RingSpec<T>,
    numerator: Matrix<T>,
    denominator: Matrix<T>,
}

impl<T: Scalar> Subquotient<T> {
    pub fn new(ring: RingSpec<T>, numerator: Matrix<T>, denominator: Matrix<T>) -> Result<Self> {
        if numerator.rows() != denominator.rows() {
            return Err(Error::Dimension(format!(
                "numerator lives in Z^{} but denominator in Z^{}",
                numerator.rows(),
                denominator.rows()
            )));
        }
        Ok(Subquotient {
            ring,
            numerator: numerator.lift(),
            denominator: denominator.lift(),
        })
    }

    /// The whole of a finitely presented module, on its own generators.
    pub fn of_module(m: &FpModule<T>) -> Self {
        Subquotient {
            ring: m.ring().clone(),
            numerator: Matrix::identity(RingSpec::Integers, m.ambient_rank()),
            denominator: m.integer_relations(),
        }
    }

    pub fn ring(&self) -> &RingSpec<T> {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.numerator.rows()
    }

    pub fn numerator(&self) -> &Matrix<T> {
        &self.numerator
    }

    pub fn denominator(&self) -> &Matrix<T> {
        &self.denominator
    }

    /// Same numerator, enlarged denominator.
    pub fn modulo(&self, extra: &Matrix<T>) -> Result<Self> {
        let den = Matrix::hstack(&[&self.denominator, &extra.lift()])?;
        Self::new(self.ring.clone(), self.numerator.clone(), den)
    }

    /// Integer relations among the numerator generators.
    fn relations(&self) -> Matrix<T> {
        let k = self.numerator.cols();
        let stacked =
            Matrix::hstack(&[&self.numerator, &self.denominator]).expect("same ambient");
        integer_kernel(&stacked).row_slice(0..k)
    }

    /// The module presented on the numerator generators.
    pub fn to_module(&self) -> FpModule<T> {
        let rel = self.relations().reduce_into(&self.ring);
        FpModule::presented(rel)
    }

    /// True when the numerator lies inside the denominator.
    pub fn is_zero(&self) -> bool {
        spans_contain(&self.denominator, &self.numerator)
    }

    /// True when every numerator generator of `self` lies in `other`'s numerator
    /// plus denominator. Both must share an ambient space.
    pub fn contained_in(&self, other: &Self) -> bool {
        let big = Matrix::hstack(&[&other.numerator, &other.denominator]).expect("same ambient");
        spans_contain(&big, &self.numerator)
    }

    /// Image under the integer matrix `map`, read in the subquotient `target`.
    pub fn image_in(&self, map: &Matrix<T>, target: &Self) -> Result<Self> {
        let num = map.lift().checked_mul(&self.numerator)?;
        Self::new(self.ring.clone(), num, target.denominator.clone())
    }

    /// Elements of `self` sent by `map` into the denominator of `target`.
    pub fn kernel_of(&self, map: &Matrix<T>, target: &Self) -> Result<Self> {
        let k = self.numerator.cols();
        let images = map.lift().checked_mul(&self.numerator)?;
        if images.rows() != target.dim() {
            return Err(Error::Dimension(format!(
                "map lands in Z^{} but target lives in Z^{}",
                images.rows(),
                target.dim()
            )));
        }
        let stacked = Matrix::hstack(&[&images, &target.denominator])?;
        let coeffs = integer_kernel(&stacked).row_slice(0..k);
        Self::new(
            self.ring.clone(),
            self.numerator.mul(&coeffs),
            self.denominator.clone(),
        )
    }
}

/// Whether every column of `needles` is an integer combination of the columns of `span`.
pub(crate) fn spans_contain<T: Scalar>(span: &Matrix<T>, needles: &Matrix<T>) -> bool {
    if needles.cols() == 0 {
        return true;
    }
    let span = span.lift();
    let needles = needles.lift();
    if span.cols() == 0 {
        return needles.is_zero();
    }
    matches!(solve_linear(&span, &needles), Ok(Some(_)))
}
