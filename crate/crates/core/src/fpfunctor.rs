//! Finitely presented functors on finitely presented modules, given by a
//! commutative square of free modules, and the equivalence with chains.
//!
//! A square
//!
//! ```text
//!   X2 --f--> X1
//!   |a        |b
//!   v         v
//!   Y2 --g--> Y1        b·f = g·a
//! ```
//!
//! presents `F = coker(Hom(F2, -) -> Hom(F1, -))` where `F1 = coker(b*)`,
//! `F2 = coker(a*)` and the map is induced by `f`. Evaluated at a module `M`
//! this is `Ker M(b) / M(f)(Ker M(a))`.

use crate::adelman::{is_isomorphism, ChainMorphism, ChainObject};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::module::{subquotient, FpModule};
use crate::ring::RingSpec;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FpSquare<T> {
    f: Matrix<T>,
    a: Matrix<T>,
    b: Matrix<T>,
    g: Matrix<T>,
}

impl<T: Scalar> FpSquare<T> {
    /// `f: X2→X1`, `a: X2→Y2`, `b: X1→Y1`, `g: Y2→Y1` with `b·f = g·a`.
    pub fn new(f: Matrix<T>, a: Matrix<T>, b: Matrix<T>, g: Matrix<T>) -> Result<Self> {
        let ring = f.ring();
        for m in [&a, &b, &g] {
            ring.ensure_same(m.ring())?;
        }
        let (x1, x2) = f.shape();
        let y2 = a.rows();
        let y1 = b.rows();
        if a.cols() != x2 || b.cols() != x1 || g.shape() != (y1, y2) {
            return Err(Error::Dimension(format!(
                "square shapes do not fit: f {}x{}, a {}x{}, b {}x{}, g {}x{}",
                f.rows(),
                f.cols(),
                a.rows(),
                a.cols(),
                b.rows(),
                b.cols(),
                g.rows(),
                g.cols()
            )));
        }
        if b.mul(&f) != g.mul(&a) {
            return Err(Error::SquareNotCommuting);
        }
        Ok(FpSquare { f, a, b, g })
    }

    pub fn ring(&self) -> &RingSpec<T> {
        self.f.ring()
    }

    pub fn f(&self) -> &Matrix<T> {
        &self.f
    }

    pub fn a(&self) -> &Matrix<T> {
        &self.a
    }

    pub fn b(&self) -> &Matrix<T> {
        &self.b
    }

    pub fn g(&self) -> &Matrix<T> {
        &self.g
    }

    /// Ranks `[X1, X2, Y1, Y2]`.
    pub fn ranks(&self) -> [usize; 4] {
        [self.f.rows(), self.f.cols(), self.b.rows(), self.a.rows()]
    }
}

/// The chain `X2 --[f; -a]--> X1⊕Y2 --[[b, g], [0, -1]]--> Y1⊕Y2`.
///
/// This is the cokernel of `(0, f, g): (0→X2→Y2) → (0→X1→Y1)` computed with
/// the cokernel block formula of [`crate::adelman::cokernel`].
pub fn functor_k<T: Scalar>(sq: &FpSquare<T>) -> ChainObject<T> {
    let ring = sq.ring().clone();
    let [x1, _, y1, y2] = sq.ranks();
    let m1 = Matrix::vstack(&[&sq.f, &sq.a.neg()]).expect("same columns");
    let m2 = Matrix::block(
        &sq.b,
        &sq.g,
        &Matrix::zeros(ring.clone(), y2, x1),
        &Matrix::identity(ring, y2).neg(),
    )
    .expect("block shapes");
    debug_assert_eq!(m2.rows(), y1 + y2);
    ChainObject::new(m1, m2).expect("chain shapes")
}

/// The square `(f, a, b, g) = (m1, m2·m1, m2, 1)`.
pub fn functor_k_inv<T: Scalar>(x: &ChainObject<T>) -> FpSquare<T> {
    let ring = x.ring().clone();
    let n3 = x.ranks()[2];
    FpSquare {
        f: x.m1().clone(),
        a: x.m2().mul(x.m1()),
        b: x.m2().clone(),
        g: Matrix::identity(ring, n3),
    }
}

/// `Ker M(b) / M(f)(Ker M(a))`.
pub fn evaluate_fp<T: Scalar>(sq: &FpSquare<T>, m: &FpModule<T>) -> Result<FpModule<T>> {
    sq.ring().ensure_same(m.ring())?;
    let ker_b = m.kernel_of(&sq.b)?;
    let ker_a = m.kernel_of(&sq.a)?;
    let image = ker_a.mapped(&sq.f)?;
    subquotient(&ker_b, &image)
}

/// `Ker M(m2) / (Ker M(m2) ∩ Im M(m1))`, the exact extension of `M` evaluated at `x`.
pub fn evaluate_chain<T: Scalar>(x: &ChainObject<T>, m: &FpModule<T>) -> Result<FpModule<T>> {
    x.ring().ensure_same(m.ring())?;
    let ker = m.kernel_of(x.m2())?;
    let im = m.image_of(x.m1())?;
    subquotient(&ker, &im)
}

/// The comparison `X → functor_k(functor_k_inv(X))` with components
/// `(1, [1; -m2], [0; 1])`, certified to be an isomorphism.
pub fn roundtrip_comparison<T: Scalar>(x: &ChainObject<T>) -> Result<ChainMorphism<T>> {
    let ring = x.ring().clone();
    let [n1, n2, n3] = x.ranks();
    let target = functor_k(&functor_k_inv(x));
    let a1 = Matrix::identity(ring.clone(), n1);
    let a2 = Matrix::vstack(&[&Matrix::identity(ring.clone(), n2), &x.m2().neg()])?;
    let a3 = Matrix::vstack(&[&Matrix::zeros(ring.clone(), n3, n3), &Matrix::identity(ring, n3)])?;
    let u = ChainMorphism::new(x.clone(), target, [a1, a2, a3])
        .map_err(|e| Error::Invariant(format!("round-trip comparison: {e}")))?;
    if !is_isomorphism(&u) {
        return Err(Error::Invariant(
            "round-trip comparison is not an isomorphism".into(),
        ));
    }
    Ok(u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adelman::is_zero_object;

    type R = RingSpec<i64>;

    fn m(rows: usize, cols: usize, e: &[i64]) -> Matrix<i64> {
        Matrix::from_i64(R::Integers, rows, cols, e).unwrap()
    }

    fn sq_ex() -> FpSquare<i64> {
        FpSquare::new(m(1, 1, &[1]), m(1, 1, &[2]), m(0, 1, &[]), m(0, 1, &[])).unwrap()
    }

    fn x_ex() -> ChainObject<i64> {
        ChainObject::new(m(2, 1, &[-1, 2]), m(1, 2, &[0, -1])).unwrap()
    }

    fn factors(x: FpModule<i64>) -> Vec<i64> {
        x.invariant_factors().to_vec()
    }

    #[test]
    fn square_must_commute() {
        let err = FpSquare::new(m(1, 1, &[1]), m(1, 1, &[2]), m(1, 1, &[1]), m(1, 1, &[1]));
        assert_eq!(err, Err(Error::SquareNotCommuting));
    }

    #[test]
    fn k_of_example_square() {
        let x = functor_k(&sq_ex());
        assert_eq!(x.m1(), &m(2, 1, &[1, -2]));
        assert_eq!(x.m2(), &m(1, 2, &[0, -1]));
    }

    #[test]
    fn k_of_representable() {
        // X2 = Y1 = Y2 = 0: the functor ((A,-),-)
        let sq = FpSquare::new(m(1, 0, &[]), m(0, 0, &[]), m(0, 1, &[]), m(0, 0, &[])).unwrap();
        assert_eq!(functor_k(&sq), ChainObject::embed(R::Integers, 1));
    }

    #[test]
    fn k_of_identity_square_is_zero() {
        let one = m(1, 1, &[1]);
        let sq = FpSquare::new(one.clone(), one.clone(), one.clone(), one).unwrap();
        let x = functor_k(&sq);
        assert_eq!(x.ranks(), [1, 2, 2]);
        assert!(is_zero_object(&x));
    }

    #[test]
    fn k_inv_examples() {
        let sq = functor_k_inv(&x_ex());
        assert_eq!(sq.f(), &m(2, 1, &[-1, 2]));
        assert_eq!(sq.a(), &m(1, 1, &[-2]));
        assert_eq!(sq.b(), &m(1, 2, &[0, -1]));
        assert_eq!(sq.g(), &m(1, 1, &[1]));
        let sq = functor_k_inv(&ChainObject::embed(R::Integers, 1));
        assert_eq!(sq.ranks(), [1, 0, 0, 0]);
        let sq = functor_k_inv(&ChainObject::<i64>::zero(R::Integers));
        assert_eq!(sq.ranks(), [0, 0, 0, 0]);
    }

    #[test]
    fn evaluations_of_examples() {
        let z4 = FpModule::cyclic(R::Integers, 4);
        let z2 = FpModule::cyclic(R::Integers, 2);
        let z6 = FpModule::cyclic(R::Integers, 6);
        let zz = FpModule::free(R::Integers, 1);
        assert_eq!(factors(evaluate_fp(&sq_ex(), &z4).unwrap()), vec![2]);
        assert!(evaluate_fp(&sq_ex(), &z2).unwrap().is_zero());
        assert_eq!(factors(evaluate_chain(&x_ex(), &z4).unwrap()), vec![2]);
        assert_eq!(factors(evaluate_chain(&x_ex(), &zz).unwrap()), vec![0]);
        let j = ChainObject::embed(R::Integers, 1);
        assert_eq!(factors(evaluate_chain(&j, &z6).unwrap()), vec![6]);
        assert_eq!(factors(evaluate_fp(&functor_k_inv(&j), &z6).unwrap()), vec![6]);
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let z4 = FpModule::cyclic(R::modulo(4).unwrap(), 2);
        assert!(matches!(
            evaluate_chain(&x_ex(), &z4),
            Err(Error::RingMismatch { .. })
        ));
    }

    #[test]
    fn roundtrip_examples() {
        let u = roundtrip_comparison(&x_ex()).unwrap();
        let z4 = FpModule::cyclic(R::Integers, 4);
        assert_eq!(factors(evaluate_chain(u.dst(), &z4).unwrap()), vec![2]);
        roundtrip_comparison(&ChainObject::embed(R::Integers, 1)).unwrap();
        roundtrip_comparison(&ChainObject::<i64>::zero(R::Integers)).unwrap();
    }
}
