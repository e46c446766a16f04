//! Adelman's abelian category of three-term chains over free modules.
//!
//! Objects are diagrams `A^{n1} --m1--> A^{n2} --m2--> A^{n3}` with no
//! requirement that `m2·m1 = 0`. Morphisms are strictly commuting triples
//! `(a1, a2, a3)`; two triples are equal in the category when their difference
//! is null-homotopic, i.e. `a2 = dst.m1·s + t·src.m2` for some `s`, `t`.
//! Representatives are never normalised, so equality is always a decision.

use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::Subquotient;
use crate::linsys::{LinearSystem, Unknown};
use crate::matrix::Matrix;
use crate::module::FpModule;
use crate::ring::RingSpec;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChainObject<T> {
    m1: Matrix<T>,
    m2: Matrix<T>,
}

impl<T: Scalar> ChainObject<T> {
    /// `m1` is `n2 x n1`, `m2` is `n3 x n2`.
    pub fn new(m1: Matrix<T>, m2: Matrix<T>) -> Result<Self> {
        m1.ring().ensure_same(m2.ring())?;
        if m1.rows() != m2.cols() {
            return Err(Error::Dimension(format!(
                "m1 is {}x{} but m2 is {}x{}: middle ranks differ",
                m1.rows(),
                m1.cols(),
                m2.rows(),
                m2.cols()
            )));
        }
        Ok(ChainObject { m1, m2 })
    }

    /// `j(A^rank) = (0 -> A^rank -> 0)`.
    pub fn embed(ring: RingSpec<T>, rank: usize) -> Self {
        ChainObject {
            m1: Matrix::zeros(ring.clone(), rank, 0),
            m2: Matrix::zeros(ring, 0, rank),
        }
    }

    pub fn zero(ring: RingSpec<T>) -> Self {
        Self::embed(ring, 0)
    }

    pub fn ring(&self) -> &RingSpec<T> {
        self.m1.ring()
    }

    pub fn m1(&self) -> &Matrix<T> {
        &self.m1
    }

    pub fn m2(&self) -> &Matrix<T> {
        &self.m2
    }

    pub fn ranks(&self) -> [usize; 3] {
        [self.m1.cols(), self.m1.rows(), self.m2.rows()]
    }

    pub fn is_complex(&self) -> bool {
        self.m2.mul(&self.m1).is_zero()
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        Self::new(
            Matrix::direct_sum(&self.m1, &other.m1)?,
            Matrix::direct_sum(&self.m2, &other.m2)?,
        )
    }
}

impl<T: Scalar> fmt::Display for ChainObject<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.ranks();
        write!(
            f,
            "A^{a} --{}--> A^{b} --{}--> A^{c}",
            self.m1, self.m2
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMorphism<T> {
    src: ChainObject<T>,
    dst: ChainObject<T>,
    components: [Matrix<T>; 3],
}

impl<T: Scalar> ChainMorphism<T> {
    /// Checks shapes and strict commutativity of both squares.
    pub fn new(src: ChainObject<T>, dst: ChainObject<T>, components: [Matrix<T>; 3]) -> Result<Self> {
        src.ring().ensure_same(dst.ring())?;
        let (s, d) = (src.ranks(), dst.ranks());
        for (i, a) in components.iter().enumerate() {
            src.ring().ensure_same(a.ring())?;
            if a.shape() != (d[i], s[i]) {
                return Err(Error::Dimension(format!(
                    "component a{} is {}x{}, expected {}x{}",
                    i + 1,
                    a.rows(),
                    a.cols(),
                    d[i],
                    s[i]
                )));
            }
        }
        let [a1, a2, a3] = &components;
        if a2.mul(&src.m1) != dst.m1.mul(a1) {
            return Err(Error::NotCommuting("a2·m1 differs from m1'·a1".into()));
        }
        if a3.mul(&src.m2) != dst.m2.mul(a2) {
            return Err(Error::NotCommuting("a3·m2 differs from m2'·a2".into()));
        }
        Ok(ChainMorphism {
            src,
            dst,
            components,
        })
    }

    pub fn identity(x: &ChainObject<T>) -> Self {
        let ring = x.ring().clone();
        let components = x.ranks().map(|n| Matrix::identity(ring.clone(), n));
        ChainMorphism {
            src: x.clone(),
            dst: x.clone(),
            components,
        }
    }

    pub fn zero(src: &ChainObject<T>, dst: &ChainObject<T>) -> Self {
        let ring = src.ring().clone();
        let (s, d) = (src.ranks(), dst.ranks());
        let components = [0, 1, 2].map(|i| Matrix::zeros(ring.clone(), d[i], s[i]));
        ChainMorphism {
            src: src.clone(),
            dst: dst.clone(),
            components,
        }
    }

    pub fn src(&self) -> &ChainObject<T> {
        &self.src
    }

    pub fn dst(&self) -> &ChainObject<T> {
        &self.dst
    }

    pub fn components(&self) -> &[Matrix<T>; 3] {
        &self.components
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &Self) -> Result<Self> {
        if self.dst != next.src {
            return Err(Error::Dimension(
                "composition: target and source objects differ".into(),
            ));
        }
        let components = [0, 1, 2].map(|i| next.components[i].mul(&self.components[i]));
        Ok(ChainMorphism {
            src: self.src.clone(),
            dst: next.dst.clone(),
            components,
        })
    }

    fn ensure_parallel(&self, other: &Self) -> Result<()> {
        if self.src != other.src || self.dst != other.dst {
            return Err(Error::Dimension(
                "morphisms have different sources or targets".into(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.ensure_parallel(other)?;
        let components = [0, 1, 2].map(|i| self.components[i].add(&other.components[i]));
        Ok(ChainMorphism {
            src: self.src.clone(),
            dst: self.dst.clone(),
            components,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        ChainMorphism {
            src: self.src.clone(),
            dst: self.dst.clone(),
            components: self.components.clone().map(|a| a.neg()),
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        let mut parts = Vec::with_capacity(3);
        for i in 0..3 {
            parts.push(Matrix::direct_sum(&self.components[i], &other.components[i])?);
        }
        Ok(ChainMorphism {
            src: self.src.direct_sum(&other.src)?,
            dst: self.dst.direct_sum(&other.dst)?,
            components: parts.try_into().expect("three components"),
        })
    }
}

/// A pair `(s, t)` with `a2 = dst.m1·s + t·src.m2`, if one exists.
pub fn null_homotopy<T: Scalar>(u: &ChainMorphism<T>) -> Result<Option<(Matrix<T>, Matrix<T>)>> {
    let (x, y) = (&u.src, &u.dst);
    let [_, xn2, xn3] = x.ranks();
    let [yn1, yn2, _] = y.ranks();
    let mut sys = LinearSystem::new(x.ring().clone());
    let s = sys.unknown(yn1, xn2);
    let t = sys.unknown(yn2, xn3);
    let (ix2, iy2) = (sys.identity(xn2), sys.identity(yn2));
    sys.equation(
        vec![(y.m1.clone(), s, ix2), (iy2, t, x.m2.clone())],
        u.components[1].clone(),
    );
    Ok(sys.solve()?.map(|mut v| {
        let t = v.pop().expect("t");
        let s = v.pop().expect("s");
        (s, t)
    }))
}

pub fn is_null_homotopic<T: Scalar>(u: &ChainMorphism<T>) -> bool {
    null_homotopy(u).expect("well-formed system").is_some()
}

/// Equality of morphisms in the homotopy category.
pub fn morphisms_equal<T: Scalar>(u: &ChainMorphism<T>, v: &ChainMorphism<T>) -> Result<bool> {
    Ok(is_null_homotopic(&u.sub(v)?))
}

pub fn is_zero_object<T: Scalar>(x: &ChainObject<T>) -> bool {
    is_null_homotopic(&ChainMorphism::identity(x))
}

/// The kernel of `u`; the returned morphism's source is the kernel object.
///
/// For `u: (X1→X2→X3) → (Y1→Y2→Y3)` the kernel is
/// `X1⊕Y1 → X2⊕Y1 → X3⊕Y2` with matrices `[[f1, 0], [a1, -1]]` and
/// `[[f2, 0], [a2, -g1]]`, mapping to `u.src` by the projections.
pub fn kernel<T: Scalar>(u: &ChainMorphism<T>) -> ChainMorphism<T> {
    let (x, y) = (&u.src, &u.dst);
    let ring = x.ring().clone();
    let [xn1, xn2, xn3] = x.ranks();
    let [yn1, _, _] = y.ranks();
    let [a1, a2, _] = &u.components;
    let zero = |r, c| Matrix::zeros(ring.clone(), r, c);
    let km1 = Matrix::block(
        &x.m1,
        &zero(xn2, yn1),
        a1,
        &Matrix::identity(ring.clone(), yn1).neg(),
    )
    .expect("kernel block m1");
    let km2 = Matrix::block(&x.m2, &zero(xn3, yn1), a2, &y.m1.neg()).expect("kernel block m2");
    let k = ChainObject::new(km1, km2).expect("kernel object");
    let kr = k.ranks();
    let proj = |n: usize, total: usize| {
        Matrix::hstack(&[&Matrix::identity(ring.clone(), n), &zero(n, total - n)]).expect("projection")
    };
    let components = [proj(xn1, kr[0]), proj(xn2, kr[1]), proj(xn3, kr[2])];
    ChainMorphism {
        src: k,
        dst: x.clone(),
        components,
    }
}

/// The cokernel of `u`; the returned morphism's target is the cokernel object.
///
/// The cokernel is `Y1⊕X2 → Y2⊕X3 → Y3⊕X3` with matrices
/// `[[g1, a2], [0, -f2]]` and `[[g2, a3], [0, -1]]`, receiving `u.dst` by the
/// inclusions.
pub fn cokernel<T: Scalar>(u: &ChainMorphism<T>) -> ChainMorphism<T> {
    let (x, y) = (&u.src, &u.dst);
    let ring = x.ring().clone();
    let [_, _, xn3] = x.ranks();
    let [yn1, yn2, yn3] = y.ranks();
    let [_, a2, a3] = &u.components;
    let zero = |r, c| Matrix::zeros(ring.clone(), r, c);
    let cm1 = Matrix::block(&y.m1, a2, &zero(xn3, yn1), &x.m2.neg()).expect("cokernel block m1");
    let cm2 = Matrix::block(
        &y.m2,
        a3,
        &zero(xn3, yn2),
        &Matrix::identity(ring.clone(), xn3).neg(),
    )
    .expect("cokernel block m2");
    let c = ChainObject::new(cm1, cm2).expect("cokernel object");
    let cr = c.ranks();
    let incl = |n: usize, total: usize| {
        Matrix::vstack(&[&Matrix::identity(ring.clone(), n), &zero(total - n, n)]).expect("inclusion")
    };
    let components = [incl(yn1, cr[0]), incl(yn2, cr[1]), incl(yn3, cr[2])];
    ChainMorphism {
        src: y.clone(),
        dst: c,
        components,
    }
}

#[derive(Clone, Debug)]
pub struct ImageFactorization<T> {
    pub image: ChainObject<T>,
    /// `image → u.dst`, the kernel of the cokernel of `u`.
    pub mono: ChainMorphism<T>,
    /// `u.src → image` with `mono ∘ epi` homotopic to `u`.
    pub epi: ChainMorphism<T>,
}

pub fn image_factorization<T: Scalar>(u: &ChainMorphism<T>) -> Result<ImageFactorization<T>> {
    let mono = kernel(&cokernel(u));
    let im = mono.src.clone();
    let (x, y) = (&u.src, &u.dst);
    let xr = x.ranks();
    let ir = im.ranks();
    let [yn1, yn2, _] = y.ranks();

    let mut sys = LinearSystem::new(x.ring().clone());
    let e1 = sys.unknown(ir[0], xr[0]);
    let e2 = sys.unknown(ir[1], xr[1]);
    let e3 = sys.unknown(ir[2], xr[2]);
    let s = sys.unknown(yn1, xr[1]);
    let t = sys.unknown(yn2, xr[2]);
    let id = |n| sys.identity(n);
    let (ix0, ix1) = (id(xr[0]), id(xr[1]));
    let (ii1, ii2, iy2) = (id(ir[1]), id(ir[2]), id(yn2));
    // e2·f1 = m1^Im·e1
    sys.homogeneous(
        vec![(ii1, e2, x.m1.clone()), (im.m1.neg(), e1, ix0)],
        ir[1],
        xr[0],
    );
    // e3·f2 = m2^Im·e2
    sys.homogeneous(
        vec![(ii2, e3, x.m2.clone()), (im.m2.neg(), e2, ix1.clone())],
        ir[2],
        xr[1],
    );
    // mono2·e2 - g1·s - t·f2 = a2
    sys.equation(
        vec![
            (mono.components[1].clone(), e2, ix1.clone()),
            (y.m1.neg(), s, ix1),
            (iy2.neg(), t, x.m2.clone()),
        ],
        u.components[1].clone(),
    );
    let sol = sys
        .solve()?
        .ok_or_else(|| Error::Invariant("morphism does not factor through its image".into()))?;
    let epi = ChainMorphism::new(
        x.clone(),
        im.clone(),
        [sol[0].clone(), sol[1].clone(), sol[2].clone()],
    )
    .map_err(|e| Error::Invariant(format!("image factorization: {e}")))?;
    Ok(ImageFactorization {
        image: im,
        mono,
        epi,
    })
}

/// The three morphisms `k: (0→Y→Z) → j(Y)`, `c: j(Y) → (X→Y→0)` and
/// `m = c∘k`, each with middle component the identity.
#[derive(Clone, Debug)]
pub struct KernelCokernelFactorization<T> {
    pub k: ChainMorphism<T>,
    pub c: ChainMorphism<T>,
    pub m: ChainMorphism<T>,
}

pub fn prop24_factorization<T: Scalar>(x: &ChainObject<T>) -> KernelCokernelFactorization<T> {
    let ring = x.ring().clone();
    let [n1, n2, n3] = x.ranks();
    let zero = |r, c| Matrix::zeros(ring.clone(), r, c);
    let id = Matrix::identity(ring.clone(), n2);
    let left = ChainObject::new(zero(n2, 0), x.m2.clone()).expect("0 -> Y -> Z");
    let right = ChainObject::new(x.m1.clone(), zero(0, n2)).expect("X -> Y -> 0");
    let middle = ChainObject::embed(ring.clone(), n2);
    let k = ChainMorphism {
        src: left.clone(),
        dst: middle.clone(),
        components: [zero(0, 0), id.clone(), zero(0, n3)],
    };
    let c = ChainMorphism {
        src: middle,
        dst: right.clone(),
        components: [zero(n1, 0), id.clone(), zero(0, 0)],
    };
    let m = ChainMorphism {
        src: left,
        dst: right,
        components: [zero(n1, 0), id, zero(0, n3)],
    };
    KernelCokernelFactorization { k, c, m }
}

/// The linear system of strictly commuting triples `X → Y`.
fn commuting_system<T: Scalar>(
    x: &ChainObject<T>,
    y: &ChainObject<T>,
) -> (LinearSystem<T>, [Unknown; 3]) {
    let xr = x.ranks();
    let yr = y.ranks();
    let mut sys = LinearSystem::new(x.ring().clone());
    let a1 = sys.unknown(yr[0], xr[0]);
    let a2 = sys.unknown(yr[1], xr[1]);
    let a3 = sys.unknown(yr[2], xr[2]);
    let id = |n| sys.identity(n);
    let (ix0, ix1, iy1, iy2) = (id(xr[0]), id(xr[1]), id(yr[1]), id(yr[2]));
    sys.homogeneous(
        vec![(iy1, a2, x.m1.clone()), (y.m1.neg(), a1, ix0)],
        yr[1],
        xr[0],
    );
    sys.homogeneous(
        vec![(iy2, a3, x.m2.clone()), (y.m2.neg(), a2, ix1)],
        yr[2],
        xr[1],
    );
    (sys, [a1, a2, a3])
}

/// Generators of the group of strictly commuting triples `X → Y` (zero triples dropped).
pub fn morphism_generators<T: Scalar>(
    x: &ChainObject<T>,
    y: &ChainObject<T>,
) -> Result<Vec<ChainMorphism<T>>> {
    x.ring().ensure_same(y.ring())?;
    let ring = x.ring().clone();
    let (sys, unknowns) = commuting_system(x, y);
    let gens = sys.kernel();
    let mut out = Vec::new();
    for j in 0..gens.cols() {
        let col = gens.col_slice(j..j + 1);
        let components = unknowns.map(|u| {
            let (r, c) = sys.shape_of(u);
            Matrix::unvectorize(&col.row_slice(sys.range(u)), r, c).reduce_into(&ring)
        });
        if components.iter().all(Matrix::is_zero) {
            continue;
        }
        out.push(ChainMorphism {
            src: x.clone(),
            dst: y.clone(),
            components,
        });
    }
    Ok(out)
}

/// `Hom(X, Y)` in the homotopy category, as a finitely presented module.
pub fn hom_group<T: Scalar>(x: &ChainObject<T>, y: &ChainObject<T>) -> Result<FpModule<T>> {
    x.ring().ensure_same(y.ring())?;
    let ring = x.ring().clone();
    let xr = x.ranks();
    let yr = y.ranks();
    let (sys, [_, a2, _]) = commuting_system(x, y);
    let commuting = sys.kernel();
    let middle = commuting.row_slice(sys.range(a2));

    // null-homotopic middle components: g1·s + t·f2
    let s_part = Matrix::kron(&Matrix::identity(ring.clone(), xr[1]), &y.m1).lift();
    let t_part = Matrix::kron(&x.m2.transpose(), &Matrix::identity(ring.clone(), yr[1])).lift();
    let dim = yr[1] * xr[1];
    let mut denominators = vec![s_part, t_part];
    if let RingSpec::Modulo(n) = &ring {
        denominators.push(Matrix::scalar(RingSpec::Integers, dim, n.clone()));
    }
    let refs: Vec<&Matrix<T>> = denominators.iter().collect();
    let den = Matrix::hstack(&refs)?;
    let sq = Subquotient::new(ring, middle, den)?;
    Ok(sq.to_module().canonicalize())
}

/// An isomorphism in an abelian category is a morphism with zero kernel and cokernel.
pub fn is_isomorphism<T: Scalar>(u: &ChainMorphism<T>) -> bool {
    is_zero_object(kernel(u).src()) && is_zero_object(cokernel(u).dst())
}

#[cfg(test)]
mod tests {
    use super::*;

    type R = RingSpec<i64>;

    fn m(rows: usize, cols: usize, e: &[i64]) -> Matrix<i64> {
        Matrix::from_i64(R::Integers, rows, cols, e).unwrap()
    }

    fn x_ex() -> ChainObject<i64> {
        ChainObject::new(m(2, 1, &[-1, 2]), m(1, 2, &[0, -1])).unwrap()
    }

    fn times(c: i64) -> ChainMorphism<i64> {
        let j = ChainObject::embed(R::Integers, 1);
        ChainMorphism::new(j.clone(), j, [m(0, 0, &[]), m(1, 1, &[c]), m(0, 0, &[])]).unwrap()
    }

    #[test]
    fn embed_shapes() {
        assert_eq!(ChainObject::<i64>::embed(R::Integers, 2).ranks(), [0, 2, 0]);
        assert_eq!(ChainObject::<i64>::zero(R::Integers).ranks(), [0, 0, 0]);
        assert!(is_zero_object(&ChainObject::<i64>::zero(R::Integers)));
    }

    #[test]
    fn middle_rank_mismatch_rejected() {
        assert!(ChainObject::new(m(2, 1, &[1, 1]), m(1, 1, &[1])).is_err());
    }

    #[test]
    fn non_commuting_triple_rejected() {
        let x = ChainObject::new(m(1, 1, &[1]), m(0, 1, &[])).unwrap();
        let err = ChainMorphism::new(x.clone(), x, [m(1, 1, &[1]), m(1, 1, &[2]), m(0, 0, &[])]);
        assert!(matches!(err, Err(Error::NotCommuting(_))));
    }

    #[test]
    fn null_homotopy_examples() {
        assert!(is_null_homotopic(&times(0)));
        assert!(!is_null_homotopic(&times(1)));
        let x = ChainObject::new(m(1, 1, &[1]), m(0, 1, &[])).unwrap();
        let (s, _) = null_homotopy(&ChainMorphism::identity(&x)).unwrap().unwrap();
        assert_eq!(s, m(1, 1, &[1]));
        assert!(is_zero_object(&x));
        assert!(!is_zero_object(&x_ex()));
    }

    #[test]
    fn equality_is_up_to_homotopy() {
        assert!(morphisms_equal(&times(3), &times(3)).unwrap());
        assert!(!morphisms_equal(&times(1), &times(0)).unwrap());
        // on a complex, (s·m1, m1·s + t·m2, m2·t) is a commuting null-homotopic triple
        let x = ChainObject::new(m(2, 1, &[1, 0]), m(1, 2, &[0, 1])).unwrap();
        let s = m(1, 2, &[1, 1]);
        let t = m(2, 1, &[1, 2]);
        let shift = ChainMorphism::new(
            x.clone(),
            x.clone(),
            [
                s.mul(x.m1()),
                x.m1().mul(&s).add(&t.mul(x.m2())),
                x.m2().mul(&t),
            ],
        )
        .unwrap();
        let id = ChainMorphism::identity(&x);
        assert!(morphisms_equal(&id.add(&shift).unwrap(), &id).unwrap());
    }

    #[test]
    fn kernel_of_identity_on_embed() {
        let k = kernel(&times(1));
        assert_eq!(k.src().m1(), &m(1, 0, &[]));
        assert_eq!(k.src().m2(), &m(1, 1, &[1]));
        assert!(is_zero_object(k.src()));
        assert!(is_null_homotopic(&k.then(&times(1)).unwrap()));
    }

    #[test]
    fn cokernel_of_identity_is_zero() {
        let c = cokernel(&times(1));
        assert!(is_zero_object(c.dst()));
        assert!(!is_zero_object(cokernel(&times(0)).dst()));
    }

    #[test]
    fn hom_group_examples() {
        let j = ChainObject::embed(R::Integers, 1);
        assert_eq!(hom_group(&j, &j).unwrap().invariant_factors(), &[0]);
        assert!(hom_group(&x_ex(), &ChainObject::zero(R::Integers)).unwrap().is_zero());
        let y = ChainObject::new(m(1, 1, &[1]), m(0, 1, &[])).unwrap();
        assert!(hom_group(&j, &y).unwrap().is_zero());
    }

    #[test]
    fn isomorphisms() {
        assert!(is_isomorphism(&ChainMorphism::identity(&x_ex())));
        assert!(!is_isomorphism(&times(0)));
        assert!(!is_isomorphism(&times(2)));
        assert!(is_isomorphism(&times(-1)));
    }

    #[test]
    fn prop24_shapes() {
        let x = x_ex();
        let f = prop24_factorization(&x);
        assert_eq!(f.m.components()[1], Matrix::identity(R::Integers, 2));
        assert_eq!(f.k.then(&f.c).unwrap(), f.m);
        assert_eq!(f.m.src().ranks(), [0, 2, 1]);
        assert_eq!(f.m.dst().ranks(), [1, 2, 0]);
    }

    #[test]
    fn image_of_zero_and_identity() {
        let im = image_factorization(&times(0)).unwrap();
        assert!(is_zero_object(&im.image));
        let im = image_factorization(&times(1)).unwrap();
        assert!(is_isomorphism(&im.mono));
        assert!(morphisms_equal(&im.epi.then(&im.mono).unwrap(), &times(1)).unwrap());
    }
}
