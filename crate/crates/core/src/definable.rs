//! Definable classes of modules cut out by chains, pairs of matrices and
//! families of them, and the arrow-reversing duality.
//!
//! A chain `X = (A^{n1} -m1-> A^{n2} -m2-> A^{n3})` defines
//! `Ω_X = {M : Ker M(m2) ⊆ Im M(m1)}`, and `Γ_X` is `Ω` of the dual chain.
//!
//! A pair `(U, V)` is the same data written as a solvability condition
//! "`Ux = 0` implies `x = Vy`". The column convention stores `(m2, m1)`; the
//! paper-row convention stores `(m1ᵀ, m2ᵀ)`, which is how the condition reads
//! on row vectors. Both describe `Ω` of the same chain.

use std::fmt;

use crate::adelman::{ChainMorphism, ChainObject};
use crate::error::{Error, Result};
use crate::fpfunctor::{evaluate_chain, functor_k, functor_k_inv, FpSquare};
use crate::matrix::Matrix;
use crate::module::FpModule;
use crate::ring::RingSpec;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairConvention {
    Column,
    PaperRow,
}

impl PairConvention {
    pub fn name(self) -> &'static str {
        match self {
            PairConvention::Column => "column",
            PairConvention::PaperRow => "paper-row",
        }
    }
}

impl fmt::Display for PairConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DefinablePair<T> {
    u: Matrix<T>,
    v: Matrix<T>,
    convention: PairConvention,
}

impl<T: Scalar> DefinablePair<T> {
    /// Requires `U.cols = V.rows` in either convention.
    pub fn new(u: Matrix<T>, v: Matrix<T>, convention: PairConvention) -> Result<Self> {
        u.ring().ensure_same(v.ring())?;
        if u.cols() != v.rows() {
            return Err(Error::Dimension(format!(
                "pair needs U.cols = V.rows, got U {}x{} and V {}x{}",
                u.rows(),
                u.cols(),
                v.rows(),
                v.cols()
            )));
        }
        Ok(DefinablePair { u, v, convention })
    }

    pub fn ring(&self) -> &RingSpec<T> {
        self.u.ring()
    }

    pub fn u(&self) -> &Matrix<T> {
        &self.u
    }

    pub fn v(&self) -> &Matrix<T> {
        &self.v
    }

    pub fn convention(&self) -> PairConvention {
        self.convention
    }
}

/// A finite family of chains; its class is the intersection of their `Ω`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefinableFamily<T> {
    ring: RingSpec<T>,
    members: Vec<ChainObject<T>>,
}

impl<T: Scalar> DefinableFamily<T> {
    pub fn new(ring: RingSpec<T>, members: Vec<ChainObject<T>>) -> Result<Self> {
        for x in &members {
            ring.ensure_same(x.ring())?;
        }
        Ok(DefinableFamily { ring, members })
    }

    pub fn from_pairs(ring: RingSpec<T>, pairs: &[DefinablePair<T>]) -> Result<Self> {
        Self::new(ring, pairs.iter().map(from_pair).collect())
    }

    pub fn empty(ring: RingSpec<T>) -> Self {
        DefinableFamily {
            ring,
            members: Vec::new(),
        }
    }

    pub fn ring(&self) -> &RingSpec<T> {
        &self.ring
    }

    pub fn members(&self) -> &[ChainObject<T>] {
        &self.members
    }
}

pub fn omega_member<T: Scalar>(x: &ChainObject<T>, m: &FpModule<T>) -> Result<bool> {
    Ok(evaluate_chain(x, m)?.is_zero())
}

pub fn gamma_member<T: Scalar>(x: &ChainObject<T>, n: &FpModule<T>) -> Result<bool> {
    omega_member(&dual_chain(x), n)
}

/// Membership in every `Ω` of the family; the empty family contains everything.
pub fn family_member<T: Scalar>(d: &DefinableFamily<T>, m: &FpModule<T>) -> Result<bool> {
    d.ring.ensure_same(m.ring())?;
    for x in &d.members {
        if !omega_member(x, m)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn pair_member<T: Scalar>(p: &DefinablePair<T>, m: &FpModule<T>) -> Result<bool> {
    omega_member(&from_pair(p), m)
}

pub fn to_pair<T: Scalar>(x: &ChainObject<T>, convention: PairConvention) -> DefinablePair<T> {
    let (u, v) = match convention {
        PairConvention::Column => (x.m2().clone(), x.m1().clone()),
        PairConvention::PaperRow => (x.m1().transpose(), x.m2().transpose()),
    };
    DefinablePair { u, v, convention }
}

pub fn from_pair<T: Scalar>(p: &DefinablePair<T>) -> ChainObject<T> {
    let (m1, m2) = match p.convention {
        PairConvention::Column => (p.v.clone(), p.u.clone()),
        PairConvention::PaperRow => (p.u.transpose(), p.v.transpose()),
    };
    ChainObject::new(m1, m2).expect("pair shapes were validated")
}

/// `A^{n3} -m2ᵀ-> A^{n2} -m1ᵀ-> A^{n1}`.
pub fn dual_chain<T: Scalar>(x: &ChainObject<T>) -> ChainObject<T> {
    ChainObject::new(x.m2().transpose(), x.m1().transpose()).expect("transposed shapes fit")
}

/// `dual(Y) → dual(X)` with components `(a3ᵀ, a2ᵀ, a1ᵀ)`.
pub fn dual_morphism<T: Scalar>(u: &ChainMorphism<T>) -> ChainMorphism<T> {
    let [a1, a2, a3] = u.components();
    ChainMorphism::new(
        dual_chain(u.dst()),
        dual_chain(u.src()),
        [a3.transpose(), a2.transpose(), a1.transpose()],
    )
    .expect("transposition preserves commutation")
}

/// `(U, V) ↦ (Vᵀ, Uᵀ)`, defined for the paper-row convention.
pub fn dual_pair<T: Scalar>(p: &DefinablePair<T>) -> Result<DefinablePair<T>> {
    if p.convention != PairConvention::PaperRow {
        return Err(Error::Convention {
            expected: PairConvention::PaperRow.name().into(),
            found: p.convention.name().into(),
        });
    }
    Ok(DefinablePair {
        u: p.v.transpose(),
        v: p.u.transpose(),
        convention: PairConvention::PaperRow,
    })
}

pub fn dual_fp<T: Scalar>(sq: &FpSquare<T>) -> FpSquare<T> {
    functor_k_inv(&dual_chain(&functor_k(sq)))
}
