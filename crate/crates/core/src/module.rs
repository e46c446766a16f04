//! Finitely presented modules over ℤ and ℤ/n, and submodules of their powers.
//!
//! A module is the cokernel of its relation matrix. Over ℤ/n the relations
//! implicitly contain `n·I`, so every module is handled as a ℤ-module.

use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::Subquotient;
use crate::matrix::Matrix;
use crate::ring::RingSpec;
use crate::scalar::Scalar;
use crate::snf::cokernel_invariants;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpModule<T> {
    ring: RingSpec<T>,
    relations: Matrix<T>,
    invariant_factors: Vec<T>,
}

impl<T: Scalar> FpModule<T> {
    /// The cokernel of `relations` (an `ambient_rank x k` matrix over the ring).
    pub fn presented(relations: Matrix<T>) -> Self {
        let ring = relations.ring().clone();
        let mut m = FpModule {
            ring,
            relations,
            invariant_factors: Vec::new(),
        };
        m.invariant_factors = cokernel_invariants(&m.integer_relations());
        m
    }

    /// `⊕ ℤ/d_i` (with `d = 0` a free summand). Over ℤ/n a factor `d` gives `ℤ/gcd(d, n)`.
    pub fn from_invariant_factors(ring: RingSpec<T>, factors: &[T]) -> Self {
        let k = factors.len();
        Self::presented(Matrix::diagonal(ring, k, k, factors))
    }

    pub fn free(ring: RingSpec<T>, rank: usize) -> Self {
        Self::presented(Matrix::zeros(ring, rank, 0))
    }

    pub fn zero(ring: RingSpec<T>) -> Self {
        Self::free(ring, 0)
    }

    pub fn cyclic(ring: RingSpec<T>, order: T) -> Self {
        Self::from_invariant_factors(ring, &[order])
    }

    pub fn ring(&self) -> &RingSpec<T> {
        &self.ring
    }

    pub fn ambient_rank(&self) -> usize {
        self.relations.rows()
    }

    pub fn relations(&self) -> &Matrix<T> {
        &self.relations
    }

    /// Relations read over ℤ, with `n·I` appended for ℤ/n.
    pub fn integer_relations(&self) -> Matrix<T> {
        let lifted = self.relations.lift();
        match &self.ring {
            RingSpec::Integers => lifted,
            RingSpec::Modulo(n) => {
                let ni = Matrix::scalar(RingSpec::Integers, self.ambient_rank(), n.clone());
                Matrix::hstack(&[&lifted, &ni]).expect("same rows")
            }
        }
    }

    /// Ascending invariant factors, trailing zeros for the free rank.
    pub fn invariant_factors(&self) -> &[T] {
        &self.invariant_factors
    }

    /// The diagonal presentation `⊕ ℤ/d_i` on one generator per invariant factor.
    pub fn canonicalize(&self) -> Self {
        Self::from_invariant_factors(self.ring.clone(), &self.invariant_factors)
    }

    pub fn is_zero(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn free_rank(&self) -> usize {
        self.invariant_factors.iter().filter(|d| d.is_zero()).count()
    }

    /// Number of elements, or `None` for infinite modules.
    pub fn order(&self) -> Option<T> {
        if self.free_rank() > 0 {
            return None;
        }
        Some(
            self.invariant_factors
                .iter()
                .fold(T::one(), |acc, d| acc * d.clone()),
        )
    }

    /// Isomorphism of modules over the same ring.
    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.ring == other.ring && self.invariant_factors == other.invariant_factors
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        self.ring.ensure_same(&other.ring)?;
        Ok(Self::presented(Matrix::direct_sum(
            &self.relations,
            &other.relations,
        )?))
    }

    /// The ℤ-matrix of `M(U): M^c -> M^r`, `x ↦ Ux`, on ambient coordinates.
    /// Coordinates of `M^c` are `c` consecutive blocks of `ambient_rank` entries.
    pub fn power_map(&self, u: &Matrix<T>) -> Result<Matrix<T>> {
        self.ring.ensure_same(u.ring())?;
        let id = Matrix::identity(RingSpec::Integers, self.ambient_rank());
        Ok(Matrix::kron(&u.lift(), &id))
    }

    /// `Ker M(U)` as a submodule of `M^{U.cols}`.
    pub fn kernel_of(&self, u: &Matrix<T>) -> Result<Submodule<T>> {
        let map = self.power_map(u)?;
        let whole = Submodule::whole(self, u.cols());
        let target = Submodule::whole(self, u.rows());
        let k = whole.carrier().kernel_of(&map, &target.carrier())?;
        Submodule::new(self.clone(), u.cols(), k.numerator().clone())
    }

    /// `Im M(U)` as a submodule of `M^{U.rows}`.
    pub fn image_of(&self, u: &Matrix<T>) -> Result<Submodule<T>> {
        let map = self.power_map(u)?;
        Submodule::new(self.clone(), u.rows(), map)
    }
}

impl<T: Scalar> fmt::Display for FpModule<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, d) in self.invariant_factors.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if d.is_zero() {
                match &self.ring {
                    RingSpec::Integers => write!(f, "Z")?,
                    RingSpec::Modulo(n) => write!(f, "Z/{n}")?,
                }
            } else {
                write!(f, "Z/{d}")?;
            }
        }
        Ok(())
    }
}

/// The span of some elements of `M^power`.
///
/// Generators are integer columns of length `power * M.ambient_rank()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Submodule<T> {
    ambient: FpModule<T>,
    power: usize,
    generators: Matrix<T>,
}

impl<T: Scalar> Submodule<T> {
    pub fn new(ambient: FpModule<T>, power: usize, generators: Matrix<T>) -> Result<Self> {
        let dim = power * ambient.ambient_rank();
        if generators.rows() != dim {
            return Err(Error::Dimension(format!(
                "generators have {} coordinates, the ambient power has {dim}",
                generators.rows()
            )));
        }
        Ok(Submodule {
            ambient,
            power,
            generators: generators.lift(),
        })
    }

    pub fn whole(ambient: &FpModule<T>, power: usize) -> Self {
        let dim = power * ambient.ambient_rank();
        Submodule {
            ambient: ambient.clone(),
            power,
            generators: Matrix::identity(RingSpec::Integers, dim),
        }
    }

    pub fn zero(ambient: &FpModule<T>, power: usize) -> Self {
        let dim = power * ambient.ambient_rank();
        Submodule {
            ambient: ambient.clone(),
            power,
            generators: Matrix::zeros(RingSpec::Integers, dim, 0),
        }
    }

    pub fn ambient(&self) -> &FpModule<T> {
        &self.ambient
    }

    pub fn power(&self) -> usize {
        self.power
    }

    pub fn generators(&self) -> &Matrix<T> {
        &self.generators
    }

    /// Relations of `M^power` on ambient coordinates.
    fn power_relations(&self) -> Matrix<T> {
        let id = Matrix::identity(RingSpec::Integers, self.power);
        Matrix::kron(&id, &self.ambient.integer_relations())
    }

    pub(crate) fn carrier(&self) -> Subquotient<T> {
        Subquotient::new(
            self.ambient.ring().clone(),
            self.generators.clone(),
            self.power_relations(),
        )
        .expect("shapes agree")
    }

    /// Image under `M(U)`, as a submodule of `M^{U.rows}`.
    pub fn mapped(&self, u: &Matrix<T>) -> Result<Self> {
        if u.cols() != self.power {
            return Err(Error::Dimension(format!(
                "map expects M^{} but submodule lives in M^{}",
                u.cols(),
                self.power
            )));
        }
        let map = self.ambient.power_map(u)?;
        Submodule::new(self.ambient.clone(), u.rows(), map.mul(&self.generators))
    }

    fn ensure_same_ambient(&self, other: &Self) -> Result<()> {
        if self.power != other.power || self.ambient != other.ambient {
            return Err(Error::Dimension(format!(
                "submodules of different ambients ({}^{} and {}^{})",
                self.ambient, self.power, other.ambient, other.power
            )));
        }
        Ok(())
    }

    pub fn is_contained_in(&self, other: &Self) -> Result<bool> {
        self.ensure_same_ambient(other)?;
        Ok(self.carrier().contained_in(&other.carrier()))
    }
}

/// `span K / (span K ∩ span I)`, canonicalized. Zero exactly when `K ⊆ I`.
pub fn subquotient<T: Scalar>(k: &Submodule<T>, i: &Submodule<T>) -> Result<FpModule<T>> {
    k.ensure_same_ambient(i)?;
    let sq = k.carrier().modulo(&i.generators)?;
    Ok(sq.to_module().canonicalize())
}
