//! Base rings: the integers and the integers modulo `n`.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{int, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingSpec<T> {
    Integers,
    /// Integers modulo `n`, `n >= 2`.
    Modulo(T),
}

impl<T: Scalar> RingSpec<T> {
    pub fn integers() -> Self {
        RingSpec::Integers
    }

    pub fn modulo(n: T) -> Result<Self> {
        if n < int(2) {
            return Err(Error::InvalidModulus(n.to_string()));
        }
        Ok(RingSpec::Modulo(n))
    }

    pub fn modulus(&self) -> Option<&T> {
        match self {
            RingSpec::Integers => None,
            RingSpec::Modulo(n) => Some(n),
        }
    }

    pub fn is_integers(&self) -> bool {
        matches!(self, RingSpec::Integers)
    }

    /// Canonical representative: unchanged over ℤ, in `[0, n)` over ℤ/n.
    pub fn reduce(&self, x: T) -> T {
        match self {
            RingSpec::Integers => x,
            RingSpec::Modulo(n) => x.mod_floor(n),
        }
    }

    pub fn is_unit(&self, x: &T) -> bool {
        match self {
            RingSpec::Integers => x.abs().is_one(),
            RingSpec::Modulo(n) => x.gcd(n).is_one(),
        }
    }

    pub fn ensure_same(&self, other: &Self) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }
}

impl<T: Scalar> fmt::Display for RingSpec<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integers => write!(f, "Z"),
            RingSpec::Modulo(n) => write!(f, "Z/{n}"),
        }
    }
}
