//! The integer scalar abstraction every construction is generic over.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Exact signed integers: `i64`, `i128` and `num_bigint::BigInt` all qualify.
///
/// Fixed-width types are fine for small inputs but the elimination steps can
/// grow intermediate entries, so `BigInt` is the safe default.
pub trait Scalar:
    Integer + Signed + Clone + Debug + Display + Hash + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Integer + Signed + Clone + Debug + Display + Hash + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}

/// Shorthand for lifting a small literal into any scalar type.
pub fn int<T: Scalar>(v: i64) -> T {
    <T as FromPrimitive>::from_i64(v).expect("i64 fits every scalar type")
}

/// Returns a unit `u` modulo `n` with `u * d ≡ gcd(d, n) (mod n)`.
pub(crate) fn unit_normalizer<T: Scalar>(d: &T, n: &T) -> T {
    let g = d.gcd(n);
    if g.is_zero() {
        return T::one();
    }
    let d_red = d.div_floor(&g).mod_floor(n);
    let n_red = n.div_floor(&g);
    if n_red.is_one() {
        return T::one();
    }
    // d_red is invertible modulo n_red
    let ext = d_red.extended_gcd(&n_red);
    let mut u = ext.x.mod_floor(&n_red);
    while !u.gcd(n).is_one() {
        u = u + n_red.clone();
    }
    u
}
