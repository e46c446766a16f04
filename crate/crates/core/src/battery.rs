//! Fixed lists of small modules used to compare objects by evaluation.
//!
//! Every object of the free abelian category is an additive functor, so two
//! objects agreeing on a battery agree on all direct sums of its members.

use crate::adelman::ChainObject;
use crate::error::Result;
use crate::fpfunctor::evaluate_chain;
use crate::module::FpModule;
use crate::ring::RingSpec;
use crate::scalar::{int, Scalar};

#[derive(Clone, Debug)]
pub struct Battery<T> {
    ring: RingSpec<T>,
    members: Vec<(String, FpModule<T>)>,
}

impl<T: Scalar> Battery<T> {
    pub fn new(ring: RingSpec<T>, members: Vec<(String, FpModule<T>)>) -> Result<Self> {
        for (_, m) in &members {
            ring.ensure_same(m.ring())?;
        }
        Ok(Battery { ring, members })
    }

    pub fn ring(&self) -> &RingSpec<T> {
        &self.ring
    }

    pub fn members(&self) -> &[(String, FpModule<T>)] {
        &self.members
    }

    pub fn modules(&self) -> impl Iterator<Item = &FpModule<T>> {
        self.members.iter().map(|(_, m)| m)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

fn named<T: Scalar>(ring: &RingSpec<T>, factors: &[i64]) -> (String, FpModule<T>) {
    let f: Vec<T> = factors.iter().map(|&d| int(d)).collect();
    let m = FpModule::from_invariant_factors(ring.clone(), &f);
    (m.to_string(), m)
}

/// `0, Z/2, (Z/2)^2, Z/3, Z/4, Z/6, Z, Z + Z/2` over the integers.
pub fn battery_b<T: Scalar>() -> Battery<T> {
    let ring = RingSpec::Integers;
    let members = [
        &[][..],
        &[2],
        &[2, 2],
        &[3],
        &[4],
        &[6],
        &[0],
        &[2, 0],
    ]
    .iter()
    .map(|f| named(&ring, f))
    .collect();
    Battery { ring, members }
}

/// [`battery_b`] over ℤ; over ℤ/n the zero module, every cyclic `Z/d` with
/// `d | n`, and `(Z/n)^2`.
pub fn standard_battery<T: Scalar>(ring: &RingSpec<T>) -> Battery<T> {
    let RingSpec::Modulo(n) = ring else {
        return battery_b();
    };
    let mut members = vec![named(ring, &[])];
    let n_i = n.to_i64().expect("modulus fits in i64 for a battery");
    for d in 2..=n_i {
        if n_i % d == 0 {
            members.push(named(ring, &[d]));
        }
    }
    members.push(named(ring, &[n_i, n_i]));
    Battery {
        ring: ring.clone(),
        members,
    }
}

/// Invariant factors of `x` evaluated at each battery member.
pub fn battery_profile<T: Scalar>(x: &ChainObject<T>, battery: &Battery<T>) -> Result<Vec<Vec<T>>> {
    battery
        .modules()
        .map(|m| Ok(evaluate_chain(x, m)?.invariant_factors().to_vec()))
        .collect()
}

pub fn battery_equivalent<T: Scalar>(
    x: &ChainObject<T>,
    y: &ChainObject<T>,
    battery: &Battery<T>,
) -> Result<bool> {
    Ok(battery_profile(x, battery)? == battery_profile(y, battery)?)
}
