//! Seeded property suites, run by the `selftest` command.

use rand::Rng;

use crate::adelman::{
    cokernel, image_factorization, is_isomorphism, is_null_homotopic, is_zero_object, kernel,
    morphisms_equal, prop24_factorization, ChainMorphism, ChainObject,
};
use crate::battery::{battery_b, battery_equivalent, standard_battery};
use crate::definable::{
    dual_chain, dual_fp, dual_morphism, dual_pair, family_member, from_pair, omega_member,
    to_pair, DefinableFamily, PairConvention,
};
use crate::error::Result;
use crate::fpfunctor::{
    evaluate_chain, evaluate_fp, functor_k, functor_k_inv, roundtrip_comparison, FpSquare,
};
use crate::matrix::Matrix;
use crate::module::FpModule;
use crate::random;
use crate::ring::RingSpec;
use crate::scalar::{int, Scalar};
use crate::snake::{snake_sequence, ModuleMap};
use crate::snf::snf;

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport {
            name,
            cases: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: Result<bool>, what: impl FnOnce() -> String) {
        self.cases += 1;
        match ok {
            Ok(true) => {}
            Ok(false) => self.failures.push(what()),
            Err(e) => self.failures.push(format!("{}: {e}", what())),
        }
    }
}

fn m<T: Scalar>(rows: usize, cols: usize, e: &[i64]) -> Matrix<T> {
    Matrix::from_i64(RingSpec::Integers, rows, cols, e).expect("literal shape")
}

fn example_chain<T: Scalar>() -> ChainObject<T> {
    ChainObject::new(m(2, 1, &[-1, 2]), m(1, 2, &[0, -1])).expect("literal chain")
}

fn example_square<T: Scalar>() -> FpSquare<T> {
    FpSquare::new(m(1, 1, &[1]), m(1, 1, &[2]), m(0, 1, &[]), m(0, 1, &[])).expect("literal square")
}

pub fn fixture_suite<T: Scalar>() -> SuiteReport {
    let mut r = SuiteReport::new("example fixture");
    let x = example_chain::<T>();
    let b = battery_b::<T>();
    r.check(battery_equivalent(&functor_k(&example_square()), &x, &b), || {
        "functor_k of the example square differs from the example chain".into()
    });
    let p = to_pair(&x, PairConvention::PaperRow);
    r.check(Ok(p.u() == &m(1, 2, &[-1, 2]) && p.v() == &m(2, 1, &[0, -1])), || {
        format!("paper-row pair is ({}, {})", p.u(), p.v())
    });
    for (i, (name, module)) in b.members().iter().enumerate() {
        let expected = i <= 2;
        r.check(omega_member(&x, module).map(|v| v == expected), || {
            format!("membership of {name} should be {expected}")
        });
    }
    r
}

pub fn equivalence_suite<T: Scalar, R: Rng>(rng: &mut R, count: usize) -> SuiteReport {
    let mut r = SuiteReport::new("square and chain evaluation agree");
    for i in 0..count {
        let ring = random::ring::<T, _>(rng);
        let module = random::module(rng, &ring, 2);
        if i % 2 == 0 {
            let sq = random::square(rng, &ring, 3, 3);
            let ok = evaluate_fp(&sq, &module)
                .and_then(|a| Ok(a.is_isomorphic(&evaluate_chain(&functor_k(&sq), &module)?)));
            r.check(ok, || format!("square case {i} over {ring}"));
        } else {
            let x = random::chain(rng, &ring, 3, 3);
            let ok = evaluate_chain(&x, &module)
                .and_then(|a| Ok(a.is_isomorphic(&evaluate_fp(&functor_k_inv(&x), &module)?)));
            r.check(ok, || format!("chain case {i} over {ring}"));
        }
    }
    r
}

pub fn roundtrip_suite<T: Scalar, R: Rng>(rng: &mut R, count: usize) -> SuiteReport {
    let mut r = SuiteReport::new("round-trip comparison is an isomorphism");
    for i in 0..count {
        let ring = random::ring::<T, _>(rng);
        let x = random::chain(rng, &ring, 3, 3);
        let ok = roundtrip_comparison(&x).map(|u| is_isomorphism(&u));
        r.check(ok, || format!("chain {i}: {x}"));
    }
    r
}

fn random_morphism<T: Scalar, R: Rng>(rng: &mut R, max_rank: usize) -> ChainMorphism<T> {
    let ring = random::ring::<T, _>(rng);
    let x = random::chain(rng, &ring, max_rank, 3);
    let y = random::chain(rng, &ring, max_rank, 3);
    random::morphism(rng, &x, &y)
}

pub fn abelian_suite<T: Scalar, R: Rng>(rng: &mut R, count: usize) -> SuiteReport {
    let mut r = SuiteReport::new("kernels, cokernels and images");
    for i in 0..count {
        let u = random_morphism::<T, _>(rng, 2);
        let k = kernel(&u);
        let c = cokernel(&u);
        r.check(k.then(&u).map(|ku| is_null_homotopic(&ku)), || {
            format!("kernel then u, case {i}")
        });
        r.check(u.then(&c).map(|uc| is_null_homotopic(&uc)), || {
            format!("u then cokernel, case {i}")
        });
        let ok = image_factorization(&u)
            .and_then(|f| morphisms_equal(&f.epi.then(&f.mono)?, &u));
        r.check(ok, || format!("image factorization, case {i}"));
        let id = ChainMorphism::identity(u.src());
        r.check(Ok(is_zero_object(kernel(&id).src())), || format!("kernel of identity, case {i}"));
        r.check(Ok(is_zero_object(cokernel(&id).dst())), || {
            format!("cokernel of identity, case {i}")
        });
        let x = u.src();
        let ok = image_factorization(&prop24_factorization(x).m)
            .and_then(|f| battery_equivalent(&f.image, x, &standard_battery(x.ring())));
        r.check(ok, || format!("image of the kernel-cokernel factorization, case {i}"));
    }
    r
}

fn check_snake<T: Scalar>(r: &mut SuiteReport, f: &ModuleMap<T>, g: &ModuleMap<T>, label: &str) {
    let s = match snake_sequence(f, g) {
        Ok(s) => s,
        Err(e) => {
            r.check(Err(e), || label.to_string());
            return;
        }
    };
    r.check(Ok(s.is_exact()), || format!("{label}: not exact"));
    if let Some([kf, kgf, kg, cf, cgf, cg]) = s.orders() {
        let lhs = kf * kg * cgf;
        let rhs = kgf * cf * cg;
        r.check(Ok(lhs == rhs), || format!("{label}: orders {lhs} != {rhs}"));
    }
}

pub fn snake_suite<T: Scalar, R: Rng>(rng: &mut R, count: usize) -> SuiteReport {
    let mut r = SuiteReport::new("six-term kernel-cokernel sequence");
    let z4 = FpModule::<T>::cyclic(RingSpec::Integers, int(4));
    let two = ModuleMap::scalar(&z4, int(2));
    check_snake(&mut r, &two, &two, "doubling on Z/4");
    for i in 0..count {
        let ring = random::ring::<T, _>(rng);
        let (f, g) = random::module_maps(rng, &ring, 3);
        check_snake(&mut r, &f, &g, &format!("case {i} over {ring}"));
    }
    r
}

pub fn duality_suite<T: Scalar, R: Rng>(rng: &mut R, count: usize) -> SuiteReport {
    let mut r = SuiteReport::new("duality");
    for i in 0..count {
        let u = random_morphism::<T, _>(rng, 2);
        let ring = u.src().ring().clone();
        let battery = standard_battery(&ring);
        let x = u.src();
        r.check(Ok(dual_chain(&dual_chain(x)) == *x), || format!("double dual chain {i}"));
        let p = to_pair(x, PairConvention::PaperRow);
        r.check(dual_pair(&p).and_then(|d| dual_pair(&d)).map(|dd| dd == p), || {
            format!("double dual pair {i}")
        });
        r.check(dual_pair(&p).map(|d| from_pair(&d) == dual_chain(x)), || {
            format!("dual pair against dual chain {i}")
        });
        let ok = battery_equivalent(
            &dual_chain(kernel(&u).src()),
            cokernel(&dual_morphism(&u)).dst(),
            &battery,
        );
        r.check(ok, || format!("dual of kernel against cokernel of dual, case {i}"));
        let sq = random::square(rng, &ring, 3, 3);
        let direct = dual_chain(&functor_k(&sq));
        r.check(battery_equivalent(&functor_k(&dual_fp(&sq)), &direct, &battery), || {
            format!("dual square against dual chain, case {i}")
        });
        r.check(
            battery_equivalent(&functor_k(&dual_fp(&dual_fp(&sq))), &functor_k(&sq), &battery),
            || format!("double dual square, case {i}"),
        );
    }
    r
}

pub fn closure_suite<T: Scalar, R: Rng>(rng: &mut R, count: usize) -> SuiteReport {
    let mut r = SuiteReport::new("definable classes are closed under finite sums");
    for i in 0..count {
        let ring = random::ring::<T, _>(rng);
        let size = rng.gen_range(0..=3);
        let members = (0..size).map(|_| random::chain(rng, &ring, 2, 2)).collect();
        let d = DefinableFamily::new(ring.clone(), members).expect("same ring");
        let a = random::module(rng, &ring, 2);
        let b = random::module(rng, &ring, 2);
        let ok = (|| {
            let sum = a.direct_sum(&b)?;
            Ok(family_member(&d, &sum)? == (family_member(&d, &a)? && family_member(&d, &b)?))
        })();
        r.check(ok, || format!("case {i} over {ring}"));
    }
    r
}

pub fn snf_suite<T: Scalar, R: Rng>(rng: &mut R, count: usize) -> SuiteReport {
    let mut r = SuiteReport::new("Smith normal form");
    let z = RingSpec::Integers;
    for i in 0..count {
        let rows = rng.gen_range(0..=6);
        let cols = rng.gen_range(0..=6);
        let a = random::matrix::<T, _>(rng, &z, rows, cols, 20);
        let res = snf(&a);
        r.check(Ok(res.p.mul(&a).mul(&res.q) == res.s), || format!("P·M·Q = S, case {i}"));
        let unimodular = |u: &Matrix<T>| {
            let d = snf(u).diagonal();
            d.len() == u.rows() && d.iter().all(|x| x.is_one())
        };
        r.check(Ok(unimodular(&res.p) && unimodular(&res.q)), || {
            format!("unimodular transforms, case {i}")
        });
        let d = res.diagonal();
        let chain = d.windows(2).all(|w| w[1].is_multiple_of(&w[0]))
            && d.iter().all(|x| x.is_positive())
            && d.len() == res.rank;
        r.check(Ok(chain), || format!("divisibility chain, case {i}"));
    }
    r
}

/// Every suite at the given size, from one seed.
pub fn run_all<T: Scalar>(seed: u64, count: usize) -> Vec<SuiteReport> {
    let mut rng = random::seeded(seed);
    vec![
        fixture_suite::<T>(),
        equivalence_suite::<T, _>(&mut rng, 2 * count),
        roundtrip_suite::<T, _>(&mut rng, count),
        abelian_suite::<T, _>(&mut rng, count),
        snake_suite::<T, _>(&mut rng, count),
        duality_suite::<T, _>(&mut rng, count),
        closure_suite::<T, _>(&mut rng, count),
        snf_suite::<T, _>(&mut rng, 5 * count),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes() {
        for report in run_all::<i64>(3, 4) {
            assert!(report.passed(), "{}: {:?}", report.name, report.failures);
            assert!(report.cases > 0);
        }
    }
}
