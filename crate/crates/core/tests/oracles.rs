//! Library results against brute-force enumeration and minors.

mod common;

use common::*;
use freeab::adelman::{hom_group, ChainObject};
use freeab::definable::omega_member;
use freeab::fpfunctor::{evaluate_chain, evaluate_fp};
use freeab::random;
use freeab::{snf, solve_linear, FpModule, Matrix, RingSpec};
use rand::Rng;

const KMAX: i64 = 12;

fn factors_of(m: &FpModule<i64>) -> Vec<i64> {
    let f = m.invariant_factors().to_vec();
    assert!(f.iter().all(|&d| d > 0), "finite module expected, got {m}");
    f
}

/// Finite test modules compatible with the ring: divisors of n over ℤ/n.
fn finite_modules(ring: &RingSpec<i64>) -> Vec<Vec<i64>> {
    match ring {
        RingSpec::Integers => vec![vec![], vec![2], vec![3], vec![4], vec![2, 2], vec![6], vec![2, 4]],
        RingSpec::Modulo(n) => {
            let mut out = vec![vec![]];
            for d in 2..=*n {
                if n % d == 0 {
                    out.push(vec![d]);
                }
            }
            out.push(vec![2, *n]);
            out
        }
    }
}

#[test]
fn chain_evaluation_matches_enumeration() {
    let mut rng = random::seeded(101);
    for _ in 0..60 {
        let ring: RingSpec<i64> = random::ring(&mut rng);
        let x = random::chain(&mut rng, &ring, 2, 3);
        for moduli in finite_modules(&ring) {
            let m = FpModule::from_invariant_factors(ring.clone(), &moduli);
            let got = factors_of(&evaluate_chain(&x, &m).unwrap());
            let want = brute_chain(&x, &Finite::new(&moduli), KMAX);
            assert_eq!(profile_of_factors(&got, KMAX), want, "{x} at {moduli:?}");
            assert_eq!(
                omega_member(&x, &m).unwrap(),
                brute_omega(&x, &Finite::new(&moduli)),
                "{x} at {moduli:?}"
            );
        }
    }
}

#[test]
fn square_evaluation_matches_enumeration() {
    let mut rng = random::seeded(202);
    for _ in 0..60 {
        let ring: RingSpec<i64> = random::ring(&mut rng);
        let s = random::square(&mut rng, &ring, 2, 3);
        for moduli in finite_modules(&ring) {
            let m = FpModule::from_invariant_factors(ring.clone(), &moduli);
            let got = factors_of(&evaluate_fp(&s, &m).unwrap());
            let want = brute_square(&s, &Finite::new(&moduli), KMAX);
            assert_eq!(profile_of_factors(&got, KMAX), want, "{s:?} at {moduli:?}");
        }
    }
}

#[test]
fn example_chain_by_enumeration() {
    let z = integers();
    let x = ChainObject::new(
        Matrix::from_i64(z.clone(), 2, 1, &[-1, 2]).unwrap(),
        Matrix::from_i64(z, 1, 2, &[0, -1]).unwrap(),
    )
    .unwrap();
    assert!(brute_omega(&x, &Finite::new(&[2])));
    assert!(brute_omega(&x, &Finite::new(&[2, 2])));
    assert!(!brute_omega(&x, &Finite::new(&[3])));
    assert!(!brute_omega(&x, &Finite::new(&[4])));
    // the value at Z/4 is Z/2
    assert_eq!(brute_chain(&x, &Finite::new(&[4]), 4), profile_of_factors(&[2], 4));
}

#[test]
fn hom_group_order_matches_enumeration() {
    let mut rng = random::seeded(303);
    let mut nontrivial = 0;
    let mut checked = 0;
    for case in 0..300 {
        let n = [2i64, 3, 4][case % 3];
        let ring = RingSpec::modulo(n).unwrap();
        let x = random::chain(&mut rng, &ring, 2, 3);
        let y = random::chain(&mut rng, &ring, 2, 3);
        let cells = x.ranks()[1] * y.ranks()[1]
            + x.ranks()[0] * y.ranks()[0]
            + x.ranks()[2] * y.ranks()[2];
        if cells > 7 {
            continue;
        }
        checked += 1;
        let h = hom_group(&x, &y).unwrap();
        let (all, null) = brute_hom_counts(&x, &y, n);
        assert_eq!(all % null, 0);
        let order = (all / null) as i64;
        assert_eq!(h.order(), Some(order), "Hom({x}, {y}) over Z/{n}");
        if order > 1 {
            nontrivial += 1;
        }
    }
    assert!(checked >= 60 && nontrivial >= 10, "{checked} checked, {nontrivial} nontrivial");
}

#[test]
fn snf_matches_minors() {
    let mut rng = random::seeded(404);
    for _ in 0..150 {
        let r = rng.gen_range(0..=5);
        let c = rng.gen_range(0..=5);
        let a = random::matrix::<i64, _>(&mut rng, &integers(), r, c, 20);
        let res = snf(&a);
        assert_eq!(res.diagonal(), smith_invariants_by_minors(&rows(&a), r, c), "{a}");
    }
}

#[test]
fn modular_solve_matches_residue_enumeration() {
    let mut rng = random::seeded(505);
    for _ in 0..150 {
        let n = [2i64, 4, 6, 9][rng.gen_range(0..4)];
        let ring = RingSpec::modulo(n).unwrap();
        let r = rng.gen_range(1..=3);
        let c = rng.gen_range(0..=3);
        let a = random::matrix::<i64, _>(&mut rng, &ring, r, c, 9);
        let b = random::matrix::<i64, _>(&mut rng, &ring, r, 1, 9);
        let finite = Finite::new(&[n]);
        let target: Vec<i64> = rows(&b).into_iter().map(|row| row[0]).collect();
        let solvable = finite
            .power(c)
            .iter()
            .any(|x| finite.apply(&rows(&a), c, x) == target);
        let got = solve_linear(&a, &b).unwrap();
        assert_eq!(got.is_some(), solvable, "{a} x = {b} mod {n}");
        if let Some(x) = got {
            assert_eq!(a.mul(&x), b);
        }
    }
}

#[test]
fn integer_solve_finds_planted_solutions() {
    let mut rng = random::seeded(606);
    for _ in 0..150 {
        let r = rng.gen_range(1..=4);
        let c = rng.gen_range(1..=4);
        let a = random::matrix::<i64, _>(&mut rng, &integers(), r, c, 6);
        let x0 = random::matrix::<i64, _>(&mut rng, &integers(), c, 2, 6);
        let b = a.mul(&x0);
        let x = solve_linear(&a, &b).unwrap().expect("planted solution exists");
        assert_eq!(a.mul(&x), b);
        // perturbing one entry by a value the row gcd does not divide is unsolvable
        let g = rows(&a)[0].iter().fold(0, |acc, &v| gcd(acc, v));
        if g > 1 {
            let mut b2 = b.clone();
            b2.set(0, 0, b.get(0, 0) + 1);
            assert!(solve_linear(&a, &b2).unwrap().is_none());
        }
    }
}

#[test]
fn presented_modules_match_enumeration() {
    // (Z/n)^r modulo the span of the relation columns, counted directly
    let mut rng = random::seeded(707);
    for _ in 0..80 {
        let n = [2i64, 3, 4, 6][rng.gen_range(0..4)];
        let ring = RingSpec::modulo(n).unwrap();
        let r = rng.gen_range(0..=3);
        let k = rng.gen_range(0..=3);
        let rel = random::matrix::<i64, _>(&mut rng, &ring, r, k, 5);
        let m = FpModule::presented(rel.clone());
        let finite = Finite::new(&vec![n; r]);
        let whole: std::collections::HashSet<Elem> = finite.power(1).into_iter().collect();
        let coeffs: std::collections::HashSet<Elem> = Finite::new(&vec![n; k]).power(1).into_iter().collect();
        // span of the columns: images of all coefficient vectors under rel, one copy of (Z/n)^r
        let span: std::collections::HashSet<Elem> = coeffs
            .iter()
            .map(|c| {
                (0..r)
                    .map(|i| (0..k).map(|j| rel.get(i, j) * c[j]).sum::<i64>().rem_euclid(n))
                    .collect()
            })
            .collect();
        let want = finite.quotient_profile(&whole, &span, KMAX);
        assert_eq!(profile_of_factors(&factors_of(&m), KMAX), want, "{rel} mod {n}");
    }
}
