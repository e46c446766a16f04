//! Independent oracles: brute-force enumeration of small finite modules and
//! determinantal divisors from minors. Nothing here calls the library's
//! elimination or lattice code.

#![allow(dead_code)]

use std::collections::HashSet;

use freeab::adelman::ChainObject;
use freeab::fpfunctor::FpSquare;
use freeab::{Matrix, RingSpec};

pub type Elem = Vec<i64>;

/// `⊕ ℤ/d_i` with every `d_i ≥ 1`.
#[derive(Clone, Debug)]
pub struct Finite {
    pub moduli: Vec<i64>,
}

impl Finite {
    pub fn new(moduli: &[i64]) -> Self {
        assert!(moduli.iter().all(|&d| d >= 1));
        Finite {
            moduli: moduli.to_vec(),
        }
    }

    pub fn order(&self) -> i64 {
        self.moduli.iter().product()
    }

    /// Every element of `M^power`, copies laid out one after another.
    pub fn power(&self, power: usize) -> Vec<Elem> {
        let mut out = vec![Vec::new()];
        for _ in 0..power {
            for &d in &self.moduli {
                out = out
                    .into_iter()
                    .flat_map(|e| {
                        (0..d).map(move |v| {
                            let mut e = e.clone();
                            e.push(v);
                            e
                        })
                    })
                    .collect();
            }
        }
        out
    }

    /// `x ↦ Ux` from `M^c` to `M^r`.
    pub fn apply(&self, u: &[Vec<i64>], cols: usize, x: &[i64]) -> Elem {
        let l = self.moduli.len();
        let mut y = Vec::with_capacity(u.len() * l);
        for row in u {
            for (k, &d) in self.moduli.iter().enumerate() {
                let mut s = 0i64;
                for j in 0..cols {
                    s += row[j] * x[j * l + k];
                }
                y.push(s.rem_euclid(d));
            }
        }
        y
    }

    fn scale(&self, c: i64, x: &[i64]) -> Elem {
        let l = self.moduli.len();
        x.iter()
            .enumerate()
            .map(|(i, v)| (c * v).rem_euclid(self.moduli[i % l]))
            .collect()
    }

    pub fn kernel(&self, u: &[Vec<i64>], rows: usize, cols: usize) -> HashSet<Elem> {
        let zero = vec![0; rows * self.moduli.len()];
        self.power(cols)
            .into_iter()
            .filter(|x| self.apply(u, cols, x) == zero)
            .collect()
    }

    pub fn image(&self, u: &[Vec<i64>], cols: usize, domain: &HashSet<Elem>) -> HashSet<Elem> {
        domain.iter().map(|x| self.apply(u, cols, x)).collect()
    }

    /// `|G[k]|` for `k = 1..=kmax`, where `G = K / (K ∩ I)`.
    pub fn quotient_profile(&self, k: &HashSet<Elem>, i: &HashSet<Elem>, kmax: i64) -> Vec<i64> {
        let meet: HashSet<&Elem> = k.iter().filter(|x| i.contains(*x)).collect();
        let m = meet.len() as i64;
        (1..=kmax)
            .map(|c| {
                let n = k
                    .iter()
                    .filter(|x| meet.contains(&self.scale(c, x)))
                    .count() as i64;
                assert_eq!(n % m, 0);
                n / m
            })
            .collect()
    }
}

/// `|G[k]|` for a finite group with these invariant factors.
pub fn profile_of_factors(factors: &[i64], kmax: i64) -> Vec<i64> {
    (1..=kmax)
        .map(|k| factors.iter().map(|&d| gcd(k, d)).product())
        .collect()
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn rows(m: &Matrix<i64>) -> Vec<Vec<i64>> {
    m.lift().to_rows()
}

/// `Ker M(m2) / (Ker M(m2) ∩ Im M(m1))` by enumeration.
pub fn brute_chain(x: &ChainObject<i64>, m: &Finite, kmax: i64) -> Vec<i64> {
    let [n1, n2, n3] = x.ranks();
    let ker = m.kernel(&rows(x.m2()), n3, n2);
    let all: HashSet<Elem> = m.power(n1).into_iter().collect();
    let im = m.image(&rows(x.m1()), n1, &all);
    m.quotient_profile(&ker, &im, kmax)
}

/// `Ker M(b) / M(f)(Ker M(a))` by enumeration.
pub fn brute_square(s: &FpSquare<i64>, m: &Finite, kmax: i64) -> Vec<i64> {
    let [x1, x2, y1, y2] = s.ranks();
    let ker_b = m.kernel(&rows(s.b()), y1, x1);
    let ker_a = m.kernel(&rows(s.a()), y2, x2);
    let im = m.image(&rows(s.f()), x2, &ker_a);
    m.quotient_profile(&ker_b, &im, kmax)
}

/// `Ker M(m2) ⊆ Im M(m1)` by enumeration.
pub fn brute_omega(x: &ChainObject<i64>, m: &Finite) -> bool {
    let [n1, n2, n3] = x.ranks();
    let ker = m.kernel(&rows(x.m2()), n3, n2);
    let all: HashSet<Elem> = m.power(n1).into_iter().collect();
    let im = m.image(&rows(x.m1()), n1, &all);
    ker.is_subset(&im)
}

fn all_matrices(n: i64, rows: usize, cols: usize) -> Vec<Vec<Vec<i64>>> {
    Finite::new(&[n])
        .power(rows * cols)
        .into_iter()
        .map(|e| e.chunks(cols.max(1)).map(<[i64]>::to_vec).take(rows).collect())
        .map(|m: Vec<Vec<i64>>| if cols == 0 { vec![Vec::new(); rows] } else { m })
        .collect()
}

fn mul(a: &[Vec<i64>], b: &[Vec<i64>], inner: usize, cols: usize, n: i64) -> Vec<Vec<i64>> {
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum::<i64>().rem_euclid(n))
                .collect()
        })
        .collect()
}

fn add(a: &[Vec<i64>], b: &[Vec<i64>], n: i64) -> Vec<Vec<i64>> {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| (x + y).rem_euclid(n)).collect())
        .collect()
}

/// `(|A|, |A ∩ N|)` where `A` is the set of middle components of commuting
/// triples `X → Y` over ℤ/n and `N` the set `{g1·s + t·f2}`.
pub fn brute_hom_counts(x: &ChainObject<i64>, y: &ChainObject<i64>, n: i64) -> (usize, usize) {
    let [x1, x2, x3] = x.ranks();
    let [y1, y2, y3] = y.ranks();
    let (f1, f2) = (rows(x.m1()), rows(x.m2()));
    let (g1, g2) = (rows(y.m1()), rows(y.m2()));
    let a1s = all_matrices(n, y1, x1);
    let a3s = all_matrices(n, y3, x3);
    let mut middles = HashSet::new();
    for a2 in all_matrices(n, y2, x2) {
        let left_ok = a1s
            .iter()
            .any(|a1| mul(&g1, a1, y1, x1, n) == mul(&a2, &f1, x2, x1, n));
        let right_ok = a3s
            .iter()
            .any(|a3| mul(a3, &f2, x3, x2, n) == mul(&g2, &a2, y2, x2, n));
        if left_ok && right_ok {
            middles.insert(a2);
        }
    }
    let mut null = HashSet::new();
    for s in all_matrices(n, y1, x2) {
        for t in all_matrices(n, y2, x3) {
            null.insert(add(&mul(&g1, &s, y1, x2, n), &mul(&t, &f2, x3, x2, n), n));
        }
    }
    let meet = middles.iter().filter(|a| null.contains(*a)).count();
    (middles.len(), meet)
}

/// Determinant by cofactor expansion.
pub fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    let mut total = 0;
    for j in 0..n {
        if m[0][j] == 0 {
            continue;
        }
        let minor: Vec<Vec<i128>> = m[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect())
            .collect();
        let sign = if j % 2 == 0 { 1 } else { -1 };
        total += sign * m[0][j] * det(&minor);
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Smith invariants `d_k = D_k / D_{k-1}` where `D_k` is the gcd of all k×k minors.
pub fn smith_invariants_by_minors(a: &[Vec<i64>], rows: usize, cols: usize) -> Vec<i64> {
    let mut out = Vec::new();
    let mut prev: i128 = 1;
    for k in 1..=rows.min(cols) {
        let mut g: i128 = 0;
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let minor: Vec<Vec<i128>> = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| a[i][j] as i128).collect())
                    .collect();
                let d = det(&minor).abs();
                let (mut x, mut y) = (g, d);
                while y != 0 {
                    (x, y) = (y, x % y);
                }
                g = x;
            }
        }
        if g == 0 {
            break;
        }
        out.push((g / prev) as i64);
        prev = g;
    }
    out
}

pub fn integers() -> RingSpec<i64> {
    RingSpec::Integers
}
