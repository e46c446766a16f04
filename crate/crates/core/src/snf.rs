//! Smith normal form and the linear-algebra decisions built on it.
//!
//! Everything is computed over ℤ. Matrices over ℤ/n are lifted, and systems
//! over ℤ/n get `n·I` appended so that one integer code path decides both.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::RingSpec;
use crate::scalar::{unit_normalizer, Scalar};

/// `p · m · q = s` with `s` diagonal, `d1 | d2 | ...` along the diagonal and
/// `p`, `q` invertible over the ring of `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult<T> {
    pub s: Matrix<T>,
    pub p: Matrix<T>,
    pub q: Matrix<T>,
    /// Number of nonzero diagonal entries.
    pub rank: usize,
}

impl<T: Scalar> SnfResult<T> {
    /// The nonzero diagonal entries, in order.
    pub fn diagonal(&self) -> Vec<T> {
        (0..self.rank).map(|i| self.s.get(i, i).clone()).collect()
    }
}

/// Smith normal form with deterministic pivoting.
///
/// The pivot of each stage is the entry of smallest absolute value in the
/// remaining block, ties broken by row-major position.
pub fn snf<T: Scalar>(m: &Matrix<T>) -> SnfResult<T> {
    let res = integer_snf(&m.lift());
    match m.ring() {
        RingSpec::Integers => res,
        ring @ RingSpec::Modulo(n) => {
            let mut p = res.p.reduce_into(ring);
            let q = res.q.reduce_into(ring);
            let mut diag = Vec::new();
            for i in 0..res.rank {
                let d = res.s.get(i, i).clone();
                let u = unit_normalizer(&d, n);
                p.scale_row(i, &u);
                let g = ring.reduce(d.gcd(n));
                if !g.is_zero() {
                    diag.push(g);
                }
            }
            let s = Matrix::diagonal(ring.clone(), m.rows(), m.cols(), &diag);
            SnfResult {
                rank: diag.len(),
                s,
                p,
                q,
            }
        }
    }
}

fn integer_snf<T: Scalar>(m: &Matrix<T>) -> SnfResult<T> {
    let ring = RingSpec::Integers;
    let (rows, cols) = m.shape();
    let mut a = m.clone();
    let mut p = Matrix::identity(ring.clone(), rows);
    let mut q = Matrix::identity(ring, cols);
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = smallest_entry(&a, (t..rows).flat_map(|i| (t..cols).map(move |j| (i, j))))
        else {
            break;
        };
        a.swap_rows(t, pi);
        p.swap_rows(t, pi);
        a.swap_cols(t, pj);
        q.swap_cols(t, pj);
        loop {
            let pivot = a.get(t, t).clone();
            for i in t + 1..rows {
                let quo = a.get(i, t).clone() / pivot.clone();
                if !quo.is_zero() {
                    let c = -quo;
                    a.add_row_multiple(i, t, &c);
                    p.add_row_multiple(i, t, &c);
                }
            }
            for j in t + 1..cols {
                let quo = a.get(t, j).clone() / pivot.clone();
                if !quo.is_zero() {
                    let c = -quo;
                    a.add_col_multiple(j, t, &c);
                    q.add_col_multiple(j, t, &c);
                }
            }
            let cross = (t + 1..rows)
                .map(|i| (i, t))
                .chain((t + 1..cols).map(|j| (t, j)));
            if let Some((i, j)) = smallest_entry(&a, cross) {
                // a remainder survived: it becomes the new, smaller pivot
                a.swap_rows(t, i);
                p.swap_rows(t, i);
                a.swap_cols(t, j);
                q.swap_cols(t, j);
                continue;
            }
            let offender = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !(a.get(i, j).clone() % pivot.clone()).is_zero())
            });
            match offender {
                Some(i) => {
                    let one = T::one();
                    a.add_row_multiple(t, i, &one);
                    p.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if a.get(t, t).is_negative() {
            let minus = -T::one();
            a.scale_row(t, &minus);
            p.scale_row(t, &minus);
        }
        t += 1;
    }
    SnfResult {
        s: a,
        p,
        q,
        rank: t,
    }
}

/// Position of the nonzero entry of least absolute value among `cells`,
/// first in iteration order on ties.
fn smallest_entry<T: Scalar>(
    a: &Matrix<T>,
    cells: impl Iterator<Item = (usize, usize)>,
) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), T)> = None;
    for (i, j) in cells {
        let v = a.get(i, j);
        if v.is_zero() {
            continue;
        }
        let abs = v.abs();
        if best.as_ref().map_or(true, |(_, b)| abs < *b) {
            best = Some(((i, j), abs));
        }
    }
    best.map(|(pos, _)| pos)
}

/// A ℤ-basis (as columns) of `{x ∈ ℤ^c : m x = 0}`; `m` is read over ℤ.
pub fn integer_kernel<T: Scalar>(m: &Matrix<T>) -> Matrix<T> {
    let res = integer_snf(&m.lift());
    res.q.col_slice(res.rank..m.cols())
}

/// Generators (as integer columns) of `{x : m x = 0}` over the ring of `m`.
/// Over ℤ/n the generators are integer lifts and include `n·e_i`.
pub fn kernel_generators<T: Scalar>(m: &Matrix<T>) -> Matrix<T> {
    match m.ring() {
        RingSpec::Integers => integer_kernel(m),
        RingSpec::Modulo(n) => {
            let lifted = m.lift();
            let ni = Matrix::scalar(RingSpec::Integers, m.rows(), n.clone());
            let aug = Matrix::hstack(&[&lifted, &ni]).expect("same rows");
            integer_kernel(&aug).row_slice(0..m.cols())
        }
    }
}

/// Some `x` with `a·x = b` over the ring, or `None` if the system is unsolvable.
pub fn solve_linear<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>) -> Result<Option<Matrix<T>>> {
    a.ring().ensure_same(b.ring())?;
    if a.rows() != b.rows() {
        return Err(Error::Dimension(format!(
            "system has {} equations but right-hand side has {} rows",
            a.rows(),
            b.rows()
        )));
    }
    let ring = a.ring().clone();
    let (lhs, unknowns) = match &ring {
        RingSpec::Integers => (a.clone(), a.cols()),
        RingSpec::Modulo(n) => {
            let ni = Matrix::scalar(RingSpec::Integers, a.rows(), n.clone());
            (Matrix::hstack(&[&a.lift(), &ni])?, a.cols())
        }
    };
    let Some(x) = solve_integer(&lhs, &b.lift()) else {
        return Ok(None);
    };
    Ok(Some(x.row_slice(0..unknowns).reduce_into(&ring)))
}

fn solve_integer<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>) -> Option<Matrix<T>> {
    let res = integer_snf(a);
    let pb = res.p.mul(b);
    let mut y = Matrix::zeros(RingSpec::Integers, a.cols(), b.cols());
    for k in 0..b.cols() {
        for i in 0..a.rows() {
            let v = pb.get(i, k);
            if i < res.rank {
                let d = res.s.get(i, i);
                if !(v.clone() % d.clone()).is_zero() {
                    return None;
                }
                y.set(i, k, v.clone() / d.clone());
            } else if !v.is_zero() {
                return None;
            }
        }
    }
    Some(res.q.mul(&y))
}

/// Invariant factors of the ℤ-module `ℤ^k / (column span of rel)`, `rel` of shape `k x m`:
/// nonunit diagonal entries ascending, then one `0` per free summand.
pub(crate) fn cokernel_invariants<T: Scalar>(rel: &Matrix<T>) -> Vec<T> {
    let res = integer_snf(&rel.lift());
    let mut out: Vec<T> = res
        .diagonal()
        .into_iter()
        .filter(|d| !d.is_one())
        .collect();
    out.extend(std::iter::repeat(T::zero()).take(rel.rows() - res.rank));
    out
}
