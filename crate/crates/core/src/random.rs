//! Seeded random instances for property suites.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::adelman::{morphism_generators, ChainMorphism, ChainObject};
use crate::fpfunctor::FpSquare;
use crate::matrix::Matrix;
use crate::module::FpModule;
use crate::ring::RingSpec;
use crate::scalar::{int, Scalar};
use crate::snake::ModuleMap;
use crate::snf::{integer_kernel, kernel_generators};

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// One of ℤ, ℤ/4, ℤ/6.
pub fn ring<T: Scalar, R: Rng>(rng: &mut R) -> RingSpec<T> {
    match rng.gen_range(0..3) {
        0 => RingSpec::Integers,
        1 => RingSpec::Modulo(int(4)),
        _ => RingSpec::Modulo(int(6)),
    }
}

/// Entries uniform in `[-bound, bound]`.
pub fn matrix<T: Scalar, R: Rng>(
    rng: &mut R,
    ring: &RingSpec<T>,
    rows: usize,
    cols: usize,
    bound: i64,
) -> Matrix<T> {
    let entries = (0..rows * cols)
        .map(|_| int(rng.gen_range(-bound..=bound)))
        .collect();
    Matrix::new(ring.clone(), rows, cols, entries).expect("entry count matches")
}

pub fn chain<T: Scalar, R: Rng>(
    rng: &mut R,
    ring: &RingSpec<T>,
    max_rank: usize,
    bound: i64,
) -> ChainObject<T> {
    let [n1, n2, n3] = [0; 3].map(|_| rng.gen_range(0..=max_rank));
    let m1 = matrix(rng, ring, n2, n1, bound);
    let m2 = matrix(rng, ring, n3, n2, bound);
    ChainObject::new(m1, m2).expect("ranks fit")
}

/// A commuting square `b·f = g·a`.
///
/// Built as `a = h·f + k·v`, `b = g·h + w·l` with `g·k = 0` and `l·f = 0`,
/// so that squares which do not factor through a single `h` also occur.
pub fn square<T: Scalar, R: Rng>(
    rng: &mut R,
    ring: &RingSpec<T>,
    max_rank: usize,
    bound: i64,
) -> FpSquare<T> {
    let [x1, x2, y1, y2] = [0; 4].map(|_| rng.gen_range(0..=max_rank));
    let f = matrix(rng, ring, x1, x2, bound);
    let g = matrix(rng, ring, y1, y2, bound);
    let h = matrix(rng, ring, y2, x1, bound);
    let k = kernel_generators(&g).reduce_into(ring);
    let l = kernel_generators(&f.transpose()).reduce_into(ring).transpose();
    let v = matrix(rng, ring, k.cols(), x2, 1);
    let w = matrix(rng, ring, y1, l.rows(), 1);
    let a = h.mul(&f).add(&k.mul(&v));
    let b = g.mul(&h).add(&w.mul(&l));
    FpSquare::new(f, a, b, g).expect("square commutes by construction")
}

/// A random integer combination of the generators of commuting triples.
pub fn morphism<T: Scalar, R: Rng>(
    rng: &mut R,
    x: &ChainObject<T>,
    y: &ChainObject<T>,
) -> ChainMorphism<T> {
    let gens = morphism_generators(x, y).expect("same ring");
    let mut u = ChainMorphism::zero(x, y);
    for g in &gens {
        let c: i64 = rng.gen_range(-2..=2);
        if c != 0 {
            let [a1, a2, a3] = g.components();
            let scaled = ChainMorphism::new(
                x.clone(),
                y.clone(),
                [a1.scale(&int(c)), a2.scale(&int(c)), a3.scale(&int(c))],
            )
            .expect("multiples of commuting triples commute");
            u = u.add(&scaled).expect("same endpoints");
        }
    }
    u
}

/// A finitely presented module on at most `max_gens` generators; may be infinite over ℤ.
pub fn module<T: Scalar, R: Rng>(rng: &mut R, ring: &RingSpec<T>, max_gens: usize) -> FpModule<T> {
    let gens = rng.gen_range(0..=max_gens);
    let rels = rng.gen_range(0..=max_gens);
    FpModule::presented(matrix(rng, ring, gens, rels, 4))
}

/// A composable pair `f: M1 → M2`, `g: M2 → M3` of well-defined module maps.
///
/// The map matrices are random; `M1` is presented by relations drawn from the
/// lattice `{x : Ax ∈ rel(M2)}` and `M3` by relations containing `B·rel(M2)`.
pub fn module_maps<T: Scalar, R: Rng>(
    rng: &mut R,
    ring: &RingSpec<T>,
    max_gens: usize,
) -> (ModuleMap<T>, ModuleMap<T>) {
    let z = RingSpec::Integers;
    let m2 = module(rng, ring, max_gens);
    let p2 = m2.ambient_rank();
    let rel2 = m2.integer_relations();

    let p1 = rng.gen_range(0..=max_gens);
    let a = matrix(rng, &z, p2, p1, 3);
    let lattice = integer_kernel(&Matrix::hstack(&[&a, &rel2.neg()]).expect("same rows"))
        .row_slice(0..p1);
    let k1 = rng.gen_range(0..=lattice.cols() + 1);
    let rel1 = lattice.mul(&matrix(rng, &z, lattice.cols(), k1, 2));
    let m1 = FpModule::presented(rel1.reduce_into(ring));

    let p3 = rng.gen_range(0..=max_gens);
    let b = matrix(rng, &z, p3, p2, 3);
    let extra_cols = rng.gen_range(0..=2);
    let extra = matrix(rng, &z, p3, extra_cols, 4);
    let rel3 = Matrix::hstack(&[&b.mul(&rel2), &extra]).expect("same rows");
    let m3 = FpModule::presented(rel3.reduce_into(ring));

    let f = ModuleMap::new(m1, m2.clone(), a.reduce_into(ring)).expect("well defined by construction");
    let g = ModuleMap::new(m2, m3, b.reduce_into(ring)).expect("well defined by construction");
    (f, g)
}
