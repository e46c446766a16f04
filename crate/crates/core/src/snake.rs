//! The six-term kernel/cokernel sequence of a composable pair of module maps.
//!
//! For `f: M1 -> M2` and `g: M2 -> M3` the sequence is
//!
//! ```text
//! 0 -> Ker f -> Ker gf -> Ker g -> Coker f -> Coker gf -> Coker g -> 0
//! ```
//!
//! with maps inclusion, `f`, projection, `g`, projection. Each term is kept as
//! a subquotient of the free module on its parent's generators so that
//! exactness can be checked directly.

use crate::error::{Error, Result};
use crate::lattice::{spans_contain, Subquotient};
use crate::matrix::Matrix;
use crate::module::FpModule;
use crate::ring::RingSpec;
use crate::scalar::Scalar;

/// A homomorphism of finitely presented modules, given on generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap<T> {
    src: FpModule<T>,
    dst: FpModule<T>,
    /// `dst.ambient_rank() x src.ambient_rank()` integer matrix.
    matrix: Matrix<T>,
}

impl<T: Scalar> ModuleMap<T> {
    /// Fails unless `matrix` sends the relations of `src` into those of `dst`.
    pub fn new(src: FpModule<T>, dst: FpModule<T>, matrix: Matrix<T>) -> Result<Self> {
        src.ring().ensure_same(dst.ring())?;
        if matrix.shape() != (dst.ambient_rank(), src.ambient_rank()) {
            return Err(Error::Dimension(format!(
                "map matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                dst.ambient_rank(),
                src.ambient_rank()
            )));
        }
        let matrix = matrix.lift();
        let pushed = matrix.mul(&src.integer_relations());
        if !spans_contain(&dst.integer_relations(), &pushed) {
            return Err(Error::Invariant(
                "matrix does not induce a well-defined module map".into(),
            ));
        }
        Ok(ModuleMap { src, dst, matrix })
    }

    /// Multiplication by `c` on a module.
    pub fn scalar(m: &FpModule<T>, c: T) -> Self {
        let matrix = Matrix::scalar(RingSpec::Integers, m.ambient_rank(), c);
        ModuleMap {
            src: m.clone(),
            dst: m.clone(),
            matrix,
        }
    }

    pub fn src(&self) -> &FpModule<T> {
        &self.src
    }

    pub fn dst(&self) -> &FpModule<T> {
        &self.dst
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.matrix
    }
}

#[derive(Clone, Debug)]
pub struct SnakeSequence<T> {
    /// `Ker f, Ker gf, Ker g, Coker f, Coker gf, Coker g`, canonicalized.
    pub modules: [FpModule<T>; 6],
    carriers: [Subquotient<T>; 6],
    /// The five connecting maps on ambient coordinates.
    maps: [Matrix<T>; 5],
}

pub fn snake_sequence<T: Scalar>(f: &ModuleMap<T>, g: &ModuleMap<T>) -> Result<SnakeSequence<T>> {
    if f.dst != g.src {
        return Err(Error::Dimension(
            "target of f is not the source of g".into(),
        ));
    }
    let m1 = Subquotient::of_module(&f.src);
    let m2 = Subquotient::of_module(&f.dst);
    let m3 = Subquotient::of_module(&g.dst);
    let fm = f.matrix.clone();
    let gm = g.matrix.clone();
    let gf = gm.mul(&fm);

    let ker_f = m1.kernel_of(&fm, &m2)?;
    let ker_gf = m1.kernel_of(&gf, &m3)?;
    let ker_g = m2.kernel_of(&gm, &m3)?;
    let coker_f = m2.modulo(&fm)?;
    let coker_gf = m3.modulo(&gf)?;
    let coker_g = m3.modulo(&gm)?;

    let id = |n: usize| Matrix::identity(RingSpec::Integers, n);
    let maps = [
        id(f.src.ambient_rank()),
        fm,
        id(f.dst.ambient_rank()),
        gm,
        id(g.dst.ambient_rank()),
    ];
    let carriers = [ker_f, ker_gf, ker_g, coker_f, coker_gf, coker_g];
    let modules = carriers.clone().map(|c| c.to_module().canonicalize());
    Ok(SnakeSequence {
        modules,
        carriers,
        maps,
    })
}

impl<T: Scalar> SnakeSequence<T> {
    /// Exactness at term `i` (0-based, counting the outer zeros as neighbours).
    pub fn is_exact_at(&self, i: usize) -> bool {
        assert!(i < 6, "the sequence has six terms");
        let here = &self.carriers[i];
        // image of the incoming map
        let incoming = if i == 0 {
            Subquotient::new(
                here.ring().clone(),
                Matrix::zeros(RingSpec::Integers, here.dim(), 0),
                here.denominator().clone(),
            )
            .expect("shapes agree")
        } else {
            self.carriers[i - 1]
                .image_in(&self.maps[i - 1], here)
                .expect("shapes agree")
        };
        // kernel of the outgoing map
        let outgoing = if i == 5 {
            here.clone()
        } else {
            here.kernel_of(&self.maps[i], &self.carriers[i + 1])
                .expect("shapes agree")
        };
        incoming.contained_in(&outgoing) && outgoing.contained_in(&incoming)
    }

    pub fn is_exact(&self) -> bool {
        (0..6).all(|i| self.is_exact_at(i))
    }

    /// Element counts of the six terms, when all are finite.
    pub fn orders(&self) -> Option<[T; 6]> {
        let v: Option<Vec<T>> = self.modules.iter().map(FpModule::order).collect();
        v.map(|v| v.try_into().expect("six terms"))
    }
}
