//! Exact computations in Adelman's free abelian category over the finitely
//! generated free modules of ℤ or ℤ/n.
//!
//! The crate has three presentations of the same objects:
//!
//! * chains `A^{n1} -> A^{n2} -> A^{n3}` up to homotopy ([`ChainObject`]),
//! * commutative squares presenting finitely presented functors ([`FpSquare`]),
//! * pairs of matrices cutting out definable classes of modules ([`DefinablePair`]),
//!
//! together with the conversions between them, evaluation at finitely
//! presented modules, membership tests and the arrow-reversing duality.
//!
//! Everything is generic over an exact integer [`Scalar`]; the `Big*`
//! aliases below fix it to [`num_bigint::BigInt`].

pub mod scalar;
pub mod error;
pub mod ring;
pub mod matrix;
pub mod snf;
pub mod lattice;
pub mod module;
pub mod snake;
mod linsys;
pub mod adelman;
pub mod fpfunctor;
pub mod definable;
pub mod battery;
pub mod random;
pub mod json;
pub mod selftest;

pub use adelman::{ChainMorphism, ChainObject};
pub use battery::{battery_b, battery_equivalent, standard_battery, Battery};
pub use definable::{DefinableFamily, DefinablePair, PairConvention};
pub use error::{Error, Result};
pub use fpfunctor::FpSquare;
pub use json::Workspace;
pub use matrix::Matrix;
pub use module::{subquotient, FpModule, Submodule};
pub use ring::RingSpec;
pub use scalar::{int, Scalar};
pub use snake::{snake_sequence, ModuleMap, SnakeSequence};
pub use snf::{snf, solve_linear, SnfResult};

use num_bigint::BigInt;

pub type BigRing = RingSpec<BigInt>;
pub type BigMatrix = Matrix<BigInt>;
pub type BigFpModule = FpModule<BigInt>;
pub type BigChainObject = ChainObject<BigInt>;
pub type BigChainMorphism = ChainMorphism<BigInt>;
pub type BigFpSquare = FpSquare<BigInt>;
pub type BigDefinablePair = DefinablePair<BigInt>;
pub type BigDefinableFamily = DefinableFamily<BigInt>;
pub type BigWorkspace = Workspace<BigInt>;
