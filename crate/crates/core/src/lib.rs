//! Exact computations with Frobenius algebras.
//!
//! Starting from an algebra given by structure constants and a
//! nondegenerate counit, this crate builds the coproduct, converts between
//! modules and comodules, computes cotensor products and the cyclic
//! bimodule `D`, and evaluates the derived functors Ext, Cotor and
//! Hochschild cohomology, all over ℚ or GF(p) with exact arithmetic.

pub mod algebra;
pub mod cotensor;
pub mod error;
pub mod field;
pub mod frobenius;
pub mod homological;
pub mod io;
pub mod linalg;
pub mod modules;
pub mod par;
pub mod verify;

pub use algebra::{builtin, enveloping, AlgebraPresentation, Builtin, EnvelopingAlgebra};
pub use error::{Error, Result};
pub use field::{Field, Rational, Scalar};
pub use frobenius::{find_frobenius, frobenius_from_counit, FrobeniusData, SearchStrategy};
pub use linalg::{Matrix, Subspace};
pub use modules::{ComoduleRep, ModuleRep, Side};
pub use par::Execution;
