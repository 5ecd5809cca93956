//! Exact rational computations for SU(2)-structures on five-dimensional Lie algebras.

pub mod exterior;
pub mod lie;
pub mod linalg;
pub mod su2;
pub mod torsion;
pub mod curvature;
pub mod cli;

pub use exterior::{rat, ratio, Form, Rational, TangentVector};
pub use lie::{validate_jacobi, Coframe5, StructureConstants};
