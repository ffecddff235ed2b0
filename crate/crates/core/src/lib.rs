//! Decides whether an arithmetic circuit's polynomial constraint system over
//! a prime field is underconstrained, overconstrained or exactly constrained.
//!
//! Constraint systems are classified by how their unknowns occur (precisely
//! linear, K-coefficient linear, higher-order) and dispatched to parametric
//! Gauss-Jordan elimination, an undetermined-coefficient input heuristic, or
//! Groebner-basis solving. Verdicts are graded `precisely` when they hold
//! unconditionally and `algebraic` when they rely on recorded nonzero-divisor
//! assumptions about the known inputs.

pub mod error;
pub mod field;
mod mont;
pub mod circuit;
pub mod poly;

pub use error::{Error, Result};
pub use field::{FieldElement, Prime, BN254_MODULUS};
pub use circuit::{CircuitClass, ConstraintClass, ConstraintSystem, SystemBuilder};
pub use poly::{Monomial, MonomialOrder, Polynomial, RationalFunction, VarId, VarKind};
