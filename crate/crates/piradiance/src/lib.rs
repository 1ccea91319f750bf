//! Dimensional π-invariants analysis over exact rational arithmetic,
//! applied to blackbody radiation.
//!
//! The crate has two halves. The exact half ([`rational`], [`matrix`],
//! [`dimension`], [`pi_solver`], [`scenario`]) builds dimensional
//! matrices from declared quantities and computes their rank, nullspace
//! and pinned π-invariants with no floating point involved. The numeric
//! half ([`numerics`], [`laws`], [`fit`]) instantiates the generalized
//! displacement law with pluggable universal functions, evaluates
//! spectra, derivatives and admissibility criteria, and re-derives the
//! (k, η) constant pairs from Stefan's constant and the displacement
//! constant.

pub mod dimension;
pub mod fit;
pub mod laws;
pub mod matrix;
pub mod numerics;
pub mod pi_solver;
pub mod rational;
pub mod scenario;

pub use dimension::{parse_dimension, Dimension, DimensionBasis, Quantity, QuantitySet};
pub use laws::{CriteriaReport, RadiationLaw, UniversalFunction};
pub use pi_solver::{nullspace_basis, solve_pinned, PiInvariant, PiSystem, PinSpec};
pub use rational::Rational;
