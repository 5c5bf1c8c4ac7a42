//! Bivariate means, the modified Bessel function I0, and numerical
//! verification of the sharp inequalities connecting them.
//!
//! The crate has three layers:
//!
//! * an evaluation core (special functions, means, quadrature, 1-D
//!   solvers), generic over the scalar type via [`Real`],
//! * an exact layer (coefficient tables, integer-indexed sequences) in
//!   arbitrary-precision rationals,
//! * a verification layer ([`registry`]) holding every inequality as a
//!   declarative case with a seeded sampling verifier, pinned to `f64`.

pub mod bessel;
pub mod coeffs;
pub mod error;
pub mod forms;
pub mod gamma;
pub mod means;
pub mod quadrature;
pub mod registry;
pub mod rng;
pub mod scalar;
pub mod sequences;
pub mod series;
pub mod sharp;
pub mod solver;

pub use error::{Error, Result};
pub use scalar::Real;

// Concrete f64 aliases for the generic core; the verification registry and
// the CLI work exclusively with these.
pub type SeriesConfig64 = bessel::SeriesConfig<f64>;
pub type QuadratureConfig64 = quadrature::QuadratureConfig<f64>;
pub type PositivePair64 = means::PositivePair<f64>;
pub type HalfLogParam64 = means::HalfLogParam<f64>;
pub type MeanKind64 = means::MeanKind<f64>;
pub type RatioKind64 = sharp::RatioKind<f64>;
pub type SolverResult64 = solver::SolverResult<f64>;
