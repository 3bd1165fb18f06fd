//! Engine, strategies, exact solver and regularity checks for unbiased
//! Avoider-Enforcer (and Maker-Breaker) games on the edges of `K_n`.
//!
//! Numeric checks are generic over [`Scalar`]; [`Rational`] is the exact default.

pub mod error;
pub mod game;
pub mod graph;
pub mod harness;
pub mod regularity;
pub mod scalar;
pub mod solver;
pub mod strategy;

pub use error::{Error, Result};
pub use scalar::{parse_rational, Scalar};

/// Exact rational used for densities, thresholds and bounds.
pub type Rational = num_rational::Ratio<i128>;
