//! Exact rational scalars, univariate polynomials and fraction-free matrix
//! algebra.

mod matrix;
mod poly;
mod rational;
mod sample;

pub use matrix::{Matrix, PolyMatrix, RatMatrix, Ring};
pub use poly::{Order, UniPoly};
pub use rational::Rational;
pub use sample::{RationalSampler, DEFAULT_BYTES, DEFAULT_SEED};
