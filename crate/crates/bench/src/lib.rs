//! Shared fixtures for the criterion benchmarks.

use pairflip::catalecticant::{random_point, secant_point};
use pairflip::{ProjPoint, RatMatrix, Rational, RationalSampler, SecantWitness};

/// Dense `n × n` matrix of seeded random rationals.
pub fn random_matrix(n: usize, seed: u64) -> RatMatrix {
    let mut s = RationalSampler::with_seed(seed);
    RatMatrix::from_fn(n, n, |_, _| s.rational())
}

/// `n × n` matrix of rank `r`, built as a product of seeded `n × r` and `r × n` factors.
pub fn low_rank_matrix(n: usize, r: usize, seed: u64) -> RatMatrix {
    let mut s = RationalSampler::with_seed(seed);
    let left = RatMatrix::from_fn(n, r, |_, _| s.rational());
    let right = RatMatrix::from_fn(r, n, |_, _| s.rational());
    left.mul(&right).expect("shapes agree")
}

/// A point on `Σ_i` of the degree-`d` rational normal curve.
pub fn secant_fixture(d: i64, i: usize, seed: u64) -> ProjPoint {
    let mut s = RationalSampler::with_seed(seed);
    secant_point(d, &SecantWitness::random(i, &mut s)).expect("valid witness")
}

/// A generic point of `P^{d-2}`.
pub fn generic_fixture(d: i64, seed: u64) -> ProjPoint {
    random_point(d, &mut RationalSampler::with_seed(seed)).expect("d >= 3")
}

pub fn sigma(n: i64, d: i64) -> Rational {
    Rational::frac(n, d)
}
