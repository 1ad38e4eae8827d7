//! Exact polynomial-field algebra on the unit 7-ball.
//!
//! Every integral of a polynomial over `B⁷` or `S⁶` is a rational multiple
//! of `π³`, so the whole chain — monomial integrals, the equivalent pair
//! inner product with its boundary traces, the wave generator, and the
//! dissipativity margin — can be evaluated in exact rational arithmetic.
//! The headline test: for every real polynomial pair `u`,
//!
//! ```text
//! (L̃u | u)_H + ½ (u | u)_H ≤ 0,
//! ```
//!
//! exactly, term by term, with no floating-point round-off to hide behind.

pub mod flow;
pub mod inner;
pub mod integrals;
pub mod poly;

pub use flow::{apply_ltilde, dissipativity_margin, margin_sweep, random_pair, SweepSample};
pub use inner::{equivalence_sample, inner_h, sobolev_norm_sq};
pub use integrals::{
    integral_ball, integral_sphere, monomial_integral_ball, monomial_integral_sphere, ExactScalar,
};
pub use poly::{MultiPoly7, PairField, DIM};

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

/// Exact rational scalar type used throughout.
pub type Q = BigRational;

#[derive(Debug, Error)]
pub enum PolyfieldError {
    #[error("the zero field has no norm ratio")]
    ZeroField,
}

/// Rational from an integer.
pub(crate) fn q(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational from numerator and denominator.
pub(crate) fn qr(num: i64, den: i64) -> Q {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact factorial.
pub(crate) fn factorial(n: u64) -> BigInt {
    (1..=n).map(BigInt::from).product()
}
