//! Closed-form objects for the focusing cubic wave equation
//! `u_tt - Δu = u³` in seven space dimensions:
//!
//! * the constant-in-space ODE blowup and the explicit self-similar profile
//!   `4/(1 + |ξ|²)` ([`blowup`]),
//! * the Lorentz-boosted profile family parametrized by rapidity `a ∈ ℝ⁷`
//!   ([`boost`]),
//! * the explicit symmetry-induced eigenmodes of the linearized similarity
//!   flow, both as functions on the ball ([`pairs`]) and in radial form per
//!   spherical-harmonic sector ([`radial`]).
//!
//! Everything here is analytic: values, gradients, and Hessians come from
//! closed-form rational expressions, so residual checks hold to machine
//! precision rather than discretization accuracy.

pub mod blowup;
pub mod boost;
pub mod pairs;
pub mod radial;

/// Number of space dimensions.
pub const DIM: usize = 7;

/// A two-component state `(u₁, u₂)` of the first-order similarity system.
pub type Pair = (f64, f64);

/// Euclidean dot product on ℝ⁷.
pub(crate) fn dot(x: &[f64; DIM], y: &[f64; DIM]) -> f64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

/// Squared Euclidean norm on ℝ⁷.
pub(crate) fn norm_sq(x: &[f64; DIM]) -> f64 {
    dot(x, x)
}
