//! Spectral analysis of the radial mode operators on the backward lightcone.
//!
//! The crate answers, numerically and falsifiably, the questions the mode
//! stability argument reduces to:
//!
//! * [`scan`]: which `λ` in the closed right half-plane are eigenvalues of
//!   `T_ℓ(λ)` — a grid classification driven by the series recurrence in the
//!   [`recurrence`] crate, expected to find exactly the four symmetry modes
//!   `(ℓ, λ) ∈ {(0,1), (0,3), (1,0), (1,1)}`.
//! * [`heun`]: the change of variables `ρ = √(x/(2−x))` mapping the radial
//!   operators to Heun equations, connecting series-recurrence solutions
//!   back to radial profiles.
//! * [`frobenius`]: indicial exponents of the singular points, fixing which
//!   solution branches are admissible.
//! * [`nonhom`]: variation-of-parameters solves of `T_ℓ(λ)u = G` at the four
//!   eigenvalue points, whose forced singular behavior at `ρ = 1` rules out
//!   `C²[0,1]` solutions (algebraic multiplicity one).
//! * [`resolvent`]: the bounded solve of the free equation at `λ = 5/2`
//!   used for the dense-range argument.
//!
//! [`quad`] supplies the tanh–sinh quadrature underlying the integral
//! representations.

pub mod frobenius;
pub mod heun;
pub mod nonhom;
pub mod operator;
pub mod quad;
pub mod resolvent;
pub mod scan;

use thiserror::Error;

pub type C64 = num_complex::Complex<f64>;

#[derive(Debug, Error)]
pub enum ScanError {
    #[error("ρ = {rho} is outside the open interval (0, 1)")]
    Domain { rho: f64 },
    #[error("endpoint {endpoint} is not a supported singular point (use 0 or 1)")]
    UnsupportedEndpoint { endpoint: u8 },
    #[error("quadrature failed to converge: {context} (last increment {last_delta:.3e} after {levels} levels)")]
    Quadrature {
        context: String,
        last_delta: f64,
        levels: usize,
    },
    #[error(transparent)]
    Recurrence(#[from] recurrence::RecurrenceError),
}
