//! Three-term recurrences governing the Frobenius series of the radial
//! eigenvalue problem after the Heun-type substitution
//! `ρ = √(x/(2-x))`, `f = x^{ℓ/2}(2-x)^{(λ+1)/2} y(x)`.
//!
//! The series coefficients of `y` obey `a_{n+2} = A_n a_{n+1} + B_n a_n`,
//! with rational coefficient functions collected in [`family::Family`].
//! Solutions split into a dominant branch (coefficient ratio `r_n → 1`,
//! series singular at the light cone) and a recessive branch (`r_n → 1/2`,
//! series analytic across it); `λ` is an eigenvalue exactly when the branch
//! selected by the Frobenius seed is recessive. [`classify`] turns that
//! dichotomy into a numerical decision procedure, [`bounds`] evaluates the
//! contraction quantities `δ_n`, `ε_n`, `C_n` against their stated bounds,
//! [`report`] sweeps those bounds over λ-grids into a serializable verdict,
//! [`appendix`] carries exact closed forms for cross-validation, and
//! [`signcheck`] certifies the imaginary-axis contraction inequality by
//! exact integer polynomial expansion.

pub mod appendix;
pub mod bounds;
pub mod classify;
pub mod family;
pub mod report;
pub mod series;
pub mod signcheck;

use thiserror::Error;

pub type C64 = num_complex::Complex<f64>;

#[derive(Debug, Error)]
pub enum RecurrenceError {
    #[error("ratio iteration degenerated at index {index} (|denominator| < 1e-300)")]
    DegenerateRatio { index: usize },
    #[error("non-finite value encountered at index {index}")]
    NonFinite { index: usize },
    #[error("λ = {lambda} lies inside an excluded disk of the series seed")]
    ExcludedPoint { lambda: C64 },
}

/// Median of a slice of reals; the slice is copied and sorted.
pub(crate) fn median(values: &[f64]) -> f64 {
    assert!(!values.is_empty());
    let mut v = values.to_vec();
    v.sort_by(|a, b| a.partial_cmp(b).expect("NaN in median input"));
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    }
}
