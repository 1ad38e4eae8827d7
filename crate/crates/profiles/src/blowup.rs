//! Explicit blowup solutions and the stationarity residual in similarity
//! variables.
//!
//! The spatially constant ODE blowup is `u(t) = √2/(T-t)`. The self-similar
//! family is
//!
//! ```text
//! u(t, x) = (T-t)⁻¹ ψ_a((x - x₀)/(T-t)),
//! ```
//!
//! whose similarity-variable form is the static state
//! `Ψ_a = (ψ_a, ξ·∇ψ_a + ψ_a)` of the first-order system
//!
//! ```text
//! ∂_τ (u₁, u₂) = (-ξ·∇u₁ - u₁ + u₂,  Δu₁ - ξ·∇u₂ - 2u₂) + (0, u₁³).
//! ```

use crate::boost::{coefficients, profile_jet};
use crate::{norm_sq, Pair, DIM};

/// `√2/(T-t)`, the spatially constant blowup.
pub fn ode_blowup(t: f64, blowup_time: f64) -> f64 {
    std::f64::consts::SQRT_2 / (blowup_time - t)
}

/// Residual of the ODE `u'' = u³` for the constant blowup; identically zero
/// in exact arithmetic since `u'' = 2√2/(T-t)³ = u³`.
pub fn ode_blowup_residual(t: f64, blowup_time: f64) -> f64 {
    let u = ode_blowup(t, blowup_time);
    let u_tt = 2.0 * std::f64::consts::SQRT_2 / (blowup_time - t).powi(3);
    u_tt - u * u * u
}

/// Radial rest-frame profile `4/(1+ρ²)`.
pub fn radial_profile(rho: f64) -> f64 {
    4.0 / (1.0 + rho * rho)
}

/// The self-similar solution in physical variables, centered at `x0` with
/// blowup time `T` and rapidity `a`. Defined for `t < T`.
pub fn selfsimilar_solution(
    t: f64,
    x: &[f64; DIM],
    blowup_time: f64,
    x0: &[f64; DIM],
    a: &[f64; DIM],
) -> f64 {
    let scale = blowup_time - t;
    let xi: [f64; DIM] = std::array::from_fn(|j| (x[j] - x0[j]) / scale);
    crate::boost::profile(a, &xi) / scale
}

/// Static state `Ψ_a(ξ) = (ψ_a, ξ·∇ψ_a + ψ_a)` of the similarity system.
pub fn static_state(a: &[f64; DIM], xi: &[f64; DIM]) -> Pair {
    let coef = coefficients(a);
    let jet = profile_jet(&coef, xi);
    let xi_grad: f64 = (0..DIM).map(|j| xi[j] * jet.gradient[j]).sum();
    (jet.value, xi_grad + jet.value)
}

/// Pointwise residual of the stationarity equation for `Ψ_a` at `ξ`.
///
/// The first component of the flow vanishes structurally for any state of
/// the form `(ψ, ξ·∇ψ + ψ)`; this returns the second component,
///
/// ```text
/// Δψ - ξ·∇u₂ - 2u₂ + ψ³
///   = Δψ - ΣΣ ξ_j ξ_k ∂_jk ψ - 4 ξ·∇ψ - 2ψ + ψ³,
/// ```
///
/// which is identically zero for every rapidity `a`. With the closed-form
/// derivatives the evaluation is exact up to rounding.
pub fn stationarity_residual(a: &[f64; DIM], xi: &[f64; DIM]) -> f64 {
    let coef = coefficients(a);
    let jet = profile_jet(&coef, xi);
    let xi_grad: f64 = (0..DIM).map(|j| xi[j] * jet.gradient[j]).sum();
    let mut xi_hess_xi = 0.0;
    for j in 0..DIM {
        for k in 0..DIM {
            xi_hess_xi += xi[j] * xi[k] * jet.hessian[j][k];
        }
    }
    let psi = jet.value;
    jet.laplacian() - xi_hess_xi - 4.0 * xi_grad - 2.0 * psi + psi * psi * psi
}

/// The constant static state `(√2, √2)` of the similarity system, the
/// ODE blowup seen in similarity variables.
pub fn ode_static_state() -> Pair {
    (std::f64::consts::SQRT_2, std::f64::consts::SQRT_2)
}

/// Stationarity residual of a constant state `(c, c)`:
/// `(0, -2c + c³)`, zero exactly at `c = √2`.
pub fn constant_state_residual(c: f64) -> f64 {
    c * c * c - 2.0 * c
}

/// Focusing potential `V(ρ) = 3ψ₀(ρ)² = 48/(1+ρ²)²` from linearizing the
/// cubic nonlinearity at the rest-frame profile.
pub fn potential(rho: f64) -> f64 {
    let d = 1.0 + rho * rho;
    48.0 / (d * d)
}

/// Squared similarity radius `|ξ|²` helper used by callers sampling the ball.
pub fn radius_sq(xi: &[f64; DIM]) -> f64 {
    norm_sq(xi)
}
