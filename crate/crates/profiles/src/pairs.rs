//! Explicit symmetry modes of the linearized similarity flow as functions on
//! the unit ball, at arbitrary rapidity `a`.
//!
//! Each continuous symmetry of the blowup family (time translation, the
//! seven space translations, the seven boosts) induces an explicit
//! eigenfunction of the flow linearized at `Ψ_a`; the scaling direction
//! contributes one more with eigenvalue 3. First components:
//!
//! ```text
//! h(ξ)     = 1/d²                         (eigenvalue 3)
//! g⁰(ξ)    = (A₀ e - 2γ)/d²               (eigenvalue 1, time translation)
//! gʲ(ξ)    = -(A_j e - 2γ ξ_j)/(2 d²)     (eigenvalue 1, space translation)
//! qʲ(ξ)    = -γ_{a_j} e/d²                (eigenvalue 0, boost)
//! ```
//!
//! with `d = 2γ² + |ξ|² - 1`, `e = 2γ² - |ξ|² + 1`, `γ_{a_j} = ∂γ/∂a_j`.
//! All are normalized so that at `a = 0` they reduce to
//!
//! ```text
//! h = 1/(1+|ξ|²)²,  g⁰ = (1-|ξ|²)/(1+|ξ|²)²,
//! gʲ = ξ_j/(1+|ξ|²)²,  qʲ = ξ_j(3-|ξ|²)/(1+|ξ|²)².
//! ```
//!
//! With this normalization the rapidity derivative of the static state obeys
//! `∂Ψ_a/∂a_j = 4 qʲ_a` as a pair identity; [`boost_mode_pair`] returns the
//! closed-form right-hand side and [`static_state_rapidity_fd`] the central
//! finite difference of the left-hand side for convergence checks.

use crate::boost::{coefficient_jacobian, coefficients, profile_jet};
use crate::{blowup::static_state, dot, norm_sq, Pair, DIM};

fn gamma_and_denoms(a: &[f64; DIM], xi: &[f64; DIM]) -> (f64, f64, f64, [f64; DIM + 1]) {
    let coef = coefficients(a);
    let spatial: [f64; DIM] = std::array::from_fn(|j| coef[j + 1]);
    let gamma = coef[0] - dot(&spatial, xi);
    let s = norm_sq(xi);
    let d = 2.0 * gamma * gamma + s - 1.0;
    let e = 2.0 * gamma * gamma - s + 1.0;
    (gamma, d, e, coef)
}

/// Scaling mode first component, eigenvalue 3.
pub fn scaling_mode_1(a: &[f64; DIM], xi: &[f64; DIM]) -> f64 {
    let (_, d, _, _) = gamma_and_denoms(a, xi);
    1.0 / (d * d)
}

/// Time translation mode first component, eigenvalue 1.
pub fn time_translation_1(a: &[f64; DIM], xi: &[f64; DIM]) -> f64 {
    let (gamma, d, e, coef) = gamma_and_denoms(a, xi);
    (coef[0] * e - 2.0 * gamma) / (d * d)
}

/// Space translation mode first component along axis `j`, eigenvalue 1.
pub fn space_translation_1(a: &[f64; DIM], xi: &[f64; DIM], j: usize) -> f64 {
    let (gamma, d, e, coef) = gamma_and_denoms(a, xi);
    -(coef[j + 1] * e - 2.0 * gamma * xi[j]) / (2.0 * d * d)
}

/// Boost mode first component along axis `j`, eigenvalue 0.
pub fn boost_mode_1(a: &[f64; DIM], xi: &[f64; DIM], j: usize) -> f64 {
    boost_mode_pair(a, xi, j).0
}

/// Boost mode along axis `j` as a pair: `(1/4) ∂Ψ_a/∂a_j` in closed form.
pub fn boost_mode_pair(a: &[f64; DIM], xi: &[f64; DIM], j: usize) -> Pair {
    let coef = coefficients(a);
    let jac = coefficient_jacobian(a);
    let spatial: [f64; DIM] = std::array::from_fn(|k| coef[k + 1]);
    let jac_spatial: [f64; DIM] = std::array::from_fn(|k| jac[j][k + 1]);

    let gamma = coef[0] - dot(&spatial, xi);
    let gamma_a = jac[j][0] - dot(&jac_spatial, xi);
    let s = norm_sq(xi);
    let d = 2.0 * gamma * gamma + s - 1.0;
    let e = 2.0 * gamma * gamma - s + 1.0;

    // ∂ψ/∂a_j = -4 γ_a e / d².
    let dpsi = -4.0 * gamma_a * e / (d * d);

    // ∂/∂a_j of ∂_k ψ = 4 n_k/d², n_k = A_k e - 2γ ξ_k:
    //   ∂n_k = J_k e + 4 A_k γ γ_a - 2 γ_a ξ_k,  ∂d = ∂e = 4 γ γ_a.
    let mut xi_dgrad = 0.0;
    for k in 0..DIM {
        let n_k = spatial[k] * e - 2.0 * gamma * xi[k];
        let dn_k = jac_spatial[k] * e + 4.0 * spatial[k] * gamma * gamma_a - 2.0 * gamma_a * xi[k];
        let dpsi_k = 4.0 * (dn_k * d - 8.0 * gamma * gamma_a * n_k) / (d * d * d);
        xi_dgrad += xi[k] * dpsi_k;
    }

    (dpsi / 4.0, (xi_dgrad + dpsi) / 4.0)
}

/// Complete a first component `u₁` with eigenvalue `λ` into the pair
/// `(u₁, (λ+1)u₁ + ξ·∇u₁)`; valid for the rest-frame modes where `ξ·∇u₁`
/// is supplied by the caller.
pub fn rest_pair(u1: f64, xi_grad_u1: f64, lambda: f64) -> Pair {
    (u1, (lambda + 1.0) * u1 + xi_grad_u1)
}

/// Central finite difference of `Ψ_a(ξ)` in the rapidity component `a_j`
/// with step `h`, for convergence tests against [`boost_mode_pair`].
pub fn static_state_rapidity_fd(a: &[f64; DIM], xi: &[f64; DIM], j: usize, h: f64) -> Pair {
    let mut ap = *a;
    let mut am = *a;
    ap[j] += h;
    am[j] -= h;
    let sp = static_state(&ap, xi);
    let sm = static_state(&am, xi);
    ((sp.0 - sm.0) / (2.0 * h), (sp.1 - sm.1) / (2.0 * h))
}

/// Gradient of the boosted profile, re-exported in pair-normalized form:
/// `∂_j ψ_a = -8 gʲ_a`.
pub fn profile_gradient(a: &[f64; DIM], xi: &[f64; DIM]) -> [f64; DIM] {
    let coef = coefficients(a);
    profile_jet(&coef, xi).gradient
}
