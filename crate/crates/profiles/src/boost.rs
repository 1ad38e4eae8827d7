//! Lorentz boost parametrization of the profile family.
//!
//! A rapidity vector `a ∈ ℝ⁷` is mapped to coefficients
//! `(A₀(a), A₁(a), …, A₇(a))` of a unit timelike vector,
//!
//! ```text
//! A₀ = Π_m cosh aᵐ,    A_k = sinh aᵏ · Π_{m>k} cosh aᵐ,
//! ```
//!
//! which satisfy `A₀² - Σ_k A_k² = 1`. The boosted profile is
//!
//! ```text
//! ψ_a(ξ) = 4γ / (2γ² + |ξ|² - 1),    γ(ξ, a) = A₀(a) - Σ_j A_j(a) ξ_j,
//! ```
//!
//! reducing to `4/(1+|ξ|²)` at `a = 0`. Gradient and Hessian of `ψ_a` are
//! provided in closed form; they feed the pointwise stationarity residual in
//! [`crate::blowup`] and the mode accessors in [`crate::pairs`].

use crate::{dot, norm_sq, DIM};

/// Boost coefficients `[A₀, A₁, …, A₇]` for rapidity `a`.
pub fn coefficients(a: &[f64; DIM]) -> [f64; DIM + 1] {
    let mut out = [0.0; DIM + 1];
    // Suffix products of cosh: suffix[k] = Π_{m >= k} cosh(a_m), 0-indexed.
    let mut suffix = 1.0;
    for k in (0..DIM).rev() {
        out[k + 1] = a[k].sinh() * suffix;
        suffix *= a[k].cosh();
    }
    out[0] = suffix;
    out
}

/// Jacobian `J[j][α] = ∂A_α/∂a_j` with `j` 0-indexed and `α ∈ {0, …, 7}`.
pub fn coefficient_jacobian(a: &[f64; DIM]) -> [[f64; DIM + 1]; DIM] {
    let coef = coefficients(a);
    let mut jac = [[0.0; DIM + 1]; DIM];
    for j in 0..DIM {
        let t = a[j].tanh();
        jac[j][0] = coef[0] * t;
        for k in 0..DIM {
            jac[j][k + 1] = match j.cmp(&k) {
                std::cmp::Ordering::Less => 0.0,
                // sinh(a_k) replaced by cosh(a_k) in the product
                std::cmp::Ordering::Equal => {
                    let mut v = a[k].cosh();
                    for m in (k + 1)..DIM {
                        v *= a[m].cosh();
                    }
                    v
                }
                std::cmp::Ordering::Greater => coef[k + 1] * t,
            };
        }
    }
    jac
}

/// Pointwise data of the boosted profile at a single `ξ`: the value together
/// with first and second derivatives, all closed-form.
#[derive(Clone, Debug)]
pub struct ProfileJet {
    /// `ψ_a(ξ)`
    pub value: f64,
    /// `∂_j ψ_a(ξ)`
    pub gradient: [f64; DIM],
    /// `∂_j ∂_k ψ_a(ξ)`
    pub hessian: [[f64; DIM]; DIM],
    /// `γ(ξ, a)`
    pub gamma: f64,
    /// Denominator `2γ² + |ξ|² - 1`
    pub denom: f64,
}

impl ProfileJet {
    pub fn laplacian(&self) -> f64 {
        (0..DIM).map(|k| self.hessian[k][k]).sum()
    }
}

/// Evaluate `ψ_a` and its derivatives at `ξ` given precomputed coefficients.
pub fn profile_jet(coef: &[f64; DIM + 1], xi: &[f64; DIM]) -> ProfileJet {
    let s = norm_sq(xi);
    let a_spatial: [f64; DIM] = std::array::from_fn(|j| coef[j + 1]);
    let gamma = coef[0] - dot(&a_spatial, xi);
    let d = 2.0 * gamma * gamma + s - 1.0;
    // e = 4γ² - d
    let e = 2.0 * gamma * gamma - s + 1.0;

    // ψ = 4γ/d, ∂_j γ = -A_j, ∂_j d = -4γA_j + 2ξ_j.
    let value = 4.0 * gamma / d;
    let d_grad: [f64; DIM] = std::array::from_fn(|j| -4.0 * gamma * a_spatial[j] + 2.0 * xi[j]);
    // n_j = A_j e - 2γ ξ_j gives ∂_j ψ = 4 n_j / d².
    let n: [f64; DIM] = std::array::from_fn(|j| a_spatial[j] * e - 2.0 * gamma * xi[j]);
    let gradient: [f64; DIM] = std::array::from_fn(|j| 4.0 * n[j] / (d * d));

    // ∂_k n_j = -4γ A_j A_k - 2 A_j ξ_k + 2 A_k ξ_j - 2γ δ_jk,
    // ∂_jk ψ = 4 (∂_k n_j · d - 2 n_j ∂_k d) / d³.
    let mut hessian = [[0.0; DIM]; DIM];
    for j in 0..DIM {
        for k in 0..DIM {
            let mut dn = -4.0 * gamma * a_spatial[j] * a_spatial[k] - 2.0 * a_spatial[j] * xi[k]
                + 2.0 * a_spatial[k] * xi[j];
            if j == k {
                dn -= 2.0 * gamma;
            }
            hessian[j][k] = 4.0 * (dn * d - 2.0 * n[j] * d_grad[k]) / (d * d * d);
        }
    }

    ProfileJet {
        value,
        gradient,
        hessian,
        gamma,
        denom: d,
    }
}

/// `ψ_a(ξ)` alone.
pub fn profile(a: &[f64; DIM], xi: &[f64; DIM]) -> f64 {
    let coef = coefficients(a);
    profile_jet(&coef, xi).value
}
