//! Radial form of the linearized similarity operator and its four explicit
//! eigenfunctions.
//!
//! Restricted to the spherical-harmonic sector of degree `ℓ`, the eigenvalue
//! problem for the linearized flow reduces to the second-order radial
//! operator
//!
//! ```text
//! T_ℓ(λ)f = (1-ρ²)f'' + [6/ρ - 2(λ+2)ρ]f'
//!           - [(λ+1)(λ+2) + ℓ(ℓ+5)/ρ² - 48/(1+ρ²)²]f
//! ```
//!
//! acting on (0, 1). `T_ℓ(λ)f = 0` with `f` regular at both endpoints
//! characterizes an eigenvalue. The four symmetry-induced solutions are
//! rational; see [`explicit_eigenfunction`].

use crate::blowup::potential;

/// A function of the form `p(ρ)/(1+ρ²)^k` with polynomial numerator,
/// closed under differentiation.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalProfile {
    /// Numerator coefficients, lowest degree first.
    pub numerator: Vec<f64>,
    /// Power of `(1+ρ²)` in the denominator.
    pub denom_power: u32,
}

impl RationalProfile {
    pub fn new(numerator: Vec<f64>, denom_power: u32) -> Self {
        Self {
            numerator,
            denom_power,
        }
    }

    pub fn eval(&self, rho: f64) -> f64 {
        let num: f64 = self
            .numerator
            .iter()
            .rev()
            .fold(0.0, |acc, &c| acc * rho + c);
        num / (1.0 + rho * rho).powi(self.denom_power as i32)
    }

    /// Exact derivative: `(p'(1+ρ²) - 2kρ p) / (1+ρ²)^{k+1}`.
    pub fn derivative(&self) -> Self {
        let p = &self.numerator;
        let k = self.denom_power as f64;
        let n = p.len();
        // p'(ρ)(1+ρ²) - 2kρ p(ρ), degree ≤ n.
        let mut out = vec![0.0; n + 1];
        for (i, &c) in p.iter().enumerate() {
            if i >= 1 {
                out[i - 1] += i as f64 * c;
            }
            out[i + 1] += i as f64 * c;
            out[i + 1] -= 2.0 * k * c;
        }
        while out.len() > 1 && out.last() == Some(&0.0) {
            out.pop();
        }
        Self::new(out, self.denom_power + 1)
    }
}

/// The four explicit eigenvalue points `(ℓ, λ)` of the radial problem.
pub const EXPLICIT_EIGENVALUES: [(u32, f64); 4] = [(0, 3.0), (0, 1.0), (1, 1.0), (1, 0.0)];

/// The explicit radial eigenfunction at `(ℓ, λ)`, or `None` off the four
/// symmetry points. Normalization follows the mode accessors in
/// [`crate::pairs`]: the returned profiles take the values
/// 1/4, 0, 1/4, 1/2 respectively at `ρ = 1`.
pub fn explicit_eigenfunction(ell: u32, lambda: f64) -> Option<RationalProfile> {
    match (ell, lambda) {
        (0, l) if l == 3.0 => Some(RationalProfile::new(vec![1.0], 2)),
        (0, l) if l == 1.0 => Some(RationalProfile::new(vec![1.0, 0.0, -1.0], 2)),
        (1, l) if l == 1.0 => Some(RationalProfile::new(vec![0.0, 1.0], 2)),
        (1, l) if l == 0.0 => Some(RationalProfile::new(vec![0.0, 3.0, 0.0, -1.0], 2)),
        _ => None,
    }
}

/// Apply `T_ℓ(λ)` to a function given with two derivatives at `ρ`.
pub fn radial_operator(ell: u32, lambda: f64, rho: f64, f: f64, df: f64, d2f: f64) -> f64 {
    let l = ell as f64;
    (1.0 - rho * rho) * d2f + (6.0 / rho - 2.0 * (lambda + 2.0) * rho) * df
        - ((lambda + 1.0) * (lambda + 2.0) + l * (l + 5.0) / (rho * rho) - potential(rho)) * f
}

/// Residual `T_ℓ(λ)f(ρ)` for a rational profile, using exact derivatives.
pub fn radial_residual(ell: u32, lambda: f64, profile: &RationalProfile, rho: f64) -> f64 {
    let df = profile.derivative();
    let d2f = df.derivative();
    radial_operator(
        ell,
        lambda,
        rho,
        profile.eval(rho),
        df.eval(rho),
        d2f.eval(rho),
    )
}

/// Radial eigen-pair `(f, (λ+1)f + ρf')` evaluated at `ρ`.
pub fn radial_pair(lambda: f64, profile: &RationalProfile, rho: f64) -> (f64, f64) {
    let f = profile.eval(rho);
    let df = profile.derivative().eval(rho);
    (f, (lambda + 1.0) * f + rho * df)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn rational_profile_derivative_closed_form() {
        // d/dρ [ρ/(1+ρ²)²] = (1-3ρ²)/(1+ρ²)³.
        let p = RationalProfile::new(vec![0.0, 1.0], 2);
        let dp = p.derivative();
        assert_eq!(dp.denom_power, 3);
        for &rho in &[0.1_f64, 0.5, 0.9] {
            let expect = (1.0 - 3.0 * rho * rho) / (1.0 + rho * rho).powi(3);
            assert_abs_diff_eq!(dp.eval(rho), expect, epsilon = 1e-15);
        }
    }

    #[test]
    fn all_four_eigenfunctions_annihilated() {
        for &(ell, lambda) in &EXPLICIT_EIGENVALUES {
            let f = explicit_eigenfunction(ell, lambda).unwrap();
            for i in 1..100 {
                let rho = i as f64 / 100.0;
                assert!(
                    radial_residual(ell, lambda, &f, rho).abs() < 1e-12,
                    "residual at (ℓ, λ) = ({ell}, {lambda}), ρ = {rho}"
                );
            }
        }
    }

    #[test]
    fn boundary_values() {
        let vals: Vec<f64> = EXPLICIT_EIGENVALUES
            .iter()
            .map(|&(ell, lam)| explicit_eigenfunction(ell, lam).unwrap().eval(1.0))
            .collect();
        assert_eq!(vals, vec![0.25, 0.0, 0.25, 0.5]);
    }

    #[test]
    fn boost_pair_value_at_half() {
        // (ℓ, λ) = (1, 0): f(1/2) = (3/2 - 1/8)/(25/16) = 22/25.
        let f = explicit_eigenfunction(1, 0.0).unwrap();
        assert_abs_diff_eq!(f.eval(0.5), 22.0 / 25.0, epsilon = 1e-15);
        let (u1, u2) = radial_pair(0.0, &f, 0.5);
        // u₂ = u₁ + ρ f'(ρ), f' = (ρ⁴-12ρ²+3)/(1+ρ²)³.
        let df = (0.5f64.powi(4) - 12.0 * 0.25 + 3.0) / (1.25f64).powi(3);
        assert_abs_diff_eq!(u2, u1 + 0.5 * df, epsilon = 1e-15);
    }

    #[test]
    fn nonexistent_points_return_none() {
        assert!(explicit_eigenfunction(0, 2.0).is_none());
        assert!(explicit_eigenfunction(2, 1.0).is_none());
    }
}
