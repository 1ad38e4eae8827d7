//! The change of variables taking the radial operators to Heun form.
//!
//! With `x = 2ρ²/(1+ρ²)` (inverse `ρ = √(x/(2−x))`), the substitution
//! `f(ρ) = x^{ℓ/2}(2−x)^{(λ+1)/2} y(x)` turns `T_ℓ(λ)f = 0` into a Heun
//! equation whose series coefficients at `x = 0` obey the three-term
//! recurrence of [`recurrence::family::Family`]. The twice-SUSY-reduced
//! `ℓ = 1` problem uses the weight `x²(2−x)^{λ/2}` instead.
//!
//! [`HeunMap::series_jet`] evaluates a truncated Heun series through the map
//! as a radial 2-jet, so [`crate::operator::apply_t`] can measure how well
//! the mapped series solves the radial equation.

use crate::operator::Jet;
use crate::C64;

/// Weight `x^p (2−x)^q` tying a Heun-variable solution `y(x)` to a radial
/// function `f(ρ) = weight · y`.
#[derive(Clone, Copy, Debug)]
pub struct HeunMap {
    p: f64,
    q: C64,
}

impl HeunMap {
    /// Map for the raw mode operator `T_ℓ(λ)`.
    pub fn mode(ell: u32, lambda: C64) -> Self {
        Self {
            p: ell as f64 / 2.0,
            q: (lambda + 1.0) / 2.0,
        }
    }

    /// Map for the twice-SUSY-reduced `ℓ = 1` operator.
    pub fn susy(lambda: C64) -> Self {
        Self {
            p: 2.0,
            q: lambda / 2.0,
        }
    }

    pub fn x_of_rho(rho: f64) -> f64 {
        2.0 * rho * rho / (1.0 + rho * rho)
    }

    pub fn rho_of_x(x: f64) -> f64 {
        (x / (2.0 - x)).sqrt()
    }

    /// Radial 2-jet of `f(ρ) = x^p (2−x)^q y(x)` for the truncated series
    /// `y(x) = Σ coeffs[n] xⁿ`, at `ρ ∈ (0, 1)`.
    pub fn series_jet(&self, coeffs: &[C64], rho: f64) -> Jet {
        let x = Self::x_of_rho(rho);
        let opr2 = 1.0 + rho * rho;
        let dx = 4.0 * rho / (opr2 * opr2);
        let d2x = 4.0 * (1.0 - 3.0 * rho * rho) / (opr2 * opr2 * opr2);

        // Horner evaluation of y, y', y'' at x.
        let mut y = C64::new(0.0, 0.0);
        let mut dy = C64::new(0.0, 0.0);
        let mut d2y = C64::new(0.0, 0.0);
        for &c in coeffs.iter().rev() {
            d2y = d2y * x + dy * 2.0;
            dy = dy * x + y;
            y = y * x + c;
        }

        // Weight w = x^p (2−x)^q and its logarithmic derivatives in x.
        let w = C64::new(x.powf(self.p), 0.0) * (C64::new(2.0 - x, 0.0)).powc(self.q);
        let lw = self.p / x - self.q / (2.0 - x);
        let dlw = -self.p / (x * x) - self.q / ((2.0 - x) * (2.0 - x));
        let dw = w * lw;
        let d2w = w * (lw * lw + dlw);

        let fx = w * y;
        let dfx = dw * y + w * dy;
        let d2fx = d2w * y + dw * dy * 2.0 + w * d2y;
        Jet::new(fx, dfx * dx, d2fx * dx * dx + dfx * d2x)
    }
}
