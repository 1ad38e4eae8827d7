//! Radial resolvent solve at spectral parameter λ = 5/2.
//!
//! The mode equation at λ = 5/2 loses its potential term, leaving the free
//! operator
//!
//! ```text
//! (1-ρ²)u'' + (6/ρ - 9ρ)u' - [ℓ(ℓ+5)/ρ² + 63/4]u = -g .
//! ```
//!
//! The substitution v = ρ²u turns it into
//!
//! ```text
//! (1-r²)v'' + (2/r - 5r)v' - [(ℓ+2)(ℓ+3)/r² + 15/4]v = -r²g ,
//! ```
//!
//! whose fundamental pair is built here as power series: one regular at
//! r = 0 (Frobenius index ℓ+2), one regular at r = 1 (index 0, the other
//! being -1/2). The particular solution bounded at both ends is the usual
//! variation-of-parameters combination of the two.

use crate::operator::Jet;
use crate::quad::tanh_sinh;
use crate::{C64, ScanError};

/// Terms kept in each power series. The series are evaluated no closer than
/// distance 0.03 to their singular points, where the tail is far below f64
/// resolution.
const SERIES_LEN: usize = 1400;

/// Fundamental pair for the v-form radial resolvent equation at one `ℓ`.
pub struct ResolventPair {
    ell: u32,
    /// ψ₀ = r^{ℓ+2} Σ a_n r^{2n}, regular at r = 0.
    a: Vec<f64>,
    /// ψ₁ = Σ b_n (1-r)^n, regular at r = 1.
    b: Vec<f64>,
    /// W(ψ₀, ψ₁) = wscale · r^{-2}(1-r²)^{-3/2}.
    wscale: f64,
}

impl ResolventPair {
    pub fn new(ell: u32) -> Self {
        let l = ell as f64;
        let cc = (l + 2.0) * (l + 3.0);

        // Regular series at 0: only even powers above r^{ℓ+2} appear.
        let mut a = vec![0.0; SERIES_LEN];
        a[0] = 1.0;
        for n in 1..SERIES_LEN {
            let m = l + 2.0 + 2.0 * n as f64;
            let k = m - 2.0;
            a[n] = a[n - 1] * (k + 1.5) * (k + 2.5) / (m * (m + 1.0) - cc);
        }

        // Regular series at 1, in t = 1-r. Multiplying the equation by r²
        // gives P v'' + Q v' + R v = 0 with polynomial coefficients
        // P = 2t - 5t² + 4t³ - t⁴, Q = 3 - 13t + 15t² - 5t³,
        // R = -(cc + 15/4) + (15/2)t - (15/4)t²; the tⁿ balance pivots on
        // (n+1)(2n+3)·b_{n+1}.
        let p = [0.0, 2.0, -5.0, 4.0, -1.0];
        let q = [3.0, -13.0, 15.0, -5.0];
        let r = [-(cc + 3.75), 7.5, -3.75];
        let mut b = vec![0.0; SERIES_LEN];
        b[0] = 1.0;
        for n in 0..SERIES_LEN - 1 {
            let mut acc = 0.0;
            for (k, &pk) in p.iter().enumerate().skip(2) {
                if n + 2 >= k {
                    let j = n + 2 - k;
                    acc += pk * (j as f64) * (j as f64 - 1.0) * b.get(j).copied().unwrap_or(0.0);
                }
            }
            for (k, &qk) in q.iter().enumerate().skip(1) {
                if n + 1 >= k {
                    let j = n + 1 - k;
                    acc += qk * (j as f64) * b.get(j).copied().unwrap_or(0.0);
                }
            }
            for (k, &rk) in r.iter().enumerate() {
                if n >= k {
                    acc += rk * b[n - k];
                }
            }
            b[n + 1] = -acc / ((n as f64 + 1.0) * (2.0 * n as f64 + 3.0));
        }

        let mut pair = Self {
            ell,
            a,
            b,
            wscale: 1.0,
        };
        // Anchor the Wronskian's closed form at an interior point.
        let mid = 0.6;
        pair.wscale = pair.raw_wronskian(mid) / Self::wronskian_shape(mid);
        pair
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    /// ψ₀ and its first two r-derivatives.
    pub fn psi0_jet(&self, r: f64) -> Jet {
        let base = self.ell as f64 + 2.0;
        let r2 = r * r;
        let (mut f, mut df, mut d2f) = (0.0, 0.0, 0.0);
        let mut rm = r.powi(self.ell as i32 + 2);
        for (n, &an) in self.a.iter().enumerate() {
            let m = base + 2.0 * n as f64;
            let term = an * rm;
            f += term;
            df += m * term / r;
            d2f += m * (m - 1.0) * term / r2;
            if term.abs() < 1e-300 && n > 4 {
                break;
            }
            rm *= r2;
        }
        Jet::real(f, df, d2f)
    }

    /// ψ₁ and its first two r-derivatives.
    pub fn psi1_jet(&self, r: f64) -> Jet {
        let t = 1.0 - r;
        let (mut f, mut df, mut d2f) = (0.0, 0.0, 0.0);
        for &bn in self.b.iter().rev() {
            d2f = d2f * t + 2.0 * df;
            df = df * t + f;
            f = f * t + bn;
        }
        // d/dr = -d/dt, so odd derivatives flip sign.
        Jet::real(f, -df, d2f)
    }

    /// The closed-form Wronskian profile r^{-2}(1-r²)^{-3/2}.
    fn wronskian_shape(r: f64) -> f64 {
        (1.0 - r * r).powf(-1.5) / (r * r)
    }

    fn raw_wronskian(&self, r: f64) -> f64 {
        let j0 = self.psi0_jet(r);
        let j1 = self.psi1_jet(r);
        j0.f.re * j1.df.re - j0.df.re * j1.f.re
    }

    /// W(ψ₀, ψ₁) evaluated through its closed form.
    pub fn wronskian(&self, r: f64) -> f64 {
        self.wscale * Self::wronskian_shape(r)
    }

    /// Relative drift of the computed Wronskian from the closed form.
    pub fn wronskian_drift(&self, r: f64) -> f64 {
        (self.raw_wronskian(r) - self.wronskian(r)).abs() / self.wronskian(r).abs()
    }
}

/// One grid point of a resolvent solve: the u-form solution with two
/// derivatives and the residual of the free radial equation.
#[derive(Clone, Copy, Debug)]
pub struct ResolventRow {
    pub rho: f64,
    pub u: f64,
    pub du: f64,
    pub d2u: f64,
    pub residual: f64,
}

/// Solve the free radial equation at λ = 5/2 with right-hand side `-g`,
/// returning the solution bounded at both endpoints on the given grid.
pub fn resolvent_solve<G: Fn(f64) -> f64>(
    ell: u32,
    g: G,
    rho_grid: &[f64],
) -> Result<Vec<ResolventRow>, ScanError> {
    let pair = ResolventPair::new(ell);
    let quad_tol = 1e-12;

    // In the variation-of-parameters kernel, 1/((1-s²)W) reduces against
    // the closed-form Wronskian to s²√(1-s²)/wscale: both integrands are
    // regular at both endpoints.
    let mut rows = Vec::with_capacity(rho_grid.len());
    for &rho in rho_grid {
        crate::operator::check_domain(rho)?;
        let k0 = |s: f64| -pair.psi0_jet(s).f.re * s.powi(4) * g(s) * (1.0 - s * s).sqrt();
        let k1 = |s: f64| -pair.psi1_jet(s).f.re * s.powi(4) * g(s) * (1.0 - s * s).sqrt();
        let i0 = tanh_sinh(k0, 0.0, rho, quad_tol)? / pair.wscale;
        let i1 = tanh_sinh(k1, rho, 1.0, quad_tol)? / pair.wscale;

        let j0 = pair.psi0_jet(rho);
        let j1 = pair.psi1_jet(rho);
        let v = j1.f.re * i0 + j0.f.re * i1;
        let dv = j1.df.re * i0 + j0.df.re * i1;
        let d2v = j1.d2f.re * i0 + j0.d2f.re * i1 - rho * rho * g(rho) / (1.0 - rho * rho);

        let r2 = rho * rho;
        let u = v / r2;
        let du = dv / r2 - 2.0 * v / (r2 * rho);
        let d2u = d2v / r2 - 4.0 * dv / (r2 * rho) + 6.0 * v / (r2 * r2);

        let jet = Jet::real(u, du, d2u);
        let residual =
            (crate::operator::apply_t_free(ell, C64::new(2.5, 0.0), |_| jet, rho)? + g(rho)).re;
        rows.push(ResolventRow {
            rho,
            u,
            du,
            d2u,
            residual,
        });
    }
    Ok(rows)
}

/// Residual of the v-form homogeneous equation for one of the fundamental
/// solutions; used to validate the series construction.
pub fn homogeneous_residual(pair: &ResolventPair, jet: Jet, r: f64) -> f64 {
    let cc = (pair.ell as f64 + 2.0) * (pair.ell as f64 + 3.0);
    let lhs = (1.0 - r * r) * jet.d2f.re + (2.0 / r - 5.0 * r) * jet.df.re
        - (cc / (r * r) + 15.0 / 4.0) * jet.f.re;
    lhs.abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn series_solve_the_homogeneous_equation() {
        for ell in [0, 1, 3] {
            let pair = ResolventPair::new(ell);
            for r in [0.1, 0.35, 0.6, 0.85, 0.95] {
                let scale0 = pair.psi0_jet(r).f.re.abs().max(1.0);
                let scale1 = pair.psi1_jet(r).f.re.abs().max(1.0);
                assert!(
                    homogeneous_residual(&pair, pair.psi0_jet(r), r) / scale0 < 1e-9,
                    "psi0 residual at ell={ell}, r={r}"
                );
                assert!(
                    homogeneous_residual(&pair, pair.psi1_jet(r), r) / scale1 < 1e-9,
                    "psi1 residual at ell={ell}, r={r}"
                );
            }
        }
    }

    #[test]
    fn wronskian_follows_the_closed_form() {
        for ell in [0, 2] {
            let pair = ResolventPair::new(ell);
            let mut r = 0.1;
            while r <= 0.9 {
                assert!(
                    pair.wronskian_drift(r) < 1e-9,
                    "drift {} at ell={ell}, r={r}",
                    pair.wronskian_drift(r)
                );
                r += 0.05;
            }
        }
    }

    #[test]
    fn regularity_balance_at_the_outer_endpoint() {
        // A series regular at r=1 must satisfy 3v'(1) = -R(0)v(1) with
        // R(0) = -( (ℓ+2)(ℓ+3) + 15/4 ).
        for ell in [0u32, 1, 4] {
            let pair = ResolventPair::new(ell);
            let j = pair.psi1_jet(1.0 - 1e-12);
            let r1 = (ell as f64 + 2.0) * (ell as f64 + 3.0) + 3.75;
            assert_abs_diff_eq!(3.0 * j.df.re / j.f.re, -r1, epsilon = 1e-6);
        }
    }

    #[test]
    fn constant_source_at_ell_zero_gives_the_constant_solution() {
        let grid = [0.1, 0.3, 0.5, 0.7, 0.9];
        let rows = resolvent_solve(0, |_| 1.0, &grid).unwrap();
        for row in rows {
            assert_abs_diff_eq!(row.u, 4.0 / 63.0, epsilon = 1e-10);
            assert!(row.du.abs() < 1e-9);
            assert!(row.residual.abs() < 1e-9);
        }
    }

    #[test]
    fn zero_source_gives_zero() {
        let rows = resolvent_solve(2, |_| 0.0, &[0.2, 0.6, 0.9]).unwrap();
        for row in rows {
            assert_eq!(row.u, 0.0);
            assert_eq!(row.du, 0.0);
        }
    }

    #[test]
    fn frozen_interior_values() {
        let rows = resolvent_solve(1, |_| 1.0, &[0.5]).unwrap();
        assert_abs_diff_eq!(rows[0].u, 0.030889907690241, epsilon = 1e-10);
        let rows = resolvent_solve(0, |s| 1.0 - s * s, &[0.7]).unwrap();
        assert_abs_diff_eq!(rows[0].u, 1871.0 / 75075.0, epsilon = 1e-10);
    }

    #[test]
    fn generic_source_passes_the_residual_check_and_stays_bounded() {
        let mut grid = vec![0.01, 0.03];
        let mut r = 0.05;
        while r <= 0.95 {
            grid.push(r);
            r += 0.05;
        }
        grid.push(0.97);
        let rows = resolvent_solve(2, |s| (3.0 * s).cos(), &grid).unwrap();
        for row in &rows {
            assert!(row.u.abs() < 1.0, "unbounded at {}", row.rho);
            if (0.05..=0.95).contains(&row.rho) {
                assert!(
                    row.residual.abs() < 1e-8,
                    "residual {} at rho={}",
                    row.residual,
                    row.rho
                );
            }
        }
    }
}
