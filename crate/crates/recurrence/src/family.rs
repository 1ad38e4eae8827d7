//! The three recurrence families and their quasi-solutions.
//!
//! * [`Family::Generic`]: raw recurrence of the Heun-form series at angular
//!   degree `ℓ`, seeded by the Frobenius ratio `r₀ = A_{-1}`. Used for the
//!   half-plane scan at every `ℓ` and for the contraction bounds at `ℓ ≥ 2`.
//! * [`Family::EllZero`]: same coefficients at `ℓ = 0` but seeded at index 2
//!   by an exact ratio that factors out the explicit eigenvalues `λ = 1, 3`;
//!   the seed is singular inside small disks around those points, which are
//!   excluded from bound sweeps.
//! * [`Family::SusyEllOne`]: the recurrence of the supersymmetrically
//!   reduced `ℓ = 1` problem, whose potential removes both explicit `ℓ = 1`
//!   eigenvalues; its bounds hold from `n = 1` on.
//!
//! Each family carries a quasi-solution `r̃_n`: an explicit rational
//! approximation to the dominant ratio sequence accurate enough that
//! `δ_n = r_n/r̃_n - 1` obeys a contraction inequality.

use crate::{RecurrenceError, C64};

/// Radius of the excluded disks around `λ = 1` and `λ = 3` for the
/// [`Family::EllZero`] seed.
pub const ELL_ZERO_EXCLUSION_RADIUS: f64 = 0.05;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Generic { ell: u32 },
    EllZero,
    SusyEllOne,
}

impl Family {
    /// Coefficient `A_n` of `a_{n+2} = A_n a_{n+1} + B_n a_n`; defined for
    /// `n ≥ -1`, with `A_{-1}` doubling as the Frobenius seed ratio of the
    /// generic and SUSY families.
    pub fn coef_a(&self, n: i64, lam: C64) -> C64 {
        let nf = n as f64;
        match *self {
            Family::Generic { .. } | Family::EllZero => {
                let l = self.ell() as f64;
                let num = 12.0 * nf * nf + 4.0 * (3.0 * l + 12.0) * nf
                    + lam * (8.0 * nf + 2.0 * (2.0 * l + 9.0))
                    + lam * lam
                    + 3.0 * (l * l + 8.0 * l - 1.0);
                num / (4.0 * (2.0 * nf + 2.0 * l + 9.0) * (nf + 2.0))
            }
            Family::SusyEllOne => {
                let num =
                    lam * lam + 2.0 * (4.0 * nf + 15.0) * lam + 12.0 * (nf + 5.0) * (nf + 2.0);
                num / (4.0 * (2.0 * nf + 15.0) * (nf + 2.0))
            }
        }
    }

    /// Coefficient `B_n`; defined for `n ≥ 0`.
    pub fn coef_b(&self, n: i64, lam: C64) -> C64 {
        let nf = n as f64;
        match *self {
            Family::Generic { .. } | Family::EllZero => {
                let l = self.ell() as f64;
                -(lam + (l + 2.0 * nf + 7.0)) * (lam + (l + 2.0 * nf - 3.0))
                    / (4.0 * (2.0 * nf + 2.0 * l + 9.0) * (nf + 2.0))
            }
            Family::SusyEllOne => {
                -(lam + (2.0 * nf + 6.0)) * (lam + (2.0 * nf + 4.0))
                    / (4.0 * (2.0 * nf + 15.0) * (nf + 2.0))
            }
        }
    }

    /// Quasi-solution `r̃_n`.
    pub fn quasi(&self, n: i64, lam: C64) -> C64 {
        let nf = n as f64;
        match *self {
            Family::Generic { ell } => {
                let l = ell as f64;
                lam * lam / (4.0 * (nf + 1.0) * (2.0 * nf + 2.0 * l + 7.0))
                    + (4.0 * nf + 2.0 * l + 5.0) * lam
                        / (2.0 * (nf + 1.0) * (2.0 * nf + 2.0 * l + 7.0))
                    + (nf - 1.0) / (nf + 1.0)
                    + 3.0 * l / (8.0 * (nf + 1.0))
            }
            Family::EllZero => {
                lam * lam / (4.0 * (nf + 1.0) * (2.0 * nf + 7.0))
                    + (4.0 * nf + 3.0) * lam / (2.0 * (nf + 1.0) * (2.0 * nf + 7.0))
                    + (nf - 1.0) / (nf + 1.0)
            }
            Family::SusyEllOne => {
                lam * lam / (4.0 * (2.0 * nf + 13.0) * (nf + 1.0))
                    + (2.0 * nf + 5.0) * lam / ((2.0 * nf + 13.0) * (nf + 1.0))
                    + (2.0 * nf + 9.0) / (2.0 * nf + 13.0)
            }
        }
    }

    /// Index of the seed ratio: ratio iteration produces `r_n` for
    /// `n ≥ seed_index()`.
    pub fn seed_index(&self) -> i64 {
        match self {
            Family::Generic { .. } | Family::SusyEllOne => 0,
            Family::EllZero => 2,
        }
    }

    /// Seed ratio `r_{seed_index}` from the Frobenius expansion.
    pub fn seed(&self, lam: C64) -> Result<C64, RecurrenceError> {
        match self {
            Family::Generic { .. } | Family::SusyEllOne => Ok(self.coef_a(-1, lam)),
            Family::EllZero => {
                if (lam - C64::new(1.0, 0.0)).norm() <= ELL_ZERO_EXCLUSION_RADIUS
                    || (lam - C64::new(3.0, 0.0)).norm() <= ELL_ZERO_EXCLUSION_RADIUS
                {
                    return Err(RecurrenceError::ExcludedPoint { lambda: lam });
                }
                let num = lam * lam * lam * lam
                    + 58.0 * lam * lam * lam
                    + 1052.0 * lam * lam
                    + 6350.0 * lam
                    + 4971.0;
                let den = 132.0 * (lam * lam + 32.0 * lam + 235.0);
                Ok(num / den)
            }
        }
    }

    /// First index at which the contraction quantities `ε_n`, `C_n` are
    /// claimed bounded (also the index of the seeded `δ`).
    pub fn bound_start(&self) -> i64 {
        match self {
            Family::Generic { .. } => 3,
            Family::EllZero => 5,
            Family::SusyEllOne => 1,
        }
    }

    /// Angular degree of the underlying mode problem.
    pub fn ell(&self) -> u32 {
        match self {
            Family::Generic { ell } => *ell,
            Family::EllZero => 0,
            Family::SusyEllOne => 1,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn re(x: f64) -> C64 {
        C64::new(x, 0.0)
    }

    #[test]
    fn generic_seed_values() {
        // a₁/a₀ at the four explicit eigenvalue points.
        let g0 = Family::Generic { ell: 0 };
        let g1 = Family::Generic { ell: 1 };
        assert_abs_diff_eq!(g0.seed(re(3.0)).unwrap().re, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(g0.seed(re(1.0)).unwrap().re, -1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(g1.seed(re(1.0)).unwrap().re, -0.25, epsilon = 1e-15);
        assert_abs_diff_eq!(g1.seed(re(0.0)).unwrap().re, -2.0 / 3.0, epsilon = 1e-15);
    }

    #[test]
    fn generic_coefficients_at_known_point() {
        // (ℓ, λ) = (1, 0): A₀ = 3/11, B₀ = 2/11.
        let g1 = Family::Generic { ell: 1 };
        assert_abs_diff_eq!(g1.coef_a(0, re(0.0)).re, 3.0 / 11.0, epsilon = 1e-15);
        assert_abs_diff_eq!(g1.coef_b(0, re(0.0)).re, 2.0 / 11.0, epsilon = 1e-15);
    }

    #[test]
    fn ell_zero_seed_at_origin() {
        let e0 = Family::EllZero;
        assert_abs_diff_eq!(
            e0.seed(re(0.0)).unwrap().re,
            4971.0 / 31020.0,
            epsilon = 1e-15
        );
    }

    #[test]
    fn ell_zero_excludes_explicit_eigenvalues() {
        let e0 = Family::EllZero;
        assert!(e0.seed(re(1.0)).is_err());
        assert!(e0.seed(re(3.01)).is_err());
        assert!(e0.seed(re(3.1)).is_ok());
    }

    #[test]
    fn susy_seed_closed_form() {
        let s = Family::SusyEllOne;
        let lam = re(2.0);
        let expect = 4.0 / 52.0 + 22.0 / 26.0 + 12.0 / 13.0;
        assert_abs_diff_eq!(s.seed(lam).unwrap().re, expect, epsilon = 1e-14);
    }

    #[test]
    fn quasi_solution_first_value() {
        // Generic r̃₁(1, 1) = 1/88 + 11/44 + 3/16 = 79/176.
        let g1 = Family::Generic { ell: 1 };
        assert_abs_diff_eq!(g1.quasi(1, re(1.0)).re, 79.0 / 176.0, epsilon = 1e-15);
    }

    #[test]
    fn quasi_tends_to_one() {
        for fam in [
            Family::Generic { ell: 4 },
            Family::EllZero,
            Family::SusyEllOne,
        ] {
            let q = fam.quasi(100_000, re(2.0));
            assert!((q.re - 1.0).abs() < 1e-3 && q.im.abs() < 1e-9);
        }
    }
}
