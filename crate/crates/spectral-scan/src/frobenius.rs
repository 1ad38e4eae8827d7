//! Indicial exponents at the singular endpoints.
//!
//! Both ρ = 0 and ρ = 1 are regular singular points of the problems handled
//! here. Writing the equation as `f'' + P(ρ)f' + Q(ρ)f = 0`, the exponents
//! solve `s(s−1) + p₀ s + q₀ = 0` with `p₀ = lim (ρ−ρ₀)P` and
//! `q₀ = lim (ρ−ρ₀)²Q`.

use crate::{C64, ScanError};

/// Which second-order problem the indices refer to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndicialProblem {
    /// The radial mode operator `T_ℓ(λ)`.
    Mode,
    /// The `v = ρ²u` form of the free resolvent equation at `λ = 5/2`.
    ResolventV,
}

/// Leading Laurent data `(p₀, q₀)` of the normalized equation at the
/// endpoint.
fn indicial_data(
    problem: IndicialProblem,
    endpoint: u8,
    ell: u32,
    lambda: C64,
) -> Result<(C64, C64), ScanError> {
    let l = ell as f64;
    match (problem, endpoint) {
        (IndicialProblem::Mode, 0) => Ok((C64::new(6.0, 0.0), C64::new(-l * (l + 5.0), 0.0))),
        (IndicialProblem::Mode, 1) => Ok((lambda - 1.0, C64::new(0.0, 0.0))),
        (IndicialProblem::ResolventV, 0) => Ok((
            C64::new(2.0, 0.0),
            C64::new(-(l + 2.0) * (l + 3.0), 0.0),
        )),
        (IndicialProblem::ResolventV, 1) => Ok((C64::new(1.5, 0.0), C64::new(0.0, 0.0))),
        (_, endpoint) => Err(ScanError::UnsupportedEndpoint { endpoint }),
    }
}

/// Indicial roots at `endpoint ∈ {0, 1}`, larger real part first.
pub fn frobenius_indices(
    problem: IndicialProblem,
    endpoint: u8,
    ell: u32,
    lambda: C64,
) -> Result<(C64, C64), ScanError> {
    let (p0, q0) = indicial_data(problem, endpoint, ell, lambda)?;
    let b = p0 - 1.0;
    let disc = (b * b - 4.0 * q0).sqrt();
    let r1 = (-b + disc) / 2.0;
    let r2 = (-b - disc) / 2.0;
    if r1.re >= r2.re {
        Ok((r1, r2))
    } else {
        Ok((r2, r1))
    }
}

/// Residual of the indicial equation at a candidate exponent.
pub fn indicial_residual(
    problem: IndicialProblem,
    endpoint: u8,
    ell: u32,
    lambda: C64,
    s: C64,
) -> Result<C64, ScanError> {
    let (p0, q0) = indicial_data(problem, endpoint, ell, lambda)?;
    Ok(s * (s - 1.0) + p0 * s + q0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn re(x: f64) -> C64 {
        C64::new(x, 0.0)
    }

    #[test]
    fn mode_indices_at_both_ends() {
        for ell in 0u32..6 {
            let (a, b) = frobenius_indices(IndicialProblem::Mode, 0, ell, re(2.0)).unwrap();
            assert_eq!(a, re(ell as f64));
            assert_eq!(b, re(-(ell as f64) - 5.0));
        }
        let lam = C64::new(0.7, 1.3);
        let (a, b) = frobenius_indices(IndicialProblem::Mode, 1, 4, lam).unwrap();
        // {0, 2−λ}, ordered by real part.
        assert!((a - (2.0 - lam)).norm() < 1e-14);
        assert!(b.norm() < 1e-14);
    }

    #[test]
    fn resolvent_indices_at_both_ends() {
        for ell in 0u32..6 {
            let l = ell as f64;
            let (a, b) =
                frobenius_indices(IndicialProblem::ResolventV, 0, ell, re(2.5)).unwrap();
            assert!((a - re(l + 2.0)).norm() < 1e-12);
            assert!((b - re(-l - 3.0)).norm() < 1e-12);
        }
        let (a, b) = frobenius_indices(IndicialProblem::ResolventV, 1, 2, re(2.5)).unwrap();
        assert_eq!(a, re(0.0));
        assert!((b - re(-0.5)).norm() < 1e-15);
    }

    #[test]
    fn other_endpoints_are_unsupported() {
        assert!(matches!(
            frobenius_indices(IndicialProblem::Mode, 2, 0, re(1.0)),
            Err(ScanError::UnsupportedEndpoint { endpoint: 2 })
        ));
    }

    proptest! {
        #[test]
        fn roots_satisfy_the_indicial_equation(
            ell in 0u32..=8,
            lam_re in 0.0f64..=5.0,
            lam_im in -5.0f64..=5.0,
            endpoint in 0u8..=1,
            resolvent in any::<bool>(),
        ) {
            let problem = if resolvent {
                IndicialProblem::ResolventV
            } else {
                IndicialProblem::Mode
            };
            let lam = C64::new(lam_re, lam_im);
            let (a, b) = frobenius_indices(problem, endpoint, ell, lam).unwrap();
            for s in [a, b] {
                let res = indicial_residual(problem, endpoint, ell, lam, s).unwrap();
                prop_assert!(res.norm() < 1e-12, "residual {:.3e}", res.norm());
            }
        }
    }
}
