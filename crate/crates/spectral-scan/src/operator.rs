//! Pointwise application of the radial mode operators to 2-jets.

use crate::{C64, ScanError};

/// Value and first two derivatives of a radial function at a point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Jet {
    pub f: C64,
    pub df: C64,
    pub d2f: C64,
}

impl Jet {
    pub fn new(f: C64, df: C64, d2f: C64) -> Self {
        Self { f, df, d2f }
    }

    pub fn real(f: f64, df: f64, d2f: f64) -> Self {
        Self {
            f: C64::new(f, 0.0),
            df: C64::new(df, 0.0),
            d2f: C64::new(d2f, 0.0),
        }
    }
}

/// The radial mode problem at angular degree `ℓ` and spectral parameter `λ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ModeProblem {
    pub ell: u32,
    pub lambda: C64,
}

impl ModeProblem {
    pub fn new(ell: u32, lambda: C64) -> Self {
        Self { ell, lambda }
    }
}

pub(crate) fn check_domain(rho: f64) -> Result<(), ScanError> {
    if rho > 0.0 && rho < 1.0 {
        Ok(())
    } else {
        Err(ScanError::Domain { rho })
    }
}

/// Evaluate `T_ℓ(λ)f` at `ρ ∈ (0, 1)` for `f` given with two derivatives:
///
/// ```text
/// (1-ρ²)f'' + [6/ρ - 2(λ+2)ρ]f'
///           - [(λ+1)(λ+2) + ℓ(ℓ+5)/ρ² - 48/(1+ρ²)²]f
/// ```
pub fn apply_t<F: Fn(f64) -> Jet>(
    ell: u32,
    lambda: C64,
    f: F,
    rho: f64,
) -> Result<C64, ScanError> {
    check_domain(rho)?;
    let jet = f(rho);
    let l = ell as f64;
    let r2 = rho * rho;
    let potential = 48.0 / ((1.0 + r2) * (1.0 + r2));
    Ok((1.0 - r2) * jet.d2f + (6.0 / rho - 2.0 * rho * (lambda + 2.0)) * jet.df
        - ((lambda + 1.0) * (lambda + 2.0) + l * (l + 5.0) / r2 - potential) * jet.f)
}

/// Evaluate the twice-SUSY-reduced `ℓ = 1` operator at `ρ ∈ (0, 1)`:
///
/// ```text
/// (1-ρ²)f'' + [4/ρ - 2(λ+1)ρ]f' - [λ(λ+1) + 4(ρ²+7)/(ρ²(1+ρ²))]f
/// ```
///
/// Its spectrum is that of `T_1(λ)` with the two explicit eigenvalues
/// `λ = 0, 1` removed.
pub fn apply_t_susy<F: Fn(f64) -> Jet>(lambda: C64, f: F, rho: f64) -> Result<C64, ScanError> {
    check_domain(rho)?;
    let jet = f(rho);
    let r2 = rho * rho;
    Ok((1.0 - r2) * jet.d2f + (4.0 / rho - 2.0 * rho * (lambda + 1.0)) * jet.df
        - (lambda * (lambda + 1.0) + 4.0 * (r2 + 7.0) / (r2 * (1.0 + r2))) * jet.f)
}

/// Evaluate the free variant of the radial operator (no zero-order
/// potential well), which is what the resolvent equation at λ = 5/2
/// decouples into.
pub fn apply_t_free<F: Fn(f64) -> Jet>(
    ell: u32,
    lambda: C64,
    f: F,
    rho: f64,
) -> Result<C64, ScanError> {
    check_domain(rho)?;
    let jet = f(rho);
    let l = ell as f64;
    let r2 = rho * rho;
    Ok((1.0 - r2) * jet.d2f + (6.0 / rho - 2.0 * rho * (lambda + 2.0)) * jet.df
        - ((lambda + 1.0) * (lambda + 2.0) + l * (l + 5.0) / r2) * jet.f)
}

/// 2-jet of a rational profile `p(ρ)/(1+ρ²)^k`, using its exact derivative.
pub fn profile_jet(profile: &profiles::radial::RationalProfile, rho: f64) -> Jet {
    let d1 = profile.derivative();
    let d2 = d1.derivative();
    Jet::real(profile.eval(rho), d1.eval(rho), d2.eval(rho))
}
