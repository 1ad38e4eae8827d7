//! Contraction quantities of the quasi-solution argument and their stated
//! bounds.
//!
//! Writing `δ_n = r_n/r̃_n - 1`, the ratio recurrence becomes
//!
//! ```text
//! δ_{n+1} = ε_n - C_n δ_n / (1 + δ_n),
//! ε_n = (A_n r̃_n + B_n)/(r̃_n r̃_{n+1}) - 1,
//! C_n = B_n/(r̃_n r̃_{n+1}),
//! ```
//!
//! and the bounds `|δ_seed| ≤ 1/3`, `|ε_n| ≤ 1/12 + x`, `|C_n| ≤ 1/2 - 2x`
//! (with the `ℓ`-dependent slack `x` of each family) propagate `|δ_n| ≤ 1/3`
//! for all `n`, keeping the seeded solution dominant. [`delta_step`] is the
//! exact one-step map; the `*_bound` functions give each family's stated
//! right-hand sides.

use crate::family::Family;
use crate::{RecurrenceError, C64};

/// One step of the deviation recurrence.
pub fn delta_step(eps: C64, c: C64, delta: C64) -> C64 {
    eps - c * delta / (C64::new(1.0, 0.0) + delta)
}

/// `ε_n` for a family at `(n, λ)`.
pub fn epsilon(family: Family, n: i64, lam: C64) -> C64 {
    let rt0 = family.quasi(n, lam);
    let rt1 = family.quasi(n + 1, lam);
    (family.coef_a(n, lam) * rt0 + family.coef_b(n, lam)) / (rt0 * rt1) - 1.0
}

/// `C_n` for a family at `(n, λ)`.
pub fn contraction(family: Family, n: i64, lam: C64) -> C64 {
    family.coef_b(n, lam) / (family.quasi(n, lam) * family.quasi(n + 1, lam))
}

/// Seeded deviation `δ_m = r_m/r̃_m - 1` at the family's bound start index
/// `m` (3 for generic, 5 for the `ℓ = 0` variant, 1 for SUSY), where `r_m`
/// is obtained from the exact seed by ratio iteration.
pub fn seeded_delta(family: Family, lam: C64) -> Result<C64, RecurrenceError> {
    let m = family.bound_start();
    let mut r = family.seed(lam)?;
    for n in family.seed_index()..m {
        let denom_guard = r.norm();
        if denom_guard < 1e-280 {
            return Err(RecurrenceError::DegenerateRatio { index: n as usize });
        }
        r = family.coef_a(n, lam) + family.coef_b(n, lam) / r;
    }
    Ok(r / family.quasi(m, lam) - 1.0)
}

/// Stated bound on `|δ_seed|`, common to all families.
pub const DELTA_BOUND: f64 = 1.0 / 3.0;

/// Stated bound on `|ε_n|`.
pub fn epsilon_bound(family: Family, n: i64) -> f64 {
    match family {
        Family::Generic { ell } => {
            1.0 / 12.0 + ell as f64 / (6.0 * (ell as f64 + n as f64 + 5.0))
        }
        Family::EllZero | Family::SusyEllOne => 1.0 / 12.0,
    }
}

/// Stated bound on `|C_n|`.
pub fn contraction_bound(family: Family, n: i64) -> f64 {
    match family {
        Family::Generic { ell } => 0.5 - ell as f64 / (3.0 * (ell as f64 + n as f64 + 5.0)),
        Family::EllZero | Family::SusyEllOne => 0.5,
    }
}
