//! Forward series runs: coefficients, ratios, and polynomial termination.

use crate::family::Family;
use crate::{median, RecurrenceError, C64};

/// Rescaling threshold for the coefficient run; growth past this magnitude
/// rescales the rolling pair to keep everything finite.
const RESCALE_AT: f64 = 1e250;

/// Result of a forward coefficient run `a₀ = 1, a₁ = r_seed, …`.
#[derive(Clone, Debug)]
pub struct SeriesRun {
    /// Index at which the coefficients were first observed to have died
    /// (relative magnitude below the termination threshold for a sustained
    /// run), if they did.
    pub terminated_at: Option<usize>,
    /// Number of coefficients generated.
    pub len: usize,
}

/// Detection parameters for polynomial termination: the series is declared
/// terminated when `|a_n| ≤ rel · max_k |a_k|` for `run` consecutive `n`,
/// provided the quiet run was entered by an abrupt drop from a coefficient
/// of relative size at least `jump`. A polynomial's coefficients die in a
/// single step (to roundoff, ~1e-16 of the running maximum), while a
/// recessive branch decays geometrically and crosses the `rel` threshold
/// smoothly; the `jump` guard keeps the latter from masquerading as
/// termination.
#[derive(Clone, Copy, Debug)]
pub struct TerminationRule {
    pub rel: f64,
    pub run: usize,
    pub jump: f64,
}

impl Default for TerminationRule {
    fn default() -> Self {
        Self {
            rel: 1e-13,
            run: 10,
            jump: 1e-6,
        }
    }
}

/// Generate series coefficients forward and watch for termination.
///
/// Only applicable to families seeded at index 0 (the generic family); the
/// explicit eigenvalues all have terminating generic series.
pub fn forward_series(
    family: Family,
    lam: C64,
    n_cap: usize,
    rule: TerminationRule,
) -> Result<SeriesRun, RecurrenceError> {
    assert_eq!(family.seed_index(), 0, "series run needs an index-0 seed");
    let mut a_prev = C64::new(1.0, 0.0);
    let mut a_curr = family.seed(lam)?;
    let mut running_max = a_prev.norm().max(a_curr.norm());
    let mut quiet = 0usize;
    // Magnitude of the most recent coefficient above the quiet threshold;
    // a₁ may already be quiet (it is at one explicit eigenvalue), so seed
    // from a₀.
    let mut last_loud = a_prev.norm();
    if a_curr.norm() > rule.rel * running_max {
        last_loud = a_curr.norm();
    }
    for n in 0..n_cap as i64 {
        let mut a_next = family.coef_a(n, lam) * a_curr + family.coef_b(n, lam) * a_prev;
        if !a_next.is_finite() {
            return Err(RecurrenceError::NonFinite { index: n as usize });
        }
        if a_next.norm() > RESCALE_AT {
            let s = 1.0 / RESCALE_AT;
            a_next *= s;
            a_curr *= s;
            running_max *= s;
            last_loud *= s;
        }
        a_prev = a_curr;
        a_curr = a_next;
        running_max = running_max.max(a_curr.norm());
        if a_curr.norm() <= rule.rel * running_max {
            quiet += 1;
            if quiet >= rule.run && last_loud >= rule.jump * running_max {
                return Ok(SeriesRun {
                    terminated_at: Some((n as usize + 2) - rule.run + 1),
                    len: n as usize + 3,
                });
            }
        } else {
            quiet = 0;
            last_loud = a_curr.norm();
        }
    }
    Ok(SeriesRun {
        terminated_at: None,
        len: n_cap + 2,
    })
}

/// First `count` series coefficients `a₀ = 1, a₁ = r_seed, a₂, …` without
/// rescaling; intended for truncated-series evaluation, where the dominant
/// branch keeps the coefficients at worst polynomially large.
///
/// Like [`forward_series`], this needs an index-0 seed.
pub fn series_coefficients(
    family: Family,
    lam: C64,
    count: usize,
) -> Result<Vec<C64>, RecurrenceError> {
    assert_eq!(family.seed_index(), 0, "series run needs an index-0 seed");
    let mut out = Vec::with_capacity(count);
    out.push(C64::new(1.0, 0.0));
    if count > 1 {
        out.push(family.seed(lam)?);
    }
    for n in 0..count.saturating_sub(2) as i64 {
        let next = family.coef_a(n, lam) * out[n as usize + 1]
            + family.coef_b(n, lam) * out[n as usize];
        if !next.is_finite() {
            return Err(RecurrenceError::NonFinite { index: n as usize });
        }
        out.push(next);
    }
    out.truncate(count);
    Ok(out)
}

/// Forward ratio iteration `r_{n+1} = A_n + B_n / r_n` from the family seed,
/// returning `r_{seed}, …, r_{seed + count}`.
pub fn ratio_run(family: Family, lam: C64, count: usize) -> Result<Vec<C64>, RecurrenceError> {
    let mut r = family.seed(lam)?;
    let mut out = Vec::with_capacity(count + 1);
    out.push(r);
    let start = family.seed_index();
    for n in start..start + count as i64 {
        r = family.coef_a(n, lam) + family.coef_b(n, lam) / r;
        if !r.is_finite() {
            return Err(RecurrenceError::NonFinite { index: n as usize });
        }
        out.push(r);
    }
    Ok(out)
}

/// Tail statistics of a ratio run against the family quasi-solution:
/// medians of `|r_n/r̃_n|` and `|r_n/r̃_n - 1|` over the last `window`
/// entries.
pub fn ratio_tail(
    family: Family,
    lam: C64,
    ratios: &[C64],
    window: usize,
) -> (f64, f64) {
    let lo = ratios.len().saturating_sub(window);
    let mut mods = Vec::with_capacity(ratios.len() - lo);
    let mut devs = Vec::with_capacity(ratios.len() - lo);
    for (k, r) in ratios.iter().enumerate().skip(lo) {
        let n = family.seed_index() + k as i64;
        let q = r / family.quasi(n, lam);
        mods.push(q.norm());
        devs.push((q - C64::new(1.0, 0.0)).norm());
    }
    (median(&mods), median(&devs))
}

/// Closed-form low-order coefficients of the `ℓ = 0` generic series
/// (with `a₀ = 1`): both vanish exactly at the explicit eigenvalues.
pub fn ell_zero_a2(lam: C64) -> C64 {
    (lam - 1.0) * (lam - 3.0) * (lam * lam + 32.0 * lam + 235.0) / 2016.0
}

pub fn ell_zero_a3(lam: C64) -> C64 {
    (lam - 1.0) * (lam - 3.0)
        * (lam * lam * lam * lam
            + 58.0 * lam * lam * lam
            + 1052.0 * lam * lam
            + 6350.0 * lam
            + 4971.0)
        / 266_112.0
}
