//! Grid sweeps of the contraction bounds with a serializable verdict.
//!
//! [`verify_bounds`] evaluates, for one recurrence family over a λ-grid in
//! the closed right half-plane, the four quantities the contraction argument
//! rests on:
//!
//! * `delta-seed`: `|δ_start|` against 1/3,
//! * `epsilon`: `|ε_n|` against its stated bound, worst slack over `n`,
//! * `contraction`: `|C_n|` against its stated bound, worst slack over `n`,
//! * `delta-propagation`: `max_n |δ_n|` along the iterated deviation
//!   trajectory against 1/3.
//!
//! Violations become rows with negative slack (and bump the violation
//! count), never panics or errors. Grid points where the seed is undefined
//! (the `ℓ = 0` exclusion disks) are listed in `excluded`.

use serde::{Deserialize, Serialize};
use workpool::ExecMode;

use crate::bounds::{
    contraction, contraction_bound, delta_step, epsilon, epsilon_bound, seeded_delta, DELTA_BOUND,
};
use crate::family::Family;
use crate::C64;

/// Family selector for bound sweeps; `Generic` fans out over an ℓ-range.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    Generic,
    EllZero,
    SusyEllOne,
}

impl FamilyKind {
    fn instances(self, ells: &[u32]) -> Vec<Family> {
        match self {
            FamilyKind::Generic => ells.iter().map(|&ell| Family::Generic { ell }).collect(),
            FamilyKind::EllZero => vec![Family::EllZero],
            FamilyKind::SusyEllOne => vec![Family::SusyEllOne],
        }
    }
}

/// One measured quantity at one grid point. `slack = bound - value`;
/// negative slack is a violation.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BoundRow {
    pub kind: FamilyKind,
    pub ell: u32,
    pub lambda_re: f64,
    pub lambda_im: f64,
    pub quantity: String,
    pub value: f64,
    pub bound: f64,
    pub slack: f64,
}

/// Grid point skipped because the seed is undefined there.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExcludedPoint {
    pub ell: u32,
    pub lambda_re: f64,
    pub lambda_im: f64,
    pub reason: String,
}

/// Outcome of a [`verify_bounds`] sweep.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BoundReport {
    pub kind: FamilyKind,
    pub n_cap: i64,
    pub rows: Vec<BoundRow>,
    pub excluded: Vec<ExcludedPoint>,
    pub violations: usize,
}

impl BoundReport {
    pub fn is_clean(&self) -> bool {
        self.violations == 0
    }

    /// Most negative slack over all rows (`+∞` for an empty report).
    pub fn worst_slack(&self) -> f64 {
        self.rows.iter().map(|r| r.slack).fold(f64::INFINITY, f64::min)
    }
}

fn row(fam: Family, kind: FamilyKind, lam: C64, quantity: &str, value: f64, bound: f64) -> BoundRow {
    BoundRow {
        kind,
        ell: fam.ell(),
        lambda_re: lam.re,
        lambda_im: lam.im,
        quantity: quantity.to_string(),
        value,
        bound,
        slack: bound - value,
    }
}

fn point_rows(fam: Family, kind: FamilyKind, lam: C64, n_cap: i64) -> Result<Vec<BoundRow>, String> {
    let start = fam.bound_start();
    let mut delta = seeded_delta(fam, lam).map_err(|e| e.to_string())?;
    let mut out = Vec::with_capacity(4);
    out.push(row(fam, kind, lam, "delta-seed", delta.norm(), DELTA_BOUND));

    // Worst (smallest) slack over n for the n-dependent bounds, and the
    // largest |δ_n| along the exact deviation trajectory.
    let mut eps_worst: Option<BoundRow> = None;
    let mut c_worst: Option<BoundRow> = None;
    let mut delta_max = delta.norm();
    for n in start..n_cap {
        let e = row(fam, kind, lam, "epsilon", epsilon(fam, n, lam).norm(), epsilon_bound(fam, n));
        if eps_worst.as_ref().is_none_or(|w| e.slack < w.slack) {
            eps_worst = Some(e);
        }
        let c = row(
            fam,
            kind,
            lam,
            "contraction",
            contraction(fam, n, lam).norm(),
            contraction_bound(fam, n),
        );
        if c_worst.as_ref().is_none_or(|w| c.slack < w.slack) {
            c_worst = Some(c);
        }
        delta = delta_step(epsilon(fam, n, lam), contraction(fam, n, lam), delta);
        delta_max = delta_max.max(delta.norm());
    }
    out.extend(eps_worst);
    out.extend(c_worst);
    out.push(row(fam, kind, lam, "delta-propagation", delta_max, DELTA_BOUND));
    Ok(out)
}

/// Sweep the stated bounds for `kind` over `ells` (generic family only; the
/// special families carry their own fixed ℓ) and `lambda_grid`, checking
/// `n` up to `n_cap`.
pub fn verify_bounds(
    kind: FamilyKind,
    ells: &[u32],
    lambda_grid: &[C64],
    n_cap: i64,
    mode: ExecMode,
) -> BoundReport {
    let points: Vec<(Family, C64)> = kind
        .instances(ells)
        .into_iter()
        .flat_map(|fam| lambda_grid.iter().map(move |&lam| (fam, lam)))
        .collect();
    let results = workpool::map(mode, &points, |&(fam, lam)| {
        point_rows(fam, kind, lam, n_cap).map_err(|reason| ExcludedPoint {
            ell: fam.ell(),
            lambda_re: lam.re,
            lambda_im: lam.im,
            reason,
        })
    });

    let mut rows = Vec::new();
    let mut excluded = Vec::new();
    for res in results {
        match res {
            Ok(mut r) => rows.append(&mut r),
            Err(x) => excluded.push(x),
        }
    }
    let violations = rows.iter().filter(|r| r.slack < 0.0).count();
    BoundReport { kind, n_cap, rows, excluded, violations }
}

/// Evenly spaced segment `[a, b]` in the complex plane with `count ≥ 2`
/// endpoints included; convenience for axis grids.
pub fn segment(a: C64, b: C64, count: usize) -> Vec<C64> {
    assert!(count >= 2, "segment needs at least both endpoints");
    (0..count)
        .map(|i| {
            let t = i as f64 / (count - 1) as f64;
            a + (b - a) * t
        })
        .collect()
}
