//! Half-plane eigenvalue scan driver.
//!
//! Classifies every node of a rectangular λ-grid for each angular degree up
//! to `ell_max`, in parallel, and collects the results in a serializable
//! report. A companion sweep runs the twice-reduced ℓ = 1 recurrence over
//! the same grid to confirm that the reduction removed both explicit
//! eigenvalues without admitting new ones.

use recurrence::classify::{classify_family, ClassifyConfig};
pub use recurrence::classify::{Classification, Evidence};
use recurrence::family::Family;
use serde::{Deserialize, Serialize};
use workpool::ExecMode;

use crate::C64;

/// Classify a single spectral parameter for angular degree `ell`, running
/// the forward series to `n_cap` with dominant-tail tolerance `tol`.
pub fn classify_lambda(
    ell: u32,
    lambda: C64,
    n_cap: usize,
    tol: f64,
) -> (Classification, Evidence) {
    let cfg = ClassifyConfig {
        n_cap,
        tail_tolerance: tol,
        ..ClassifyConfig::default()
    };
    recurrence::classify::classify_lambda(ell, lambda, &cfg)
}

/// Rectangular scan grid: λ ranges over `re_min..=re_max` × `im_min..=im_max`
/// in steps of `step`, for every `ell ≤ ell_max`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub ell_max: u32,
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
    pub step: f64,
}

impl GridSpec {
    /// All `(ell, λ)` nodes, row-major in (ell, re, im) order. Endpoints are
    /// included; a half-open float comparison with a `step/2` guard keeps
    /// accumulated rounding from dropping or duplicating the last column.
    pub fn nodes(&self) -> Vec<(u32, C64)> {
        assert!(self.step > 0.0, "grid step must be positive");
        let mut nodes = Vec::new();
        let n_re = ((self.re_max - self.re_min) / self.step + 0.5).floor() as i64;
        let n_im = ((self.im_max - self.im_min) / self.step + 0.5).floor() as i64;
        for ell in 0..=self.ell_max {
            for i in 0..=n_re.max(-1) {
                for j in 0..=n_im.max(-1) {
                    let re = self.re_min + self.step * i as f64;
                    let im = self.im_min + self.step * j as f64;
                    nodes.push((ell, C64::new(re, im)));
                }
            }
        }
        nodes
    }
}

/// Outcome of one grid node.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct ScanEntry {
    pub ell: u32,
    pub lambda_re: f64,
    pub lambda_im: f64,
    pub classification: Classification,
    pub evidence: Evidence,
}

/// Full scan result, one entry per grid node.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScanReport {
    pub grid: GridSpec,
    pub n_cap: usize,
    pub entries: Vec<ScanEntry>,
}

impl ScanReport {
    /// The nodes classified as eigenvalues, in grid order.
    pub fn eigenvalues(&self) -> Vec<(u32, f64, f64)> {
        self.entries
            .iter()
            .filter(|e| e.classification == Classification::Eigenvalue)
            .map(|e| (e.ell, e.lambda_re, e.lambda_im))
            .collect()
    }

    /// The nodes the cascade could not decide, in grid order.
    pub fn undecided(&self) -> Vec<(u32, f64, f64)> {
        self.entries
            .iter()
            .filter(|e| e.classification == Classification::Undecided)
            .map(|e| (e.ell, e.lambda_re, e.lambda_im))
            .collect()
    }
}

/// Classify every node of `grid`, visiting each exactly once.
pub fn scan_halfplane(grid: GridSpec, cfg: &ClassifyConfig, mode: ExecMode) -> ScanReport {
    let nodes = grid.nodes();
    let entries = workpool::map(mode, &nodes, |&(ell, lambda)| {
        let (classification, evidence) = recurrence::classify::classify_lambda(ell, lambda, cfg);
        ScanEntry {
            ell,
            lambda_re: lambda.re,
            lambda_im: lambda.im,
            classification,
            evidence,
        }
    });
    ScanReport {
        grid,
        n_cap: cfg.n_cap,
        entries,
    }
}

/// Run the twice-reduced ℓ = 1 recurrence over a λ-grid. The reduction
/// strips both explicit ℓ = 1 eigenvalues, so a clean run returns no
/// eigenvalue entries at all.
pub fn scan_susy(grid: GridSpec, cfg: &ClassifyConfig, mode: ExecMode) -> Vec<ScanEntry> {
    // Only the λ-rectangle of the grid matters here; the reduced problem is
    // tied to ℓ = 1.
    let lambda_grid = GridSpec { ell_max: 0, ..grid };
    let nodes: Vec<C64> = lambda_grid.nodes().iter().map(|&(_, lam)| lam).collect();
    workpool::map(mode, &nodes, |&lambda| {
        let (classification, evidence) = classify_family(Family::SusyEllOne, lambda, cfg);
        ScanEntry {
            ell: 1,
            lambda_re: lambda.re,
            lambda_im: lambda.im,
            classification,
            evidence,
        }
    })
}
