//! State, configuration, and trajectory types for the similarity flows.

use nalgebra::{Complex, DVector};
use serde::{Deserialize, Serialize};

use crate::grid::{Parity, RadialGrid};
use crate::{EvolveError, Result};

/// Nodal values of a channel pair `(ψ₁, ψ₂)` on a [`RadialGrid`], in the
/// direct (unpeeled) variables, at slow time `tau`.
#[derive(Clone, Debug, PartialEq)]
pub struct RadialState {
    pub ell: usize,
    pub psi1: Vec<Complex<f64>>,
    pub psi2: Vec<Complex<f64>>,
    pub tau: f64,
}

impl RadialState {
    pub fn new(
        ell: usize,
        psi1: Vec<Complex<f64>>,
        psi2: Vec<Complex<f64>>,
        tau: f64,
    ) -> Result<Self> {
        if psi1.is_empty() || psi1.len() != psi2.len() {
            return Err(EvolveError::Argument(format!(
                "component lengths must match and be nonzero, got {} and {}",
                psi1.len(),
                psi2.len()
            )));
        }
        Ok(Self {
            ell,
            psi1,
            psi2,
            tau,
        })
    }

    pub fn from_real(ell: usize, psi1: &[f64], psi2: &[f64], tau: f64) -> Result<Self> {
        Self::new(
            ell,
            psi1.iter().map(|&x| Complex::new(x, 0.0)).collect(),
            psi2.iter().map(|&x| Complex::new(x, 0.0)).collect(),
            tau,
        )
    }

    pub fn len(&self) -> usize {
        self.psi1.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// True when the imaginary content is at roundoff level relative to the
    /// real content.
    pub fn is_real(&self, tol: f64) -> bool {
        let re_max = self
            .psi1
            .iter()
            .chain(&self.psi2)
            .map(|z| z.re.abs())
            .fold(0.0, f64::max);
        let im_max = self
            .psi1
            .iter()
            .chain(&self.psi2)
            .map(|z| z.im.abs())
            .fold(0.0, f64::max);
        im_max <= tol * (1.0 + re_max)
    }

    /// Resolution defect of the channel-parity extension: the fraction of
    /// Chebyshev energy in the unresolved top quarter of modes, maximized
    /// over components and real/imaginary parts. Roundoff-small for smooth
    /// fields compatible with the `(−1)^ℓ` parity; O(1) for grid-scale or
    /// parity-incompatible data.
    pub fn parity_defect(&self, grid: &RadialGrid) -> Result<f64> {
        self.check_grid(grid)?;
        let parity = Parity::of_channel(self.ell);
        let mut worst: f64 = 0.0;
        for comp in [&self.psi1, &self.psi2] {
            let re: Vec<f64> = comp.iter().map(|z| z.re).collect();
            let im: Vec<f64> = comp.iter().map(|z| z.im).collect();
            worst = worst.max(grid.tail_energy_fraction_complex(&re, &im, parity));
        }
        Ok(worst)
    }

    /// Weighted-`H¹` surrogate norm of the state (see
    /// [`RadialGrid::quadrature`]); the peel `ψ/ρ^ℓ` is applied first so all
    /// channels are measured in the same even-field norm.
    pub fn surrogate_norm(&self, grid: &RadialGrid) -> Result<f64> {
        let (re, im) = self.to_peeled_parts(grid)?;
        let nr = grid.norm_stacked(&re);
        let ni = grid.norm_stacked(&im);
        Ok(nr.hypot(ni))
    }

    pub(crate) fn check_grid(&self, grid: &RadialGrid) -> Result<()> {
        if self.len() != grid.len() {
            return Err(EvolveError::Argument(format!(
                "state has {} nodes but grid has {}",
                self.len(),
                grid.len()
            )));
        }
        Ok(())
    }

    /// Stacked peeled vectors `[w₁; w₂] = [ψ₁/ρ^ℓ; ψ₂/ρ^ℓ]`, split into
    /// real and imaginary parts.
    pub(crate) fn to_peeled_parts(&self, grid: &RadialGrid) -> Result<(DVector<f64>, DVector<f64>)> {
        self.check_grid(grid)?;
        let m = grid.len();
        let mut re = DVector::zeros(2 * m);
        let mut im = DVector::zeros(2 * m);
        for i in 0..m {
            let peel = grid.nodes()[i].powi(self.ell as i32);
            re[i] = self.psi1[i].re / peel;
            im[i] = self.psi1[i].im / peel;
            re[m + i] = self.psi2[i].re / peel;
            im[m + i] = self.psi2[i].im / peel;
        }
        Ok((re, im))
    }

    pub(crate) fn from_peeled_parts(
        ell: usize,
        re: &DVector<f64>,
        im: &DVector<f64>,
        grid: &RadialGrid,
        tau: f64,
    ) -> Self {
        let m = grid.len();
        let mut psi1 = Vec::with_capacity(m);
        let mut psi2 = Vec::with_capacity(m);
        for i in 0..m {
            let peel = grid.nodes()[i].powi(ell as i32);
            psi1.push(Complex::new(re[i] * peel, im[i] * peel));
            psi2.push(Complex::new(re[m + i] * peel, im[m + i] * peel));
        }
        Self {
            ell,
            psi1,
            psi2,
            tau,
        }
    }
}

/// Time-stepping parameters shared by the linear and nonlinear flows.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EvolveConfig {
    /// RK4 step in slow time.
    pub dt: f64,
    /// Final slow time; the flow takes `round(tau_end/dt)` steps.
    pub tau_end: f64,
    /// Exponential spectral filter strength in [0, 1]; 0 disables it.
    pub filter_strength: f64,
    /// Sup-norm of ψ₁ near the origin above which a run is declared blown
    /// up (nonlinear flow only; both flows also stop on norms past 1e12).
    pub blowup_cutoff: f64,
    /// Surrogate norm below which a nonlinear run is declared dispersed;
    /// 0 disables dispersal detection.
    pub decay_cutoff: f64,
    /// Stability fraction of the θ-spacing bound (see
    /// [`RadialGrid::min_theta_spacing`]).
    pub cfl: f64,
}

impl Default for EvolveConfig {
    fn default() -> Self {
        Self {
            dt: 1e-3,
            tau_end: 10.0,
            filter_strength: 0.0,
            blowup_cutoff: 50.0,
            decay_cutoff: 0.0,
            cfl: 0.5,
        }
    }
}

impl EvolveConfig {
    pub fn validate(&self, grid: &RadialGrid) -> Result<()> {
        if !(self.dt > 0.0 && self.dt.is_finite()) {
            return Err(EvolveError::Argument(format!("dt must be positive, got {}", self.dt)));
        }
        if !(self.tau_end > 0.0 && self.tau_end.is_finite()) {
            return Err(EvolveError::Argument(format!(
                "tau_end must be positive, got {}",
                self.tau_end
            )));
        }
        if !(0.0..=1.0).contains(&self.filter_strength) {
            return Err(EvolveError::Argument(format!(
                "filter_strength must lie in [0, 1], got {}",
                self.filter_strength
            )));
        }
        if !(self.blowup_cutoff > 0.0) {
            return Err(EvolveError::Argument(format!(
                "blowup_cutoff must be positive, got {}",
                self.blowup_cutoff
            )));
        }
        if self.decay_cutoff < 0.0 {
            return Err(EvolveError::Argument(format!(
                "decay_cutoff must be nonnegative, got {}",
                self.decay_cutoff
            )));
        }
        if !(self.cfl > 0.0 && self.cfl <= 1.0) {
            return Err(EvolveError::Argument(format!(
                "cfl must lie in (0, 1], got {}",
                self.cfl
            )));
        }
        let bound = self.cfl * grid.min_theta_spacing();
        if self.dt > bound {
            return Err(EvolveError::Argument(format!(
                "dt = {} exceeds the stability bound {} = cfl * pi/(2N+1) at N = {}",
                self.dt,
                bound,
                grid.order()
            )));
        }
        Ok(())
    }
}

/// One recorded diagnostic sample along a trajectory. Mode amplitudes and
/// the distance to the static profile always refer to the deviation from
/// the explicit static solution of the channel; for linear runs the evolved
/// field itself is that deviation.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TrajectorySample {
    pub tau: f64,
    /// Surrogate norm of the full evolved field.
    pub norm: f64,
    /// Unstable-mode amplitude (rate-3 direction; channel 0 only).
    pub alpha_h: f64,
    /// Gauge-mode amplitude (rate-1 direction).
    pub alpha_g0: f64,
    /// Neutral-mode amplitude (rate-0 direction; channel 1 only).
    pub alpha_q: f64,
    /// |ψ₁| at the node nearest the origin.
    pub sup_origin: f64,
    /// Surrogate norm of the deviation from the static profile.
    pub dist_static: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub enum TrajectoryStatus {
    /// Ran to `tau_end`.
    Completed,
    /// Crossed the blowup cutoff (or left f64 range) at the given time.
    BlowupDetected { tau: f64 },
    /// Fell below the dispersal cutoff at the given time.
    DispersalDetected { tau: f64 },
}

impl TrajectoryStatus {
    pub fn label(&self) -> &'static str {
        match self {
            TrajectoryStatus::Completed => "completed",
            TrajectoryStatus::BlowupDetected { .. } => "blowup",
            TrajectoryStatus::DispersalDetected { .. } => "dispersal",
        }
    }
}

/// Recorded output of one flow run.
#[derive(Clone, Debug)]
pub struct Trajectory {
    pub ell: usize,
    pub samples: Vec<TrajectorySample>,
    pub status: TrajectoryStatus,
    pub final_state: RadialState,
}

impl Trajectory {
    /// Samples with `window.0 <= tau <= window.1`.
    pub fn samples_in(&self, window: (f64, f64)) -> impl Iterator<Item = &TrajectorySample> {
        self.samples
            .iter()
            .filter(move |s| s.tau >= window.0 && s.tau <= window.1)
    }

    pub fn taus_strictly_increase(&self) -> bool {
        self.samples.windows(2).all(|p| p[0].tau < p[1].tau)
    }

    pub fn last_tau(&self) -> f64 {
        self.samples.last().map_or(f64::NAN, |s| s.tau)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_config_respects_the_theta_cfl_bound() {
        let grid = RadialGrid::new(64).unwrap();
        EvolveConfig::default().validate(&grid).unwrap();
        // pi/129 * 0.5 = 0.01217..., so dt = 1e-3 has ample margin while
        // dt = 0.02 must be rejected.
        let too_fast = EvolveConfig {
            dt: 0.02,
            ..EvolveConfig::default()
        };
        assert!(too_fast.validate(&grid).is_err());
    }

    #[test]
    fn config_field_ranges_are_enforced() {
        let grid = RadialGrid::new(32).unwrap();
        for bad in [
            EvolveConfig {
                dt: -1e-3,
                ..EvolveConfig::default()
            },
            EvolveConfig {
                tau_end: 0.0,
                ..EvolveConfig::default()
            },
            EvolveConfig {
                filter_strength: 1.5,
                ..EvolveConfig::default()
            },
            EvolveConfig {
                blowup_cutoff: 0.0,
                ..EvolveConfig::default()
            },
            EvolveConfig {
                cfl: 0.0,
                ..EvolveConfig::default()
            },
        ] {
            assert!(bad.validate(&grid).is_err(), "{bad:?} should fail");
        }
    }

    #[test]
    fn mismatched_component_lengths_are_rejected() {
        assert!(RadialState::from_real(0, &[1.0, 2.0], &[1.0], 0.0).is_err());
    }

    #[test]
    fn parity_defect_flags_incompatible_data() {
        let grid = RadialGrid::new(24).unwrap();
        let smooth: Vec<f64> = grid
            .nodes()
            .iter()
            .map(|r| r / (1.0 + r * r) / (1.0 + r * r))
            .collect();
        let good = RadialState::from_real(1, &smooth, &smooth, 0.0).unwrap();
        assert!(good.parity_defect(&grid).unwrap() < 1e-10);

        let ragged: Vec<f64> = (0..grid.len())
            .map(|i| if i % 2 == 0 { 1.0 } else { -1.0 })
            .collect();
        let bad = RadialState::from_real(1, &ragged, &ragged, 0.0).unwrap();
        assert!(bad.parity_defect(&grid).unwrap() > 0.5);
    }

    #[test]
    fn surrogate_norm_matches_a_closed_form() {
        let grid = RadialGrid::new(12).unwrap();
        let p1: Vec<f64> = grid.nodes().iter().map(|r| r * r).collect();
        let p2 = vec![1.0; grid.len()];
        let s = RadialState::from_real(0, &p1, &p2, 0.0).unwrap();
        let exact = (4.0 / 9.0 + 1.0 / 11.0 + 1.0 / 7.0_f64).sqrt();
        assert!((s.surrogate_norm(&grid).unwrap() - exact).abs() < 1e-12);
    }

    #[test]
    fn peel_round_trip_preserves_the_state() {
        let grid = RadialGrid::new(16).unwrap();
        let p1: Vec<f64> = grid.nodes().iter().map(|r| r * (1.0 - r * r)).collect();
        let p2: Vec<f64> = grid.nodes().iter().map(|r| r * (2.0 + r * r)).collect();
        let s = RadialState::from_real(1, &p1, &p2, 0.25).unwrap();
        let (re, im) = s.to_peeled_parts(&grid).unwrap();
        let back = RadialState::from_peeled_parts(1, &re, &im, &grid, 0.25);
        for i in 0..grid.len() {
            assert!((back.psi1[i].re - p1[i]).abs() < 1e-14);
            assert!((back.psi2[i].re - p2[i]).abs() < 1e-14);
            assert_eq!(back.psi1[i].im, 0.0);
        }
    }
}
