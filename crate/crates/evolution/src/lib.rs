//! Method-of-lines evolution of the similarity-coordinate system
//! `∂_τ(u₁,u₂) = L(u₁,u₂)`, restricted to a single spherical-harmonic
//! channel `ℓ`, together with the diagnostics built on top of it:
//!
//! * [`grid`] — Chebyshev–Gauss–Lobatto collocation on `ρ ∈ (0,1]` with the
//!   origin handled by parity reduction and the characteristic boundary
//!   `ρ = 1` left free,
//! * [`operator`] — dense first-order-system matrices for the linearized
//!   channel operator,
//! * [`spectrum`] — filtered discrete spectra and high-precision eigenvalue
//!   refinement in double-double arithmetic ([`dd`]),
//! * [`flow`] — classical RK4 time stepping, linear and cubic,
//! * [`modes`] — amplitude extraction against the explicit eigenmodes,
//!   initial-data rescaling, and decay-rate fits,
//! * [`threshold`] — bisection for the blowup/dispersal threshold along the
//!   unstable direction,
//! * [`io`] — trajectory CSV, run metadata, and binary checkpoints.
//!
//! Norms reported anywhere in this crate are the weighted `H¹`-type
//! Clenshaw–Curtis surrogate described in [`grid::RadialGrid::norm`]; growth
//! and decay exponents do not depend on the choice among equivalent norms.

pub mod dd;
pub mod flow;
pub mod grid;
pub mod io;
pub mod modes;
pub mod operator;
pub mod spectrum;
pub mod state;
pub mod threshold;

pub use flow::{evolve_linear, evolve_nonlinear};
pub use grid::RadialGrid;
pub use modes::{convergence_rate, initial_data_transform, mode_amplitudes, ModeAmplitudes};
pub use operator::assemble_linear_operator;
pub use spectrum::{discrete_spectrum, refined_eigenvalue};
pub use state::{EvolveConfig, RadialState, Trajectory, TrajectoryStatus};
pub use threshold::{threshold_bisect, ThresholdConfig, ThresholdOutcome};

/// Checkpoint / sidecar format revision written by [`io::save_checkpoint`].
pub const CHECKPOINT_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum EvolveError {
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("numerical failure in {0}")]
    Numerical(&'static str),
    #[error("rescaled sampling point {point} leaves the data ball of radius 2")]
    Domain { point: f64 },
    #[error("bracket endpoints carry the same label: {lo} at alpha_lo, {hi} at alpha_hi")]
    Bracket { lo: &'static str, hi: &'static str },
    #[error("trajectory does not decay on the fit window")]
    NoDecay,
    #[error("checkpoint format: {0}")]
    Checkpoint(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, EvolveError>;
