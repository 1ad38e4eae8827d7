//! Collocation assembly of the first-order similarity system on a radial
//! channel.
//!
//! In the direct variables `u = (u₁, u₂)` the linearized generator acts as
//!
//! ```text
//! [Lu]₁ = −ρ u₁′ − u₁ + u₂
//! [Lu]₂ = u₁″ + 6u₁′/ρ − ℓ(ℓ+5)u₁/ρ² − ρ u₂′ − 2u₂ + V u₁
//! ```
//!
//! with potential `V(ρ) = 48/(1+ρ²)²`. Dropping `V` gives the free
//! generator used by the nonlinear flow, which adds `(0, u₁³)` pointwise.
//!
//! Channel-ℓ fields carry a `ρ^ℓ` kinematic factor; peeling it
//! (`u = ρ^ℓ w`) gives an all-even formulation
//!
//! ```text
//! [L̃w]₁ = −ρ w₁′ − (ℓ+1) w₁ + w₂
//! [L̃w]₂ = w₁″ + (2ℓ+6) w₁′/ρ + V w₁ − ρ w₂′ − (ℓ+2) w₂
//! ```
//!
//! free of the `1/ρ²` centrifugal term, which conditions better and is what
//! the time steppers and the extended-precision eigenvalue refinement use.
//! The public matrix is the direct form.

use nalgebra::DMatrix;

use crate::grid::{Parity, RadialGrid};
use crate::{EvolveError, Result};

fn potential(rho: f64) -> f64 {
    profiles::blowup::potential(rho)
}

/// Direct-variable generator on the parity-reduced grid: a dense
/// `2(N+1) × 2(N+1)` matrix acting on stacked `[u₁; u₂]` nodal values.
/// Requires `N ≥ 16`; smaller grids cannot resolve the potential well
/// enough for any downstream use.
pub fn assemble_linear_operator(ell: usize, grid: &RadialGrid) -> Result<DMatrix<f64>> {
    if grid.order() < 16 {
        return Err(EvolveError::Argument(format!(
            "operator assembly needs grid order >= 16, got {}",
            grid.order()
        )));
    }
    Ok(assemble_direct(ell, grid, true))
}

pub(crate) fn assemble_direct(ell: usize, grid: &RadialGrid, with_potential: bool) -> DMatrix<f64> {
    let m = grid.len();
    let parity = Parity::of_channel(ell);
    let d1 = grid.d1(parity);
    let d2 = grid.d2(parity);
    let rho = grid.nodes();
    let centrifugal = (ell * (ell + 5)) as f64;

    let mut a = DMatrix::zeros(2 * m, 2 * m);
    for i in 0..m {
        for j in 0..m {
            a[(i, j)] = -rho[i] * d1[(i, j)];
            a[(i, m + j)] = 0.0;
            a[(m + i, j)] = d2[(i, j)] + 6.0 / rho[i] * d1[(i, j)];
            a[(m + i, m + j)] = -rho[i] * d1[(i, j)];
        }
        a[(i, i)] -= 1.0;
        a[(i, m + i)] = 1.0;
        a[(m + i, i)] -= centrifugal / (rho[i] * rho[i]);
        if with_potential {
            a[(m + i, i)] += potential(rho[i]);
        }
        a[(m + i, m + i)] -= 2.0;
    }
    a
}

pub(crate) fn assemble_peeled(ell: usize, grid: &RadialGrid, with_potential: bool) -> DMatrix<f64> {
    let m = grid.len();
    let d1 = grid.d1(Parity::Even);
    let d2 = grid.d2(Parity::Even);
    let rho = grid.nodes();
    let ell_f = ell as f64;

    let mut a = DMatrix::zeros(2 * m, 2 * m);
    for i in 0..m {
        for j in 0..m {
            a[(i, j)] = -rho[i] * d1[(i, j)];
            a[(m + i, j)] = d2[(i, j)] + (2.0 * ell_f + 6.0) / rho[i] * d1[(i, j)];
            a[(m + i, m + j)] = -rho[i] * d1[(i, j)];
        }
        a[(i, i)] -= ell_f + 1.0;
        a[(i, m + i)] = 1.0;
        if with_potential {
            a[(m + i, i)] += potential(rho[i]);
        }
        a[(m + i, m + i)] -= ell_f + 2.0;
    }
    a
}
