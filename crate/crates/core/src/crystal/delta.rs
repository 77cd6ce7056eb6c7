//! Kronig–Penney lattice of delta potentials.
//!
//! The state `(ψ, −ψ′/k)` is carried across one period `a` by
//! `rotation(2ka)`, and across a delta of strength `g` by the lower shear
//! with `γ = g/k`. The cell half-trace is `cos(ka) + (g/2k)·sin(ka)`.

use crate::error::{Error, Result};
use crate::mat2::{rotation, shear, Mat2, ShearOrientation};

pub fn cell_matrix_delta(g: f64, a: f64, k: f64) -> Result<Mat2> {
    if !(k.is_finite() && k > 0.0) {
        return Err(Error::domain(format!(
            "wavenumber must be positive, got {k}"
        )));
    }
    if !(g.is_finite() && a.is_finite()) {
        return Err(Error::domain("delta strength and period must be finite"));
    }
    Ok(shear(g / k, ShearOrientation::Lower)? * rotation(2.0 * k * a)?)
}

/// `cos(ka) + (g/2k)·sin(ka)`.
pub fn discriminant(g: f64, a: f64, k: f64) -> f64 {
    (k * a).cos() + g / (2.0 * k) * (k * a).sin()
}
