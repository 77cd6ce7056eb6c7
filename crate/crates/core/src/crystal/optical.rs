//! Lossless dielectric multilayers at normal incidence.
//!
//! Amplitudes are power-normalized (scaled by √n), which makes every
//! interface matrix `(1/t)[[1, r], [r, 1]]` with `t = 2√(n_j n_k)/(n_j + n_k)`
//! unimodular on its own.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::su11::Su11Matrix;
use crate::error::{Error, Result};

pub const MAX_INDEX: f64 = 100.0;
pub const MAX_THICKNESS_NM: f64 = 1e7;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Layer {
    /// Real refractive index.
    pub n: f64,
    /// Thickness in nm.
    pub d: f64,
}

impl Layer {
    pub fn new(n: f64, d: f64) -> Result<Self> {
        let layer = Self { n, d };
        layer.validate("layer")?;
        Ok(layer)
    }

    /// Quarter-wave layer for design wavelength `lambda0_nm`.
    pub fn quarter_wave(n: f64, lambda0_nm: f64) -> Result<Self> {
        Self::new(n, lambda0_nm / (4.0 * n))
    }

    pub(crate) fn validate(&self, path: &str) -> Result<()> {
        check_index(self.n, &format!("{path}.n"))?;
        if !(self.d.is_finite() && self.d > 0.0 && self.d < MAX_THICKNESS_NM) {
            return Err(Error::config(
                format!("{path}.d"),
                format!(
                    "thickness must lie in (0, {MAX_THICKNESS_NM}) nm, got {}",
                    self.d
                ),
            ));
        }
        Ok(())
    }

    /// Phase thickness `2π n d / λ`.
    pub fn phase(&self, lambda_nm: f64) -> f64 {
        2.0 * PI * self.n * self.d / lambda_nm
    }
}

pub(crate) fn check_index(n: f64, path: &str) -> Result<()> {
    if !(n.is_finite() && n > 0.0 && n <= MAX_INDEX) {
        return Err(Error::config(
            path,
            format!("index must lie in (0, {MAX_INDEX}], got {n}"),
        ));
    }
    Ok(())
}

/// `diag(e^{iφ}, e^{−iφ})`.
pub fn propagation(phase: f64) -> Su11Matrix {
    Su11Matrix::raw(Complex64::from_polar(1.0, phase), Complex64::new(0.0, 0.0))
}

/// Symmetrized interface from index `from` to index `to`.
pub fn interface(from: f64, to: f64) -> Su11Matrix {
    let sum = from + to;
    let r = (from - to) / sum;
    let t = 2.0 * (from * to).sqrt() / sum;
    Su11Matrix::raw(Complex64::new(1.0 / t, 0.0), Complex64::new(r / t, 0.0))
}

/// One closed period: each layer's propagation followed by the interface to
/// the next layer, the last one wrapping back to the first.
pub fn cell_matrix_optical(cell: &[Layer], lambda_nm: f64) -> Result<Su11Matrix> {
    if cell.is_empty() {
        return Err(Error::domain("unit cell has no layers"));
    }
    if !(lambda_nm.is_finite() && lambda_nm > 0.0) {
        return Err(Error::domain(format!(
            "wavelength must be positive, got {lambda_nm}"
        )));
    }
    let mut acc = Su11Matrix::IDENTITY;
    for (j, layer) in cell.iter().enumerate() {
        let next = &cell[(j + 1) % cell.len()];
        acc = acc * propagation(layer.phase(lambda_nm)) * interface(layer.n, next.n);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interface_is_lossless() {
        for &(a, b) in &[(1.0, 1.5), (2.35, 1.38), (1.0, 99.0)] {
            let i = interface(a, b);
            assert!((i.alpha().norm_sqr() - i.beta().norm_sqr() - 1.0).abs() < 1e-13);
            // back-to-back interfaces cancel
            let both = i * interface(b, a);
            assert!((both.alpha() - Complex64::new(1.0, 0.0)).norm() < 1e-14);
            assert!(both.beta().norm() < 1e-14);
        }
    }

    #[test]
    fn homogeneous_layer_is_pure_phase() {
        let cell = [Layer::new(1.0, 123.0).unwrap()];
        for lambda in [400.0, 550.0, 777.0] {
            let u = cell_matrix_optical(&cell, lambda).unwrap();
            assert!(u.beta().norm() == 0.0);
            let ht = u.to_sp2().half_trace();
            assert!((ht - cell[0].phase(lambda).cos()).abs() < 1e-15);
        }
    }

    #[test]
    fn quarter_wave_pair_at_design_wavelength() {
        let (n1, n2) = (1.38, 2.35);
        let cell = [
            Layer::quarter_wave(n1, 550.0).unwrap(),
            Layer::quarter_wave(n2, 550.0).unwrap(),
        ];
        let m = cell_matrix_optical(&cell, 550.0).unwrap().to_sp2();
        // −(n₁/n₂ + n₂/n₁)/2
        assert!((m.half_trace() + 1.1450662966389147).abs() < 1e-12);
        assert!((m.det() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn invalid_layers() {
        assert!(Layer::new(0.0, 10.0).is_err());
        assert!(Layer::new(1.5, -1.0).is_err());
        assert!(Layer::new(101.0, 1.0).is_err());
        assert!(Layer::new(1.5, 2e7).is_err());
        assert!(cell_matrix_optical(&[], 500.0).is_err());
        assert!(cell_matrix_optical(&[Layer::new(1.5, 1.0).unwrap()], 0.0).is_err());
    }
}
