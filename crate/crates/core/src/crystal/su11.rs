//! The wave-basis form `[[α, β], [β*, α*]]`, `|α|² − |β|² = 1`, and its fixed
//! isomorphism with real Sp(2):
//!
//! `M = [[Re α + Re β, Im β − Im α], [Im α + Im β, Re α − Re β]]`.

use std::ops::Mul;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::mat2::{Mat2, Tolerances};

/// Lossless tolerance on `|α|² − |β|² = 1`, relative to `max(1, |α|²)`.
pub const LOSSLESS_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Su11Matrix {
    alpha: Complex64,
    beta: Complex64,
}

impl Su11Matrix {
    pub const IDENTITY: Su11Matrix = Su11Matrix {
        alpha: Complex64::new(1.0, 0.0),
        beta: Complex64::new(0.0, 0.0),
    };

    pub fn new(alpha: Complex64, beta: Complex64) -> Result<Self> {
        let u = Self { alpha, beta };
        if !(alpha.is_finite() && beta.is_finite()) {
            return Err(Error::domain("non-finite SU(1,1) entries"));
        }
        let norm = alpha.norm_sqr();
        let defect = norm - beta.norm_sqr() - 1.0;
        if defect.abs() > LOSSLESS_TOL * norm.max(1.0) {
            return Err(Error::domain(format!(
                "|α|² − |β|² = {} is not 1",
                defect + 1.0
            )));
        }
        Ok(u)
    }

    pub(crate) fn raw(alpha: Complex64, beta: Complex64) -> Self {
        Self { alpha, beta }
    }

    pub fn alpha(&self) -> Complex64 {
        self.alpha
    }

    pub fn beta(&self) -> Complex64 {
        self.beta
    }

    /// `1/|α|²`.
    pub fn transmittance(&self) -> f64 {
        1.0 / self.alpha.norm_sqr()
    }

    /// `|β|²/|α|²`.
    pub fn reflectance(&self) -> f64 {
        (self.beta / self.alpha).norm_sqr()
    }

    pub fn to_sp2(&self) -> Mat2 {
        su11_to_sp2(self)
    }
}

impl Mul for Su11Matrix {
    type Output = Su11Matrix;

    fn mul(self, rhs: Su11Matrix) -> Su11Matrix {
        Su11Matrix {
            alpha: self.alpha * rhs.alpha + self.beta * rhs.beta.conj(),
            beta: self.alpha * rhs.beta + self.beta * rhs.alpha.conj(),
        }
    }
}

pub fn su11_to_sp2(u: &Su11Matrix) -> Mat2 {
    let (a, b) = (u.alpha, u.beta);
    Mat2::raw(a.re + b.re, b.im - a.im, a.im + b.im, a.re - b.re)
}

pub fn sp2_to_su11(m: &Mat2, tol: &Tolerances) -> Result<Su11Matrix> {
    m.ensure_unimodular(tol)?;
    Ok(sp2_to_su11_unchecked(m))
}

pub(crate) fn sp2_to_su11_unchecked(m: &Mat2) -> Su11Matrix {
    let alpha = Complex64::new(0.5 * (m.a11() + m.a22()), 0.5 * (m.a21() - m.a12()));
    let beta = Complex64::new(0.5 * (m.a11() - m.a22()), 0.5 * (m.a12() + m.a21()));
    Su11Matrix { alpha, beta }
}
