//! Real 2×2 matrices and the one-parameter generators of Sp(2).
//!
//! Rotations use the half-angle convention: `rotation(θ)` has entries in
//! `θ/2`, so it has period 4π and `rotation(2π) = −I`. Every angle reported
//! anywhere in this crate follows the same convention.

use std::f64::consts::PI;
use std::fmt;
use std::ops::Mul;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest rapidity accepted by the exponential generators. `e^300` is
/// about 1.9e130, leaving room for products before the double ceiling.
pub const MAX_RAPIDITY: f64 = 300.0;

/// Numerical tolerances shared by the decomposition and classification code.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Unimodularity: `|det − 1| ≤ det · max(1, ‖M‖∞²)`.
    pub det: f64,
    /// Width of the parabolic band on `| |half-trace| − 1 |`.
    pub parabolic: f64,
    /// Below this the boost of a Bargmann decomposition counts as zero.
    pub diagonal: f64,
    /// Entrywise distance from `±I` below which a matrix is the identity class.
    pub identity: f64,
    pub max_rapidity: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            det: 1e-9,
            parabolic: 1e-9,
            diagonal: 1e-12,
            identity: 1e-12,
            max_rapidity: MAX_RAPIDITY,
        }
    }
}

/// An angle in radians. Rotation parameters are canonically reported in
/// `(−2π, 2π]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default, Serialize)]
#[serde(transparent)]
pub struct Angle(pub f64);

impl Angle {
    pub fn radians(self) -> f64 {
        self.0
    }

    /// Representative in `(−2π, 2π]`. `rotation` has period 4π, so this
    /// leaves the generated matrix unchanged.
    pub fn canonical(self) -> Angle {
        let period = 4.0 * PI;
        let mut v = self.0.rem_euclid(period);
        if v > 2.0 * PI {
            v -= period;
        }
        Angle(v)
    }
}

/// Additive parameter of boosts, squeezes and shears.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default, Serialize)]
#[serde(transparent)]
pub struct Rapidity(pub f64);

impl Rapidity {
    pub fn value(self) -> f64 {
        self.0
    }
}

/// Which triangular form a shear takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ShearOrientation {
    /// `[[1, γ], [0, 1]]`
    Upper,
    /// `[[1, 0], [−γ, 1]]`
    Lower,
}

/// A real 2×2 matrix, stored row-major.
///
/// `*` follows IEEE semantics; [`Mat2::checked_mul`] reports overflow.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Mat2 {
    a11: f64,
    a12: f64,
    a21: f64,
    a22: f64,
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2::raw(1.0, 0.0, 0.0, 1.0);

    pub(crate) const fn raw(a11: f64, a12: f64, a21: f64, a22: f64) -> Self {
        Self { a11, a12, a21, a22 }
    }

    pub fn new(a11: f64, a12: f64, a21: f64, a22: f64) -> Result<Self> {
        let m = Self::raw(a11, a12, a21, a22);
        if !m.is_finite() {
            return Err(Error::domain(format!(
                "non-finite matrix entries {:?}",
                m.entries()
            )));
        }
        Ok(m)
    }

    /// Builds a matrix and checks that it belongs to Sp(2).
    pub fn unimodular(a11: f64, a12: f64, a21: f64, a22: f64, tol: &Tolerances) -> Result<Self> {
        let m = Self::new(a11, a12, a21, a22)?;
        m.ensure_unimodular(tol)?;
        Ok(m)
    }

    pub fn from_entries(e: [f64; 4]) -> Result<Self> {
        Self::new(e[0], e[1], e[2], e[3])
    }

    pub fn scalar(s: f64) -> Self {
        Self::raw(s, 0.0, 0.0, s)
    }

    pub fn a11(&self) -> f64 {
        self.a11
    }
    pub fn a12(&self) -> f64 {
        self.a12
    }
    pub fn a21(&self) -> f64 {
        self.a21
    }
    pub fn a22(&self) -> f64 {
        self.a22
    }

    /// Row-major entries.
    pub fn entries(&self) -> [f64; 4] {
        [self.a11, self.a12, self.a21, self.a22]
    }

    pub fn is_finite(&self) -> bool {
        self.entries().iter().all(|v| v.is_finite())
    }

    pub fn trace(&self) -> f64 {
        self.a11 + self.a22
    }

    pub fn half_trace(&self) -> f64 {
        0.5 * (self.a11 + self.a22)
    }

    pub fn det(&self) -> f64 {
        self.a11 * self.a22 - self.a12 * self.a21
    }

    pub fn transpose(&self) -> Mat2 {
        Self::raw(self.a11, self.a21, self.a12, self.a22)
    }

    pub fn scale(&self, s: f64) -> Mat2 {
        Self::raw(s * self.a11, s * self.a12, s * self.a21, s * self.a22)
    }

    pub fn add(&self, other: &Mat2) -> Mat2 {
        Self::raw(
            self.a11 + other.a11,
            self.a12 + other.a12,
            self.a21 + other.a21,
            self.a22 + other.a22,
        )
    }

    /// Maximum absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        (self.a11.abs() + self.a12.abs()).max(self.a21.abs() + self.a22.abs())
    }

    pub fn max_abs_entry(&self) -> f64 {
        self.entries()
            .iter()
            .fold(0.0_f64, |acc, v| acc.max(v.abs()))
    }

    pub fn is_unimodular(&self, tol: &Tolerances) -> bool {
        let n = self.norm_inf();
        self.is_finite() && (self.det() - 1.0).abs() <= tol.det * (n * n).max(1.0)
    }

    pub fn ensure_unimodular(&self, tol: &Tolerances) -> Result<()> {
        if !self.is_finite() {
            return Err(Error::domain("non-finite matrix entries"));
        }
        if !self.is_unimodular(tol) {
            return Err(Error::NotUnimodular { det: self.det() });
        }
        Ok(())
    }

    pub fn checked_mul(&self, other: &Mat2) -> Result<Mat2> {
        let p = *self * *other;
        if !p.is_finite() {
            return Err(Error::Overflow(
                "matrix product left the double range".into(),
            ));
        }
        Ok(p)
    }

    /// Inverse of a unimodular matrix, `[[a22, −a12], [−a21, a11]]`.
    pub fn inverse(&self, tol: &Tolerances) -> Result<Mat2> {
        self.ensure_unimodular(tol)?;
        Ok(self.adjugate())
    }

    /// The adjugate; equals the inverse whenever det = 1.
    pub fn adjugate(&self) -> Mat2 {
        Self::raw(self.a22, -self.a12, -self.a21, self.a11)
    }

    pub fn max_abs_diff(&self, other: &Mat2) -> f64 {
        self.entries()
            .iter()
            .zip(other.entries())
            .fold(0.0_f64, |acc, (a, b)| acc.max((a - b).abs()))
    }

    /// `max_abs_diff` scaled by the larger entry magnitude of the two (at
    /// least 1).
    pub fn rel_diff(&self, other: &Mat2) -> f64 {
        let scale = self.max_abs_entry().max(other.max_abs_entry()).max(1.0);
        self.max_abs_diff(other) / scale
    }

    /// `self · other · self⁻¹` for unimodular `self`.
    pub fn conjugate(&self, other: &Mat2) -> Mat2 {
        *self * *other * self.adjugate()
    }
}

impl Mul for Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: Mat2) -> Mat2 {
        Mat2::raw(
            self.a11 * rhs.a11 + self.a12 * rhs.a21,
            self.a11 * rhs.a12 + self.a12 * rhs.a22,
            self.a21 * rhs.a11 + self.a22 * rhs.a21,
            self.a21 * rhs.a12 + self.a22 * rhs.a22,
        )
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.a11, self.a12, self.a21, self.a22
        )
    }
}

fn check_finite(name: &str, v: f64) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("{name} must be finite, got {v}")))
    }
}

fn check_rapidity(name: &str, v: f64) -> Result<()> {
    check_finite(name, v)?;
    if v.abs() > MAX_RAPIDITY {
        return Err(Error::Overflow(format!(
            "|{name}| = {} exceeds the rapidity bound {MAX_RAPIDITY}",
            v.abs()
        )));
    }
    Ok(())
}

/// `[[cos(θ/2), −sin(θ/2)], [sin(θ/2), cos(θ/2)]]`.
pub fn rotation(theta: f64) -> Result<Mat2> {
    check_finite("theta", theta)?;
    let (s, c) = (0.5 * theta).sin_cos();
    Ok(Mat2::raw(c, -s, s, c))
}

/// `diag(e^λ, e^−λ)`.
pub fn boost(lambda: f64) -> Result<Mat2> {
    check_rapidity("lambda", lambda)?;
    Ok(Mat2::raw(lambda.exp(), 0.0, 0.0, (-lambda).exp()))
}

/// The boost along the 45° axis, `[[cosh λ, sinh λ], [sinh λ, cosh λ]]`.
/// Equal to `rotation(π/2)·boost(λ)·rotation(−π/2)`.
pub fn squeeze45(lambda: f64) -> Result<Mat2> {
    check_rapidity("lambda", lambda)?;
    let (c, s) = (lambda.cosh(), lambda.sinh());
    Ok(Mat2::raw(c, s, s, c))
}

pub fn shear(gamma: f64, orientation: ShearOrientation) -> Result<Mat2> {
    check_finite("gamma", gamma)?;
    Ok(match orientation {
        ShearOrientation::Upper => Mat2::raw(1.0, gamma, 0.0, 1.0),
        ShearOrientation::Lower => Mat2::raw(1.0, 0.0, -gamma, 1.0),
    })
}
