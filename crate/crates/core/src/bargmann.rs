//! Bargmann decomposition `M = R(θ₁)·B(λ)·R(θ₂)` and its symmetric
//! recombination `M = D·(R·B·R)·D⁻¹`.

use serde::Serialize;

use crate::error::Result;
use crate::mat2::{boost, rotation, Angle, Mat2, Rapidity, Tolerances};

/// Canonical factors: `λ ≥ 0`, both angles in `(−2π, 2π]`, and `θ₂ = 0`
/// whenever the boost is below the diagonal tolerance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BargmannFactors {
    pub theta1: Angle,
    pub lambda: Rapidity,
    pub theta2: Angle,
}

/// Half-sum and half-difference of the two Bargmann angles:
/// `θ₁ = θ + δ`, `θ₂ = θ − δ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Recombination {
    pub theta: Angle,
    pub delta: Angle,
}

impl BargmannFactors {
    pub fn new(theta1: f64, lambda: f64, theta2: f64) -> Self {
        Self {
            theta1: Angle(theta1),
            lambda: Rapidity(lambda),
            theta2: Angle(theta2),
        }
    }

    /// `rotation(θ₁)·boost(λ)·rotation(θ₂)`.
    pub fn reconstruct(&self) -> Result<Mat2> {
        Ok(rotation(self.theta1.0)? * boost(self.lambda.0)? * rotation(self.theta2.0)?)
    }
}

pub fn bargmann_decompose(m: &Mat2) -> Result<BargmannFactors> {
    bargmann_decompose_with(m, &Tolerances::default())
}

/// Two-sided rotation diagonalization of a unimodular matrix.
///
/// Writing `M = e·I + h·J + f·Z + g·X` with `J` the quarter turn, `Z =
/// diag(1, −1)` and `X` the swap, a product `Rot(α)·diag(σ₁, σ₂)·Rot(β)` has
/// `(e, h) = q·(cos(α+β), sin(α+β))` and `(f, g) = r·(cos(α−β), sin(α−β))`
/// with `q = (σ₁+σ₂)/2`, `r = (σ₁−σ₂)/2`. For det 1 this gives `cosh λ = q`
/// and `sinh λ = r`.
pub fn bargmann_decompose_with(m: &Mat2, tol: &Tolerances) -> Result<BargmannFactors> {
    m.ensure_unimodular(tol)?;
    let e = 0.5 * (m.a11() + m.a22());
    let f = 0.5 * (m.a11() - m.a22());
    let g = 0.5 * (m.a21() + m.a12());
    let h = 0.5 * (m.a21() - m.a12());

    let r = f.hypot(g);
    let lambda = r.asinh();
    let sum = h.atan2(e);

    // The full-angle rotation Rot(α) is rotation(2α) in the half-angle convention.
    if lambda < tol.diagonal {
        return Ok(BargmannFactors::new(2.0 * sum, lambda, 0.0));
    }
    let diff = g.atan2(f);
    Ok(BargmannFactors::new(sum + diff, lambda, sum - diff))
}

pub fn recombine(f: &BargmannFactors) -> Recombination {
    let (t1, t2) = (f.theta1.0, f.theta2.0);
    Recombination {
        theta: Angle(0.5 * (t1 + t2)),
        delta: Angle(0.5 * (t1 - t2)),
    }
}

/// The core `K = rotation(θ)·boost(λ)·rotation(θ)`; the source matrix is
/// `rotation(δ)·K·rotation(−δ)`.
pub fn symmetric_core(f: &BargmannFactors) -> Result<Mat2> {
    let rc = recombine(f);
    let r = rotation(rc.theta.0)?;
    Ok(r * boost(f.lambda.0)? * r)
}
