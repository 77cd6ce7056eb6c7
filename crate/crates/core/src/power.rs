//! Integer powers of Sp(2) matrices.
//!
//! [`closed_power`] is the constant-cost route through the little-group
//! decomposition. [`naive_power`] and [`chebyshev_power`] are independent
//! reference routes used to check it.

use crate::error::{Error, Result};
use crate::mat2::{Mat2, Tolerances};
use crate::wigner::{wigner_decompose_with, WignerClass};

pub fn closed_power(m: &Mat2, n: u64) -> Result<Mat2> {
    closed_power_with(m, n, &Tolerances::default())
}

/// `Mᴺ = signᴺ · C·Wᴺ·C⁻¹`, at a cost independent of `N`.
///
/// The rotation and squeeze classes are evaluated without forming `C`. With
/// `W = cos(φ/2)·I + sin(φ/2)·J` the conjugated generator is
/// `CJC⁻¹ = (M − x·I)/sin(φ/2)`, so
/// `C·R(Nφ)·C⁻¹ = cos(Nθ)·I + sin(Nθ)/sin θ · (M − x·I)` with `θ = φ/2` and
/// `x` the half-trace, and likewise with `cosh`/`sinh` for `X(Nχ)`. Near the
/// parabolic boundary `C` is badly conditioned while `M − x·I` is not. The
/// angle is taken from `tan θ = sin θ / x` with `sin θ` from [`discriminant`].
///
/// Parabolic and identity classes are powered as `s(I + K)` with `K = sM − I`:
/// `Mᴺ = sᴺ(I + N·K + N(N−1)/2 · tr(K)·(K + I))`. For an exact shear `tr K = 0`
/// and this is `C·E(Nγ)·C⁻¹`; the curvature term keeps matrices inside the
/// parabolic tolerance band accurate to `O(N³ tr(K)²)`.
pub fn closed_power_with(m: &Mat2, n: u64, tol: &Tolerances) -> Result<Mat2> {
    if n == 0 {
        m.ensure_unimodular(tol)?;
        return Ok(Mat2::IDENTITY);
    }
    let dec = wigner_decompose_with(m, tol)?;
    let sign_n = if dec.sign < 0.0 && n % 2 == 1 {
        -1.0
    } else {
        1.0
    };
    let nf = n as f64;

    let out = match dec.class {
        WignerClass::Parabolic { .. } | WignerClass::Identity => {
            let k = m.scale(dec.sign).add(&Mat2::scalar(-1.0));
            let t = k.trace();
            let curvature = 0.5 * nf * (nf - 1.0) * t;
            Mat2::IDENTITY
                .add(&k.scale(nf))
                .add(&k.add(&Mat2::IDENTITY).scale(curvature))
                .scale(sign_n)
        }
        WignerClass::Elliptic { .. } => {
            let x = m.half_trace();
            let sigma = (-discriminant(m)).max(0.0).sqrt();
            let theta = sigma.atan2(x);
            let (s, c) = (nf * theta).sin_cos();
            let k = m.add(&Mat2::scalar(-x));
            Mat2::scalar(c).add(&k.scale(s / sigma))
        }
        WignerClass::Hyperbolic { chi } => {
            let half = nf * chi.0 / 2.0;
            if half > tol.max_rapidity {
                return Err(Error::Overflow(format!(
                    "N·χ/2 = {half} exceeds the rapidity bound {}",
                    tol.max_rapidity
                )));
            }
            let m = m.scale(dec.sign);
            let x = m.half_trace();
            let sigma = discriminant(&m).max(0.0).sqrt();
            let t = ((x - 1.0) + sigma).ln_1p();
            let k = m.add(&Mat2::scalar(-x));
            Mat2::scalar((nf * t).cosh())
                .add(&k.scale((nf * t).sinh() / sigma))
                .scale(sign_n)
        }
    };
    if !out.is_finite() {
        return Err(Error::Overflow(format!(
            "closed-form power with N = {n} left the double range"
        )));
    }
    Ok(out)
}

/// `x² − det = ((a₁₁ − a₂₂)/2)² + a₁₂a₂₁`, the squared sine (or sinh) of the
/// eigen-angle, without the cancellation of forming `x² − 1`. Near the
/// parabolic boundary an error of one ulp in `det` moves the angle by
/// `ε/sin θ`, which `N` then multiplies.
fn discriminant(m: &Mat2) -> f64 {
    let (a, d) = (m.a11(), m.a22());
    let diff = a - d;
    let bb = diff - a;
    let diff_lo = (a - (diff - bb)) + (-d - bb);
    let (f, f_lo) = (0.5 * diff, 0.5 * diff_lo);
    let w = m.a12() * m.a21();
    let w_lo = m.a12().mul_add(m.a21(), -w);
    f.mul_add(f, w) + (w_lo + 2.0 * f * f_lo)
}

/// Negative exponents through the inverse.
pub fn closed_power_signed(m: &Mat2, n: i64, tol: &Tolerances) -> Result<Mat2> {
    if n >= 0 {
        closed_power_with(m, n as u64, tol)
    } else {
        closed_power_with(&m.inverse(tol)?, n.unsigned_abs(), tol)
    }
}

/// `N` sequential multiplications.
pub fn naive_power(m: &Mat2, n: u64) -> Result<Mat2> {
    if !m.is_finite() {
        return Err(Error::domain("non-finite matrix entries"));
    }
    let mut acc = Mat2::IDENTITY;
    for _ in 0..n {
        acc = acc * *m;
    }
    if !acc.is_finite() {
        return Err(Error::Overflow(format!(
            "naive power with N = {n} left the double range"
        )));
    }
    Ok(acc)
}

/// `Mᴺ = U_{N−1}(x)·M − U_{N−2}(x)·I` with `x` the half-trace and
/// `U_{k+1} = 2x·U_k − U_{k−1}`, `U_{−1} = 0`, `U_0 = 1`.
pub fn chebyshev_power(m: &Mat2, n: u64) -> Result<Mat2> {
    if !m.is_finite() {
        return Err(Error::domain("non-finite matrix entries"));
    }
    if n == 0 {
        return Ok(Mat2::IDENTITY);
    }
    let two_x = m.trace();
    let (mut prev, mut cur) = (0.0_f64, 1.0_f64);
    for _ in 1..n {
        let next = two_x * cur - prev;
        prev = cur;
        cur = next;
    }
    let out = m.scale(cur).add(&Mat2::scalar(-prev));
    if !out.is_finite() {
        return Err(Error::Overflow(format!(
            "Chebyshev recurrence with N = {n} left the double range"
        )));
    }
    Ok(out)
}
