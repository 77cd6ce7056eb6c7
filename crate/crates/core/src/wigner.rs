//! Reduction of an Sp(2) matrix to a Wigner little-group matrix,
//! `M = sign · C·W·C⁻¹` with `C = rotation(δ)·S(η)`.
//!
//! `W` is one of
//!
//! * `R(φ)`, a rotation, when `|tr M|/2 < 1` (elliptic),
//! * `X(χ) = [[cosh χ/2, sinh χ/2], [sinh χ/2, cosh χ/2]]` when `|tr M|/2 > 1` (hyperbolic),
//! * a shear `E(γ)` when `|tr M|/2 = 1` and `M ≠ ±I` (parabolic),
//! * `I` for `M = ±I`.
//!
//! The squeeze conjugator is `S(η) = diag(e^{−η/2}, e^{η/2})`, so that after
//! the diagonal entries have been equalized by `rotation(δ)`,
//! `e^{2η} = |m₂₁ / m₁₂|`. With this orientation the symmetric core
//! `rotation(θ)·squeeze45(λ)·rotation(θ)` yields
//! `e^{2η} = (cosh λ sin θ + sinh λ) / (cosh λ sin θ − sinh λ)`.

use std::f64::consts::PI;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mat2::{
    rotation, shear, squeeze45, Angle, Mat2, Rapidity, ShearOrientation, Tolerances,
};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "class", rename_all = "lowercase")]
pub enum WignerClass {
    /// `φ ∈ (0, 4π)`, `cos(φ/2)` equal to the half-trace.
    Elliptic {
        phi: Angle,
    },
    /// `χ > 0`, `cosh(χ/2)` equal to the absolute half-trace.
    Hyperbolic {
        chi: Rapidity,
    },
    Parabolic {
        gamma: Rapidity,
        orientation: ShearOrientation,
    },
    Identity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassTag {
    Elliptic,
    Hyperbolic,
    Parabolic,
    Identity,
}

impl ClassTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            ClassTag::Elliptic => "elliptic",
            ClassTag::Hyperbolic => "hyperbolic",
            ClassTag::Parabolic => "parabolic",
            ClassTag::Identity => "identity",
        }
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl WignerClass {
    pub fn tag(&self) -> ClassTag {
        match self {
            WignerClass::Elliptic { .. } => ClassTag::Elliptic,
            WignerClass::Hyperbolic { .. } => ClassTag::Hyperbolic,
            WignerClass::Parabolic { .. } => ClassTag::Parabolic,
            WignerClass::Identity => ClassTag::Identity,
        }
    }

    /// The little-group matrix `W`.
    pub fn matrix(&self) -> Result<Mat2> {
        self.power(1, &Tolerances::default())
    }

    /// `Wᴺ`: `R(Nφ)`, `X(Nχ)`, `E(Nγ)` or `I`.
    pub fn power(&self, n: u64, tol: &Tolerances) -> Result<Mat2> {
        let nf = n as f64;
        match *self {
            WignerClass::Elliptic { phi } => rotation(nf * phi.0),
            WignerClass::Hyperbolic { chi } => {
                let half = nf * chi.0 / 2.0;
                if half > tol.max_rapidity {
                    return Err(Error::Overflow(format!(
                        "N·χ/2 = {half} exceeds the rapidity bound {}",
                        tol.max_rapidity
                    )));
                }
                squeeze45(half)
            }
            WignerClass::Parabolic { gamma, orientation } => shear(nf * gamma.0, orientation),
            WignerClass::Identity => Ok(Mat2::IDENTITY),
        }
    }
}

/// `M = sign · C·W·C⁻¹` with `C = rotation(δ)·diag(e^{−η/2}, e^{η/2})`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WignerDecomposition {
    pub class: WignerClass,
    pub sign: f64,
    pub conjugator: Mat2,
    pub delta: Angle,
    pub eta: Rapidity,
}

impl WignerDecomposition {
    pub fn reconstruct(&self) -> Result<Mat2> {
        let w = self.class.matrix()?;
        Ok(self.conjugator.conjugate(&w).scale(self.sign))
    }
}

/// `rotation(δ)·diag(e^{−η/2}, e^{η/2})`.
pub fn conjugator(delta: f64, eta: f64) -> Result<Mat2> {
    let r = rotation(delta)?;
    let (a, b) = ((-0.5 * eta).exp(), (0.5 * eta).exp());
    Ok(r * Mat2::raw(a, 0.0, 0.0, b))
}

pub fn classify(m: &Mat2) -> Result<WignerClass> {
    classify_with(m, &Tolerances::default())
}

/// Trace-based classification; `|half-trace|` against `1 ± ε_parab`.
pub fn classify_with(m: &Mat2, tol: &Tolerances) -> Result<WignerClass> {
    Ok(wigner_decompose_with(m, tol)?.class)
}

pub fn wigner_decompose(m: &Mat2) -> Result<WignerDecomposition> {
    wigner_decompose_with(m, &Tolerances::default())
}

pub fn wigner_decompose_with(m: &Mat2, tol: &Tolerances) -> Result<WignerDecomposition> {
    m.ensure_unimodular(tol)?;
    let e = m.half_trace();
    let sign = if e < 0.0 { -1.0 } else { 1.0 };

    if m.max_abs_diff(&Mat2::scalar(sign)) <= tol.identity {
        return Ok(WignerDecomposition {
            class: WignerClass::Identity,
            sign,
            conjugator: Mat2::IDENTITY,
            delta: Angle(0.0),
            eta: Rapidity(0.0),
        });
    }

    let f = 0.5 * (m.a11() - m.a22());
    let g = 0.5 * (m.a21() + m.a12());

    // rotation(−δ)·M·rotation(δ) keeps the trace and a₂₁ − a₁₂ and turns
    // ((a₁₁ − a₂₂)/2, (a₁₂ + a₂₁)/2) by −δ; the first component vanishes here.
    let mut delta = (-f).atan2(g);
    if delta > 0.5 * PI {
        delta -= PI;
    } else if delta <= -0.5 * PI {
        delta += PI;
    }
    if delta == 0.0 {
        delta = 0.0;
    }
    let (m12, m21) = equalized_off_diagonals(m, f, delta);

    let excess = e.abs() - 1.0;
    if excess.abs() <= tol.parabolic {
        let (gamma, orientation) = if m21.abs() <= m12.abs() {
            (sign * m12, ShearOrientation::Upper)
        } else {
            (-sign * m21, ShearOrientation::Lower)
        };
        return Ok(WignerDecomposition {
            class: WignerClass::Parabolic {
                gamma: Rapidity(gamma),
                orientation,
            },
            sign,
            conjugator: rotation(delta)?,
            delta: Angle(delta),
            eta: Rapidity(0.0),
        });
    }

    if excess > 0.0 {
        // X(χ) has positive off-diagonals; a half turn of the conjugating
        // rotation flips their sign.
        let (mut m12, mut m21) = (m12, m21);
        if m12 * sign < 0.0 {
            delta = if delta <= 0.0 { delta + PI } else { delta - PI };
            (m12, m21) = (-m21, -m12);
        }
        let sinh_half = (m12 * m21).abs().sqrt();
        let eta = 0.5 * (m21.abs().ln() - m12.abs().ln());
        return Ok(WignerDecomposition {
            class: WignerClass::Hyperbolic {
                chi: Rapidity(2.0 * sinh_half.asinh()),
            },
            sign,
            conjugator: conjugator(delta, eta)?,
            delta: Angle(delta),
            eta: Rapidity(eta),
        });
    }

    let sin_half = m21.signum() * (m12 * m21).abs().sqrt();
    let mut half = sin_half.atan2(e);
    if half < 0.0 {
        half += 2.0 * PI;
    }
    let eta = 0.5 * (m21.abs().ln() - m12.abs().ln());
    Ok(WignerDecomposition {
        class: WignerClass::Elliptic {
            phi: Angle(2.0 * half),
        },
        sign: 1.0,
        conjugator: conjugator(delta, eta)?,
        delta: Angle(delta),
        eta: Rapidity(eta),
    })
}

/// Off-diagonal entries of `rotation(−δ)·M·rotation(δ)`, written so that
/// `δ = 0` returns `M`'s own entries without cancellation.
fn equalized_off_diagonals(m: &Mat2, f: f64, delta: f64) -> (f64, f64) {
    let (s, c) = (0.5 * delta).sin_cos();
    let (c2, s2) = (c * c, s * s);
    let cross = f * delta.sin();
    (
        m.a12() * c2 - m.a21() * s2 - cross,
        m.a21() * c2 - m.a12() * s2 - cross,
    )
}

/// Little-group parameters predicted directly from the symmetric-core
/// parameters `(λ, θ)`, for the core `rotation(θ)·squeeze45(λ)·rotation(θ)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CoreParams {
    pub class: WignerClass,
    pub sign: f64,
    pub eta: Rapidity,
}

/// Closed-form relations between `(λ, θ)` and `(φ | χ | γ, η)`.
///
/// With `p = cosh λ sin θ − sinh λ` and `q = cosh λ sin θ + sinh λ`:
/// `p > 0` gives `cos(φ/2) = cosh λ cos θ`, `e^{2η} = q/p`; `p < 0` gives
/// `cosh(χ/2) = |cosh λ cos θ|`, `e^{2η} = q/(−p)`; `p = 0` is the shear with
/// `|γ| = q`, the limit of `e^η sin(φ/2)`. The sign test is only meaningful
/// for `q > 0`; `q ≤ 0` with `λ > 0` is reported as a convention violation.
pub fn params_from_bargmann(lambda: f64, theta: f64, tol: &Tolerances) -> Result<CoreParams> {
    if !lambda.is_finite() || !theta.is_finite() {
        return Err(Error::domain("lambda and theta must be finite"));
    }
    let (ch, sh) = (lambda.cosh(), lambda.sinh());
    let (st, ct) = theta.sin_cos();
    let x = ch * ct;
    let sign = if x < 0.0 { -1.0 } else { 1.0 };

    if lambda.abs() < tol.diagonal {
        if st.abs() <= tol.identity {
            return Ok(CoreParams {
                class: WignerClass::Identity,
                sign,
                eta: Rapidity(0.0),
            });
        }
        return Ok(CoreParams {
            class: WignerClass::Elliptic {
                phi: Angle((2.0 * theta).rem_euclid(4.0 * PI)),
            },
            sign: 1.0,
            eta: Rapidity(0.0),
        });
    }

    let p = ch * st - sh;
    let q = ch * st + sh;
    if q <= 0.0 {
        return Err(Error::ConventionViolation(format!(
            "cosh λ sin θ + sinh λ = {q} is not positive (λ = {lambda}, θ = {theta})"
        )));
    }

    if (x.abs() - 1.0).abs() <= tol.parabolic {
        return Ok(CoreParams {
            class: WignerClass::Parabolic {
                gamma: Rapidity(-sign * q),
                orientation: ShearOrientation::Lower,
            },
            sign,
            eta: Rapidity(0.0),
        });
    }

    let elliptic = x.abs() < 1.0;
    if elliptic != (p > 0.0) {
        return Err(Error::ConventionViolation(format!(
            "sign of cosh λ sin θ − sinh λ = {p} disagrees with half-trace {x}"
        )));
    }

    if elliptic {
        let half = (p * q).sqrt().atan2(x);
        Ok(CoreParams {
            class: WignerClass::Elliptic {
                phi: Angle(2.0 * half),
            },
            sign: 1.0,
            eta: Rapidity(0.5 * (q / p).ln()),
        })
    } else {
        let chi = 2.0 * (-p * q).sqrt().asinh();
        // Negative trace needs the half-turned conjugator, which inverts the ratio.
        let eta = sign * 0.5 * (q / -p).ln();
        Ok(CoreParams {
            class: WignerClass::Hyperbolic { chi: Rapidity(chi) },
            sign,
            eta: Rapidity(eta),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mat2::boost;

    fn core(lambda: f64, theta: f64) -> Mat2 {
        let r = rotation(theta).unwrap();
        r * squeeze45(lambda).unwrap() * r
    }

    #[test]
    fn boost_is_hyperbolic() {
        let d = wigner_decompose(&boost(1.0).unwrap()).unwrap();
        match d.class {
            WignerClass::Hyperbolic { chi } => assert!((chi.0 - 2.0).abs() < 1e-14),
            other => panic!("{other:?}"),
        }
        assert_eq!(d.sign, 1.0);
        assert!(d.reconstruct().unwrap().rel_diff(&boost(1.0).unwrap()) < 1e-14);
    }

    #[test]
    fn rotation_is_elliptic() {
        let d = wigner_decompose(&rotation(0.4).unwrap()).unwrap();
        assert_eq!(d.class.tag(), ClassTag::Elliptic);
        if let WignerClass::Elliptic { phi } = d.class {
            assert!((phi.0 - 0.4).abs() < 1e-15);
        }
        assert!(d.conjugator.max_abs_diff(&Mat2::IDENTITY) < 1e-15);
        assert_eq!(d.eta.0, 0.0);

        // negative angles land in (2π, 4π)
        let d = wigner_decompose(&rotation(-0.4).unwrap()).unwrap();
        if let WignerClass::Elliptic { phi } = d.class {
            assert!((phi.0 - (4.0 * PI - 0.4)).abs() < 1e-14);
        } else {
            panic!();
        }
    }

    #[test]
    fn symmetric_core_elliptic_values() {
        // cos(φ/2) = cosh 0.2 · cos 0.5 = 0.8951927966953893
        let m = core(0.2, 0.5);
        assert!((m.half_trace() - 0.8951927966953893).abs() < 1e-15);
        let d = wigner_decompose(&m).unwrap();
        match d.class {
            WignerClass::Elliptic { phi } => assert!((phi.0 - 0.9238654418817875).abs() < 1e-13),
            other => panic!("{other:?}"),
        }
        // e^{2η} = (0.48904605372 + 0.20133600254) / (0.48904605372 − 0.20133600254)
        assert!(((2.0 * d.eta.0).exp() - 2.399575730584793).abs() < 1e-12);
        assert!((d.eta.0 - 0.43764597140183076).abs() < 1e-13);
        assert!(d.delta.0.abs() < 1e-15);
        assert!(d.reconstruct().unwrap().max_abs_diff(&m) < 1e-12);
    }

    #[test]
    fn shear_is_parabolic() {
        let s = shear(2.5, ShearOrientation::Upper).unwrap();
        let d = wigner_decompose(&s).unwrap();
        assert_eq!(
            d.class,
            WignerClass::Parabolic {
                gamma: Rapidity(2.5),
                orientation: ShearOrientation::Upper
            }
        );
        assert_eq!(d.conjugator, Mat2::IDENTITY);

        let s = shear(0.7, ShearOrientation::Lower).unwrap().scale(-1.0);
        let d = wigner_decompose(&s).unwrap();
        assert_eq!(d.sign, -1.0);
        assert!(d.reconstruct().unwrap().max_abs_diff(&s) < 1e-15);
    }

    #[test]
    fn boosted_shear_normalizes_scale() {
        // boost(η)·E(γ)·boost(−η) = E(γ e^{2η}); the decomposition keeps η = 0
        // and moves the scale into γ.
        let (eta, gamma) = (0.6, 1.5);
        let m = boost(eta)
            .unwrap()
            .conjugate(&shear(gamma, ShearOrientation::Upper).unwrap());
        let d = wigner_decompose(&m).unwrap();
        match d.class {
            WignerClass::Parabolic {
                gamma: g,
                orientation,
            } => {
                assert_eq!(orientation, ShearOrientation::Upper);
                assert!((g.0 - gamma * (2.0 * eta).exp()).abs() < 1e-13);
            }
            other => panic!("{other:?}"),
        }
        assert!(d.reconstruct().unwrap().max_abs_diff(&m) < 1e-13);
    }

    #[test]
    fn elliptic_limit_approaches_shear() {
        // S R(φ) S⁻¹ with e^η sin(φ/2) = γ held fixed tends to a shear.
        let gamma = 1.3;
        for &phi in &[1e-2, 1e-3, 1e-4] {
            let eta = (gamma / (phi / 2.0_f64).sin()).ln();
            let c = conjugator(0.0, eta).unwrap();
            let m = c.conjugate(&rotation(phi).unwrap());
            let d = wigner_decompose(&m).unwrap();
            assert!((d.eta.0 - eta).abs() < 1e-9);
            if let WignerClass::Elliptic { phi: p } = d.class {
                assert!((d.eta.0.exp() * (p.0 / 2.0).sin() - gamma).abs() < 1e-9);
            } else {
                panic!();
            }
            assert!(m.max_abs_diff(&shear(-gamma, ShearOrientation::Lower).unwrap()) < phi);
        }
    }

    #[test]
    fn identity_class() {
        let d = wigner_decompose(&Mat2::IDENTITY).unwrap();
        assert_eq!(d.class, WignerClass::Identity);
        let d = wigner_decompose(&rotation(2.0 * PI).unwrap()).unwrap();
        assert_eq!((d.class, d.sign), (WignerClass::Identity, -1.0));
    }

    #[test]
    fn negative_trace_hyperbolic() {
        let m = boost(0.8).unwrap().scale(-1.0);
        let d = wigner_decompose(&m).unwrap();
        assert_eq!(d.sign, -1.0);
        assert!(d.reconstruct().unwrap().rel_diff(&m) < 1e-14);
        let m = squeeze45(-0.8).unwrap();
        let d = wigner_decompose(&m).unwrap();
        assert_eq!(d.sign, 1.0);
        assert!((d.delta.0.abs() - PI).abs() < 1e-15 || d.delta.0.abs() < PI);
        assert!(d.reconstruct().unwrap().rel_diff(&m) < 1e-14);
    }

    #[test]
    fn delta_branch() {
        let m = rotation(0.3).unwrap() * boost(0.7).unwrap() * rotation(-0.1).unwrap();
        let d = wigner_decompose(&m).unwrap();
        assert!(d.delta.0 > -PI / 2.0 && d.delta.0 <= PI / 2.0);
        let eq = rotation(-d.delta.0).unwrap() * m * rotation(d.delta.0).unwrap();
        assert!((eq.a11() - eq.a22()).abs() < 1e-14);
    }

    #[test]
    fn rejects_non_unimodular() {
        assert!(matches!(
            classify(&Mat2::new(1.0, 1.0, 1.0, 1.0).unwrap()),
            Err(Error::NotUnimodular { .. })
        ));
    }

    #[test]
    fn params_trivial_cases() {
        let tol = Tolerances::default();
        let p = params_from_bargmann(0.0, 0.8, &tol).unwrap();
        assert_eq!(p.class, WignerClass::Elliptic { phi: Angle(1.6) });
        assert_eq!(p.eta.0, 0.0);

        let p = params_from_bargmann(1.0, 0.0, &tol).unwrap();
        match p.class {
            WignerClass::Hyperbolic { chi } => assert!((chi.0 - 2.0).abs() < 1e-14),
            other => panic!("{other:?}"),
        }

        let p = params_from_bargmann(0.2, 0.5, &tol).unwrap();
        match p.class {
            WignerClass::Elliptic { phi } => assert!((phi.0 - 0.9238654418817875).abs() < 1e-13),
            other => panic!("{other:?}"),
        }
        assert!((p.eta.0 - 0.43764597140183076).abs() < 1e-13);

        assert!(matches!(
            params_from_bargmann(0.5, -1.0, &tol),
            Err(Error::ConventionViolation(_))
        ));
    }

    #[test]
    fn params_match_decomposition() {
        let tol = Tolerances::default();
        for &(l, t) in &[
            (0.2, 0.5),
            (0.9, 0.3),
            (1.5, 0.2),
            (0.4, 2.9),
            (0.3, 1.7),
            (2.0, 1.2),
        ] {
            let p = params_from_bargmann(l, t, &tol).unwrap();
            let d = wigner_decompose(&core(l, t)).unwrap();
            assert_eq!(p.class.tag(), d.class.tag(), "(λ, θ) = ({l}, {t})");
            assert_eq!(p.sign, d.sign);
            assert!(
                (p.eta.0 - d.eta.0).abs() < 1e-10,
                "(λ, θ) = ({l}, {t}): {} vs {}",
                p.eta.0,
                d.eta.0
            );
            match (p.class, d.class) {
                (WignerClass::Elliptic { phi: a }, WignerClass::Elliptic { phi: b }) => {
                    assert!((a.0 - b.0).abs() < 1e-10)
                }
                (WignerClass::Hyperbolic { chi: a }, WignerClass::Hyperbolic { chi: b }) => {
                    assert!((a.0 - b.0).abs() < 1e-10)
                }
                other => panic!("{other:?}"),
            }
        }
    }

    #[test]
    fn params_boundary_is_parabolic() {
        let tol = Tolerances::default();
        for &l in &[0.1_f64, 0.5, 1.0, 2.0] {
            let t = l.tanh().asin();
            let x = l.cosh() * t.cos();
            assert!((x - 1.0).abs() < 1e-12);
            let p = params_from_bargmann(l, t, &tol).unwrap();
            let d = wigner_decompose(&core(l, t)).unwrap();
            match (p.class, d.class) {
                (
                    WignerClass::Parabolic {
                        gamma: a,
                        orientation: oa,
                    },
                    WignerClass::Parabolic {
                        gamma: b,
                        orientation: ob,
                    },
                ) => {
                    assert_eq!(oa, ob);
                    assert!((a.0 - b.0).abs() < 1e-10);
                    assert!((a.0.abs() - 2.0 * l.sinh()).abs() < 1e-10);
                }
                other => panic!("{other:?}"),
            }
        }
    }
}
