use latticeprop::{
    bargmann::{bargmann_decompose_with, recombine, BargmannFactors, Recombination},
    wigner_decompose_with, Mat2, Tolerances, WignerClass, WignerDecomposition,
};
use serde::Serialize;

use crate::args::Format;
use crate::error::CliError;
use crate::render::{csv_line, csv_table, float, json, opt_float};

pub const CSV_HEADER: &str =
    "a11,a12,a21,a22,det,theta1,lambda,theta2,theta,delta_b,class,phi,chi,gamma,orientation,sign,delta,eta";

#[derive(Debug, Clone, Serialize)]
pub struct WignerSummary {
    #[serde(flatten)]
    pub class: WignerClass,
    pub sign: f64,
    pub delta: f64,
    pub eta: f64,
    pub conjugator: [f64; 4],
}

impl From<&WignerDecomposition> for WignerSummary {
    fn from(d: &WignerDecomposition) -> Self {
        Self {
            class: d.class,
            sign: d.sign,
            delta: d.delta.0,
            eta: d.eta.0,
            conjugator: d.conjugator.entries(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DecomposeReport {
    pub matrix: [f64; 4],
    pub det: f64,
    pub half_trace: f64,
    pub bargmann: BargmannFactors,
    pub recombination: Recombination,
    pub wigner: WignerSummary,
}

pub fn decompose(m: &Mat2, tol: &Tolerances) -> Result<DecomposeReport, CliError> {
    let bargmann = bargmann_decompose_with(m, tol)?;
    let wigner = wigner_decompose_with(m, tol)?;
    Ok(DecomposeReport {
        matrix: m.entries(),
        det: m.det(),
        half_trace: m.half_trace(),
        bargmann,
        recombination: recombine(&bargmann),
        wigner: (&wigner).into(),
    })
}

fn csv_row(r: &DecomposeReport) -> String {
    let (mut phi, mut chi, mut gamma, mut orientation) = (None, None, None, "");
    match r.wigner.class {
        WignerClass::Elliptic { phi: p } => phi = Some(p.0),
        WignerClass::Hyperbolic { chi: c } => chi = Some(c.0),
        WignerClass::Parabolic {
            gamma: g,
            orientation: o,
        } => {
            gamma = Some(g.0);
            orientation = match o {
                latticeprop::ShearOrientation::Upper => "upper",
                latticeprop::ShearOrientation::Lower => "lower",
            };
        }
        WignerClass::Identity => {}
    }
    let b = &r.bargmann;
    let mut fields: Vec<String> = r.matrix.iter().map(|v| float(*v)).collect();
    fields.extend([
        float(r.det),
        float(b.theta1.0),
        float(b.lambda.0),
        float(b.theta2.0),
        float(r.recombination.theta.0),
        float(r.recombination.delta.0),
        r.wigner.class.tag().to_string(),
        opt_float(phi),
        opt_float(chi),
        opt_float(gamma),
        orientation.to_string(),
        float(r.wigner.sign),
        float(r.wigner.delta),
        float(r.wigner.eta),
    ]);
    csv_line(fields)
}

pub fn run(m: &Mat2, format: Format, tol: &Tolerances) -> Result<String, CliError> {
    let report = decompose(m, tol)?;
    match format {
        Format::Json => json(&report),
        Format::Csv => Ok(csv_table(CSV_HEADER, [csv_row(&report)])),
    }
}
