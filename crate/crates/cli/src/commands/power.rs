use latticeprop::{chebyshev_power, classify_with, closed_power_with, Mat2, Tolerances};
use serde::Serialize;

use crate::args::{Format, PowerArgs};
use crate::commands::read_matrix;
use crate::error::CliError;
use crate::render::{csv_line, csv_table, float, json, opt_float};
use crate::Outcome;

/// Largest relative deviation from the Chebyshev route accepted by `--verify`.
pub const VERIFY_TOL: f64 = 1e-8;

pub const CSV_HEADER: &str = "n,class,a11,a12,a21,a22,deviation";

#[derive(Debug, Clone, Serialize)]
pub struct PowerReport {
    pub matrix: [f64; 4],
    pub n: u64,
    pub class: latticeprop::ClassTag,
    pub result: [f64; 4],
    /// Relative deviation from the Chebyshev recurrence, with `--verify`.
    pub deviation: Option<f64>,
}

pub fn power(m: &Mat2, n: u64, verify: bool, tol: &Tolerances) -> Result<PowerReport, CliError> {
    let class = classify_with(m, tol)?.tag();
    let p = closed_power_with(m, n, tol)?;
    let deviation = if verify {
        Some(p.rel_diff(&chebyshev_power(m, n)?))
    } else {
        None
    };
    Ok(PowerReport {
        matrix: m.entries(),
        n,
        class,
        result: p.entries(),
        deviation,
    })
}

pub fn run(args: &PowerArgs, format: Format, tol: &Tolerances) -> Result<Outcome, CliError> {
    let m = read_matrix(&args.matrix)?;
    let report = power(&m, args.n, args.verify, tol)?;
    let body = match format {
        Format::Json => json(&report)?,
        Format::Csv => {
            let mut fields = vec![report.n.to_string(), report.class.to_string()];
            fields.extend(report.result.iter().map(|v| float(*v)));
            fields.push(opt_float(report.deviation));
            csv_table(CSV_HEADER, [csv_line(fields)])
        }
    };
    let failure = match report.deviation {
        Some(d) if d.is_nan() || d > VERIFY_TOL => Some(format!(
            "closed form deviates from the Chebyshev recurrence by {d:e} (bound {VERIFY_TOL:e})"
        )),
        _ => None,
    };
    Ok(Outcome { body, failure })
}
