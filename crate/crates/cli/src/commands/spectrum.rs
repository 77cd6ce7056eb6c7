use latticeprop::crystal::{band_scan, class_runs, ClassRun, CrystalConfig, SpectrumRow};
use latticeprop::Tolerances;
use serde::Serialize;

use crate::args::Format;
use crate::error::CliError;
use crate::render::{csv_line, csv_table, float, json, opt_float};

pub const CSV_HEADER: &str = "x,half_trace,class,bloch_phase,T,R";

#[derive(Debug, Clone, Serialize)]
pub struct SpectrumReport {
    pub kind: &'static str,
    /// Unit of `x`: wavelength in nm or the dimensionless wavenumber.
    pub x_unit: &'static str,
    pub periods: u64,
    pub rows: Vec<SpectrumRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runs: Option<Vec<ClassRun>>,
}

pub fn csv_row(r: &SpectrumRow) -> String {
    csv_line([
        float(r.x),
        float(r.half_trace),
        r.class.to_string(),
        opt_float(r.bloch_phase),
        float(r.t),
        float(r.r),
    ])
}

pub fn report(
    config: &CrystalConfig,
    bands: bool,
    tol: &Tolerances,
) -> Result<SpectrumReport, CliError> {
    let rows = band_scan(config, tol)?;
    if let Some(bad) = rows.iter().find(|r| {
        ![r.x, r.half_trace, r.t, r.r, r.bloch_phase.unwrap_or(0.0)]
            .iter()
            .all(|v| v.is_finite())
    }) {
        return Err(CliError::Overflow(format!(
            "non-finite result at x = {}",
            bad.x
        )));
    }
    let (kind, x_unit) = match config {
        CrystalConfig::Optical(_) => ("optical", "nm"),
        CrystalConfig::Delta(_) => ("delta", "k"),
    };
    Ok(SpectrumReport {
        kind,
        x_unit,
        periods: config.periods(),
        runs: bands.then(|| class_runs(&rows)),
        rows,
    })
}

pub fn run(
    config: &CrystalConfig,
    bands: bool,
    format: Format,
    tol: &Tolerances,
) -> Result<String, CliError> {
    let r = report(config, bands, tol)?;
    match format {
        Format::Json => json(&r),
        Format::Csv => Ok(csv_table(CSV_HEADER, r.rows.iter().map(csv_row))),
    }
}
