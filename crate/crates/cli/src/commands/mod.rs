pub mod bench;
pub mod decompose;
pub mod power;
pub mod spectrum;

use std::fs;

use latticeprop::Mat2;

use crate::args::MatrixInput;
use crate::error::CliError;

/// Four whitespace-separated reals, row-major.
pub fn parse_matrix(text: &str) -> Result<Mat2, CliError> {
    let values = text
        .split_whitespace()
        .map(|t| {
            t.parse::<f64>()
                .map_err(|_| CliError::input(format!("not a number: {t:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let entries: [f64; 4] = values.try_into().map_err(|v: Vec<f64>| {
        CliError::input(format!("expected 4 matrix entries, got {}", v.len()))
    })?;
    Ok(Mat2::from_entries(entries)?)
}

pub fn read_matrix(input: &MatrixInput) -> Result<Mat2, CliError> {
    match &input.input {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
            parse_matrix(&text)
        }
        None => parse_matrix(&input.entries.join(" ")),
    }
}
