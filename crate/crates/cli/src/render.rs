//! Text rendering shared by the subcommands.
//!
//! CSV floats carry 17 significant digits so that every value round-trips;
//! JSON goes through `serde_json`, which prints the shortest round-trip form.

use std::fmt::Write;

use serde::Serialize;

use crate::error::CliError;

pub fn float(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn opt_float(v: Option<f64>) -> String {
    v.map(float).unwrap_or_default()
}

/// Comma-joined row with a trailing newline.
pub fn csv_line<I, S>(fields: I) -> String
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    let mut out = String::new();
    for (i, f) in fields.into_iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(f.as_ref());
    }
    out.push('\n');
    out
}

pub fn json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::input(format!("cannot encode output: {e}")))?;
    s.push('\n');
    Ok(s)
}

pub fn csv_table(header: &str, rows: impl IntoIterator<Item = String>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{header}");
    for r in rows {
        out.push_str(&r);
    }
    out
}
