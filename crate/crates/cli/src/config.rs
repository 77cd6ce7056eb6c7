//! Crystal config documents.

use std::fs;
use std::path::Path;

use latticeprop::crystal::CrystalConfig;
use serde::de::DeserializeOwned;
use serde_json::Value;

use crate::error::CliError;

/// Parse and validate a config. Schema errors name the offending field.
///
/// The `kind` tag is dispatched by hand: an internally tagged enum buffers its
/// content, which would hide the path of any error inside it.
pub fn parse(text: &str) -> Result<CrystalConfig, CliError> {
    let mut doc: Value = serde_json::from_str(text)
        .map_err(|e| CliError::input(format!("config is not valid json: {e}")))?;
    let kind = match doc.as_object_mut().map(|o| o.remove("kind")) {
        Some(Some(Value::String(k))) => k,
        Some(Some(other)) => {
            return Err(CliError::input(format!(
                "invalid config at `kind`: expected a string, got {other}"
            )))
        }
        Some(None) => return Err(CliError::input("invalid config at `kind`: missing field")),
        None => return Err(CliError::input("invalid config at `.`: expected an object")),
    };
    let config = match kind.as_str() {
        "optical" => CrystalConfig::Optical(inner(doc)?),
        "delta" => CrystalConfig::Delta(inner(doc)?),
        other => {
            return Err(CliError::input(format!(
            "invalid config at `kind`: unknown kind {other:?}, expected \"optical\" or \"delta\""
        )))
        }
    };
    config.validate()?;
    Ok(config)
}

fn inner<T: DeserializeOwned>(doc: Value) -> Result<T, CliError> {
    serde_path_to_error::deserialize(doc).map_err(|e| {
        let path = e.path().to_string();
        CliError::input(format!("invalid config at `{path}`: {}", e.into_inner()))
    })
}

pub fn load(path: &Path, periods: Option<u64>) -> Result<CrystalConfig, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
    let mut config = parse(&text)?;
    if let Some(n) = periods {
        config = config.with_periods(n);
        config.validate()?;
    }
    Ok(config)
}
