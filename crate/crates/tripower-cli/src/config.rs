//! Optional `key = value` configuration files. Command-line flags always win;
//! the file only fills in values the invocation left unset.

use std::collections::HashMap;
use std::fmt::Display;
use std::path::Path;
use std::str::FromStr;

use crate::CliError;

/// Parsed configuration file: flat `key = value` pairs, `#` comments and
/// blank lines ignored. Keys use the long flag spelling (`rel-tol`, `r-max`).
#[derive(Debug, Default)]
pub struct FileConfig {
    values: HashMap<String, String>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            CliError::usage(format!("cannot read config file {}: {e}", path.display()))
        })?;
        let mut values = HashMap::new();
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(CliError::usage(format!(
                    "{}:{}: expected `key = value`, got `{line}`",
                    path.display(),
                    idx + 1
                )));
            };
            values.insert(key.trim().to_string(), value.trim().to_string());
        }
        Ok(FileConfig { values })
    }

    /// Parse the value stored under `key`, if any.
    pub fn get<T>(&self, key: &str) -> Result<Option<T>, CliError>
    where
        T: FromStr,
        T::Err: Display,
    {
        match self.values.get(key) {
            None => Ok(None),
            Some(raw) => raw.parse::<T>().map(Some).map_err(|e| {
                CliError::usage(format!("config key `{key}`: cannot parse `{raw}`: {e}"))
            }),
        }
    }

    /// True flags: `key = true` (or `1`). Anything else is false.
    pub fn get_flag(&self, key: &str) -> bool {
        matches!(self.values.get(key).map(String::as_str), Some("true") | Some("1"))
    }
}

/// Flag value with file fallback and a hard default.
pub fn resolve<T>(
    cli: Option<T>,
    file: Result<Option<T>, CliError>,
    default: T,
) -> Result<T, CliError> {
    Ok(cli.or(file?).unwrap_or(default))
}

/// Flag value with file fallback that must come from somewhere.
pub fn require<T>(
    name: &str,
    cli: Option<T>,
    file: Result<Option<T>, CliError>,
) -> Result<T, CliError> {
    cli.or(file?).ok_or_else(|| CliError::usage(format!("missing required value for `{name}`")))
}
