//! Config-driven batch runs.
//!
//! A TOML file selects a command and its parameter sections; [`run`] writes one
//! table per artifact (CSV or JSON) and a `manifest.json` into the output directory.

mod config;
mod output;
mod run;

use std::path::PathBuf;

use serde_json::{json, Value};
use thiserror::Error;

pub use config::{
    parse_config, parse_config_str, ClassicalConfig, ClassicalStart, Command, DriveShape,
    EvolveConfig, FloquetConfig, Format, GridConfig, InitialState, PotentialConfig,
    ResonatorConfig, RunConfig, ScanConfig,
};
pub use output::{Cell, Provenance, RunManifest, Table, Timings, SCHEMA_VERSION};
pub use run::run;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path:?}: {message}")]
    ConfigRead { path: PathBuf, message: String },

    #[error("parse error{}: {message}", location(*line, *column))]
    Parse {
        line: Option<usize>,
        column: Option<usize>,
        key: Option<String>,
        message: String,
    },

    #[error("invalid config: {0}")]
    Validation(String),

    #[error("cannot write {path:?}: {message}")]
    Output { path: PathBuf, message: String },

    #[error(transparent)]
    Numerical(#[from] crate::Error),
}

fn location(line: Option<usize>, column: Option<usize>) -> String {
    match (line, column) {
        (Some(l), Some(c)) => format!(" at line {l}, column {c}"),
        (Some(l), None) => format!(" at line {l}"),
        _ => String::new(),
    }
}

impl CliError {
    /// 2 for anything wrong with the config, 3 for failures after it was accepted.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::ConfigRead { .. } | CliError::Parse { .. } | CliError::Validation(_) => 2,
            CliError::Output { .. } | CliError::Numerical(_) => 3,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::ConfigRead { .. } => "config_read",
            CliError::Parse { .. } => "parse",
            CliError::Validation(_) => "validation",
            CliError::Output { .. } => "output",
            CliError::Numerical(_) => "numerical",
        }
    }

    pub fn to_json(&self) -> Value {
        let mut record = json!({
            "kind": self.kind(),
            "message": self.to_string(),
            "exit_code": self.exit_code(),
        });
        if let CliError::Parse {
            line, column, key, ..
        } = self
        {
            record["line"] = json!(line);
            record["column"] = json!(column);
            record["key"] = json!(key);
        }
        json!({ "error": record })
    }
}
