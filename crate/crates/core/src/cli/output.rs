use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::{json, Value};

use super::{CliError, Format};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Float(f64),
    Int(usize),
    Bool(bool),
    Text(&'static str),
}

impl Cell {
    /// 17 significant digits, so every double survives a text round trip.
    fn csv(&self, out: &mut String) {
        match *self {
            Cell::Float(v) if v.is_finite() => write!(out, "{v:.16e}"),
            Cell::Float(v) => write!(out, "{v}"),
            Cell::Int(v) => write!(out, "{v}"),
            Cell::Bool(v) => write!(out, "{v}"),
            Cell::Text(v) => out.write_str(v),
        }
        .expect("writing to a String cannot fail");
    }

    fn json(&self) -> Value {
        match *self {
            Cell::Float(v) if v.is_finite() => json!(v),
            Cell::Float(v) => json!(v.to_string()),
            Cell::Int(v) => json!(v),
            Cell::Bool(v) => json!(v),
            Cell::Text(v) => json!(v),
        }
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    /// File stem, e.g. `spectrum`.
    pub name: &'static str,
    pub columns: &'static [&'static str],
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(name: &'static str, columns: &'static [&'static str]) -> Self {
        Self {
            name,
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width for {}", self.name);
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            for (k, cell) in row.iter().enumerate() {
                if k > 0 {
                    out.push(',');
                }
                cell.csv(&mut out);
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema_version": SCHEMA_VERSION,
            "name": self.name,
            "columns": self.columns,
            "rows": self
                .rows
                .iter()
                .map(|r| r.iter().map(Cell::json).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }

    pub fn file_name(&self, format: Format) -> String {
        match format {
            Format::Csv => format!("{}.csv", self.name),
            Format::Json => format!("{}.json", self.name),
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => pretty(&self.to_json()),
        }
    }
}

pub(crate) fn pretty(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Provenance {
    pub l: f64,
    pub nx: usize,
    pub cutoff: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Timings {
    pub compute_seconds: f64,
    pub total_seconds: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunManifest {
    pub schema_version: u32,
    pub version: &'static str,
    pub command: String,
    pub config: Value,
    /// Artifact names relative to the output directory, in write order.
    pub files: Vec<String>,
    pub provenance: Provenance,
    pub results: BTreeMap<String, Value>,
    pub timings: Timings,
}

impl RunManifest {
    pub const FILE_NAME: &'static str = "manifest.json";

    /// The manifest without its timing fields, for comparing runs.
    pub fn without_timings(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("manifest serializes");
        v.as_object_mut()
            .expect("manifest is an object")
            .remove("timings");
        v
    }
}

pub(crate) fn write_file(dir: &Path, name: &str, contents: &str) -> Result<PathBuf, CliError> {
    let path = dir.join(name);
    std::fs::write(&path, contents).map_err(|e| CliError::Output {
        path: path.clone(),
        message: e.to_string(),
    })?;
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_uses_seventeen_significant_digits_and_round_trips() {
        let mut t = Table::new("t", &["a", "b", "c"]);
        let x = 0.1f64 + 0.2;
        t.push(vec![x.into(), 3usize.into(), true.into()]);
        t.push(vec![
            (-1.0f64 / 3.0).into(),
            0usize.into(),
            Cell::Text("leaky"),
        ]);
        let csv = t.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("a,b,c"));
        let first: Vec<&str> = lines.next().unwrap().split(',').collect();
        assert_eq!(first[0], "3.0000000000000004e-1");
        assert_eq!(first[0].parse::<f64>().unwrap(), x);
        assert_eq!(&first[1..], ["3", "true"]);
        assert!(csv.ends_with("leaky\n"));
        assert!(!csv.contains('\r'));
    }

    #[test]
    fn json_mirrors_the_rows() {
        let mut t = Table::new("veff", &["x", "v_eff"]);
        t.push(vec![1.5.into(), (-2.0).into()]);
        let v = t.to_json();
        assert_eq!(v["schema_version"], 1);
        assert_eq!(v["columns"], json!(["x", "v_eff"]));
        assert_eq!(v["rows"], json!([[1.5, -2.0]]));
    }

    #[test]
    #[should_panic(expected = "row width")]
    fn rows_must_match_the_header() {
        Table::new("t", &["a", "b"]).push(vec![1.0.into()]);
    }
}
