//! JSON emission with stable bytes: typed structs keep field order, all
//! arrays are in deterministic order, and the same bytes go to stdout and
//! to the optional `--json` file.

use serde::Serialize;
use std::io::Write;
use std::path::Path;

pub const EXIT_VERIFIED: u8 = 0;
pub const EXIT_REFUTED: u8 = 1;
pub const EXIT_EXHAUSTED: u8 = 3;

pub struct Report {
    pub value: serde_json::Value,
    pub exit: u8,
    /// When set, stdout gets this plain text instead of the JSON (used by
    /// `enumerate`, whose line output feeds `matrix`); the JSON still
    /// goes to the `--json` path.
    pub stdout_override: Option<String>,
}

impl Report {
    pub fn new<T: Serialize>(value: &T, exit: u8) -> anyhow::Result<Report> {
        Ok(Report { value: serde_json::to_value(value)?, exit, stdout_override: None })
    }
}

pub fn emit(report: &Report, json_path: Option<&Path>) -> anyhow::Result<()> {
    let mut bytes = serde_json::to_vec_pretty(&report.value)?;
    bytes.push(b'\n');
    match &report.stdout_override {
        Some(text) => std::io::stdout().write_all(text.as_bytes())?,
        None => std::io::stdout().write_all(&bytes)?,
    }
    if let Some(path) = json_path {
        std::fs::write(path, &bytes)?;
    }
    Ok(())
}

/// How a graph argument appears in reports.
#[derive(Serialize)]
pub struct GraphDoc {
    pub input: String,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
}
