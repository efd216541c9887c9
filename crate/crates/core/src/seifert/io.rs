//! Seifert matrix files: a JSON array of `{"name": ..., "matrix": [[...], ...]}`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::matrix::SeifertMatrix;
use crate::bounds::BoundReport;
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawNamedMatrix {
    name: String,
    matrix: Vec<Vec<i64>>,
}

/// Parse the contents of a Seifert matrix file. `origin` names the source in
/// error messages.
pub fn parse_seifert_json(text: &str, origin: &str) -> Result<Vec<(String, SeifertMatrix)>> {
    let raw: Vec<RawNamedMatrix> = serde_json::from_str(text).map_err(|e| Error::FileFormat {
        path: origin.to_string(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    raw.into_iter()
        .map(|r| {
            let m = SeifertMatrix::named(&r.name, r.matrix)?;
            Ok((r.name, m))
        })
        .collect()
}

/// Read and validate a Seifert matrix file.
pub fn read_seifert_file(path: impl AsRef<Path>) -> Result<Vec<(String, SeifertMatrix)>> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)?;
    parse_seifert_json(&text, &path.display().to_string())
}

/// Serialize named matrices in the same format.
pub fn to_seifert_json(entries: &[(String, SeifertMatrix)]) -> String {
    let raw: Vec<RawNamedMatrix> = entries
        .iter()
        .map(|(n, m)| RawNamedMatrix { name: n.clone(), matrix: m.rows() })
        .collect();
    serde_json::to_string_pretty(&raw).expect("matrices serialize")
}

/// Write a bound report as JSON.
pub fn write_report(path: impl AsRef<Path>, report: &BoundReport) -> Result<()> {
    report.write(path)
}
