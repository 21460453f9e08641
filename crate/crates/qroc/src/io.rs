//! File formats for the command-line front end: density operators as JSON
//! (complex entries as [re, im] pairs, row-major), distributions as plain
//! JSON arrays, curves as `fp,tp` CSV tables. Errors carry the offending
//! path.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::classical::Distribution;
use crate::error::{Error, Result};
use crate::hermitian::{c64, validate_density, CMatrix, DensityOperator};

/// On-disk form of a density operator: {"dim": d, "matrix": [[[re,im],..],..]}.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StateFile {
    pub dim: usize,
    pub matrix: Vec<Vec<[f64; 2]>>,
}

impl StateFile {
    /// Capture a complex matrix entry-by-entry.
    pub fn from_matrix(m: &CMatrix) -> Self {
        StateFile {
            dim: m.nrows(),
            matrix: (0..m.nrows())
                .map(|i| (0..m.ncols()).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect())
                .collect(),
        }
    }

    /// Rebuild the complex matrix, checking the declared dimension against
    /// the actual nesting.
    pub fn to_matrix(&self) -> Result<CMatrix> {
        if self.matrix.len() != self.dim || self.matrix.iter().any(|row| row.len() != self.dim) {
            let rows = self.matrix.len();
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: self
                    .matrix
                    .iter()
                    .map(|r| r.len())
                    .chain([rows])
                    .find(|&n| n != self.dim)
                    .unwrap_or(rows),
            });
        }
        Ok(CMatrix::from_fn(self.dim, self.dim, |i, j| {
            c64(self.matrix[i][j][0], self.matrix[i][j][1])
        }))
    }
}

/// Parse and validate a density operator from a state JSON file.
pub fn load_density(path: impl AsRef<Path>) -> Result<DensityOperator> {
    let path = path.as_ref();
    let wrap = |e: Error| e.with_path(path.display().to_string());
    let text = fs::read_to_string(path).map_err(|e| wrap(e.into()))?;
    let file: StateFile = serde_json::from_str(&text).map_err(|e| wrap(e.into()))?;
    validate_density(&file.to_matrix().map_err(wrap)?).map_err(wrap)
}

/// Write a density operator as a state JSON file.
pub fn save_density(path: impl AsRef<Path>, rho: &DensityOperator) -> Result<()> {
    let path = path.as_ref();
    let file = StateFile::from_matrix(rho.matrix());
    let text = serde_json::to_string_pretty(&file).map_err(Error::from)?;
    fs::write(path, text + "\n").map_err(|e| Error::from(e).with_path(path.display().to_string()))
}

/// Parse a probability distribution from a JSON array of reals.
pub fn load_distribution(path: impl AsRef<Path>) -> Result<Distribution> {
    let path = path.as_ref();
    let wrap = |e: Error| e.with_path(path.display().to_string());
    let text = fs::read_to_string(path).map_err(|e| wrap(e.into()))?;
    let probs: Vec<f64> = serde_json::from_str(&text).map_err(|e| wrap(e.into()))?;
    Distribution::new(probs).map_err(wrap)
}

/// Write a CSV table: a header row, then one comma-joined row per record.
/// Numbers are written with Rust's shortest round-trip formatting, so
/// identical inputs give byte-identical files.
pub fn write_csv(path: impl AsRef<Path>, header: &str, rows: &[Vec<f64>]) -> Result<()> {
    let path = path.as_ref();
    let mut text = String::with_capacity(16 * rows.len() + header.len() + 2);
    text.push_str(header);
    text.push('\n');
    for row in rows {
        let mut first = true;
        for value in row {
            if !first {
                text.push(',');
            }
            text.push_str(&value.to_string());
            first = false;
        }
        text.push('\n');
    }
    fs::write(path, text).map_err(|e| Error::from(e).with_path(path.display().to_string()))
}

/// Read a numeric CSV table back, checking the header matches.
pub fn read_csv(path: impl AsRef<Path>, header: &str) -> Result<Vec<Vec<f64>>> {
    let path = path.as_ref();
    let wrap = |what: String| {
        Error::DomainError { what }.with_path(path.display().to_string())
    };
    let text = fs::read_to_string(path)
        .map_err(|e| Error::from(e).with_path(path.display().to_string()))?;
    let mut lines = text.lines();
    match lines.next() {
        Some(first) if first == header => {}
        other => {
            return Err(wrap(format!(
                "expected CSV header {header:?}, found {other:?}"
            )))
        }
    }
    lines
        .map(|line| {
            line.split(',')
                .map(|field| {
                    field
                        .parse::<f64>()
                        .map_err(|_| wrap(format!("non-numeric CSV field {field:?}")))
                })
                .collect()
        })
        .collect()
}

/// Serialize any JSON value to a file with a trailing newline.
pub fn write_json(path: impl AsRef<Path>, value: &serde_json::Value) -> Result<()> {
    let path = path.as_ref();
    let text = serde_json::to_string_pretty(value).map_err(Error::from)?;
    fs::write(path, text + "\n").map_err(|e| Error::from(e).with_path(path.display().to_string()))
}

/// A complex matrix as nested [re, im] JSON arrays (same shape as the
/// `matrix` field of a state file).
pub fn matrix_to_json(m: &CMatrix) -> serde_json::Value {
    serde_json::json!(StateFile::from_matrix(m).matrix)
}
