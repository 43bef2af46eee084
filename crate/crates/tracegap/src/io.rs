//! JSON interchange format for matrices.
//!
//! A file holds one matrix: a name, the shape, row-major entries as
//! `[re, im]` pairs, and an optional free-text note (used to record exact
//! rational sources of decimal entries). Serialization uses the shortest
//! decimal that round-trips, so save followed by load reproduces every
//! entry bit for bit.

use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{CMatrix, HermMatrix};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub name: String,
    pub rows: usize,
    pub cols: usize,
    /// Row-major entries, each as `[re, im]`.
    pub data: Vec<Vec<[f64; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

impl MatrixFile {
    pub fn from_cmatrix(name: &str, m: &CMatrix, note: Option<&str>) -> Self {
        let dim = m.dim();
        let data = (0..dim)
            .map(|r| (0..dim).map(|c| [m.get(r, c).re, m.get(r, c).im]).collect())
            .collect();
        MatrixFile {
            name: name.to_string(),
            rows: dim,
            cols: dim,
            data,
            note: note.map(str::to_string),
        }
    }

    pub fn from_herm(name: &str, m: &HermMatrix, note: Option<&str>) -> Self {
        Self::from_cmatrix(name, m.as_matrix(), note)
    }

    pub fn to_cmatrix(&self) -> Result<CMatrix> {
        if self.rows != self.cols
            || self.rows == 0
            || self.data.len() != self.rows
            || self.data.iter().any(|row| row.len() != self.cols)
        {
            return Err(Error::BadShape {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let rows: Vec<Vec<Complex64>> = self
            .data
            .iter()
            .map(|row| row.iter().map(|&[re, im]| Complex64::new(re, im)).collect())
            .collect();
        CMatrix::from_rows(&rows)
    }

    pub fn to_herm(&self) -> Result<HermMatrix> {
        HermMatrix::new(self.to_cmatrix()?)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::MatrixFile {
            path: path.display().to_string(),
            reason: e.to_string(),
        })?;
        serde_json::from_str(&text).map_err(|e| Error::MatrixFile {
            path: path.display().to_string(),
            reason: e.to_string(),
        })
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let text = serde_json::to_string_pretty(self)?;
        std::fs::write(path, text + "\n")?;
        Ok(())
    }
}
