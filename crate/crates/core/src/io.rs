//! File schemas: algebra catalog files and orbit-data files.
//!
//! Algebra files carry structure constants as exact integer fractions:
//! `{name, dim, structure_constants: [[i, j, k, num, den], ...],
//! grading: [0|1, ...]?}`. Orbit files are lists of
//! `{label, partition | representative, orbit_dim?, centralizer_dim?}`.
//! Every schema violation is reported with file context.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::fitting::Partition;
use crate::lie::LieAlgebra;
use crate::qnum::{q, Q};
use crate::Result;

#[derive(Debug, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub name: String,
    pub dim: usize,
    pub structure_constants: Vec<(usize, usize, usize, i64, i64)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grading: Option<Vec<u8>>,
}

fn schema_err(path: &Path, reason: impl Into<String>) -> Error {
    Error::Schema {
        path: path.display().to_string(),
        reason: reason.into(),
    }
}

/// Loads and validates an algebra file; antisymmetry and the Jacobi
/// identity are enforced by construction.
pub fn load_algebra(path: &Path) -> Result<(LieAlgebra, Option<Vec<u8>>)> {
    let text = std::fs::read_to_string(path)?;
    let file: AlgebraFile =
        serde_json::from_str(&text).map_err(|e| schema_err(path, e.to_string()))?;
    if let Some(g) = &file.grading {
        if g.len() != file.dim {
            return Err(schema_err(
                path,
                format!("grading length {} differs from dim {}", g.len(), file.dim),
            ));
        }
    }
    let entries: Vec<(usize, usize, usize, Q)> = file
        .structure_constants
        .iter()
        .map(|&(i, j, k, num, den)| {
            if den == 0 {
                return Err(schema_err(path, format!("zero denominator at ({i},{j},{k})")));
            }
            Ok((i, j, k, q(num, den)))
        })
        .collect::<Result<_>>()?;
    let algebra = LieAlgebra::new(file.name, file.dim, entries)
        .map_err(|e| schema_err(path, e.to_string()))?;
    Ok((algebra, file.grading))
}

pub fn save_algebra(path: &Path, algebra: &LieAlgebra, grading: Option<&[u8]>) -> Result<()> {
    let file = AlgebraFile {
        name: algebra.name.clone(),
        dim: algebra.dim,
        structure_constants: algebra
            .structure_entries()
            .into_iter()
            .filter(|(i, j, _, _)| i < j)
            .map(|(i, j, k, c)| {
                let num = i64::try_from(c.numer()).expect("catalog constants are small");
                let den = i64::try_from(c.denom()).expect("catalog constants are small");
                (i, j, k, num, den)
            })
            .collect(),
        grading: grading.map(|g| g.to_vec()),
    };
    let mut bytes = serde_json::to_vec_pretty(&file)?;
    bytes.push(b'\n');
    std::fs::write(path, bytes)?;
    Ok(())
}

/// One orbit or stratum record from an orbit-data file.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OrbitEntry {
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partition: Option<Vec<u32>>,
    /// Representative coordinates; integers or `"p/q"` strings.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub representative: Option<Vec<serde_json::Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orbit_dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub centralizer_dim: Option<usize>,
}

impl OrbitEntry {
    pub fn partition(&self) -> Result<Option<Partition>> {
        match &self.partition {
            None => Ok(None),
            Some(parts) => Ok(Some(Partition::new(parts.clone())?)),
        }
    }

    pub fn representative_coords(&self) -> Result<Option<Vec<Q>>> {
        let Some(raw) = &self.representative else {
            return Ok(None);
        };
        let coords = raw
            .iter()
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()?;
        Ok(Some(coords))
    }
}

fn parse_rational(v: &serde_json::Value) -> Result<Q> {
    match v {
        serde_json::Value::Number(n) => {
            let i = n.as_i64().ok_or_else(|| Error::Schema {
                path: "<orbit-data>".into(),
                reason: format!("non-integer numeric coordinate {n}"),
            })?;
            Ok(q(i, 1))
        }
        serde_json::Value::String(s) => {
            let mut parts = s.splitn(2, '/');
            let num: i64 = parts
                .next()
                .unwrap_or("")
                .trim()
                .parse()
                .map_err(|_| Error::Schema {
                    path: "<orbit-data>".into(),
                    reason: format!("bad rational '{s}'"),
                })?;
            let den: i64 = match parts.next() {
                None => 1,
                Some(d) => d.trim().parse().map_err(|_| Error::Schema {
                    path: "<orbit-data>".into(),
                    reason: format!("bad rational '{s}'"),
                })?,
            };
            if den == 0 {
                return Err(Error::Schema {
                    path: "<orbit-data>".into(),
                    reason: format!("zero denominator in '{s}'"),
                });
            }
            Ok(q(num, den))
        }
        other => Err(Error::Schema {
            path: "<orbit-data>".into(),
            reason: format!("coordinate must be a number or 'p/q' string, got {other}"),
        }),
    }
}

pub fn load_orbit_data(path: &Path) -> Result<Vec<OrbitEntry>> {
    let text = std::fs::read_to_string(path)?;
    let entries: Vec<OrbitEntry> =
        serde_json::from_str(&text).map_err(|e| schema_err(path, e.to_string()))?;
    for e in &entries {
        if e.partition.is_none() && e.representative.is_none() {
            return Err(schema_err(
                path,
                format!("entry '{}' has neither a partition nor a representative", e.label),
            ));
        }
        if let Some(parts) = &e.partition {
            Partition::new(parts.clone()).map_err(|err| schema_err(path, err.to_string()))?;
        }
    }
    Ok(entries)
}
