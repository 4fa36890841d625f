//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid structure constants: {0}")]
    InvalidStructureConstants(String),

    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),

    #[error("invalid grading: {0}")]
    InvalidGrading(String),

    #[error("invariance check failed: {0}")]
    InvarianceCheckFailed(String),

    #[error("realization mismatch: {0}")]
    RealizationMismatch(String),

    #[error("bi-homogeneous component is identically zero: {0}")]
    ComponentVanishes(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("missing data: {0}")]
    MissingData(String),

    #[error("unvalidated orbit data: {0}")]
    UnvalidatedOrbitData(String),

    #[error("unknown algebra '{0}'")]
    UnknownAlgebra(String),

    #[error("unknown suite '{0}'")]
    UnknownSuite(String),

    #[error("schema error in {path}: {reason}")]
    Schema { path: String, reason: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
