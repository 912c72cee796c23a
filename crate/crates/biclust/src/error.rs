use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by matrix construction, the greedy searches, and dataset I/O.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix must have at least one row and one column")]
    EmptyMatrix,

    #[error("matrix data length {got} does not match {rows}x{cols}")]
    DimensionMismatch { rows: usize, cols: usize, got: usize },

    #[error("non-finite entry at ({row}, {col})")]
    NonFiniteEntry { row: usize, col: usize },

    #[error("bicluster row and column sets must be non-empty")]
    EmptyIndexSet,

    #[error("duplicate {axis} index {index} in bicluster")]
    DuplicateIndex { axis: Axis, index: usize },

    #[error("{axis} index {index} is out of range for a {rows}x{cols} matrix")]
    IndexOutOfRange { axis: Axis, index: usize, rows: usize, cols: usize },

    #[error("{axis} index {index} is not part of the bicluster")]
    IndexOutsideBicluster { axis: Axis, index: usize },

    #[error("variance is defined for unshielded data; entry ({row}, {col}) has a nonzero imaginary part")]
    ShieldedVariance { row: usize, col: usize },

    #[error("invalid parameter {name}: {message}")]
    InvalidParam { name: &'static str, message: String },

    #[error("bicluster became empty during node deletion")]
    DegenerateBicluster,

    #[error("search ended with MSR {msr} above the budget {delta}")]
    AboveBudget { msr: f64, delta: f64 },

    #[error("{path}: file contains no data rows")]
    EmptyFile { path: PathBuf },

    #[error("{path}:{line}: expected {expected} columns, found {found}")]
    RaggedRow { path: PathBuf, line: usize, expected: usize, found: usize },

    #[error("{path}:{line}: cannot parse token {token:?} as a number")]
    BadToken { path: PathBuf, line: usize, token: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}:{line}: malformed record: {message}")]
    BadRecord { path: PathBuf, line: usize, message: String },
}

/// Which axis of the matrix an index error refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Row,
    Col,
}

impl std::fmt::Display for Axis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Axis::Row => write!(f, "row"),
            Axis::Col => write!(f, "column"),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
