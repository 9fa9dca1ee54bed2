//! Structural and precondition errors for the linear-algebra layer.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("invalid basis: {detail}")]
    BadBasis { detail: String },
    #[error("entry ({row}, {col}) violates the degree shift: {detail}")]
    DegreeShift { row: usize, col: usize, detail: String },
    #[error("coefficient algebra mismatch: {detail}")]
    AlgebraMismatch { detail: String },
    #[error("dimension mismatch: {detail}")]
    Shape { detail: String },
    #[error("differential does not square to zero on basis vector {name:?}")]
    NotADifferential { name: String },
    #[error("input is not closed: d sends it to a nonzero element ({witness})")]
    NotClosed { witness: String },
    #[error("not a chain map on basis vector {name:?} ({detail})")]
    NotAChainMap { name: String, detail: String },
}
