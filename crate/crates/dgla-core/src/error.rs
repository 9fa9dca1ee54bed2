//! Errors for DGLA construction and deformation preconditions.

use graded_linalg::LinalgError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DglaError {
    /// Bracket input violating the storage or consistency rules.
    #[error("bad bracket data: {detail}")]
    BadBracket { detail: String },

    /// Structure constants must be supplied for i <= j only.
    #[error("bracket [{left}, {right}] supplied in the wrong order; store pairs with left index <= right index")]
    StorageOrder { left: String, right: String },

    /// A structure constant that does not connect degrees additively.
    #[error("degree rule broken: {detail}")]
    DegreeRule { detail: String },

    /// Dimension or index mismatch.
    #[error("shape mismatch: {detail}")]
    Shape { detail: String },

    /// Elements owned by a different coefficient algebra.
    #[error("algebra mismatch: {detail}")]
    AlgebraMismatch { detail: String },

    /// An operation requiring a degree-1 element received something else.
    #[error("element is not homogeneous of degree 1: {detail}")]
    NotDegreeOne { detail: String },

    /// Deformation precondition: the element does not satisfy the
    /// Maurer-Cartan equation; the residual is carried verbatim.
    #[error("element does not satisfy the Maurer-Cartan equation; residual = {residual}")]
    NotMaurerCartan { residual: String },

    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
