//! Error type for the Maurer-Cartan engine.

use dgla_core::DglaError;
use graded_linalg::LinalgError;
use thiserror::Error;

/// Structural failures of the solving and gauge operations. Obstructions are
/// not errors; they are reported as values.
#[derive(Debug, Error)]
pub enum McError {
    #[error("degree violation: {detail}")]
    Degree { detail: String },

    #[error("element is not in the maximal ideal: {detail}")]
    NotInIdeal { detail: String },

    #[error("coefficient algebra not supported here: {detail}")]
    UnsupportedAlgebra { detail: String },

    #[error("bad seed: {detail}")]
    BadSeed { detail: String },

    #[error("element does not satisfy the Maurer-Cartan equation: residual {residual}")]
    NotMaurerCartan { residual: String },

    #[error("ambient is not nilpotent: the bracket word {witness} is nonzero")]
    NonNilpotent { witness: String },

    #[error("DGLA is not abelian: {detail}")]
    NotAbelian { detail: String },

    #[error("bad Hodge table: {detail}")]
    BadHodgeTable { detail: String },

    #[error(transparent)]
    Dgla(#[from] DglaError),

    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
