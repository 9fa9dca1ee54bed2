//! Structural errors for algebra construction and use.

use thiserror::Error;

/// Errors raised when building or combining algebra data. These are contract
/// violations (bad input or mixed owners), not mathematical failures.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("invalid variable name {name:?}")]
    BadVariable { name: String },
    #[error("duplicate variable name {name:?}")]
    DuplicateVariable { name: String },
    #[error("invalid relation: {detail}")]
    BadRelation { detail: String },
    #[error("operands belong to different algebras ({left} vs {right})")]
    MismatchedOwners { left: String, right: String },
    #[error("unknown variable {name:?}")]
    UnknownVariable { name: String },
    #[error("element is not a unit (zero constant term)")]
    NotAUnit,
}
