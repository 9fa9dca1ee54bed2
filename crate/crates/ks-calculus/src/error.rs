//! Errors for polyvector calculus and almost-complex family preconditions.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum KsError {
    /// Operands live on different patches or truncations.
    #[error("context mismatch: {detail}")]
    MismatchedContext { detail: String },

    /// A multi-index that is out of range or not strictly increasing.
    #[error("bad multi-index: {detail}")]
    BadIndex { detail: String },

    /// Polynomial built over the wrong variable layout.
    #[error("variable layout mismatch: {detail}")]
    BadLayout { detail: String },

    /// A family matrix that does not square to minus the identity.
    #[error("not an almost complex structure: (J^2 + 1) has entry {entry} at [{row}][{col}]")]
    NotAlmostComplex {
        row: usize,
        col: usize,
        entry: String,
    },

    /// The family does not start at the standard constant structure, so the
    /// deformation cannot be normalized into graph form.
    #[error("order-zero block is singular; the family does not start at the standard structure")]
    SingularOrderZeroBlock,

    /// Torus modulus with the wrong constant term.
    #[error("torus parameter needs Im tau(0) = 1, got tau(0) = {value}")]
    BadTau { value: String },

    /// A complex-frame matrix whose realification has nonreal entries.
    #[error("matrix is not the complexification of a real operator: offending entry {entry} at [{row}][{col}]")]
    NotRealStructure {
        row: usize,
        col: usize,
        entry: String,
    },
}
