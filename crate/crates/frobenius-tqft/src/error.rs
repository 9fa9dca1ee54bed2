//! Structural errors for Frobenius data, potentials, families, and surfaces.

use dgla_core::DglaError;
use exact_core::AlgebraError;
use graded_linalg::LinalgError;
use thiserror::Error;

/// What can go wrong while building or evaluating Frobenius structures.
#[derive(Debug, Error)]
pub enum FrobError {
    /// A container has the wrong shape for its declared dimension.
    #[error("shape mismatch: {detail}")]
    Shape { detail: String },

    /// The metric matrix is not symmetric at the named entry.
    #[error("metric is not symmetric at ({i}, {j})")]
    MetricNotSymmetric { i: usize, j: usize },

    /// The metric matrix is singular where an inverse is required.
    #[error("metric is degenerate; index raising needs an invertible metric")]
    MetricDegenerate,

    /// Neither a structure tensor nor a potential was supplied.
    #[error("no multiplication: supply a structure tensor or a potential")]
    MissingProduct,

    /// The unit index points outside the basis.
    #[error("unit index {index} outside basis of dimension {dim}")]
    BadUnit { index: usize, dim: usize },

    /// Series from a foreign coefficient algebra were mixed in.
    #[error("coefficient algebra mismatch: {detail}")]
    AlgebraMismatch { detail: String },

    /// Coordinate variables do not line up with the basis.
    #[error("coordinate mismatch: {detail}")]
    DimensionMismatch { detail: String },

    /// A coordinate variable's parity differs from its basis element's.
    #[error("variable {index} has the wrong parity for its basis element")]
    VariableParity { index: usize },

    /// Both a tensor and a potential were given and they disagree.
    #[error("tensor and potential disagree at lowered entry ({i}, {j}, {k})")]
    Inconsistent { i: usize, j: usize, k: usize },

    /// A wedge product lands outside the sum of the factor degrees.
    #[error("product of basis {i} and {j} hits {k} outside the degree sum")]
    ProductDegree { i: usize, j: usize, k: usize },

    /// The supplied product violates a required algebra axiom.
    #[error("product axiom failure: {detail}")]
    ProductAxiom { detail: String },

    /// The Maurer-Cartan solution lives over a different base DGLA.
    #[error("model mismatch: {detail}")]
    MismatchedModel { detail: String },

    /// The data fails the Frobenius algebra axioms a surface needs.
    #[error("not a Frobenius algebra: {detail}")]
    NotFrobenius { detail: String },

    /// A cap or cup appears but the data declares no unit.
    #[error("pipeline step {step} needs a unit element and none is declared")]
    MissingUnit { step: usize },

    /// The generator sequence does not compose.
    #[error("pipeline step {step} does not compose: {detail}")]
    BadPipeline { step: usize, detail: String },

    /// Linear-algebra layer failure.
    #[error(transparent)]
    Linalg(#[from] LinalgError),

    /// DGLA layer failure.
    #[error(transparent)]
    Dgla(#[from] DglaError),

    /// Coefficient-algebra layer failure.
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
