//! Exact scalar tower for the deformation pipeline.
//!
//! Three layers, used by every other crate in the workspace:
//!
//! * [`ExactScalar`]: Gaussian rationals, the coefficient field;
//! * [`GradedArtinAlgebra`]: truncated graded-commutative local algebras
//!   (the base rings deformations are parametrized over);
//! * [`SeriesElement`]: elements of such an algebra, with graded products,
//!   graded left derivatives, unit inversion, and a canonical text form.
//!
//! All arithmetic is exact; equality is decidable and every operation either
//! returns an exact value or a structural error.

mod algebra;
mod error;
mod parse;
mod scalar;
mod series;

pub use algebra::{GradedArtinAlgebra, Monomial, Variable};
pub use error::AlgebraError;
pub use parse::{parse_scalar, parse_series, ParseError};
pub use scalar::ExactScalar;
pub use series::SeriesElement;

use std::sync::Arc;

/// Shared handle to an algebra; elements keep one to enforce owner checks.
pub type AlgebraRef = Arc<GradedArtinAlgebra>;
