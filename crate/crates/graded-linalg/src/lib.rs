//! Exact graded linear algebra: finite graded spaces, degree-shifting maps
//! with coefficients in a truncated graded algebra, dense elimination over
//! the scalars, module solving by monomial expansion, and cochain-complex
//! cohomology with explicit representatives and class projections.

pub mod cohomology;
pub mod error;
pub mod field;
pub mod map;
pub mod space;

pub use cohomology::{check_quasi_iso, CochainComplex, CohomologyBasis, DegreeVerdict, QuasiIsoReport};
pub use error::LinalgError;
pub use map::{module_solve, solve_linear, LinearMap};
pub use space::{BasisVector, GradedVectorSpace};
