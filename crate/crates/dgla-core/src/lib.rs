//! Finite-rank differential graded Lie algebras: structure-constant storage
//! with graded antisymmetry built in, exhaustive axiom checking with
//! witnesses, tensoring with truncated coefficient algebras, and deformed
//! differentials d + [gamma, -] for Maurer-Cartan elements.

pub mod dgla;
pub mod error;
pub mod tensor;

pub use dgla::{check_axioms, AxiomReport, AxiomViolation, Dgla};
pub use error::DglaError;
pub use tensor::{tensor_artin, DglaOverArtin};
