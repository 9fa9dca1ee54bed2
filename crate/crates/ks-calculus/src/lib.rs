//! Polyvector-field calculus on a coordinate patch and almost-complex
//! structure families.
//!
//! The patch model is C^n with exact polynomial coefficients in z, z̄, and
//! truncated deformation parameters t. On it live the Dolbeault operator,
//! the extended Schouten bracket, the wedge product, and the BV operator Δ,
//! tied together by the Tian-Todorov identity. Families of almost complex
//! structures are 2n x 2n real polynomial matrices J_t with J_t² = -1; the
//! encoding map turns such a family into a (1,1) polyvector φ_t whose
//! Maurer-Cartan residual detects integrability, cross-checked against the
//! Nijenhuis tensor.

pub mod acs;
pub mod bridge;
pub mod encode;
pub mod error;
pub mod forms;
mod matrix;
pub mod oracle;
pub mod poly;
pub mod pv;

pub use acs::{field_lie_bracket, nijenhuis_orders, nijenhuis_tensor, torus_family, AlmostComplexFamily};
pub use encode::{
    encoding_map, family_from_graph, integrability_crosscheck, mc_residual, CrosscheckReport,
};
pub use error::KsError;
pub use forms::{dbar_form, holomorphic_d, FormElement};
pub use poly::MPoly;
pub use pv::{bv_delta, dbar, pv_wedge, schouten_bracket, PolyVector};
