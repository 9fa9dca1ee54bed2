//! Maurer-Cartan machinery over Artin coefficient algebras.
//!
//! Everything downstream of the bare DGLA axioms lives here: the residual
//! da + [a,a]/2, order-by-order extension with obstruction classes in H^2,
//! Baker-Campbell-Hausdorff products in verified-nilpotent ambients, the
//! gauge action exp(ad_a) with order-by-order equivalence search, evaluation
//! of the deformation functor for abelian inputs, smoothness probing per
//! tangent class, and the extended-moduli dimension count from Hodge numbers.

mod bch;
mod error;
mod functor;
mod gauge;
mod moduli;
mod solution;
mod solve;

pub use bch::{bch_product, bch_product_degree_zero, BchAmbient, DegreeZeroBch};
pub use error::McError;
pub use functor::{abelian_functor_eval, FunctorBasis, FunctorBasisEntry};
pub use gauge::{gauge_act, gauge_equivalent};
pub use moduli::{extended_moduli_dims, ExtendedModuliDims, HodgeTable};
pub use solution::{order_part, truncate_element, McSolution, ObstructionReport};
pub use solve::{
    extend_order, mc_residual, smoothness_probe, solve_mc, solve_mc_from_first_order,
    tangent_space, McOutcome, ProbeVerdict, SmoothnessReport,
};
