//! Shared test fixtures and independent oracles.
//!
//! Everything here exists to check the production crates from the outside:
//! exact nilpotent matrix exp/log as a Baker-Campbell-Hausdorff reference,
//! seeded random DGLA families whose axioms hold by construction, and a
//! self-contained F_p enumeration that recounts deformation sets without
//! touching the exact solvers.

pub mod fixtures;
pub mod modp;
pub mod random;
pub mod ratmat;

pub use fixtures::{contractible_pair, heisenberg, obstructed_pair};
pub use modp::{checked_power, count_abelian_mc_orbits_mod_p};
pub use random::{
    endo_dgla_of_complex, one_even_parameter, random_abelian_complex,
    random_acyclic_complex_maps, random_complex_maps, random_endo_dgla, random_graded_algebra,
    random_int_scalar, random_strictly_upper, random_two_step_dgla, seeded_rng, RandomComplexMaps,
};
pub use ratmat::RatMat;
