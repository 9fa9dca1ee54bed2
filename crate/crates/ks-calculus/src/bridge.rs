//! The torus patch's constant-coefficient calculus as an abstract DGLA.
//!
//! Translation-invariant polyvectors on the one-dimensional patch form a
//! four-dimensional space spanned by 1, ∂z, dz̄, dz̄⊗∂z with degrees q-p+1.
//! Both ∂̄ and the bracket differentiate coefficients, so on constants they
//! vanish identically: the abstract object has zero differential and zero
//! bracket, and a deformation series lives entirely in the dz̄⊗∂z
//! coordinate. The series itself is produced by the full family pipeline
//! (torus modulus -> structure matrix -> graph encoding), keeping this
//! module a thin adapter.

use crate::acs::torus_family;
use crate::encode::encoding_map;
use crate::error::KsError;
use dgla_core::Dgla;
use exact_core::ExactScalar;
use graded_linalg::{BasisVector, GradedVectorSpace};

/// Basis order of the constant torus calculus: ∂z, 1, dz̄⊗∂z, dz̄.
pub const TORUS_KS_BASIS: [(&str, i64); 4] =
    [("ddz", 0), ("one", 1), ("dzbar_ddz", 1), ("dzbar", 2)];

/// Index of the dz̄⊗∂z coordinate, where deformation series live.
pub const TORUS_PHI_INDEX: usize = 2;

/// The constant-coefficient Kodaira-Spencer algebra of the torus patch.
pub fn torus_ks_dgla() -> Dgla {
    let basis = TORUS_KS_BASIS
        .iter()
        .map(|(name, degree)| BasisVector::new(*name, *degree))
        .collect();
    let space = GradedVectorSpace::new(basis).expect("distinct basis names");
    Dgla::new(space, Vec::new(), Vec::new()).expect("zero maps satisfy the axioms")
}

/// Deformation series of the torus family in the dz̄⊗∂z coordinate,
/// computed by the production pipeline; entry m is the t^m coefficient.
pub fn torus_phi_series(tau: &[ExactScalar], order: u32) -> Result<Vec<ExactScalar>, KsError> {
    let j = torus_family(tau, order)?;
    let phi = encoding_map(&j)?;
    let coeff = phi.coeff(&[0], &[0]);
    let mut out = Vec::with_capacity(order as usize + 1);
    for m in 0..=order {
        let part = coeff.part_with_degree_from(2, m);
        let c = coeff.coeff(&[0, 0, m as u16]);
        // translation invariance: nothing but the pure t^m monomial
        assert_eq!(
            part,
            crate::poly::MPoly::monomial(3, &[0, 0, m as u16], c.clone()),
            "torus series must be constant in the coordinates"
        );
        out.push(c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::torus_phi_by_eigenvector;
    use dgla_core::check_axioms;

    #[test]
    fn constant_algebra_satisfies_all_axioms() {
        let dgla = torus_ks_dgla();
        let report = check_axioms(&dgla);
        assert!(report.violation.is_none());
        assert_eq!(dgla.space().dim(), 4);
    }

    #[test]
    fn production_series_equals_eigenvector_route() {
        let tau = vec![ExactScalar::i(), ExactScalar::from_int(1)];
        let series = torus_phi_series(&tau, 6).unwrap();
        let reference = torus_phi_by_eigenvector(&tau, 6).unwrap();
        assert_eq!(series, reference);
        assert_eq!(series[1], ExactScalar::from_ratio_i(-1, 2));
    }
}
