//! Small named DGLAs with hand-checked behaviour.

use dgla_core::Dgla;
use exact_core::ExactScalar;
use graded_linalg::{BasisVector, GradedVectorSpace};

/// ⟨x, y⟩ with deg x = 1, deg y = 2, d = 0, [x, x] = y: the minimal model
/// whose Maurer-Cartan equation obstructs at order 2.
pub fn obstructed_pair() -> Dgla {
    let space = GradedVectorSpace::new(vec![
        BasisVector::new("x", 1),
        BasisVector::new("y", 2),
    ])
    .unwrap();
    Dgla::new(space, vec![], vec![(0, 0, vec![(1, ExactScalar::one())])]).unwrap()
}

/// ⟨x, y⟩ with deg x = 1, deg y = 2, d(x) = y, zero bracket: acyclic in
/// degrees 1 and 2, so deformations are trivial.
pub fn contractible_pair() -> Dgla {
    let space = GradedVectorSpace::new(vec![
        BasisVector::new("x", 1),
        BasisVector::new("y", 2),
    ])
    .unwrap();
    Dgla::new(space, vec![(1, 0, ExactScalar::one())], vec![]).unwrap()
}

/// Heisenberg Lie algebra in degree 0: [e, f] = c with c central, d = 0.
/// Its Baker-Campbell-Hausdorff product closes after the first bracket:
/// a • b = a + b + [a, b]/2.
pub fn heisenberg() -> Dgla {
    let space = GradedVectorSpace::new(vec![
        BasisVector::new("e", 0),
        BasisVector::new("f", 0),
        BasisVector::new("c", 0),
    ])
    .unwrap();
    Dgla::new(space, vec![], vec![(0, 1, vec![(2, ExactScalar::one())])]).unwrap()
}
