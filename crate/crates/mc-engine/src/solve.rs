//! Order-by-order Maurer-Cartan solving.
//!
//! A solution at order k extends to order k+1 when the order-(k+1) slice of
//! the residual is exact: the unknown enters only through d, so each ideal
//! monomial gives an independent linear system over the constants. The slice
//! is always d-closed (a graded Jacobi consequence), so failure is measured
//! by its cohomology class.

use std::sync::Arc;

use dgla_core::{tensor_artin, Dgla, DglaOverArtin};
use exact_core::{AlgebraRef, ExactScalar, SeriesElement};
use graded_linalg::{field, CohomologyBasis};

use crate::error::McError;
use crate::solution::{order_part, truncate_element, McSolution, ObstructionReport};

/// The Maurer-Cartan residual dx + [x,x]/2 of a degree-1 element.
pub fn mc_residual(
    ambient: &DglaOverArtin,
    x: &[SeriesElement],
) -> Result<Vec<SeriesElement>, McError> {
    if !ambient.is_homogeneous(x, 1) {
        return Err(McError::Degree {
            detail: "mc_residual expects a homogeneous degree-1 element".into(),
        });
    }
    Ok(ambient.mc_residual(x))
}

/// Either an extended solution or the first obstruction.
#[derive(Clone, Debug)]
pub enum McOutcome {
    Solved(McSolution),
    Obstructed(ObstructionReport),
}

impl McOutcome {
    /// The solution, if extension succeeded.
    pub fn solution(&self) -> Option<&McSolution> {
        match self {
            McOutcome::Solved(s) => Some(s),
            McOutcome::Obstructed(_) => None,
        }
    }

    /// The obstruction report, if extension failed.
    pub fn obstruction(&self) -> Option<&ObstructionReport> {
        match self {
            McOutcome::Solved(_) => None,
            McOutcome::Obstructed(r) => Some(r),
        }
    }
}

/// Solves d(v) = rhs for v supported in the given degree of the base DGLA;
/// rhs and the result are full-coordinate vectors. Free variables are set to
/// zero, so the solution is the deterministic minimal-support one.
pub(crate) fn solve_d_at_degree(
    base: &Dgla,
    degree: i64,
    rhs: &[ExactScalar],
) -> Option<Vec<ExactScalar>> {
    let n = base.space().dim();
    let cols = base.space().indices_of_degree(degree);
    let mut rows = vec![vec![ExactScalar::zero(); cols.len()]; n];
    for (c, &j) in cols.iter().enumerate() {
        let mut e = vec![ExactScalar::zero(); n];
        e[j] = ExactScalar::one();
        let dj = base.d_field(&e);
        for (r, val) in dj.into_iter().enumerate() {
            rows[r][c] = val;
        }
    }
    let solution = field::solve(&rows, rhs)?;
    let mut full = vec![ExactScalar::zero(); n];
    for (c, &j) in cols.iter().enumerate() {
        full[j] = solution[c].clone();
    }
    Some(full)
}

/// The full-coordinate slice of an element along one ideal monomial.
fn monomial_slice(element: &[SeriesElement], m: &exact_core::Monomial) -> Vec<ExactScalar> {
    element.iter().map(|s| s.coeff(m)).collect()
}

/// Attempts to extend a valid order-k solution to order k+1. The output
/// solution truncates back to the input; on failure the obstruction cochain
/// and its cohomology classes are reported.
pub fn extend_order(s: &McSolution) -> McOutcome {
    let ambient = s.ambient();
    let base = ambient.base();
    let algebra = ambient.algebra();
    let next = s.order() + 1;

    let residual = ambient.mc_residual(s.element());
    let cochain = order_part(&residual, next);
    debug_assert!(
        ambient.is_zero(&truncate_element(&ambient.d(&cochain), next)),
        "obstruction cochain must be d-closed"
    );

    let monomials: Vec<_> = algebra
        .maximal_ideal_monomials()
        .into_iter()
        .filter(|m| m.order() == next)
        .collect();

    let mut correction = ambient.zero();
    let mut failed = false;
    for m in &monomials {
        let slice = monomial_slice(&cochain, m);
        if slice.iter().all(|c| c.is_zero()) {
            continue;
        }
        let rhs: Vec<ExactScalar> = slice.iter().map(|c| -c.clone()).collect();
        match solve_d_at_degree(base, 1 + algebra.z_degree(m), &rhs) {
            Some(v) => {
                for (i, c) in v.into_iter().enumerate() {
                    if !c.is_zero() {
                        let term = ambient.tensor_element(i, m.clone(), c);
                        correction = ambient.add(&correction, &term);
                    }
                }
            }
            None => failed = true,
        }
    }

    if failed {
        let mut classes = Vec::new();
        for m in &monomials {
            let slice = monomial_slice(&cochain, m);
            if slice.iter().all(|c| c.is_zero()) {
                continue;
            }
            let h = base.complex().cohomology(2 + algebra.z_degree(m));
            let coords = h
                .project(&slice)
                .expect("obstruction cochain is d-closed and homogeneous");
            classes.push((m.clone(), coords));
        }
        let report = ObstructionReport { order: next, cochain, classes };
        debug_assert!(report.class_is_nonzero());
        return McOutcome::Obstructed(report);
    }

    let element = ambient.add(s.element(), &correction);
    let extended = McSolution::new(ambient.clone(), element, next)
        .expect("solving the order equation yields a valid solution");
    debug_assert_eq!(truncate_element(extended.element(), s.order()), s.element().to_vec());
    McOutcome::Solved(extended)
}

/// Iterates extend_order from an explicit first-order element until
/// max_order (clamped to the algebra truncation) or the first obstruction.
pub fn solve_mc_from_first_order(
    ambient: &DglaOverArtin,
    phi1: Vec<SeriesElement>,
    max_order: u32,
) -> Result<McOutcome, McError> {
    let target = max_order.min(ambient.algebra().truncation());
    let mut current = McSolution::new(ambient.clone(), phi1, 1.min(target))?;
    while current.order() < target {
        match extend_order(&current) {
            McOutcome::Solved(next) => current = next,
            McOutcome::Obstructed(report) => return Ok(McOutcome::Obstructed(report)),
        }
    }
    Ok(McOutcome::Solved(current))
}

/// Solves the Maurer-Cartan equation from a first cohomology class. The
/// coefficient algebra must have exactly one generator, even of degree 0, so
/// "order" means the power of that generator; the seed is given in the
/// echelon basis of H^1 and enters as (representative)·t.
pub fn solve_mc(
    base: Arc<Dgla>,
    algebra: AlgebraRef,
    seed: &[ExactScalar],
    max_order: u32,
) -> Result<McOutcome, McError> {
    if algebra.num_vars() != 1 || algebra.vars()[0].degree != 0 {
        return Err(McError::UnsupportedAlgebra {
            detail: format!(
                "solve_mc requires a single even degree-0 generator; got {} generator(s)",
                algebra.num_vars()
            ),
        });
    }
    let h1 = base.complex().cohomology(1);
    if seed.len() != h1.dim() {
        return Err(McError::BadSeed {
            detail: format!(
                "seed has {} coordinates but H^1 has dimension {}",
                seed.len(),
                h1.dim()
            ),
        });
    }
    let ambient = tensor_artin(base.clone(), algebra.clone());
    let t = SeriesElement::variable(&algebra, &algebra.vars()[0].name)
        .expect("generator exists");
    let mut phi1 = ambient.zero();
    for (coeff, rep) in seed.iter().zip(h1.representatives()) {
        if coeff.is_zero() {
            continue;
        }
        for (i, c) in rep.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let series = t.scale(&(coeff.clone() * c.clone()));
            phi1[i] = phi1[i].add(&series);
        }
    }
    solve_mc_from_first_order(&ambient, phi1, max_order)
}

/// The tangent space of the deformation functor: H^1 of the base complex.
pub fn tangent_space(base: &Dgla) -> CohomologyBasis {
    base.complex().cohomology(1)
}

/// Per-tangent-class verdict of the order-by-order extension probe.
#[derive(Clone, Debug)]
pub enum ProbeVerdict {
    /// The class extends to the stated order with residual zero.
    Extends { order: u32 },
    /// Extension first fails at the reported order.
    Obstructed(ObstructionReport),
}

/// Extendability report over all H^1 basis classes.
#[derive(Clone, Debug)]
pub struct SmoothnessReport {
    pub max_order: u32,
    pub verdicts: Vec<ProbeVerdict>,
}

impl SmoothnessReport {
    /// True when every tangent class extends to max_order.
    pub fn all_extend(&self) -> bool {
        self.verdicts.iter().all(|v| matches!(v, ProbeVerdict::Extends { .. }))
    }
}

/// Probes each H^1 basis class for extendability over Q[t]/(t^(max_order+1)).
pub fn smoothness_probe(base: Arc<Dgla>, max_order: u32) -> SmoothnessReport {
    let algebra: AlgebraRef = Arc::new(exact_core::GradedArtinAlgebra::power_series_one_var(
        "t", max_order,
    ));
    let h1_dim = base.complex().cohomology(1).dim();
    let mut verdicts = Vec::new();
    for i in 0..h1_dim {
        let mut seed = vec![ExactScalar::zero(); h1_dim];
        seed[i] = ExactScalar::one();
        let outcome = solve_mc(base.clone(), algebra.clone(), &seed, max_order)
            .expect("probe inputs are structurally valid");
        verdicts.push(match outcome {
            McOutcome::Solved(s) => ProbeVerdict::Extends { order: s.order() },
            McOutcome::Obstructed(r) => ProbeVerdict::Obstructed(r),
        });
    }
    SmoothnessReport { max_order, verdicts }
}

#[cfg(test)]
mod tests {
    use super::*;
    use graded_linalg::{BasisVector, GradedVectorSpace};

    fn obstructed_pair() -> Arc<Dgla> {
        let space = GradedVectorSpace::new(vec![
            BasisVector::new("x", 1),
            BasisVector::new("y", 2),
        ])
        .unwrap();
        Arc::new(Dgla::new(space, vec![], vec![(0, 0, vec![(1, ExactScalar::one())])]).unwrap())
    }

    fn contractible_pair() -> Arc<Dgla> {
        let space = GradedVectorSpace::new(vec![
            BasisVector::new("x", 1),
            BasisVector::new("y", 2),
        ])
        .unwrap();
        Arc::new(Dgla::new(space, vec![(1, 0, ExactScalar::one())], vec![]).unwrap())
    }

    fn one_var(trunc: u32) -> AlgebraRef {
        Arc::new(exact_core::GradedArtinAlgebra::power_series_one_var("t", trunc))
    }

    #[test]
    fn residual_of_seed_in_obstructed_pair_is_half_t_squared_y() {
        let ambient = tensor_artin(obstructed_pair(), one_var(3));
        let t = SeriesElement::variable(ambient.algebra(), "t").unwrap();
        let phi = vec![t.clone(), SeriesElement::zero(ambient.algebra())];
        let r = mc_residual(&ambient, &phi).unwrap();
        assert!(r[0].is_zero());
        assert_eq!(r[1], t.mul(&t).scale(&ExactScalar::from_ratio(1, 2)));
    }

    #[test]
    fn wrong_degree_input_is_a_structural_error() {
        let ambient = tensor_artin(obstructed_pair(), one_var(2));
        let t = SeriesElement::variable(ambient.algebra(), "t").unwrap();
        // Component 1 has degree 2: not a degree-1 element.
        let bad = vec![SeriesElement::zero(ambient.algebra()), t];
        assert!(matches!(mc_residual(&ambient, &bad), Err(McError::Degree { .. })));
    }

    #[test]
    fn obstructed_pair_fails_at_order_two_with_nonzero_class() {
        let outcome = solve_mc(obstructed_pair(), one_var(4), &[ExactScalar::one()], 4).unwrap();
        let report = outcome.obstruction().expect("must obstruct");
        assert_eq!(report.order, 2);
        assert!(report.class_is_nonzero());
        // d = 0, so the class equals the cochain: (1/2)[y] on the t^2 slice.
        assert_eq!(report.classes.len(), 1);
        assert_eq!(report.classes[0].1, vec![ExactScalar::from_ratio(1, 2)]);
    }

    #[test]
    fn contractible_pair_extends_with_explicit_correction() {
        // d(x) = y kills H^1, so the only seed is empty; probe a direct
        // first-order element instead: phi_1 = t·x has residual t·y at order
        // 1 already, so it is not even a valid first-order solution.
        let ambient = tensor_artin(contractible_pair(), one_var(3));
        let t = SeriesElement::variable(ambient.algebra(), "t").unwrap();
        let phi = vec![t, SeriesElement::zero(ambient.algebra())];
        let err = solve_mc_from_first_order(&ambient, phi, 3);
        assert!(matches!(err, Err(McError::NotMaurerCartan { .. })));
    }

    #[test]
    fn abelian_seed_solves_to_full_order_with_no_higher_terms() {
        let space = GradedVectorSpace::new(vec![
            BasisVector::new("u", 1),
            BasisVector::new("v", 2),
        ])
        .unwrap();
        let l = Arc::new(Dgla::new(space, vec![], vec![]).unwrap());
        let outcome = solve_mc(l, one_var(5), &[ExactScalar::one()], 5).unwrap();
        let s = outcome.solution().expect("abelian seeds extend");
        assert_eq!(s.order(), 5);
        // No higher corrections: the element is exactly rep·t.
        assert_eq!(s.element()[0].num_terms(), 1);
        assert!(s.element()[1].is_zero());
    }

    #[test]
    fn smoothness_probe_distinguishes_obstructed_from_smooth() {
        let obstructed = smoothness_probe(obstructed_pair(), 4);
        assert!(!obstructed.all_extend());
        assert_eq!(obstructed.verdicts.len(), 1);

        let smooth = smoothness_probe(contractible_pair(), 4);
        assert!(smooth.all_extend());
        assert_eq!(smooth.verdicts.len(), 0);
    }

    #[test]
    fn seed_length_is_validated() {
        let err = solve_mc(obstructed_pair(), one_var(3), &[], 3);
        assert!(matches!(err, Err(McError::BadSeed { .. })));
    }

    #[test]
    fn multi_generator_algebra_is_rejected_by_solve_mc() {
        let algebra: AlgebraRef = Arc::new(
            exact_core::GradedArtinAlgebra::new(
                vec![
                    exact_core::Variable::new("t", 0),
                    exact_core::Variable::new("s", 0),
                ],
                3,
                vec![],
            )
            .unwrap(),
        );
        let err = solve_mc(obstructed_pair(), algebra, &[ExactScalar::one()], 3);
        assert!(matches!(err, Err(McError::UnsupportedAlgebra { .. })));
    }
}
