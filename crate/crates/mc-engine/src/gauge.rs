//! Gauge action of degree-0 elements on degree-1 elements, and order-by-order
//! search for gauge witnesses.
//!
//! The action is b + Σ_{n>=0} (ad_a)^n/(n+1)! ([a,b] - da). Each application
//! of ad_a raises the ideal order, so the series terminates over an Artin
//! algebra. The witness search solves one linear system per order: at order k
//! a new summand a_k changes the output only through -d(a_k), everything else
//! being determined by lower orders.

use exact_core::{ExactScalar, SeriesElement};

use dgla_core::DglaOverArtin;

use crate::error::McError;
use crate::solution::truncate_element;
use crate::solve::solve_d_at_degree;

/// exp(ad_a) applied to b through the closed gauge formula. `a` must be
/// degree 0 with no constant term; `b` degree 1.
pub fn gauge_act(
    ambient: &DglaOverArtin,
    a: &[SeriesElement],
    b: &[SeriesElement],
) -> Result<Vec<SeriesElement>, McError> {
    if !ambient.is_homogeneous(a, 0) {
        return Err(McError::Degree { detail: "gauge parameter must have degree 0".into() });
    }
    if !ambient.in_maximal_ideal(a) {
        return Err(McError::NotInIdeal {
            detail: "gauge parameter must have no constant term".into(),
        });
    }
    if !ambient.is_homogeneous(b, 1) {
        return Err(McError::Degree { detail: "gauge action target must have degree 1".into() });
    }

    // u = [a,b] - da; out = b + Σ (ad_a)^n u / (n+1)!.
    let u = ambient.sub(&ambient.bracket(a, b), &ambient.d(a));
    let mut out = ambient.add(b, &u);
    let mut power = u;
    let mut factorial: i64 = 1;
    for n in 1..=(ambient.algebra().nilpotency_index() as i64 + 1) {
        power = ambient.bracket(a, &power);
        if ambient.is_zero(&power) {
            break;
        }
        factorial *= n + 1;
        out = ambient.add(&out, &ambient.scale(&ExactScalar::from_ratio(1, factorial), &power));
    }
    debug_assert!(
        ambient.is_zero(&ambient.bracket(a, &power)),
        "gauge series must terminate by nilpotency"
    );
    Ok(out)
}

/// Searches for a degree-0 witness a with gauge_act(a, x) = y up to
/// max_order, solving the linearized equation order by order with minimal
/// support. Returns None when some order's linear system is insoluble.
pub fn gauge_equivalent(
    ambient: &DglaOverArtin,
    x: &[SeriesElement],
    y: &[SeriesElement],
    max_order: u32,
) -> Result<Option<Vec<SeriesElement>>, McError> {
    for (name, v) in [("first", x), ("second", y)] {
        if !ambient.is_homogeneous(v, 1) {
            return Err(McError::Degree {
                detail: format!("{name} gauge-equivalence input must have degree 1"),
            });
        }
        if !ambient.in_maximal_ideal(v) {
            return Err(McError::NotInIdeal {
                detail: format!("{name} gauge-equivalence input must have no constant term"),
            });
        }
        let residual = truncate_element(&ambient.mc_residual(v), max_order);
        if !ambient.is_zero(&residual) {
            return Err(McError::NotMaurerCartan {
                residual: ambient.format_element(&residual),
            });
        }
    }

    let algebra = ambient.algebra();
    let base = ambient.base();
    let mut witness = ambient.zero();
    for k in 1..=max_order.min(algebra.truncation()) {
        let current = gauge_act(ambient, &witness, x)?;
        let delta: Vec<SeriesElement> = ambient
            .sub(y, &current)
            .iter()
            .map(|s| s.order_part(k))
            .collect();
        if ambient.is_zero(&delta) {
            continue;
        }
        // Need gauge_act((witness + a_k), x) = y at order k; the new summand
        // contributes -d(a_k), so solve d(a_k) = current_k - y_k = -delta_k.
        let mut solved_all = true;
        for m in algebra.maximal_ideal_monomials() {
            if m.order() != k {
                continue;
            }
            let slice: Vec<ExactScalar> = delta.iter().map(|s| s.coeff(&m)).collect();
            if slice.iter().all(|c| c.is_zero()) {
                continue;
            }
            match solve_d_at_degree(base, algebra.z_degree(&m), &slice) {
                Some(v) => {
                    for (i, c) in v.into_iter().enumerate() {
                        if !c.is_zero() {
                            let neg = -c;
                            let term = ambient.tensor_element(i, m.clone(), neg);
                            witness = ambient.add(&witness, &term);
                        }
                    }
                }
                None => {
                    solved_all = false;
                    break;
                }
            }
        }
        if !solved_all {
            return Ok(None);
        }
    }

    let check = gauge_act(ambient, &witness, x)?;
    let agree = truncate_element(&check, max_order) == truncate_element(y, max_order);
    Ok(if agree { Some(witness) } else { None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use dgla_core::{tensor_artin, Dgla};
    use exact_core::GradedArtinAlgebra;
    use graded_linalg::{BasisVector, GradedVectorSpace};
    use std::sync::Arc;

    fn abelian_pair(trunc: u32) -> DglaOverArtin {
        let space = GradedVectorSpace::new(vec![
            BasisVector::new("a0", 0),
            BasisVector::new("x", 1),
            BasisVector::new("y", 2),
        ])
        .unwrap();
        // d(a0) = x, d(x) = 0, zero bracket.
        let l = Dgla::new(space, vec![(1, 0, ExactScalar::one())], vec![]).unwrap();
        tensor_artin(
            Arc::new(l),
            Arc::new(GradedArtinAlgebra::power_series_one_var("t", trunc)),
        )
    }

    #[test]
    fn abelian_action_is_translation_by_minus_da() {
        let ambient = abelian_pair(3);
        let t = SeriesElement::variable(ambient.algebra(), "t").unwrap();
        let zero = SeriesElement::zero(ambient.algebra());
        let a = vec![t.clone(), zero.clone(), zero.clone()];
        let b = vec![zero.clone(), t.clone(), zero.clone()];
        let moved = gauge_act(&ambient, &a, &b).unwrap();
        // b - da: component x gets t - t = 0.
        assert!(moved[0].is_zero());
        assert!(moved[1].is_zero());
        assert!(moved[2].is_zero());
    }

    #[test]
    fn closed_commuting_parameter_acts_trivially() {
        // c0 is degree 0 with d(c0) = 0 and zero bracket, so t·c0 fixes b.
        let space = GradedVectorSpace::new(vec![
            BasisVector::new("c0", 0),
            BasisVector::new("x", 1),
        ])
        .unwrap();
        let l = Dgla::new(space, vec![], vec![]).unwrap();
        let ambient = tensor_artin(
            Arc::new(l),
            Arc::new(GradedArtinAlgebra::power_series_one_var("t", 3)),
        );
        let t = SeriesElement::variable(ambient.algebra(), "t").unwrap();
        let zero = SeriesElement::zero(ambient.algebra());
        let a = vec![t.clone(), zero.clone()];
        let b = vec![zero.clone(), t.clone()];
        let moved = gauge_act(&ambient, &a, &b).unwrap();
        assert_eq!(moved, b);
    }

    #[test]
    fn witness_found_for_translated_element_in_abelian_model() {
        let ambient = abelian_pair(4);
        let t = SeriesElement::variable(ambient.algebra(), "t").unwrap();
        let zero = SeriesElement::zero(ambient.algebra());
        let x = vec![zero.clone(), t.clone(), zero.clone()];
        // y = x - d(a) with a = t^2·a0: y_x = t - t^2.
        let a = vec![t.mul(&t), zero.clone(), zero.clone()];
        let y = gauge_act(&ambient, &a, &x).unwrap();
        let witness = gauge_equivalent(&ambient, &x, &y, 4).unwrap().expect("equivalent");
        let check = gauge_act(&ambient, &witness, &x).unwrap();
        assert_eq!(check, y);
    }

    #[test]
    fn inequivalent_classes_return_none() {
        // Make H^1 two-dimensional with no exact directions: d = 0, abelian.
        let space = GradedVectorSpace::new(vec![
            BasisVector::new("x", 1),
            BasisVector::new("y", 1),
        ])
        .unwrap();
        let l = Dgla::new(space, vec![], vec![]).unwrap();
        let ambient = tensor_artin(
            Arc::new(l),
            Arc::new(GradedArtinAlgebra::power_series_one_var("t", 2)),
        );
        let t = SeriesElement::variable(ambient.algebra(), "t").unwrap();
        let zero = SeriesElement::zero(ambient.algebra());
        let x = vec![t.clone(), zero.clone()];
        let y = vec![zero.clone(), t.clone()];
        assert!(gauge_equivalent(&ambient, &x, &y, 2).unwrap().is_none());
    }

    #[test]
    fn non_mc_input_is_reported() {
        let space = GradedVectorSpace::new(vec![
            BasisVector::new("x", 1),
            BasisVector::new("y", 2),
        ])
        .unwrap();
        let l = Dgla::new(space, vec![], vec![(0, 0, vec![(1, ExactScalar::one())])]).unwrap();
        let ambient = tensor_artin(
            Arc::new(l),
            Arc::new(GradedArtinAlgebra::power_series_one_var("t", 3)),
        );
        let t = SeriesElement::variable(ambient.algebra(), "t").unwrap();
        let zero = SeriesElement::zero(ambient.algebra());
        let x = vec![t, zero.clone()];
        let err = gauge_equivalent(&ambient, &x, &x, 3);
        assert!(matches!(err, Err(McError::NotMaurerCartan { .. })));
    }
}
