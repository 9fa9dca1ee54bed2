//! DGLAs with coefficients in a truncated graded algebra.
//!
//! An element of L tensor A is a coordinate vector over the base basis with
//! series coefficients riding on the right. The induced grading is
//! deg(x tensor a) = deg(x) - deg(a), so (L tensor m)^k collects L^i tensor
//! m^(j) with i - j = k, and the bracket picks up the Koszul sign
//! [x tensor a, y tensor b] = (-1)^{deg(a) deg(y)} [x,y] tensor ab. The
//! differential ignores coefficients: d(x tensor a) = d(x) tensor a.

use crate::dgla::{AxiomReport, AxiomViolation, Dgla};
use crate::error::DglaError;
use exact_core::{AlgebraRef, ExactScalar, Monomial, SeriesElement};
use graded_linalg::LinearMap;
use std::sync::Arc;

/// A base DGLA tensored with a coefficient algebra.
#[derive(Clone, Debug)]
pub struct DglaOverArtin {
    base: Arc<Dgla>,
    algebra: AlgebraRef,
}

/// Spec-facing constructor.
pub fn tensor_artin(base: Arc<Dgla>, algebra: AlgebraRef) -> DglaOverArtin {
    DglaOverArtin { base, algebra }
}

impl DglaOverArtin {
    pub fn new(base: Arc<Dgla>, algebra: AlgebraRef) -> Self {
        tensor_artin(base, algebra)
    }

    pub fn base(&self) -> &Arc<Dgla> {
        &self.base
    }

    pub fn algebra(&self) -> &AlgebraRef {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    pub fn zero(&self) -> Vec<SeriesElement> {
        vec![SeriesElement::zero(&self.algebra); self.dim()]
    }

    /// e_i tensor 1.
    pub fn basis_element(&self, i: usize) -> Vec<SeriesElement> {
        let mut v = self.zero();
        v[i] = SeriesElement::one(&self.algebra);
        v
    }

    /// e_i tensor m.
    pub fn tensor_element(&self, i: usize, m: Monomial, c: ExactScalar) -> Vec<SeriesElement> {
        let mut v = self.zero();
        v[i] = SeriesElement::single(&self.algebra, m, c);
        v
    }

    pub fn check_element(&self, v: &[SeriesElement]) -> Result<(), DglaError> {
        if v.len() != self.dim() {
            return Err(DglaError::Shape {
                detail: format!("expected {} coordinates, got {}", self.dim(), v.len()),
            });
        }
        for c in v {
            if c.algebra().as_ref() != self.algebra.as_ref() {
                return Err(DglaError::AlgebraMismatch {
                    detail: "coordinate owned by a different coefficient algebra".into(),
                });
            }
        }
        Ok(())
    }

    pub fn is_zero(&self, v: &[SeriesElement]) -> bool {
        v.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, u: &[SeriesElement], v: &[SeriesElement]) -> Vec<SeriesElement> {
        u.iter().zip(v).map(|(a, b)| a.add(b)).collect()
    }

    pub fn sub(&self, u: &[SeriesElement], v: &[SeriesElement]) -> Vec<SeriesElement> {
        u.iter().zip(v).map(|(a, b)| a.sub(b)).collect()
    }

    pub fn scale(&self, c: &ExactScalar, v: &[SeriesElement]) -> Vec<SeriesElement> {
        v.iter().map(|a| a.scale(c)).collect()
    }

    /// Multiply by a coefficient on the right: (x tensor a) * b = x tensor ab.
    pub fn scale_series(&self, v: &[SeriesElement], b: &SeriesElement) -> Vec<SeriesElement> {
        v.iter().map(|a| a.mul(b)).collect()
    }

    /// d tensor id.
    pub fn d(&self, v: &[SeriesElement]) -> Vec<SeriesElement> {
        let n = self.dim();
        let mut out = self.zero();
        for ((i, j), entry) in self.base.d_map().entries() {
            debug_assert!(*i < n && *j < n);
            if v[*j].is_zero() {
                continue;
            }
            out[*i] = out[*i].add(&v[*j].scale(&entry.constant_term()));
        }
        out
    }

    /// The bracket with the Koszul sign from coefficients crossing basis
    /// vectors: odd coefficient monomials against odd basis degrees flip.
    pub fn bracket(&self, u: &[SeriesElement], v: &[SeriesElement]) -> Vec<SeriesElement> {
        let mut out = self.zero();
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let constants = self.base.bracket_basis(i, j);
                if constants.is_empty() {
                    continue;
                }
                let y_odd = self.base.space().degree(j).rem_euclid(2) == 1;
                for (m, c) in a.terms() {
                    let sign = if y_odd && self.algebra.parity(m) { -ExactScalar::one() } else { ExactScalar::one() };
                    let left = SeriesElement::single(&self.algebra, m.clone(), c * &sign);
                    let ab = left.mul(b);
                    if ab.is_zero() {
                        continue;
                    }
                    for (k, s) in &constants {
                        out[*k] = out[*k].add(&ab.scale(s));
                    }
                }
            }
        }
        out
    }

    /// Tensor degree occupied by (i, mu): deg(e_i) - deg(mu).
    pub fn term_degree(&self, i: usize, m: &Monomial) -> i64 {
        self.base.space().degree(i) - self.algebra.z_degree(m)
    }

    /// The part of v in tensor degree k.
    pub fn degree_part(&self, v: &[SeriesElement], k: i64) -> Vec<SeriesElement> {
        v.iter()
            .enumerate()
            .map(|(i, a)| {
                let mut part = SeriesElement::zero(&self.algebra);
                for (m, c) in a.terms() {
                    if self.term_degree(i, m) == k {
                        part = part.add(&SeriesElement::single(&self.algebra, m.clone(), c.clone()));
                    }
                }
                part
            })
            .collect()
    }

    /// True when every term sits in tensor degree k.
    pub fn is_homogeneous(&self, v: &[SeriesElement], k: i64) -> bool {
        v.iter().enumerate().all(|(i, a)| {
            a.terms().all(|(m, _)| self.term_degree(i, m) == k)
        })
    }

    /// True when every coefficient lies in the maximal ideal.
    pub fn in_maximal_ideal(&self, v: &[SeriesElement]) -> bool {
        v.iter().all(|a| a.terms().all(|(m, _)| m.order() >= 1))
    }

    /// Basis of the tensor-degree-k slice (i, mu); `ideal_only` restricts
    /// coefficients to the maximal ideal as in the deformation functor.
    pub fn tensor_basis_of_degree(&self, k: i64, ideal_only: bool) -> Vec<(usize, Monomial)> {
        let monos = if ideal_only {
            self.algebra.maximal_ideal_monomials()
        } else {
            self.algebra.basis_monomials()
        };
        let mut out = Vec::new();
        for i in 0..self.dim() {
            for m in &monos {
                if self.term_degree(i, m) == k {
                    out.push((i, m.clone()));
                }
            }
        }
        out
    }

    /// da + (1/2)[a, a].
    pub fn mc_residual(&self, a: &[SeriesElement]) -> Vec<SeriesElement> {
        let half = ExactScalar::from_ratio(1, 2);
        let bracket = self.bracket(a, a);
        self.add(&self.d(a), &self.scale(&half, &bracket))
    }

    /// Render an element for reports: sum of (series)*name parts.
    pub fn format_element(&self, v: &[SeriesElement]) -> String {
        let mut parts = Vec::new();
        for (i, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            parts.push(format!("({})*{}", a.canonical_string(), self.base.space().name(i)));
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }

    /// d_gamma = d + [gamma, -] as a map over the coefficient algebra.
    /// Precondition: gamma is homogeneous of tensor degree 1 and satisfies
    /// the Maurer-Cartan equation; the error carries the nonzero residual.
    pub fn deformed_differential(&self, gamma: &[SeriesElement]) -> Result<LinearMap, DglaError> {
        self.check_element(gamma)?;
        if !self.is_homogeneous(gamma, 1) {
            return Err(DglaError::NotDegreeOne {
                detail: self.format_element(gamma),
            });
        }
        let residual = self.mc_residual(gamma);
        if !self.is_zero(&residual) {
            return Err(DglaError::NotMaurerCartan {
                residual: self.format_element(&residual),
            });
        }
        let mut entries = Vec::new();
        for j in 0..self.dim() {
            let col = self.add(&self.d(&self.basis_element(j)), &self.bracket(gamma, &self.basis_element(j)));
            for (i, a) in col.into_iter().enumerate() {
                if !a.is_zero() {
                    entries.push((i, j, a));
                }
            }
        }
        Ok(LinearMap::new(
            self.base.space().clone(),
            self.base.space().clone(),
            1,
            Arc::clone(&self.algebra),
            entries,
        )?)
    }

    /// Exhaustive axiom check over the tensor basis of L tensor m: graded
    /// antisymmetry, Jacobi, and Leibniz in the induced grading. Cubic in
    /// (rank x ideal monomials); meant for small instances and property
    /// tests.
    pub fn check_axioms(&self) -> AxiomReport {
        let basis = {
            let monos = self.algebra.maximal_ideal_monomials();
            let mut out = Vec::new();
            for i in 0..self.dim() {
                for m in &monos {
                    out.push((i, m.clone()));
                }
            }
            out
        };
        let name = |&(i, ref m): &(usize, Monomial)| {
            format!("{}(x){}", self.base.space().name(i), self.algebra.format_monomial(m))
        };
        let element = |&(i, ref m): &(usize, Monomial)| {
            self.tensor_element(i, m.clone(), ExactScalar::one())
        };
        let parity = |&(i, ref m): &(usize, Monomial)| -> bool {
            self.term_degree(i, m).rem_euclid(2) == 1
        };

        for p in &basis {
            let ep = element(p);
            let twice = self.d(&self.d(&ep));
            if !self.is_zero(&twice) {
                return AxiomReport {
                    violation: Some(AxiomViolation::DifferentialSquare {
                        basis: name(p),
                        witness: self.format_element(&twice),
                    }),
                };
            }
        }
        for p in &basis {
            for q in &basis {
                let lhs = self.bracket(&element(p), &element(q));
                let rhs = self.bracket(&element(q), &element(p));
                let sign = if parity(p) && parity(q) { ExactScalar::one() } else { -ExactScalar::one() };
                let residue = self.sub(&lhs, &self.scale(&sign, &rhs));
                if !self.is_zero(&residue) {
                    return AxiomReport {
                        violation: Some(AxiomViolation::Antisymmetry {
                            left: name(p),
                            right: name(q),
                            witness: self.format_element(&residue),
                        }),
                    };
                }
            }
        }
        for p in &basis {
            for q in &basis {
                for r in &basis {
                    let ep = element(p);
                    let eq = element(q);
                    let er = element(r);
                    let lhs = self.bracket(&ep, &self.bracket(&eq, &er));
                    let t1 = self.bracket(&self.bracket(&ep, &eq), &er);
                    let t2 = self.bracket(&eq, &self.bracket(&ep, &er));
                    let sign = if parity(p) && parity(q) { -ExactScalar::one() } else { ExactScalar::one() };
                    let residue = self.sub(&self.sub(&lhs, &t1), &self.scale(&sign, &t2));
                    if !self.is_zero(&residue) {
                        return AxiomReport {
                            violation: Some(AxiomViolation::Jacobi {
                                a: name(p),
                                b: name(q),
                                c: name(r),
                                witness: self.format_element(&residue),
                            }),
                        };
                    }
                }
            }
        }
        for p in &basis {
            for q in &basis {
                let ep = element(p);
                let eq = element(q);
                let lhs = self.d(&self.bracket(&ep, &eq));
                let t1 = self.bracket(&self.d(&ep), &eq);
                let t2 = self.bracket(&ep, &self.d(&eq));
                let sign = if parity(p) { -ExactScalar::one() } else { ExactScalar::one() };
                let residue = self.sub(&self.sub(&lhs, &t1), &self.scale(&sign, &t2));
                if !self.is_zero(&residue) {
                    return AxiomReport {
                        violation: Some(AxiomViolation::Leibniz {
                            left: name(p),
                            right: name(q),
                            witness: self.format_element(&residue),
                        }),
                    };
                }
            }
        }
        AxiomReport { violation: None }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::{GradedArtinAlgebra, Variable};
    use graded_linalg::{BasisVector, GradedVectorSpace};

    fn one() -> ExactScalar {
        ExactScalar::one()
    }

    fn space(names: &[(&str, i64)]) -> GradedVectorSpace {
        GradedVectorSpace::new(
            names.iter().map(|(n, d)| BasisVector::new(*n, *d)).collect(),
        )
        .unwrap()
    }

    /// <x(1), y(2)>, d = 0, [x,x] = y.
    fn obstructed_pair() -> Arc<Dgla> {
        Arc::new(
            Dgla::new(
                space(&[("x", 1), ("y", 2)]),
                vec![],
                vec![(0, 0, vec![(1, one())])],
            )
            .unwrap(),
        )
    }

    #[test]
    fn abelian_tensor_keeps_d_and_kills_bracket() {
        let base = Arc::new(
            Dgla::new(space(&[("x", 1), ("y", 2)]), vec![(1, 0, one())], vec![]).unwrap(),
        );
        let a: AlgebraRef = Arc::new(GradedArtinAlgebra::power_series_one_var("t", 1));
        let lm = tensor_artin(base, Arc::clone(&a));
        let t = SeriesElement::variable(&a, "t").unwrap();
        let mut x_t = lm.zero();
        x_t[0] = t.clone();
        // d(x tensor t) = dx tensor t = y tensor t.
        let dxt = lm.d(&x_t);
        assert!(dxt[0].is_zero());
        assert_eq!(dxt[1], t);
        assert!(lm.is_zero(&lm.bracket(&x_t, &x_t)));
        assert!(lm.check_axioms().passed());
    }

    #[test]
    fn even_coefficient_square_follows_the_sign_rule() {
        // [x tensor t, x tensor t] = [x,x] tensor t^2 = y tensor t^2.
        let a: AlgebraRef = Arc::new(GradedArtinAlgebra::power_series_one_var("t", 2));
        let lm = tensor_artin(obstructed_pair(), Arc::clone(&a));
        let t = SeriesElement::variable(&a, "t").unwrap();
        let mut x_t = lm.zero();
        x_t[0] = t.clone();
        let sq = lm.bracket(&x_t, &x_t);
        assert!(sq[0].is_zero());
        assert_eq!(sq[1], t.mul(&t));
    }

    #[test]
    fn odd_coefficient_square_vanishes() {
        // With |theta| odd, [x tensor theta, x tensor theta] =
        // -[x,x] tensor theta^2 = 0 because theta^2 = 0.
        let a: AlgebraRef = Arc::new(
            GradedArtinAlgebra::new(vec![Variable::new("th", 1)], 2, vec![]).unwrap(),
        );
        let lm = tensor_artin(obstructed_pair(), Arc::clone(&a));
        let th = SeriesElement::variable(&a, "th").unwrap();
        let mut x_th = lm.zero();
        x_th[0] = th;
        assert!(lm.is_zero(&lm.bracket(&x_th, &x_th)));
        assert!(lm.check_axioms().passed());
    }

    #[test]
    fn mc_residual_of_tx_is_half_t_squared_y() {
        let a: AlgebraRef = Arc::new(GradedArtinAlgebra::power_series_one_var("t", 2));
        let lm = tensor_artin(obstructed_pair(), Arc::clone(&a));
        let t = SeriesElement::variable(&a, "t").unwrap();
        let mut gamma = lm.zero();
        gamma[0] = t.clone();
        let r = lm.mc_residual(&gamma);
        assert!(r[0].is_zero());
        assert_eq!(r[1], t.mul(&t).scale(&ExactScalar::from_ratio(1, 2)));
    }

    #[test]
    fn deformed_differential_requires_mc() {
        let a: AlgebraRef = Arc::new(GradedArtinAlgebra::power_series_one_var("t", 2));
        let lm = tensor_artin(obstructed_pair(), Arc::clone(&a));
        let t = SeriesElement::variable(&a, "t").unwrap();
        let mut gamma = lm.zero();
        gamma[0] = t;
        match lm.deformed_differential(&gamma) {
            Err(DglaError::NotMaurerCartan { residual }) => {
                assert!(residual.contains("1/2"), "residual was: {residual}");
                assert!(residual.contains("y"), "residual was: {residual}");
            }
            other => panic!("expected NotMaurerCartan, got {other:?}"),
        }
    }

    #[test]
    fn deformed_differential_of_zero_is_d() {
        let base = Arc::new(
            Dgla::new(space(&[("x", 1), ("y", 2)]), vec![(1, 0, one())], vec![]).unwrap(),
        );
        let a: AlgebraRef = Arc::new(GradedArtinAlgebra::power_series_one_var("t", 2));
        let lm = tensor_artin(Arc::clone(&base), Arc::clone(&a));
        let d_gamma = lm.deformed_differential(&lm.zero()).unwrap();
        // Same entries as d tensor id.
        for i in 0..lm.dim() {
            let e = lm.basis_element(i);
            let via_map = d_gamma.apply(&e).unwrap();
            let direct = lm.d(&e);
            assert_eq!(via_map, direct);
        }
    }

    #[test]
    fn deformed_differential_squares_to_zero_on_an_mc_solution() {
        // Abelian base with d = 0: any degree-1 element is MC; d_gamma = 0.
        // Use the nonabelian pair with gamma = t*x over Q[t]/(t^2), where
        // [x,x] = y forces residual (1/2)t^2 y = 0 by truncation, so gamma
        // IS Maurer-Cartan at this truncation and d_gamma = [gamma, -].
        let a: AlgebraRef = Arc::new(GradedArtinAlgebra::power_series_one_var("t", 1));
        let lm = tensor_artin(obstructed_pair(), Arc::clone(&a));
        let t = SeriesElement::variable(&a, "t").unwrap();
        let mut gamma = lm.zero();
        gamma[0] = t;
        assert!(lm.is_zero(&lm.mc_residual(&gamma)));
        let d_gamma = lm.deformed_differential(&gamma).unwrap();
        let square = d_gamma.compose(&d_gamma).unwrap();
        assert!(square.is_zero(), "d_gamma^2 = {square:?}");
    }
}
