//! Degree-shifting linear maps with sparse entries over a coefficient
//! algebra, and exact solving over that algebra.
//!
//! Entries multiply coordinates from the left (`out_i = sum_j a_ij * c_j`),
//! and coefficients ride on the right of basis vectors: with the tensor
//! grading deg(e_j tensor mu) = deg(e_j) - deg(mu), a map of shift s must
//! satisfy deg_target(i) - deg(mu) = deg_source(j) + s for every monomial mu
//! of the entry at (i, j). Over the trivial algebra this is the usual
//! basis-degree rule.
//!
//! Solving over the (local, truncated) coefficient algebra expands each ring
//! unknown into one field unknown per surviving monomial and runs a single
//! deterministic field elimination with constant-order columns first. That
//! realizes the unit-pivot, constant-term-first discipline without ever
//! dividing by a non-unit, and it cannot be fooled by systems where an early
//! order's free choice matters at a later order (a greedy per-order loop
//! can).

use crate::error::LinalgError;
use crate::field;
use crate::space::GradedVectorSpace;
use exact_core::{AlgebraRef, ExactScalar, Monomial, SeriesElement};
use std::collections::BTreeMap;
use std::sync::Arc;

/// A linear map between graded spaces with a fixed degree shift.
#[derive(Clone, Debug)]
pub struct LinearMap {
    source: GradedVectorSpace,
    target: GradedVectorSpace,
    shift: i64,
    algebra: AlgebraRef,
    entries: BTreeMap<(usize, usize), SeriesElement>,
}

impl LinearMap {
    /// Build a map from sparse entries keyed (target row, source column).
    /// Zero entries are dropped; degree consistency is enforced per monomial.
    pub fn new(
        source: GradedVectorSpace,
        target: GradedVectorSpace,
        shift: i64,
        algebra: AlgebraRef,
        entries: Vec<(usize, usize, SeriesElement)>,
    ) -> Result<Self, LinalgError> {
        let mut map = BTreeMap::new();
        for (row, col, entry) in entries {
            if row >= target.dim() || col >= source.dim() {
                return Err(LinalgError::Shape {
                    detail: format!("entry ({}, {}) outside {}x{}", row, col, target.dim(), source.dim()),
                });
            }
            if entry.is_zero() {
                continue;
            }
            if entry.algebra().as_ref() != algebra.as_ref() {
                return Err(LinalgError::AlgebraMismatch {
                    detail: format!("entry ({}, {}) has a foreign owner", row, col),
                });
            }
            for (m, _) in entry.terms() {
                let need = source.degree(col) + shift;
                let got = target.degree(row) - algebra.z_degree(m);
                if need != got {
                    return Err(LinalgError::DegreeShift {
                        row,
                        col,
                        detail: format!(
                            "monomial {} gives degree {}, shift {} requires {}",
                            algebra.format_monomial(m),
                            got,
                            shift,
                            need
                        ),
                    });
                }
            }
            let existing = map.entry((row, col)).or_insert_with(|| SeriesElement::zero(&algebra));
            *existing = existing.add(&entry);
        }
        map.retain(|_, e: &mut SeriesElement| !e.is_zero());
        Ok(LinearMap { source, target, shift, algebra, entries: map })
    }

    /// The zero map.
    pub fn zero(
        source: GradedVectorSpace,
        target: GradedVectorSpace,
        shift: i64,
        algebra: AlgebraRef,
    ) -> Self {
        LinearMap { source, target, shift, algebra, entries: BTreeMap::new() }
    }

    /// Identity on `space` over the given algebra.
    pub fn identity(space: GradedVectorSpace, algebra: AlgebraRef) -> Self {
        let entries = (0..space.dim())
            .map(|i| ((i, i), SeriesElement::one(&algebra)))
            .collect();
        LinearMap { source: space.clone(), target: space, shift: 0, algebra, entries }
    }

    pub fn source(&self) -> &GradedVectorSpace {
        &self.source
    }

    pub fn target(&self) -> &GradedVectorSpace {
        &self.target
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn algebra(&self) -> &AlgebraRef {
        &self.algebra
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &SeriesElement)> {
        self.entries.iter()
    }

    pub fn entry(&self, row: usize, col: usize) -> SeriesElement {
        self.entries
            .get(&(row, col))
            .cloned()
            .unwrap_or_else(|| SeriesElement::zero(&self.algebra))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Apply to coordinates (right-linear over the algebra).
    pub fn apply(&self, coords: &[SeriesElement]) -> Result<Vec<SeriesElement>, LinalgError> {
        if coords.len() != self.source.dim() {
            return Err(LinalgError::Shape {
                detail: format!("expected {} coordinates, got {}", self.source.dim(), coords.len()),
            });
        }
        let mut out = vec![SeriesElement::zero(&self.algebra); self.target.dim()];
        for ((row, col), a) in &self.entries {
            if coords[*col].is_zero() {
                continue;
            }
            out[*row] = out[*row].add(&a.try_mul(&coords[*col]).map_err(|e| {
                LinalgError::AlgebraMismatch { detail: e.to_string() }
            })?);
        }
        Ok(out)
    }

    /// `self` after `inner`: (self . inner)(x) = self(inner(x)).
    pub fn compose(&self, inner: &LinearMap) -> Result<LinearMap, LinalgError> {
        if inner.target != self.source {
            return Err(LinalgError::Shape { detail: "composition spaces do not line up".into() });
        }
        if inner.algebra.as_ref() != self.algebra.as_ref() {
            return Err(LinalgError::AlgebraMismatch { detail: "composition over different algebras".into() });
        }
        let mut entries: BTreeMap<(usize, usize), SeriesElement> = BTreeMap::new();
        for ((i, j), a) in &self.entries {
            for ((j2, k), b) in &inner.entries {
                if j != j2 {
                    continue;
                }
                let prod = a.mul(b);
                if prod.is_zero() {
                    continue;
                }
                let e = entries
                    .entry((*i, *k))
                    .or_insert_with(|| SeriesElement::zero(&self.algebra));
                *e = e.add(&prod);
            }
        }
        entries.retain(|_, e| !e.is_zero());
        Ok(LinearMap {
            source: inner.source.clone(),
            target: self.target.clone(),
            shift: self.shift + inner.shift,
            algebra: Arc::clone(&self.algebra),
            entries,
        })
    }

    pub fn add(&self, other: &LinearMap) -> Result<LinearMap, LinalgError> {
        if self.source != other.source || self.target != other.target || self.shift != other.shift
        {
            return Err(LinalgError::Shape { detail: "sum of incompatible maps".into() });
        }
        let mut entries = self.entries.clone();
        for (k, v) in &other.entries {
            let e = entries.entry(*k).or_insert_with(|| SeriesElement::zero(&self.algebra));
            *e = e.add(v);
        }
        entries.retain(|_, e| !e.is_zero());
        Ok(LinearMap { entries, ..self.clone() })
    }

    /// The dense constant-term matrix (rows = target), for field-level work.
    pub fn constant_matrix(&self) -> Vec<Vec<ExactScalar>> {
        let mut rows = vec![vec![ExactScalar::zero(); self.source.dim()]; self.target.dim()];
        for ((i, j), a) in &self.entries {
            rows[*i][*j] = a.constant_term();
        }
        rows
    }

    /// Solve `self(x) = rhs` over the coefficient algebra. Returns the
    /// deterministic minimal-support solution (free expanded coordinates
    /// zero) or `None` when no solution exists.
    pub fn solve(&self, rhs: &[SeriesElement]) -> Result<Option<Vec<SeriesElement>>, LinalgError> {
        if rhs.len() != self.target.dim() {
            return Err(LinalgError::Shape {
                detail: format!("expected {} rhs entries, got {}", self.target.dim(), rhs.len()),
            });
        }
        for r in rhs {
            if r.algebra().as_ref() != self.algebra.as_ref() {
                return Err(LinalgError::AlgebraMismatch { detail: "rhs has a foreign owner".into() });
            }
        }
        let sparse: Vec<(usize, usize, SeriesElement)> =
            self.entries.iter().map(|(&(i, j), a)| (i, j, a.clone())).collect();
        Ok(module_solve(&self.algebra, self.target.dim(), self.source.dim(), &sparse, rhs))
    }
}

/// Solve a sparse `rows x cols` system over a truncated algebra by monomial
/// expansion. No grading is assumed; see `LinearMap::solve` for the checked
/// wrapper. Expanded columns are ordered (monomial, column) so elimination
/// touches constant terms first; free coordinates are set to zero, which
/// makes the answer deterministic and minimal-support in the expansion.
pub fn module_solve(
    algebra: &AlgebraRef,
    rows: usize,
    cols: usize,
    entries: &[(usize, usize, SeriesElement)],
    rhs: &[SeriesElement],
) -> Option<Vec<SeriesElement>> {
    let monos = algebra.basis_monomials();
    let mono_index: BTreeMap<&Monomial, usize> =
        monos.iter().enumerate().map(|(k, m)| (m, k)).collect();
    let nm = monos.len();
    let ncols = cols * nm;
    let nrows = rows * nm;
    let col_of = |mono_idx: usize, j: usize| mono_idx * cols + j;
    let row_of = |mono_idx: usize, i: usize| mono_idx * rows + i;

    let mut mat = vec![vec![ExactScalar::zero(); ncols]; nrows];
    for (i, j, a) in entries {
        for (mu_a, c_a) in a.terms() {
            for (mx_idx, mu_x) in monos.iter().enumerate() {
                if let Some((prod, sign)) = algebra.mul_monomials(mu_a, mu_x) {
                    let Some(&prod_idx) = mono_index.get(&prod) else { continue };
                    let mut c = c_a.clone();
                    if sign < 0 {
                        c = -c;
                    }
                    let cell = &mut mat[row_of(prod_idx, *i)][col_of(mx_idx, *j)];
                    *cell = &*cell + &c;
                }
            }
        }
    }
    let mut b = vec![ExactScalar::zero(); nrows];
    for (i, v) in rhs.iter().enumerate() {
        for (m, c) in v.terms() {
            let Some(&mi) = mono_index.get(m) else { continue };
            b[row_of(mi, i)] = c.clone();
        }
    }
    let x = field::solve(&mat, &b)?;
    let mut out = vec![SeriesElement::zero(algebra); cols];
    for (mi, m) in monos.iter().enumerate() {
        for (j, slot) in out.iter_mut().enumerate() {
            let c = &x[col_of(mi, j)];
            if !c.is_zero() {
                *slot = slot.add(&SeriesElement::single(algebra, m.clone(), c.clone()));
            }
        }
    }
    Some(out)
}

/// Spec-facing alias for `LinearMap::solve`.
pub fn solve_linear(
    map: &LinearMap,
    rhs: &[SeriesElement],
) -> Result<Option<Vec<SeriesElement>>, LinalgError> {
    map.solve(rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::BasisVector;
    use exact_core::{GradedArtinAlgebra, Variable};

    fn trivial() -> AlgebraRef {
        Arc::new(GradedArtinAlgebra::scalars())
    }

    fn space(names: &[(&str, i64)]) -> GradedVectorSpace {
        GradedVectorSpace::new(
            names.iter().map(|(n, d)| BasisVector::new(*n, *d)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn degree_shift_is_enforced() {
        let a = trivial();
        let s = space(&[("x", 1)]);
        let t = space(&[("y", 2)]);
        let ok = LinearMap::new(
            s.clone(),
            t.clone(),
            1,
            Arc::clone(&a),
            vec![(0, 0, SeriesElement::one(&a))],
        );
        assert!(ok.is_ok());
        let bad = LinearMap::new(s, t, 0, Arc::clone(&a), vec![(0, 0, SeriesElement::one(&a))]);
        assert!(matches!(bad, Err(LinalgError::DegreeShift { .. })));
    }

    #[test]
    fn graded_entries_count_monomial_degree() {
        // Entry t * (basis shift): with deg(t) = 1, an entry t sends degree k
        // to degree k with shift 0 only if target degree = source + 1 - 1.
        let alg = Arc::new(
            GradedArtinAlgebra::new(vec![Variable::new("th", 1)], 2, vec![]).unwrap(),
        );
        let s = space(&[("x", 2)]);
        let t = space(&[("y", 3)]);
        let th = SeriesElement::variable(&alg, "th").unwrap();
        let ok = LinearMap::new(s.clone(), t.clone(), 0, Arc::clone(&alg), vec![(0, 0, th.clone())]);
        assert!(ok.is_ok(), "degree 3 - 1 = 2 + 0");
        let bad = LinearMap::new(s, t, 1, Arc::clone(&alg), vec![(0, 0, th)]);
        assert!(matches!(bad, Err(LinalgError::DegreeShift { .. })));
    }

    #[test]
    fn module_solve_handles_cross_order_coupling() {
        // x1 + x2 = 0 and t*x1 = t: greedy order-by-order with zeroed free
        // variables would fail; the expansion finds x1 = 1, x2 = -1.
        let alg = Arc::new(GradedArtinAlgebra::power_series_one_var("t", 2));
        let one = SeriesElement::one(&alg);
        let t = SeriesElement::variable(&alg, "t").unwrap();
        let entries = vec![
            (0usize, 0usize, one.clone()),
            (0, 1, one.clone()),
            (1, 0, t.clone()),
        ];
        let rhs = vec![SeriesElement::zero(&alg), t.clone()];
        let x = module_solve(&alg, 2, 2, &entries, &rhs).expect("solvable");
        assert_eq!(x[0].add(&x[1]), SeriesElement::zero(&alg));
        assert_eq!(t.mul(&x[0]), t);
    }

    #[test]
    fn module_solve_detects_inconsistency() {
        // t*x = 1 has no solution (t is not a unit).
        let alg = Arc::new(GradedArtinAlgebra::power_series_one_var("t", 2));
        let t = SeriesElement::variable(&alg, "t").unwrap();
        let one = SeriesElement::one(&alg);
        assert!(module_solve(&alg, 1, 1, &[(0, 0, t)], &[one]).is_none());
    }

    #[test]
    fn apply_and_compose_agree() {
        let a = trivial();
        let s = space(&[("x", 0), ("y", 0)]);
        let m = LinearMap::new(
            s.clone(),
            s.clone(),
            0,
            Arc::clone(&a),
            vec![
                (0, 1, SeriesElement::one(&a)),
                (1, 0, SeriesElement::from_scalar(&a, ExactScalar::from_int(2))),
            ],
        )
        .unwrap();
        let m2 = m.compose(&m).unwrap();
        let v = vec![SeriesElement::one(&a), SeriesElement::zero(&a)];
        let direct = m.apply(&m.apply(&v).unwrap()).unwrap();
        let composed = m2.apply(&v).unwrap();
        assert_eq!(direct, composed);
    }
}
