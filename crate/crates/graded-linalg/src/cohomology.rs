//! Cochain complexes over the scalars, cohomology with explicit
//! representatives, and quasi-isomorphism checking.
//!
//! Representatives are an echelon complement of the image inside the kernel:
//! kernel vectors are reduced against the image rows and against each other,
//! so each representative is a genuine closed vector and the projection of a
//! closed vector onto its class coordinates is exact coefficient recovery,
//! not a best-effort fit.

use crate::error::LinalgError;
use crate::field::{self, TaggedEchelon};
use crate::map::LinearMap;
use crate::space::GradedVectorSpace;
use exact_core::ExactScalar;

/// A graded space with a square-zero degree +1 endomorphism.
#[derive(Clone, Debug)]
pub struct CochainComplex {
    space: GradedVectorSpace,
    d: LinearMap,
}

impl CochainComplex {
    /// Check shift, endpoints, constant coefficients, and d(d(e)) = 0 on
    /// every basis vector; the error names the first witness.
    pub fn new(space: GradedVectorSpace, d: LinearMap) -> Result<Self, LinalgError> {
        if d.shift() != 1 {
            return Err(LinalgError::NotADifferential {
                name: format!("differential has shift {}, expected 1", d.shift()),
            });
        }
        if d.source() != &space || d.target() != &space {
            return Err(LinalgError::Shape {
                detail: "differential endpoints differ from the complex's space".into(),
            });
        }
        if !d.algebra().is_trivial() {
            return Err(LinalgError::AlgebraMismatch {
                detail: "cochain complexes are taken over the scalars".into(),
            });
        }
        let m = d.constant_matrix();
        let n = space.dim();
        for j in 0..n {
            let image: Vec<ExactScalar> = (0..n).map(|i| m[i][j].clone()).collect();
            let twice = mat_apply(&m, &image);
            if let Some(i) = twice.iter().position(|c| !c.is_zero()) {
                return Err(LinalgError::NotADifferential {
                    name: format!(
                        "d(d({})) has component {} along {}",
                        space.name(j),
                        twice[i],
                        space.name(i)
                    ),
                });
            }
        }
        Ok(CochainComplex { space, d })
    }

    pub fn space(&self) -> &GradedVectorSpace {
        &self.space
    }

    pub fn d(&self) -> &LinearMap {
        &self.d
    }

    /// Apply the differential to full-space coordinates.
    pub fn d_apply(&self, v: &[ExactScalar]) -> Vec<ExactScalar> {
        mat_apply(&self.d.constant_matrix(), v)
    }

    /// Cohomology in one degree, with representatives and a projection.
    pub fn cohomology(&self, degree: i64) -> CohomologyBasis {
        let n = self.space.dim();
        let idx_k = self.space.indices_of_degree(degree);
        let idx_km1 = self.space.indices_of_degree(degree - 1);
        let m = self.d.constant_matrix();

        // Kernel of d restricted to degree k, in full-space coordinates.
        let idx_kp1 = self.space.indices_of_degree(degree + 1);
        let restricted: Vec<Vec<ExactScalar>> = idx_kp1
            .iter()
            .map(|&i| idx_k.iter().map(|&j| m[i][j].clone()).collect())
            .collect();
        let kernel_small = if idx_k.is_empty() {
            vec![]
        } else {
            field::kernel_basis(&restricted, idx_k.len())
        };
        let cycles: Vec<Vec<ExactScalar>> = kernel_small
            .into_iter()
            .map(|small| expand(&small, &idx_k, n))
            .collect();

        // Image rows first (untagged), then cycles; survivors, reduced, are
        // the representatives.
        let mut ech = TaggedEchelon::new(n);
        for &j in &idx_km1 {
            let image: Vec<ExactScalar> = (0..n).map(|i| m[i][j].clone()).collect();
            ech.insert(&image, None);
        }
        let mut reps = Vec::new();
        for z in &cycles {
            // The stored echelon row is the reduced, unit-pivot remainder;
            // keeping that exact vector as the representative means the
            // projection's coefficients are class coordinates with no change
            // of basis.
            let (rem, _) = ech.reduce(z, 0);
            if rem.iter().all(|c| c.is_zero()) {
                continue;
            }
            let stored = normalize(&rem);
            let inserted = ech.insert(&stored, Some(reps.len()));
            debug_assert!(inserted);
            reps.push(stored);
        }
        CohomologyBasis {
            space: self.space.clone(),
            degree,
            d_matrix: m,
            echelon: ech,
            reps,
        }
    }

    /// Dimensions of cohomology in every degree the underlying space hits.
    pub fn cohomology_dims(&self) -> Vec<(i64, usize)> {
        self.space
            .degrees()
            .into_iter()
            .map(|k| (k, self.cohomology(k).dim()))
            .collect()
    }
}

fn mat_apply(m: &[Vec<ExactScalar>], v: &[ExactScalar]) -> Vec<ExactScalar> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(ExactScalar::zero(), |acc, (a, b)| acc + (a * b))
        })
        .collect()
}

fn expand(small: &[ExactScalar], idx: &[usize], n: usize) -> Vec<ExactScalar> {
    let mut full = vec![ExactScalar::zero(); n];
    for (pos, &i) in idx.iter().enumerate() {
        full[i] = small[pos].clone();
    }
    full
}

fn normalize(v: &[ExactScalar]) -> Vec<ExactScalar> {
    match v.iter().find(|c| !c.is_zero()) {
        None => v.to_vec(),
        Some(lead) => {
            let inv = lead.inv().expect("nonzero scalar");
            v.iter().map(|c| c * &inv).collect()
        }
    }
}

/// Cohomology of one degree: representatives plus exact class projection.
#[derive(Clone, Debug)]
pub struct CohomologyBasis {
    space: GradedVectorSpace,
    degree: i64,
    d_matrix: Vec<Vec<ExactScalar>>,
    echelon: TaggedEchelon,
    reps: Vec<Vec<ExactScalar>>,
}

impl CohomologyBasis {
    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    /// Representatives in full-space coordinates; each is d-closed.
    pub fn representatives(&self) -> &[Vec<ExactScalar>] {
        &self.reps
    }

    /// Class coordinates of a closed vector. Refuses non-cycles, naming the
    /// first basis direction where d(v) is nonzero.
    pub fn project(&self, v: &[ExactScalar]) -> Result<Vec<ExactScalar>, LinalgError> {
        if v.len() != self.space.dim() {
            return Err(LinalgError::Shape {
                detail: format!("expected {} coordinates, got {}", self.space.dim(), v.len()),
            });
        }
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() && self.space.degree(i) != self.degree {
                return Err(LinalgError::Shape {
                    detail: format!(
                        "vector is not homogeneous of degree {}: support on {}",
                        self.degree,
                        self.space.name(i)
                    ),
                });
            }
        }
        let dv = mat_apply(&self.d_matrix, v);
        if let Some(i) = dv.iter().position(|c| !c.is_zero()) {
            return Err(LinalgError::NotClosed {
                witness: format!(
                    "d(v) has component {} along {}",
                    dv[i],
                    self.space.name(i)
                ),
            });
        }
        let (rem, coeffs) = self.echelon.reduce(v, self.reps.len());
        debug_assert!(
            rem.iter().all(|c| c.is_zero()),
            "closed vector did not reduce to zero against image + representatives"
        );
        Ok(coeffs)
    }
}

/// Per-degree verdict of an induced cohomology map.
#[derive(Clone, Debug)]
pub struct DegreeVerdict {
    pub degree: i64,
    pub dim_source: usize,
    pub dim_target: usize,
    pub injective: bool,
    pub surjective: bool,
}

impl DegreeVerdict {
    pub fn is_iso(&self) -> bool {
        self.injective && self.surjective
    }
}

/// Outcome of a quasi-isomorphism check.
#[derive(Clone, Debug)]
pub struct QuasiIsoReport {
    pub degrees: Vec<DegreeVerdict>,
    pub is_quasi_iso: bool,
}

/// Verify `f` is a chain map, then test whether the induced map on
/// cohomology is an isomorphism in every degree either complex touches.
pub fn check_quasi_iso(
    f: &LinearMap,
    source: &CochainComplex,
    target: &CochainComplex,
) -> Result<QuasiIsoReport, LinalgError> {
    if f.shift() != 0 {
        return Err(LinalgError::NotAChainMap {
            name: "comparison map".into(),
            detail: format!("shift {} instead of 0", f.shift()),
        });
    }
    if f.source() != source.space() || f.target() != target.space() {
        return Err(LinalgError::Shape {
            detail: "comparison map endpoints differ from the complexes".into(),
        });
    }
    if !f.algebra().is_trivial() {
        return Err(LinalgError::AlgebraMismatch {
            detail: "quasi-isomorphism checks run over the scalars".into(),
        });
    }
    let fm = f.constant_matrix();
    let n_s = source.space().dim();
    for j in 0..n_s {
        let mut e = vec![ExactScalar::zero(); n_s];
        e[j] = ExactScalar::one();
        let fd = mat_apply(&fm, &source.d_apply(&e));
        let df = target.d_apply(&mat_apply(&fm, &e));
        let diff: Vec<ExactScalar> = fd.iter().zip(&df).map(|(a, b)| a - b).collect();
        if let Some(i) = diff.iter().position(|c| !c.is_zero()) {
            return Err(LinalgError::NotAChainMap {
                name: source.space().name(j).to_string(),
                detail: format!(
                    "f(d(x)) - d(f(x)) has component {} along {}",
                    diff[i],
                    target.space().name(i)
                ),
            });
        }
    }

    let mut degrees: Vec<i64> = source.space().degrees();
    for k in target.space().degrees() {
        if !degrees.contains(&k) {
            degrees.push(k);
        }
    }
    degrees.sort_unstable();

    let mut verdicts = Vec::new();
    for k in degrees {
        let hs = source.cohomology(k);
        let ht = target.cohomology(k);
        let mut columns = Vec::new();
        for rep in hs.representatives() {
            let image = mat_apply(&fm, rep);
            let coords = ht.project(&image)?;
            columns.push(coords);
        }
        // rank of the induced matrix (columns are images of source classes)
        let rows: Vec<Vec<ExactScalar>> = columns.clone();
        let rank = if rows.is_empty() { 0 } else { field::rank(&rows) };
        verdicts.push(DegreeVerdict {
            degree: k,
            dim_source: hs.dim(),
            dim_target: ht.dim(),
            injective: rank == hs.dim(),
            surjective: rank == ht.dim(),
        });
    }
    let is_quasi_iso = verdicts.iter().all(|v| v.is_iso());
    Ok(QuasiIsoReport { degrees: verdicts, is_quasi_iso })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::BasisVector;
    use exact_core::{GradedArtinAlgebra, SeriesElement};
    use std::sync::Arc;

    fn trivial() -> exact_core::AlgebraRef {
        Arc::new(GradedArtinAlgebra::scalars())
    }

    fn space(names: &[(&str, i64)]) -> GradedVectorSpace {
        GradedVectorSpace::new(
            names.iter().map(|(n, d)| BasisVector::new(*n, *d)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn two_point_contractible_complex_has_no_cohomology() {
        let a = trivial();
        let s = space(&[("x", 1), ("y", 2)]);
        let d = LinearMap::new(
            s.clone(),
            s.clone(),
            1,
            Arc::clone(&a),
            vec![(1, 0, SeriesElement::one(&a))],
        )
        .unwrap();
        let c = CochainComplex::new(s, d).unwrap();
        assert_eq!(c.cohomology(1).dim(), 0);
        assert_eq!(c.cohomology(2).dim(), 0);
    }

    #[test]
    fn zero_differential_gives_full_cohomology() {
        let a = trivial();
        let s = space(&[("x", 1), ("y", 2)]);
        let c = CochainComplex::new(s.clone(), LinearMap::zero(s.clone(), s, 1, a)).unwrap();
        assert_eq!(c.cohomology(1).dim(), 1);
        assert_eq!(c.cohomology(2).dim(), 1);
        assert_eq!(c.cohomology(3).dim(), 0);
    }

    #[test]
    fn square_nonzero_is_rejected_with_witness() {
        let a = trivial();
        let s = space(&[("x", 0), ("y", 1), ("z", 2)]);
        let d = LinearMap::new(
            s.clone(),
            s.clone(),
            1,
            Arc::clone(&a),
            vec![
                (1, 0, SeriesElement::one(&a)),
                (2, 1, SeriesElement::one(&a)),
            ],
        )
        .unwrap();
        match CochainComplex::new(s, d) {
            Err(LinalgError::NotADifferential { name }) => {
                assert!(name.contains("d(d(x))"), "witness was: {name}");
            }
            other => panic!("expected NotADifferential, got {other:?}"),
        }
    }

    #[test]
    fn projection_recovers_class_coordinates() {
        // Space x, y in degree 0; u in degree 1; d(x) = 0, d(y) = 0 but make
        // y - x exact: d over degree -1 generator w with d(w) = y - x.
        let a = trivial();
        let s = space(&[("w", -1), ("x", 0), ("y", 0), ("u", 1)]);
        let one = SeriesElement::one(&a);
        let d = LinearMap::new(
            s.clone(),
            s.clone(),
            1,
            Arc::clone(&a),
            vec![
                (1, 0, one.clone().neg()),
                (2, 0, one.clone()),
            ],
        )
        .unwrap();
        let c = CochainComplex::new(s, d).unwrap();
        let h0 = c.cohomology(0);
        assert_eq!(h0.dim(), 1);
        // x and y are the same class.
        let mut vx = vec![ExactScalar::zero(); 4];
        vx[1] = ExactScalar::one();
        let mut vy = vec![ExactScalar::zero(); 4];
        vy[2] = ExactScalar::one();
        assert_eq!(h0.project(&vx).unwrap(), h0.project(&vy).unwrap());
        // A non-closed vector is refused with a witness (w is homogeneous of
        // degree -1 but d(w) = y - x is nonzero).
        let h_m1 = c.cohomology(-1);
        let mut vw = vec![ExactScalar::zero(); 4];
        vw[0] = ExactScalar::one();
        assert!(matches!(h_m1.project(&vw), Err(LinalgError::NotClosed { .. })));
        // And a vector of the wrong degree is refused as non-homogeneous.
        assert!(matches!(h0.project(&vw), Err(LinalgError::Shape { .. })));
    }

    #[test]
    fn representative_projects_to_unit_vector() {
        let a = trivial();
        let s = space(&[("x", 0), ("y", 0)]);
        let c = CochainComplex::new(
            s.clone(),
            LinearMap::zero(s.clone(), s, 1, a),
        )
        .unwrap();
        let h = c.cohomology(0);
        assert_eq!(h.dim(), 2);
        for (t, rep) in h.representatives().iter().enumerate() {
            let coords = h.project(rep).unwrap();
            for (s_idx, c) in coords.iter().enumerate() {
                let expected = if s_idx == t { ExactScalar::one() } else { ExactScalar::zero() };
                assert_eq!(*c, expected);
            }
        }
    }

    #[test]
    fn quasi_iso_inclusion_of_harmonic_span() {
        // Target: x --d--> y plus a surviving class z (degree 0), u (degree 1
        // closed, not exact? u is hit by nothing, d(u)=0): H^0 = <z>, wait x
        // degree 0 too: d(x) = y kills x. H^0 = <z>, H^1 = <u>.
        let a = trivial();
        let big = space(&[("x", 0), ("z", 0), ("y", 1), ("u", 1)]);
        let d_big = LinearMap::new(
            big.clone(),
            big.clone(),
            1,
            Arc::clone(&a),
            vec![(2, 0, SeriesElement::one(&a))],
        )
        .unwrap();
        let target = CochainComplex::new(big.clone(), d_big).unwrap();

        let small = space(&[("z0", 0), ("u0", 1)]);
        let d_small = LinearMap::zero(small.clone(), small.clone(), 1, Arc::clone(&a));
        let source = CochainComplex::new(small.clone(), d_small).unwrap();

        let f = LinearMap::new(
            small,
            big,
            0,
            Arc::clone(&a),
            vec![
                (1, 0, SeriesElement::one(&a)),
                (3, 1, SeriesElement::one(&a)),
            ],
        )
        .unwrap();
        let report = check_quasi_iso(&f, &source, &target).unwrap();
        assert!(report.is_quasi_iso, "report: {report:?}");
    }

    #[test]
    fn non_chain_map_is_rejected_with_witness() {
        let a = trivial();
        let s = space(&[("x", 0), ("y", 1)]);
        let d = LinearMap::new(
            s.clone(),
            s.clone(),
            1,
            Arc::clone(&a),
            vec![(1, 0, SeriesElement::one(&a))],
        )
        .unwrap();
        let c = CochainComplex::new(s.clone(), d).unwrap();
        let zero_c = CochainComplex::new(
            s.clone(),
            LinearMap::zero(s.clone(), s.clone(), 1, Arc::clone(&a)),
        )
        .unwrap();
        let f = LinearMap::identity(s, Arc::clone(&a));
        match check_quasi_iso(&f, &c, &zero_c) {
            Err(LinalgError::NotAChainMap { name, .. }) => assert_eq!(name, "x"),
            other => panic!("expected NotAChainMap, got {other:?}"),
        }
    }
}
