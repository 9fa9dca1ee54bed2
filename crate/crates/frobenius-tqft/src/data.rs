//! Frobenius input data and the axiom check at the origin.
//!
//! A `FrobeniusData` bundles a graded basis, a symmetric metric, and a
//! multiplication given either as a structure tensor over a coefficient
//! algebra or as a potential whose triple graded derivatives produce the
//! tensor. The axiom check evaluates everything at t = 0: graded
//! commutativity, associativity, invariance of the pairing, nondegeneracy,
//! and the unit axiom when a unit is declared.

use crate::error::FrobError;
use crate::potential::{invert_metric, lower_tensor, potential_to_tensor, third_derivative};
use crate::tensor::StructureTensor;
use exact_core::{ExactScalar, SeriesElement};
use graded_linalg::field;

/// A graded basis with metric and multiplication data.
#[derive(Clone, Debug)]
pub struct FrobeniusData {
    names: Vec<String>,
    degrees: Vec<i64>,
    metric: Vec<Vec<ExactScalar>>,
    tensor: Option<StructureTensor>,
    potential: Option<SeriesElement>,
    unit: Option<usize>,
}

impl FrobeniusData {
    /// Validate shapes, metric symmetry, coordinate parities, and (when both
    /// products are present) tensor/potential consistency.
    pub fn new(
        names: Vec<String>,
        degrees: Vec<i64>,
        metric: Vec<Vec<ExactScalar>>,
        tensor: Option<StructureTensor>,
        potential: Option<SeriesElement>,
        unit: Option<usize>,
    ) -> Result<Self, FrobError> {
        let n = names.len();
        if n == 0 {
            return Err(FrobError::Shape { detail: "empty basis".into() });
        }
        if degrees.len() != n {
            return Err(FrobError::Shape {
                detail: format!("{} names but {} degrees", n, degrees.len()),
            });
        }
        for (i, a) in names.iter().enumerate() {
            if a.is_empty() {
                return Err(FrobError::Shape { detail: format!("basis name {i} is empty") });
            }
            if names[..i].contains(a) {
                return Err(FrobError::Shape { detail: format!("duplicate basis name {a}") });
            }
        }
        check_metric(&metric, n)?;
        if let Some(u) = unit {
            if u >= n {
                return Err(FrobError::BadUnit { index: u, dim: n });
            }
        }
        if tensor.is_none() && potential.is_none() {
            return Err(FrobError::MissingProduct);
        }
        if let Some(t) = &tensor {
            if t.n() != n {
                return Err(FrobError::Shape {
                    detail: format!("tensor over {} basis elements, data has {}", t.n(), n),
                });
            }
        }
        if let Some(phi) = &potential {
            let algebra = phi.algebra();
            if algebra.num_vars() != n {
                return Err(FrobError::DimensionMismatch {
                    detail: format!(
                        "potential algebra has {} variables for {} basis elements",
                        algebra.num_vars(),
                        n
                    ),
                });
            }
            for (i, v) in algebra.vars().iter().enumerate() {
                if v.is_odd() != (degrees[i].rem_euclid(2) == 1) {
                    return Err(FrobError::VariableParity { index: i });
                }
            }
            if let Some(t) = &tensor {
                if t.algebra().as_ref() != algebra.as_ref() {
                    return Err(FrobError::AlgebraMismatch {
                        detail: "tensor and potential live over different algebras".into(),
                    });
                }
                let lowered = lower_tensor(t, &metric);
                for i in 0..n {
                    for j in 0..n {
                        for k in 0..n {
                            let derived = third_derivative(phi, i, j, k)?;
                            if lowered[(i * n + j) * n + k] != derived {
                                return Err(FrobError::Inconsistent { i, j, k });
                            }
                        }
                    }
                }
            }
        }
        Ok(FrobeniusData { names, degrees, metric, tensor, potential, unit })
    }

    /// Basis dimension.
    pub fn n(&self) -> usize {
        self.names.len()
    }

    /// Basis names in order.
    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Basis degrees in order.
    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    /// Degree parity of basis element i.
    pub fn parity(&self, i: usize) -> bool {
        self.degrees[i].rem_euclid(2) == 1
    }

    /// The metric matrix.
    pub fn metric(&self) -> &[Vec<ExactScalar>] {
        &self.metric
    }

    /// The structure tensor, when given directly.
    pub fn tensor(&self) -> Option<&StructureTensor> {
        self.tensor.as_ref()
    }

    /// The potential, when given.
    pub fn potential(&self) -> Option<&SeriesElement> {
        self.potential.as_ref()
    }

    /// The declared unit index, if any.
    pub fn unit(&self) -> Option<usize> {
        self.unit
    }

    /// Re-declare the unit index, revalidating the bound.
    pub fn with_unit(mut self, unit: Option<usize>) -> Result<Self, FrobError> {
        if let Some(u) = unit {
            if u >= self.n() {
                return Err(FrobError::BadUnit { index: u, dim: self.n() });
            }
        }
        self.unit = unit;
        Ok(self)
    }

    /// The structure tensor, deriving it from the potential when no tensor
    /// was given (which needs an invertible metric).
    pub fn effective_tensor(&self) -> Result<StructureTensor, FrobError> {
        if let Some(t) = &self.tensor {
            return Ok(t.clone());
        }
        let phi = self.potential.as_ref().expect("constructor requires a product");
        potential_to_tensor(phi, &self.metric)
    }

    /// Scalar structure constants at t = 0, flattened (i*n + j)*n + k.
    pub fn structure_constants(&self) -> Result<Vec<ExactScalar>, FrobError> {
        Ok(self.effective_tensor()?.constants())
    }
}

/// Shape and symmetry validation shared by every metric consumer.
pub(crate) fn check_metric(metric: &[Vec<ExactScalar>], n: usize) -> Result<(), FrobError> {
    if metric.len() != n || metric.iter().any(|row| row.len() != n) {
        return Err(FrobError::Shape { detail: format!("metric is not {n}x{n}") });
    }
    for i in 0..n {
        for j in 0..i {
            if metric[i][j] != metric[j][i] {
                return Err(FrobError::MetricNotSymmetric { i, j });
            }
        }
    }
    Ok(())
}

/// Verdicts of the origin-level Frobenius axioms; `None` witnesses mean pass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusVerdicts {
    /// First (a, b) with t_b t_a != (-1)^{deg a deg b} t_a t_b.
    pub commutativity: Option<(usize, usize)>,
    /// First (a, b, c) with (t_a t_b) t_c != t_a (t_b t_c).
    pub associativity: Option<(usize, usize, usize)>,
    /// First (a, b, c) with <t_a t_b, t_c> != <t_a, t_b t_c>.
    pub invariance: Option<(usize, usize, usize)>,
    /// Whether the metric has full rank.
    pub nondegenerate: bool,
    /// First basis index the declared unit fails to fix.
    pub unit: Option<usize>,
}

impl FrobeniusVerdicts {
    /// True when every axiom holds.
    pub fn passed(&self) -> bool {
        self.commutativity.is_none()
            && self.associativity.is_none()
            && self.invariance.is_none()
            && self.nondegenerate
            && self.unit.is_none()
    }
}

/// Check the Frobenius algebra axioms at t = 0, reporting first witnesses.
pub fn check_frobenius_algebra(f: &FrobeniusData) -> Result<FrobeniusVerdicts, FrobError> {
    let n = f.n();
    let c = f.structure_constants()?;
    let at = |i: usize, j: usize, k: usize| &c[(i * n + j) * n + k];
    let sign = |i: usize, j: usize| {
        if f.parity(i) && f.parity(j) {
            -ExactScalar::one()
        } else {
            ExactScalar::one()
        }
    };

    let mut commutativity = None;
    'comm: for a in 0..n {
        for b in 0..n {
            let s = sign(a, b);
            for k in 0..n {
                if *at(b, a, k) != at(a, b, k) * &s {
                    commutativity = Some((a, b));
                    break 'comm;
                }
            }
        }
    }

    let mut associativity = None;
    'assoc: for a in 0..n {
        for b in 0..n {
            for cc in 0..n {
                for d in 0..n {
                    let mut lhs = ExactScalar::zero();
                    let mut rhs = ExactScalar::zero();
                    for e in 0..n {
                        lhs = &lhs + &(at(a, b, e) * at(e, cc, d));
                        rhs = &rhs + &(at(b, cc, e) * at(a, e, d));
                    }
                    if lhs != rhs {
                        associativity = Some((a, b, cc));
                        break 'assoc;
                    }
                }
            }
        }
    }

    let mut invariance = None;
    'inv: for a in 0..n {
        for b in 0..n {
            for cc in 0..n {
                let mut lhs = ExactScalar::zero();
                let mut rhs = ExactScalar::zero();
                for e in 0..n {
                    lhs = &lhs + &(at(a, b, e) * &f.metric[e][cc]);
                    rhs = &rhs + &(at(b, cc, e) * &f.metric[a][e]);
                }
                if lhs != rhs {
                    invariance = Some((a, b, cc));
                    break 'inv;
                }
            }
        }
    }

    let nondegenerate = field::rank(&f.metric) == n;

    let mut unit = None;
    if let Some(u) = f.unit {
        'unit: for i in 0..n {
            for k in 0..n {
                let want = if i == k { ExactScalar::one() } else { ExactScalar::zero() };
                if *at(u, i, k) != want || *at(i, u, k) != want {
                    unit = Some(i);
                    break 'unit;
                }
            }
        }
    }

    Ok(FrobeniusVerdicts { commutativity, associativity, invariance, nondegenerate, unit })
}

/// The metric inverse, shared by index raising and comultiplication.
pub(crate) fn metric_inverse(
    metric: &[Vec<ExactScalar>],
) -> Result<Vec<Vec<ExactScalar>>, FrobError> {
    invert_metric(metric).ok_or(FrobError::MetricDegenerate)
}
