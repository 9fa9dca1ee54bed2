//! Potentials, structure tensors, and the WDVV equations.
//!
//! A potential Phi over the coefficient algebra determines a lowered tensor
//! A_ijk as the triple graded derivative d_i d_j d_k Phi (innermost
//! derivative first), and the metric raises the last index to structure
//! constants A_ij^k. `tensor_to_potential` inverts this: it reads off a
//! candidate potential coefficient by coefficient and then verifies the
//! candidate exactly, so a tensor that is not a triple derivative is
//! rejected with a witness rather than silently approximated. Terms of the
//! lowered tensor whose order exceeds truncation - 3 can never be matched,
//! because differentiating three times lowers order by three; such tensors
//! are reported as unmatchable.
//!
//! `wdvv_check` verifies graded commutativity and the associativity
//! equations of the structure constants order by order, reporting the lowest
//! failing order with index witnesses.

use crate::error::FrobError;
use crate::tensor::StructureTensor;
use exact_core::{ExactScalar, Monomial, SeriesElement};
use graded_linalg::field;
use std::collections::BTreeSet;

/// Why a tensor admits no potential.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NotPotentialWitness {
    /// Lowered entries at (i, j, k) break graded index symmetry.
    Asymmetric { i: usize, j: usize, k: usize },
    /// No potential reproduces entry (i, j, k); detail names the monomial.
    Unmatchable { i: usize, j: usize, k: usize, detail: String },
}

/// Result of reconstructing a potential from a tensor.
#[derive(Clone, Debug, PartialEq)]
pub enum PotentialOutcome {
    /// The unique potential with all terms of order at least three.
    Potential(SeriesElement),
    /// The tensor is not a triple derivative; here is why.
    NotPotential(NotPotentialWitness),
}

/// WDVV verdicts; `None` witnesses mean pass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WdvvReport {
    /// Lex-first (a, b, c) failing graded commutativity at the lowest order.
    pub commutativity: Option<(usize, usize, usize, u32)>,
    /// Lex-first (a, b, c, d) failing associativity at the lowest order.
    pub associativity: Option<(usize, usize, usize, usize, u32)>,
}

impl WdvvReport {
    /// True when both equation families hold identically.
    pub fn passed(&self) -> bool {
        self.commutativity.is_none() && self.associativity.is_none()
    }
}

/// Invert a square scalar matrix by solving against unit columns.
pub(crate) fn invert_metric(metric: &[Vec<ExactScalar>]) -> Option<Vec<Vec<ExactScalar>>> {
    let n = metric.len();
    let mut inv = vec![vec![ExactScalar::zero(); n]; n];
    for k in 0..n {
        let mut e = vec![ExactScalar::zero(); n];
        e[k] = ExactScalar::one();
        let col = field::solve(metric, &e)?;
        for (l, v) in col.into_iter().enumerate() {
            inv[l][k] = v;
        }
    }
    Some(inv)
}

/// Lower the last tensor index with the metric: A_ijk = sum_l A_ij^l g_lk.
pub(crate) fn lower_tensor(
    tensor: &StructureTensor,
    metric: &[Vec<ExactScalar>],
) -> Vec<SeriesElement> {
    let n = tensor.n();
    let mut out = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut s = SeriesElement::zero(tensor.algebra());
                for l in 0..n {
                    s = s.add(&tensor.entry(i, j, l).scale(&metric[l][k]));
                }
                out.push(s);
            }
        }
    }
    out
}

/// The triple graded derivative d_i d_j d_k Phi, innermost derivative first.
pub(crate) fn third_derivative(
    phi: &SeriesElement,
    i: usize,
    j: usize,
    k: usize,
) -> Result<SeriesElement, FrobError> {
    let vars = phi.algebra().vars();
    Ok(phi
        .derive(&vars[k].name)?
        .derive(&vars[j].name)?
        .derive(&vars[i].name)?)
}

fn parity_sign(odd_i: bool, odd_j: bool) -> ExactScalar {
    if odd_i && odd_j {
        -ExactScalar::one()
    } else {
        ExactScalar::one()
    }
}

/// First (i, j, k) where the lowered tensor breaks graded index symmetry.
///
/// A triple derivative satisfies A_ijk = (-1)^{p_i p_j} A_jik and
/// A_ijk = (-1)^{p_j p_k} A_ikj; adjacent swaps generate all permutations.
pub fn graded_symmetry_witness(
    tensor: &StructureTensor,
    metric: &[Vec<ExactScalar>],
    degrees: &[i64],
) -> Result<Option<(usize, usize, usize)>, FrobError> {
    let n = tensor.n();
    crate::data::check_metric(metric, n)?;
    if degrees.len() != n {
        return Err(FrobError::DimensionMismatch {
            detail: format!("{} degrees for {} basis elements", degrees.len(), n),
        });
    }
    let lowered = lower_tensor(tensor, metric);
    let odd: Vec<bool> = degrees.iter().map(|d| d.rem_euclid(2) == 1).collect();
    let at = |i: usize, j: usize, k: usize| &lowered[(i * n + j) * n + k];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let swap_ij = at(j, i, k).scale(&parity_sign(odd[i], odd[j]));
                let swap_jk = at(i, k, j).scale(&parity_sign(odd[j], odd[k]));
                if *at(i, j, k) != swap_ij || *at(i, j, k) != swap_jk {
                    return Ok(Some((i, j, k)));
                }
            }
        }
    }
    Ok(None)
}

/// Raise the last index of the triple derivatives of a potential:
/// A_ij^k = sum_l (d_i d_j d_l Phi) g^lk.
pub fn potential_to_tensor(
    phi: &SeriesElement,
    metric: &[Vec<ExactScalar>],
) -> Result<StructureTensor, FrobError> {
    let n = metric.len();
    crate::data::check_metric(metric, n)?;
    let algebra = phi.algebra();
    if algebra.num_vars() != n {
        return Err(FrobError::DimensionMismatch {
            detail: format!("potential over {} variables, metric is {n}x{n}", algebra.num_vars()),
        });
    }
    let ginv = invert_metric(metric).ok_or(FrobError::MetricDegenerate)?;
    let mut lowered = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                lowered.push(third_derivative(phi, i, j, l)?);
            }
        }
    }
    let mut entries = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut s = SeriesElement::zero(algebra);
                for l in 0..n {
                    s = s.add(&lowered[(i * n + j) * n + l].scale(&ginv[l][k]));
                }
                entries.push(s);
            }
        }
    }
    StructureTensor::new(n, algebra.clone(), entries)
}

fn monomial_string(algebra: &exact_core::GradedArtinAlgebra, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (v, &e) in algebra.vars().iter().zip(&m.0) {
        match e {
            0 => {}
            1 => parts.push(v.name.clone()),
            _ => parts.push(format!("{}^{}", v.name, e)),
        }
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// Reconstruct the potential whose triple derivatives lower to the given
/// tensor, or report why none exists.
pub fn tensor_to_potential(
    tensor: &StructureTensor,
    metric: &[Vec<ExactScalar>],
) -> Result<PotentialOutcome, FrobError> {
    let n = tensor.n();
    crate::data::check_metric(metric, n)?;
    let algebra = tensor.algebra().clone();
    if algebra.num_vars() != n {
        return Err(FrobError::DimensionMismatch {
            detail: format!(
                "tensor coefficients over {} variables, need one per basis element ({n})",
                algebra.num_vars()
            ),
        });
    }
    let degrees: Vec<i64> =
        algebra.vars().iter().map(|v| if v.is_odd() { 1 } else { 0 }).collect();
    if let Some((i, j, k)) = graded_symmetry_witness(tensor, metric, &degrees)? {
        return Ok(PotentialOutcome::NotPotential(NotPotentialWitness::Asymmetric { i, j, k }));
    }
    let lowered = lower_tensor(tensor, metric);
    let at = |i: usize, j: usize, k: usize| &lowered[(i * n + j) * n + k];

    // Every admissible potential monomial shows up as mu * t_i * t_j * t_k
    // for some term mu of some lowered entry; dead products are skipped here
    // and caught by the verification pass.
    let mut candidates: BTreeSet<Monomial> = BTreeSet::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for (mu, _) in at(i, j, k).terms() {
                    let mut exps = mu.0.clone();
                    exps[i] += 1;
                    exps[j] += 1;
                    exps[k] += 1;
                    let m = Monomial(exps);
                    if !algebra.monomial_is_zero(&m) {
                        candidates.insert(m);
                    }
                }
            }
        }
    }

    let mut phi = SeriesElement::zero(&algebra);
    for m in &candidates {
        // Peel the three lowest-index variables off m; the remaining mu is
        // where the coefficient of m must appear in A_ijk.
        let mut exps = m.0.clone();
        let i = exps.iter().position(|&e| e > 0).expect("order >= 3");
        exps[i] -= 1;
        let j = exps.iter().position(|&e| e > 0).expect("order >= 3");
        exps[j] -= 1;
        let k = exps.iter().position(|&e| e > 0).expect("order >= 3");
        exps[k] -= 1;
        let mu = Monomial(exps);
        let probe = SeriesElement::single(&algebra, m.clone(), ExactScalar::one());
        let kappa = third_derivative(&probe, i, j, k)?.coeff(&mu);
        debug_assert!(!kappa.is_zero(), "triple derivative of a live monomial cannot vanish");
        let c = at(i, j, k).coeff(&mu) / kappa;
        if !c.is_zero() {
            phi = phi.add(&SeriesElement::single(&algebra, m.clone(), c));
        }
    }

    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let derived = third_derivative(&phi, i, j, k)?;
                if derived != *at(i, j, k) {
                    let diff = derived.sub(at(i, j, k));
                    let (mu, _) = diff.terms().next().expect("nonzero difference");
                    return Ok(PotentialOutcome::NotPotential(NotPotentialWitness::Unmatchable {
                        i,
                        j,
                        k,
                        detail: format!(
                            "entry ({i},{j},{k}) differs at coefficient monomial {}",
                            monomial_string(&algebra, mu)
                        ),
                    }));
                }
            }
        }
    }
    Ok(PotentialOutcome::Potential(phi))
}

/// Check graded commutativity and the WDVV associativity equations of the
/// structure constants, order by order.
pub fn wdvv_check(tensor: &StructureTensor, degrees: &[i64]) -> Result<WdvvReport, FrobError> {
    let n = tensor.n();
    if degrees.len() != n {
        return Err(FrobError::DimensionMismatch {
            detail: format!("{} degrees for {} basis elements", degrees.len(), n),
        });
    }
    let odd: Vec<bool> = degrees.iter().map(|d| d.rem_euclid(2) == 1).collect();
    let algebra = tensor.algebra();

    let mut commutativity: Option<(usize, usize, usize, u32)> = None;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let expected = tensor.entry(a, b, c).scale(&parity_sign(odd[a], odd[b]));
                let diff = tensor.entry(b, a, c).sub(&expected);
                if let Some(order) = diff.min_order() {
                    if commutativity.map_or(true, |(_, _, _, o)| order < o) {
                        commutativity = Some((a, b, c, order));
                    }
                }
            }
        }
    }

    let mut associativity: Option<(usize, usize, usize, usize, u32)> = None;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let mut lhs = SeriesElement::zero(algebra);
                    let mut rhs = SeriesElement::zero(algebra);
                    for e in 0..n {
                        lhs = lhs.add(&tensor.entry(a, b, e).mul(tensor.entry(e, c, d)));
                        rhs = rhs.add(&tensor.entry(b, c, e).mul(tensor.entry(a, e, d)));
                    }
                    let sign = parity_sign(odd[a], odd[b] != odd[c]);
                    let diff = lhs.sub(&rhs.scale(&sign));
                    if let Some(order) = diff.min_order() {
                        if associativity.map_or(true, |(_, _, _, _, o)| order < o) {
                            associativity = Some((a, b, c, d, order));
                        }
                    }
                }
            }
        }
    }

    Ok(WdvvReport { commutativity, associativity })
}
