//! Polyvector fields on a coordinate patch and the four core operations.
//!
//! An element of bidegree (p,q) is a sum of terms f(z, z̄, t) dz̄_I ⊗ ∂_J with
//! |I| = q antiholomorphic form factors and |J| = p holomorphic vector
//! factors, both strictly increasing. All odd symbols anticommute; the stored
//! normal form is the word dz̄_{i_1}…dz̄_{i_q} ∂_{j_1}…∂_{j_p}. The DGLA
//! degree of a (p,q) term is q - p + 1.
//!
//! Coefficients are polynomials in the layout z_1..z_n, z̄_1..z̄_n, t_1..t_m,
//! truncated in total t-degree. Mixed contexts (different n, t count, or
//! truncation) are rejected, never coerced.
//!
//! Sign conventions, fixed once and verified by the property suite:
//! * wedge: (f dz̄_I ∂_J)(g dz̄_K ∂_L) = (-1)^{|K||J|} fg dz̄_I dz̄_K ∂_J ∂_L,
//!   then each block is sorted with its shuffle sign;
//! * bracket on the vector-part  words (coefficients carried along):
//!   [f ∂_J, g ∂_L] = Σ_a (-1)^{p-a} f ∂g/∂z_{j_a} ∂_{J∖a}∂_L
//!                  + Σ_b (-1)^b g ∂f/∂z_{l_b} ∂_J ∂_{L∖b},
//!   valid uniformly for all p, p' ≥ 0 (the empty sums cover functions);
//! * dz̄ dressing: [f dz̄_I ∂_J, g dz̄_K ∂_L] carries (-1)^{|K|(|J|-1)} and the
//!   shuffle sign of dz̄_I dz̄_K;
//! * Δ(f dz̄_I ∂_J) = (-1)^q Σ_a (-1)^{p-a} ∂f/∂z_{j_a} dz̄_I ∂_{J∖a}, the
//!   divergence contraction against dz_1∧…∧dz_n.

use crate::error::KsError;
use crate::poly::MPoly;
use exact_core::ExactScalar;
use std::collections::BTreeMap;

/// Merge two strictly increasing index blocks, counting the transpositions
/// needed to sort the concatenation; `None` on a shared index.
pub(crate) fn merge_sorted(a: &[u8], b: &[u8]) -> Option<(Vec<u8>, i32)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut sign = 1i32;
    let (mut i, mut j) = (0usize, 0usize);
    while i < a.len() && j < b.len() {
        if a[i] == b[j] {
            return None;
        }
        if a[i] < b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            // b[j] moves left past the rest of a
            if (a.len() - i) % 2 == 1 {
                sign = -sign;
            }
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    Some((out, sign))
}

pub(crate) fn parity_sign(exp: usize) -> i32 {
    if exp % 2 == 0 {
        1
    } else {
        -1
    }
}

fn signed(p: MPoly, sign: i32) -> MPoly {
    if sign < 0 {
        p.neg()
    } else {
        p
    }
}

/// Polyvector field on a patch: exact coefficients, t-truncated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyVector {
    n: usize,
    t_vars: usize,
    trunc: u32,
    terms: BTreeMap<(Vec<u8>, Vec<u8>), MPoly>,
}

impl PolyVector {
    /// Zero element on the given patch context.
    pub fn zero(n: usize, t_vars: usize, trunc: u32) -> Self {
        PolyVector {
            n,
            t_vars,
            trunc,
            terms: BTreeMap::new(),
        }
    }

    /// Single term f dz̄_I ⊗ ∂_J; indices must be strictly increasing and
    /// below n, the coefficient must use the z|z̄|t layout of the patch.
    pub fn term(
        n: usize,
        t_vars: usize,
        trunc: u32,
        dzbar: &[u8],
        ddz: &[u8],
        coeff: MPoly,
    ) -> Result<Self, KsError> {
        for idx in [dzbar, ddz] {
            if !idx.windows(2).all(|w| w[0] < w[1]) {
                return Err(KsError::BadIndex {
                    detail: format!("multi-index {idx:?} is not strictly increasing"),
                });
            }
            if idx.iter().any(|&k| usize::from(k) >= n) {
                return Err(KsError::BadIndex {
                    detail: format!("multi-index {idx:?} exceeds patch dimension {n}"),
                });
            }
        }
        if coeff.vars() != 2 * n + t_vars {
            return Err(KsError::BadLayout {
                detail: format!(
                    "coefficient has {} variables, patch layout needs {}",
                    coeff.vars(),
                    2 * n + t_vars
                ),
            });
        }
        let mut out = PolyVector::zero(n, t_vars, trunc);
        out.insert(dzbar.to_vec(), ddz.to_vec(), coeff);
        Ok(out)
    }

    /// Patch complex dimension.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of deformation variables.
    pub fn t_vars(&self) -> usize {
        self.t_vars
    }

    /// Truncation order in total t-degree.
    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    /// True when no terms survive.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterate stored terms as (dz̄ index, ∂ index, coefficient).
    pub fn terms(&self) -> impl Iterator<Item = (&[u8], &[u8], &MPoly)> {
        self.terms
            .iter()
            .map(|((i, j), f)| (i.as_slice(), j.as_slice(), f))
    }

    /// Coefficient of one index pair (zero polynomial if absent).
    pub fn coeff(&self, dzbar: &[u8], ddz: &[u8]) -> MPoly {
        self.terms
            .get(&(dzbar.to_vec(), ddz.to_vec()))
            .cloned()
            .unwrap_or_else(|| MPoly::zero(2 * self.n + self.t_vars))
    }

    pub(crate) fn insert(&mut self, dzbar: Vec<u8>, ddz: Vec<u8>, coeff: MPoly) {
        use std::collections::btree_map::Entry;
        let cut = coeff.truncate_from(2 * self.n, self.trunc);
        if cut.is_zero() {
            return;
        }
        match self.terms.entry((dzbar, ddz)) {
            Entry::Vacant(v) => {
                v.insert(cut);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().add(&cut);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Error unless both elements share patch, parameters, and truncation.
    pub fn same_context(&self, other: &PolyVector) -> Result<(), KsError> {
        if self.n != other.n || self.t_vars != other.t_vars || self.trunc != other.trunc {
            return Err(KsError::MismatchedContext {
                detail: format!(
                    "(n={}, t_vars={}, trunc={}) vs (n={}, t_vars={}, trunc={})",
                    self.n, self.t_vars, self.trunc, other.n, other.t_vars, other.trunc
                ),
            });
        }
        Ok(())
    }

    /// Sum of two elements of the same context.
    pub fn add(&self, other: &PolyVector) -> Result<PolyVector, KsError> {
        self.same_context(other)?;
        let mut out = self.clone();
        for ((i, j), f) in &other.terms {
            out.insert(i.clone(), j.clone(), f.clone());
        }
        Ok(out)
    }

    /// Difference of two elements of the same context.
    pub fn sub(&self, other: &PolyVector) -> Result<PolyVector, KsError> {
        self.add(&other.neg())
    }

    /// Negation.
    pub fn neg(&self) -> PolyVector {
        let mut out = PolyVector::zero(self.n, self.t_vars, self.trunc);
        for ((i, j), f) in &self.terms {
            out.terms.insert((i.clone(), j.clone()), f.neg());
        }
        out
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &ExactScalar) -> PolyVector {
        let mut out = PolyVector::zero(self.n, self.t_vars, self.trunc);
        for ((i, j), f) in &self.terms {
            out.insert(i.clone(), j.clone(), f.scale(c));
        }
        out
    }

    /// The (p,q) part.
    pub fn component(&self, p: usize, q: usize) -> PolyVector {
        let mut out = PolyVector::zero(self.n, self.t_vars, self.trunc);
        for ((i, j), f) in &self.terms {
            if i.len() == q && j.len() == p {
                out.terms.insert((i.clone(), j.clone()), f.clone());
            }
        }
        out
    }

    /// The common bidegree (p,q), if every term shares one.
    pub fn bidegree(&self) -> Option<(usize, usize)> {
        let mut it = self.terms.keys();
        let (i0, j0) = it.next()?;
        let bd = (j0.len(), i0.len());
        for (i, j) in it {
            if (j.len(), i.len()) != bd {
                return None;
            }
        }
        Some(bd)
    }

    /// DGLA degree q - p + 1 of a bidegree-pure element.
    pub fn dgla_degree(&self) -> Option<i64> {
        self.bidegree()
            .map(|(p, q)| q as i64 - p as i64 + 1)
    }

    /// Keep only the coefficient parts of total t-degree `k`.
    pub fn t_order_part(&self, k: u32) -> PolyVector {
        let mut out = PolyVector::zero(self.n, self.t_vars, self.trunc);
        for ((i, j), f) in &self.terms {
            out.insert(i.clone(), j.clone(), f.part_with_degree_from(2 * self.n, k));
        }
        out
    }

    /// Largest t-order appearing in any coefficient.
    pub fn max_t_order(&self) -> Option<u32> {
        self.terms
            .values()
            .filter_map(|f| f.degree_from(2 * self.n))
            .max()
    }
}

/// Dolbeault operator: ∂̄(f dz̄_I ∂_J) = Σ_k ∂f/∂z̄_k dz̄_k ∧ dz̄_I ⊗ ∂_J.
pub fn dbar(alpha: &PolyVector) -> PolyVector {
    let n = alpha.n();
    let mut out = PolyVector::zero(n, alpha.t_vars(), alpha.trunc());
    for (i_idx, j_idx, f) in alpha.terms() {
        for k in 0..n {
            let g = f.derivative(n + k);
            if g.is_zero() {
                continue;
            }
            if let Some((merged, sign)) = merge_sorted(&[k as u8], i_idx) {
                out.insert(merged, j_idx.to_vec(), signed(g, sign));
            }
        }
    }
    out
}

/// Wedge product with the transposition sign (-1)^{|K||J|} for moving the
/// incoming dz̄ block past the left factor's ∂ block.
pub fn pv_wedge(alpha: &PolyVector, beta: &PolyVector) -> Result<PolyVector, KsError> {
    alpha.same_context(beta)?;
    let mut out = PolyVector::zero(alpha.n(), alpha.t_vars(), alpha.trunc());
    for (ia, ja, f) in alpha.terms() {
        for (ib, jb, g) in beta.terms() {
            let cross = parity_sign(ib.len() * ja.len());
            let Some((i_idx, s_i)) = merge_sorted(ia, ib) else {
                continue;
            };
            let Some((j_idx, s_j)) = merge_sorted(ja, jb) else {
                continue;
            };
            out.insert(i_idx, j_idx, signed(f.mul(g), cross * s_i * s_j));
        }
    }
    Ok(out)
}

/// Extended Schouten bracket; bidegree (p,q) x (p',q') -> (p+p'-1, q+q').
pub fn schouten_bracket(alpha: &PolyVector, beta: &PolyVector) -> Result<PolyVector, KsError> {
    alpha.same_context(beta)?;
    let mut out = PolyVector::zero(alpha.n(), alpha.t_vars(), alpha.trunc());
    for (ia, ja, f) in alpha.terms() {
        let p = ja.len();
        for (ib, jb, g) in beta.terms() {
            let pp = jb.len();
            // dressing (-1)^{|K|(|J|-1)}, parity computed as |K|(|J|+1)
            let dress = parity_sign(ib.len() * (p + 1));
            let Some((i_idx, s_i)) = merge_sorted(ia, ib) else {
                continue;
            };
            let base = dress * s_i;
            // Σ_a (-1)^{p-a} f ∂g/∂z_{j_a} ∂_{J∖a} ∂_L  (1-based a)
            for a in 0..p {
                let dg = g.derivative(usize::from(ja[a]));
                if dg.is_zero() {
                    continue;
                }
                let mut rest: Vec<u8> = ja.to_vec();
                rest.remove(a);
                let Some((j_idx, s_j)) = merge_sorted(&rest, jb) else {
                    continue;
                };
                let sign = base * parity_sign(p - 1 - a) * s_j;
                out.insert(i_idx.clone(), j_idx, signed(f.mul(&dg), sign));
            }
            // Σ_b (-1)^b g ∂f/∂z_{l_b} ∂_J ∂_{L∖b}  (1-based b)
            for b in 0..pp {
                let df = f.derivative(usize::from(jb[b]));
                if df.is_zero() {
                    continue;
                }
                let mut rest: Vec<u8> = jb.to_vec();
                rest.remove(b);
                let Some((j_idx, s_j)) = merge_sorted(ja, &rest) else {
                    continue;
                };
                let sign = base * parity_sign(b + 1) * s_j;
                out.insert(i_idx.clone(), j_idx, signed(g.mul(&df), sign));
            }
        }
    }
    Ok(out)
}

/// BV operator: divergence contraction against dz_1∧…∧dz_n; lowers p by 1.
pub fn bv_delta(alpha: &PolyVector) -> PolyVector {
    let mut out = PolyVector::zero(alpha.n(), alpha.t_vars(), alpha.trunc());
    for (i_idx, j_idx, f) in alpha.terms() {
        let p = j_idx.len();
        let q = i_idx.len();
        for a in 0..p {
            let df = f.derivative(usize::from(j_idx[a]));
            if df.is_zero() {
                continue;
            }
            let mut rest = j_idx.to_vec();
            rest.remove(a);
            let sign = parity_sign(q) * parity_sign(p - 1 - a);
            out.insert(i_idx.to_vec(), rest, signed(df, sign));
        }
    }
    out
}
