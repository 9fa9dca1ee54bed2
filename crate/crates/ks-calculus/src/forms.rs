//! Differential forms with antiholomorphic and holomorphic factors.
//!
//! Terms are f(z, z̄, t) dz̄_I ∧ dz_K in that word order, both index blocks
//! strictly increasing. This is the target of the contraction isomorphism η
//! against dz_1∧…∧dz_n; the holomorphic exterior derivative here, conjugated
//! by η, is the reference computation for the BV operator.

use crate::error::KsError;
use crate::poly::MPoly;
use crate::pv::merge_sorted;
use std::collections::BTreeMap;

/// Form element with polynomial coefficients, t-truncated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormElement {
    n: usize,
    t_vars: usize,
    trunc: u32,
    terms: BTreeMap<(Vec<u8>, Vec<u8>), MPoly>,
}

impl FormElement {
    /// Zero form on the given patch context.
    pub fn zero(n: usize, t_vars: usize, trunc: u32) -> Self {
        FormElement {
            n,
            t_vars,
            trunc,
            terms: BTreeMap::new(),
        }
    }

    /// Single term f dz̄_I ∧ dz_K.
    pub fn term(
        n: usize,
        t_vars: usize,
        trunc: u32,
        dzbar: &[u8],
        dz: &[u8],
        coeff: MPoly,
    ) -> Result<Self, KsError> {
        for idx in [dzbar, dz] {
            if !idx.windows(2).all(|w| w[0] < w[1]) || idx.iter().any(|&k| usize::from(k) >= n) {
                return Err(KsError::BadIndex {
                    detail: format!("form multi-index {idx:?} invalid for dimension {n}"),
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
        let mut out = FormElement::zero(n, t_vars, trunc);
        out.insert(dzbar.to_vec(), dz.to_vec(), coeff);
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

    /// Truncation order.
    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    /// True when nothing is stored.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterate stored terms as (dz̄ index, dz index, coefficient).
    pub fn terms(&self) -> impl Iterator<Item = (&[u8], &[u8], &MPoly)> {
        self.terms
            .iter()
            .map(|((i, k), f)| (i.as_slice(), k.as_slice(), f))
    }

    /// Negation.
    pub fn neg(&self) -> FormElement {
        let mut out = FormElement::zero(self.n, self.t_vars, self.trunc);
        for ((i, k), f) in &self.terms {
            out.terms.insert((i.clone(), k.clone()), f.neg());
        }
        out
    }

    pub(crate) fn insert(&mut self, dzbar: Vec<u8>, dz: Vec<u8>, coeff: MPoly) {
        use std::collections::btree_map::Entry;
        let cut = coeff.truncate_from(2 * self.n, self.trunc);
        if cut.is_zero() {
            return;
        }
        match self.terms.entry((dzbar, dz)) {
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
}

/// Holomorphic exterior derivative: ∂ω = Σ_k dz_k ∧ ω. The new factor
/// crosses the dz̄ block, then shuffles into the dz block.
pub fn holomorphic_d(omega: &FormElement) -> FormElement {
    let n = omega.n();
    let mut out = FormElement::zero(n, omega.t_vars(), omega.trunc());
    for (i_idx, k_idx, f) in omega.terms() {
        let cross = crate::pv::parity_sign(i_idx.len());
        for k in 0..n {
            let g = f.derivative(k);
            if g.is_zero() {
                continue;
            }
            if let Some((merged, s)) = merge_sorted(&[k as u8], k_idx) {
                let signed = if cross * s < 0 { g.neg() } else { g };
                out.insert(i_idx.to_vec(), merged, signed);
            }
        }
    }
    out
}

/// Antiholomorphic exterior derivative on forms: ∂̄ω = Σ_k dz̄_k ∧ ω.
pub fn dbar_form(omega: &FormElement) -> FormElement {
    let n = omega.n();
    let mut out = FormElement::zero(n, omega.t_vars(), omega.trunc());
    for (i_idx, k_idx, f) in omega.terms() {
        for k in 0..n {
            let g = f.derivative(n + k);
            if g.is_zero() {
                continue;
            }
            if let Some((merged, s)) = merge_sorted(&[k as u8], i_idx) {
                let signed = if s < 0 { g.neg() } else { g };
                out.insert(merged, k_idx.to_vec(), signed);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::ExactScalar;

    fn fe(dzbar: &[u8], dz: &[u8], coeff: MPoly) -> FormElement {
        FormElement::term(2, 0, 8, dzbar, dz, coeff).unwrap()
    }

    #[test]
    fn d_squares_to_zero_and_anticommutes_with_dbar() {
        // f = z1 z2 z̄1: both derivatives act, all squares cancel
        let f = MPoly::monomial(4, &[1, 1, 1, 0], ExactScalar::from_int(1));
        let w = fe(&[], &[], f);
        assert!(holomorphic_d(&holomorphic_d(&w)).is_zero());
        assert!(dbar_form(&dbar_form(&w)).is_zero());
        let dd = holomorphic_d(&dbar_form(&w));
        let dd2 = dbar_form(&holomorphic_d(&w));
        // ∂∂̄ = -∂̄∂: sum of the two vanishes
        let mut total = dd.clone();
        for (i, k, c) in dd2.terms() {
            total.insert(i.to_vec(), k.to_vec(), c.clone());
        }
        assert!(total.is_zero());
        assert!(!dd.is_zero());
    }

    #[test]
    fn d_crosses_antiholomorphic_block_with_sign() {
        // ∂(z2 dz̄1) = dz2 ∧ (z2-derivative...) : derivative in z2 gives
        // dz2 ∧ dz̄1 = -dz̄1 ∧ dz2
        let w = fe(&[0], &[], MPoly::var(4, 1));
        let d = holomorphic_d(&w);
        assert_eq!(d, fe(&[0], &[1], MPoly::one(4)).neg());
    }
}
