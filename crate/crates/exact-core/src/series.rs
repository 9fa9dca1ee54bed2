//! Elements of a truncated graded-commutative algebra.
//!
//! A `SeriesElement` is a finite sum of monomials with exact complex
//! coefficients, owned by a `GradedArtinAlgebra`. Zero coefficients are never
//! stored, terms live in a sorted map keyed by (order, lex) monomial order,
//! and every product is pushed through the owner's truncation and Koszul-sign
//! normalization, so structural equality of elements is semantic equality in
//! the quotient algebra.

use crate::algebra::{GradedArtinAlgebra, Monomial};
use crate::error::AlgebraError;
use crate::scalar::ExactScalar;
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// An element of a `GradedArtinAlgebra`.
#[derive(Clone)]
pub struct SeriesElement {
    algebra: Arc<GradedArtinAlgebra>,
    terms: BTreeMap<Monomial, ExactScalar>,
}

impl SeriesElement {
    pub fn zero(algebra: &Arc<GradedArtinAlgebra>) -> Self {
        SeriesElement { algebra: Arc::clone(algebra), terms: BTreeMap::new() }
    }

    pub fn one(algebra: &Arc<GradedArtinAlgebra>) -> Self {
        Self::from_scalar(algebra, ExactScalar::one())
    }

    pub fn from_scalar(algebra: &Arc<GradedArtinAlgebra>, c: ExactScalar) -> Self {
        let mut s = Self::zero(algebra);
        if !c.is_zero() {
            s.terms.insert(Monomial::unit(algebra.num_vars()), c);
        }
        s
    }

    /// The generator with the given name.
    pub fn variable(algebra: &Arc<GradedArtinAlgebra>, name: &str) -> Result<Self, AlgebraError> {
        let idx = algebra
            .var_index(name)
            .ok_or_else(|| AlgebraError::UnknownVariable { name: name.to_string() })?;
        let mut exps = vec![0u32; algebra.num_vars()];
        exps[idx] = 1;
        Ok(Self::single(algebra, Monomial(exps), ExactScalar::one()))
    }

    /// A single-term element; the term is dropped if it dies in the algebra.
    pub fn single(algebra: &Arc<GradedArtinAlgebra>, m: Monomial, c: ExactScalar) -> Self {
        let mut s = Self::zero(algebra);
        s.add_term(m, c);
        s
    }

    pub fn algebra(&self) -> &Arc<GradedArtinAlgebra> {
        &self.algebra
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &ExactScalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> ExactScalar {
        self.terms.get(m).cloned().unwrap_or_else(ExactScalar::zero)
    }

    pub fn constant_term(&self) -> ExactScalar {
        self.coeff(&Monomial::unit(self.algebra.num_vars()))
    }

    /// Lowest total order among stored terms; `None` for zero.
    pub fn min_order(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.order()).min()
    }

    /// The sum of terms with total order exactly `k`.
    pub fn order_part(&self, k: u32) -> SeriesElement {
        let mut out = Self::zero(&self.algebra);
        for (m, c) in &self.terms {
            if m.order() == k {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    /// The sum of terms with total order <= `k`.
    pub fn truncate_order(&self, k: u32) -> SeriesElement {
        let mut out = Self::zero(&self.algebra);
        for (m, c) in &self.terms {
            if m.order() <= k {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    /// The sum of terms whose monomial has the given Z-degree.
    pub fn z_degree_part(&self, degree: i64) -> SeriesElement {
        let mut out = Self::zero(&self.algebra);
        for (m, c) in &self.terms {
            if self.algebra.z_degree(m) == degree {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    /// Z-degrees occurring among stored terms, deduplicated and sorted.
    pub fn z_degrees(&self) -> Vec<i64> {
        let mut degs: Vec<i64> = self.terms.keys().map(|m| self.algebra.z_degree(m)).collect();
        degs.sort_unstable();
        degs.dedup();
        degs
    }

    fn add_term(&mut self, m: Monomial, c: ExactScalar) {
        if c.is_zero() || self.algebra.monomial_is_zero(&m) {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = &*o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn same_owner(&self, other: &SeriesElement) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra) || *self.algebra == *other.algebra
    }

    fn owner_check(&self, other: &SeriesElement) -> Result<(), AlgebraError> {
        if self.same_owner(other) {
            Ok(())
        } else {
            Err(AlgebraError::MismatchedOwners {
                left: self.algebra.to_string(),
                right: other.algebra.to_string(),
            })
        }
    }

    pub fn try_add(&self, other: &SeriesElement) -> Result<SeriesElement, AlgebraError> {
        self.owner_check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &SeriesElement) -> Result<SeriesElement, AlgebraError> {
        self.owner_check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    /// Graded-commutative product with Koszul signs and truncation.
    pub fn try_mul(&self, other: &SeriesElement) -> Result<SeriesElement, AlgebraError> {
        self.owner_check(other)?;
        let mut out = Self::zero(&self.algebra);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((m, sign)) = self.algebra.mul_monomials(ma, mb) {
                    let mut c = ca * cb;
                    if sign < 0 {
                        c = -c;
                    }
                    out.add_term(m, c);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &SeriesElement) -> SeriesElement {
        self.try_add(other).expect("algebra mismatch in add")
    }

    pub fn sub(&self, other: &SeriesElement) -> SeriesElement {
        self.try_sub(other).expect("algebra mismatch in sub")
    }

    pub fn mul(&self, other: &SeriesElement) -> SeriesElement {
        self.try_mul(other).expect("algebra mismatch in mul")
    }

    pub fn neg(&self) -> SeriesElement {
        let mut out = Self::zero(&self.algebra);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &ExactScalar) -> SeriesElement {
        let mut out = Self::zero(&self.algebra);
        if c.is_zero() {
            return out;
        }
        for (m, coeff) in &self.terms {
            out.terms.insert(m.clone(), coeff * c);
        }
        out
    }

    /// `self + c * other`, the workhorse of elimination loops.
    pub fn add_scaled(&self, c: &ExactScalar, other: &SeriesElement) -> SeriesElement {
        let mut out = self.clone();
        if c.is_zero() {
            return out;
        }
        for (m, coeff) in &other.terms {
            out.add_term(m.clone(), coeff * c);
        }
        out
    }

    pub fn pow(&self, k: u32) -> SeriesElement {
        let mut out = Self::one(&self.algebra);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Graded left derivative by the named variable. The operator carries the
    /// variable's parity: passing it over the odd letters before the variable
    /// in a sorted monomial costs a sign, so with odd th1 < th2 one gets
    /// d/dth2 (th1*th2) = -th1.
    ///
    /// This acts monomial by monomial on stored representatives. The
    /// truncation ideal is not differentially closed, so the graded Leibniz
    /// rule is exact only where products survive: in a relation-free algebra
    /// truncated at order N it holds on all order parts <= N-1, and callers
    /// who need derivatives at order k must keep their data in an algebra
    /// truncated at k+1 or higher.
    pub fn derive(&self, var: &str) -> Result<SeriesElement, AlgebraError> {
        let idx = self
            .algebra
            .var_index(var)
            .ok_or_else(|| AlgebraError::UnknownVariable { name: var.to_string() })?;
        let var_odd = self.algebra.vars()[idx].is_odd();
        let mut out = Self::zero(&self.algebra);
        for (m, c) in &self.terms {
            let e = m.0[idx];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[idx] = e - 1;
            let mut coeff = c * &ExactScalar::from_int(e as i64);
            if var_odd {
                let crossings: u32 = self
                    .algebra
                    .vars()
                    .iter()
                    .zip(&m.0)
                    .take(idx)
                    .filter(|(v, _)| v.is_odd())
                    .map(|(_, &me)| me)
                    .sum();
                if crossings % 2 == 1 {
                    coeff = -coeff;
                }
            }
            out.add_term(Monomial(exps), coeff);
        }
        Ok(out)
    }

    /// Multiplicative inverse, defined exactly for units (nonzero constant
    /// term): the geometric series in the nilpotent part, which terminates.
    pub fn inv(&self) -> Result<SeriesElement, AlgebraError> {
        let c = self.constant_term();
        let c_inv = c.inv().ok_or(AlgebraError::NotAUnit)?;
        let unit_mono = Monomial::unit(self.algebra.num_vars());
        let mut nilpotent = self.clone();
        nilpotent.terms.remove(&unit_mono);
        let scaled = nilpotent.scale(&c_inv);
        let mut out = Self::one(&self.algebra);
        let mut power = Self::one(&self.algebra);
        let bound = self.algebra.nilpotency_index();
        for k in 1..bound {
            power = power.mul(&scaled);
            if power.is_zero() {
                break;
            }
            let signed = if k % 2 == 1 { power.neg() } else { power.clone() };
            out = out.add(&signed);
        }
        Ok(out.scale(&c_inv))
    }

    /// Conjugate every coefficient (variables are treated as real).
    pub fn conj(&self) -> SeriesElement {
        let mut out = Self::zero(&self.algebra);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), c.conj());
        }
        out
    }

    /// Canonical text form: terms in (order, lex) monomial order, composite
    /// complex coefficients parenthesized, negative rational coefficients
    /// folded into a ` - ` join. Round-trips through the expression parser.
    pub fn canonical_string(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let (joiner, coeff) = if i > 0 && c.im().is_zero() && c.re().is_negative() {
                (" - ", -c)
            } else if i > 0 {
                (" + ", c.clone())
            } else {
                ("", c.clone())
            };
            out.push_str(joiner);
            let cs = coeff.canonical_string();
            let composite = cs[1..].contains('+') || cs[1..].contains('-');
            let mono = self.algebra.format_monomial(m);
            if m.is_unit() {
                out.push_str(&cs);
            } else if coeff.is_one() {
                out.push_str(&mono);
            } else if coeff == ExactScalar::from_int(-1) {
                out.push('-');
                out.push_str(&mono);
            } else if composite {
                out.push_str(&format!("({})*{}", cs, mono));
            } else {
                out.push_str(&format!("{}*{}", cs, mono));
            }
        }
        out
    }
}

impl PartialEq for SeriesElement {
    fn eq(&self, other: &Self) -> bool {
        self.same_owner(other) && self.terms == other.terms
    }
}

impl Eq for SeriesElement {}

impl fmt::Debug for SeriesElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_string())
    }
}

impl fmt::Display for SeriesElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_string())
    }
}
