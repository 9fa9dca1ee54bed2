//! Exact multivariate polynomials over the Gaussian rationals.
//!
//! Coefficient storage for everything on a patch: polyvector coefficients
//! live in variables `z_1..z_n, zbar_1..zbar_n, t_1..t_m`, family matrices in
//! `x_1..x_{2n}, t_1..t_m`. The variable layout is positional; the containers
//! in this crate fix a layout and validate it at their boundary, so the
//! arithmetic here panics (rather than returning errors) on layout mismatch.

use exact_core::ExactScalar;
use std::collections::BTreeMap;

/// Sparse exact polynomial: exponent vector -> nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    vars: usize,
    terms: BTreeMap<Vec<u16>, ExactScalar>,
}

impl MPoly {
    /// Zero polynomial in `vars` variables.
    pub fn zero(vars: usize) -> Self {
        MPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    /// Constant polynomial.
    pub fn constant(vars: usize, c: ExactScalar) -> Self {
        let mut p = MPoly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars], c);
        }
        p
    }

    /// The constant 1.
    pub fn one(vars: usize) -> Self {
        MPoly::constant(vars, ExactScalar::one())
    }

    /// The variable with index `idx`.
    pub fn var(vars: usize, idx: usize) -> Self {
        assert!(idx < vars, "variable index {idx} out of range {vars}");
        let mut exps = vec![0u16; vars];
        exps[idx] = 1;
        let mut p = MPoly::zero(vars);
        p.terms.insert(exps, ExactScalar::one());
        p
    }

    /// Single monomial with the given exponents and coefficient.
    pub fn monomial(vars: usize, exps: &[u16], coeff: ExactScalar) -> Self {
        assert_eq!(exps.len(), vars, "exponent vector length mismatch");
        let mut p = MPoly::zero(vars);
        if !coeff.is_zero() {
            p.terms.insert(exps.to_vec(), coeff);
        }
        p
    }

    /// Number of variables in the layout.
    pub fn vars(&self) -> usize {
        self.vars
    }

    /// True when no terms are stored.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterate stored (exponents, coefficient) pairs.
    pub fn terms(&self) -> impl Iterator<Item = (&[u16], &ExactScalar)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    /// Coefficient of one monomial (zero if absent).
    pub fn coeff(&self, exps: &[u16]) -> ExactScalar {
        assert_eq!(exps.len(), self.vars, "exponent vector length mismatch");
        self.terms.get(exps).cloned().unwrap_or_else(ExactScalar::zero)
    }

    /// The constant term.
    pub fn constant_term(&self) -> ExactScalar {
        self.coeff(&vec![0; self.vars])
    }

    fn insert_term(&mut self, exps: Vec<u16>, coeff: ExactScalar) {
        use std::collections::btree_map::Entry;
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().clone() + coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Sum. Panics if layouts differ.
    pub fn add(&self, other: &MPoly) -> MPoly {
        assert_eq!(self.vars, other.vars, "layout mismatch in add");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_term(e.clone(), c.clone());
        }
        out
    }

    /// Difference. Panics if layouts differ.
    pub fn sub(&self, other: &MPoly) -> MPoly {
        self.add(&other.neg())
    }

    /// Negation.
    pub fn neg(&self) -> MPoly {
        let mut out = MPoly::zero(self.vars);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), -c.clone());
        }
        out
    }

    /// Multiply every coefficient by `c`.
    pub fn scale(&self, c: &ExactScalar) -> MPoly {
        let mut out = MPoly::zero(self.vars);
        if c.is_zero() {
            return out;
        }
        for (e, k) in &self.terms {
            out.terms.insert(e.clone(), k.clone() * c.clone());
        }
        out
    }

    /// Product. Panics if layouts differ.
    pub fn mul(&self, other: &MPoly) -> MPoly {
        assert_eq!(self.vars, other.vars, "layout mismatch in mul");
        let mut out = MPoly::zero(self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u16> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.insert_term(exps, ca.clone() * cb.clone());
            }
        }
        out
    }

    /// Integer power by repeated multiplication.
    pub fn pow(&self, k: u32) -> MPoly {
        let mut out = MPoly::one(self.vars);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Partial derivative in variable `idx`.
    pub fn derivative(&self, idx: usize) -> MPoly {
        assert!(idx < self.vars, "variable index {idx} out of range");
        let mut out = MPoly::zero(self.vars);
        for (e, c) in &self.terms {
            if e[idx] == 0 {
                continue;
            }
            let mut exps = e.clone();
            exps[idx] -= 1;
            let factor = ExactScalar::from_int(i64::from(e[idx]));
            out.insert_term(exps, c.clone() * factor);
        }
        out
    }

    /// Substitute `images[v]` for variable `v`; all images share one target
    /// layout. Panics if an image count or layout disagrees.
    pub fn substitute(&self, images: &[MPoly]) -> MPoly {
        assert_eq!(images.len(), self.vars, "one image per variable required");
        let target = images.first().map_or(0, MPoly::vars);
        for im in images {
            assert_eq!(im.vars(), target, "images with mixed layouts");
        }
        let mut out = MPoly::zero(target);
        for (e, c) in &self.terms {
            let mut term = MPoly::constant(target, c.clone());
            for (v, &k) in e.iter().enumerate() {
                if k > 0 {
                    term = term.mul(&images[v].pow(u32::from(k)));
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Evaluate at an exact point.
    pub fn eval(&self, point: &[ExactScalar]) -> ExactScalar {
        assert_eq!(point.len(), self.vars, "point dimension mismatch");
        let mut total = ExactScalar::zero();
        for (e, c) in &self.terms {
            let mut v = c.clone();
            for (coord, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    v = v * coord.clone();
                }
            }
            total = total + v;
        }
        total
    }

    /// Conjugate every coefficient (variables untouched).
    pub fn conj_coeffs(&self) -> MPoly {
        let mut out = MPoly::zero(self.vars);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), c.conj());
        }
        out
    }

    /// Relabel variables: position `v` becomes position `perm[v]`.
    /// `perm` must be a permutation of `0..vars`.
    pub fn permute_vars(&self, perm: &[usize]) -> MPoly {
        assert_eq!(perm.len(), self.vars, "permutation length mismatch");
        let mut seen = vec![false; self.vars];
        for &p in perm {
            assert!(p < self.vars && !seen[p], "not a permutation");
            seen[p] = true;
        }
        let mut out = MPoly::zero(self.vars);
        for (e, c) in &self.terms {
            let mut exps = vec![0u16; self.vars];
            for (v, &k) in e.iter().enumerate() {
                exps[perm[v]] = k;
            }
            out.terms.insert(exps, c.clone());
        }
        out
    }

    /// Total degree in the variables from position `lo` on, over all terms.
    pub fn degree_from(&self, lo: usize) -> Option<u32> {
        self.terms
            .keys()
            .map(|e| e[lo..].iter().map(|&k| u32::from(k)).sum())
            .max()
    }

    /// Drop terms whose total degree in variables `lo..` exceeds `max`.
    pub fn truncate_from(&self, lo: usize, max: u32) -> MPoly {
        let mut out = MPoly::zero(self.vars);
        for (e, c) in &self.terms {
            let d: u32 = e[lo..].iter().map(|&k| u32::from(k)).sum();
            if d <= max {
                out.terms.insert(e.clone(), c.clone());
            }
        }
        out
    }

    /// Keep only terms whose total degree in variables `lo..` equals `k`.
    pub fn part_with_degree_from(&self, lo: usize, k: u32) -> MPoly {
        let mut out = MPoly::zero(self.vars);
        for (e, c) in &self.terms {
            let d: u32 = e[lo..].iter().map(|&n| u32::from(n)).sum();
            if d == k {
                out.terms.insert(e.clone(), c.clone());
            }
        }
        out
    }

    /// Multiplicative inverse modulo the ideal of variables `lo..` truncated
    /// at total degree `max`. Requires the degree-zero part in those
    /// variables to be a nonzero constant; `None` otherwise.
    pub fn inverse_with_unit_constant(&self, lo: usize, max: u32) -> Option<MPoly> {
        let head = self.part_with_degree_from(lo, 0);
        if head.terms.len() != 1 {
            return None;
        }
        let c0 = head.constant_term();
        let c0_inv = c0.inv()?;
        if head != MPoly::constant(self.vars, c0) {
            return None;
        }
        // self = c0 (1 + u) with u supported in positive suffix degree;
        // (1 + u)^{-1} = Σ (-u)^s, finite after truncation
        let neg_u = MPoly::one(self.vars).sub(&self.scale(&c0_inv));
        let mut geom = MPoly::one(self.vars);
        let mut power = MPoly::one(self.vars);
        for _ in 1..=max {
            power = power.mul(&neg_u).truncate_from(lo, max);
            if power.is_zero() {
                break;
            }
            geom = geom.add(&power);
        }
        Some(geom.scale(&c0_inv).truncate_from(lo, max))
    }

    /// Render with caller-supplied variable names.
    pub fn render(&self, names: &[&str]) -> String {
        assert_eq!(names.len(), self.vars, "name list length mismatch");
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (e, c) in &self.terms {
            let mut factors = Vec::new();
            for (v, &k) in e.iter().enumerate() {
                if k == 1 {
                    factors.push(names[v].to_string());
                } else if k > 1 {
                    factors.push(format!("{}^{}", names[v], k));
                }
            }
            let coeff = c.canonical_string();
            if factors.is_empty() {
                parts.push(coeff);
            } else if c.is_one() {
                parts.push(factors.join("*"));
            } else {
                parts.push(format!("({})*{}", coeff, factors.join("*")));
            }
        }
        parts.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> ExactScalar {
        ExactScalar::from_int(n)
    }

    #[test]
    fn add_cancels_to_zero() {
        let x = MPoly::var(2, 0);
        assert!(x.add(&x.neg()).is_zero());
    }

    #[test]
    fn product_expands() {
        // (x + y)^2 = x^2 + 2xy + y^2
        let x = MPoly::var(2, 0);
        let y = MPoly::var(2, 1);
        let sq = x.add(&y).pow(2);
        assert_eq!(sq.coeff(&[2, 0]), s(1));
        assert_eq!(sq.coeff(&[1, 1]), s(2));
        assert_eq!(sq.coeff(&[0, 2]), s(1));
        assert_eq!(sq.terms().count(), 3);
    }

    #[test]
    fn derivative_of_power() {
        // d/dx x^3 y = 3 x^2 y
        let p = MPoly::monomial(2, &[3, 1], s(1));
        let d = p.derivative(0);
        assert_eq!(d, MPoly::monomial(2, &[2, 1], s(3)));
        assert!(p.derivative(1).derivative(1).is_zero());
    }

    #[test]
    fn substitute_linear_change() {
        // x^2 under x -> u + v becomes u^2 + 2uv + v^2
        let p = MPoly::monomial(1, &[2], s(1));
        let u = MPoly::var(2, 0);
        let v = MPoly::var(2, 1);
        let q = p.substitute(&[u.add(&v)]);
        assert_eq!(q.coeff(&[1, 1]), s(2));
        assert_eq!(q.vars(), 2);
    }

    #[test]
    fn eval_exact_point() {
        // p = x^2 - i y at (2, 3) = 4 - 3i
        let p = MPoly::monomial(2, &[2, 0], s(1)).add(&MPoly::monomial(
            2,
            &[0, 1],
            -ExactScalar::i(),
        ));
        let v = p.eval(&[s(2), s(3)]);
        assert_eq!(v, s(4) - ExactScalar::i() * s(3));
    }

    #[test]
    fn truncate_and_slice_by_suffix_degree() {
        // layout (z, t): z t^2 + z^2 t + z^3
        let p = MPoly::monomial(2, &[1, 2], s(1))
            .add(&MPoly::monomial(2, &[2, 1], s(1)))
            .add(&MPoly::monomial(2, &[3, 0], s(1)));
        let cut = p.truncate_from(1, 1);
        assert_eq!(cut.terms().count(), 2);
        assert_eq!(p.part_with_degree_from(1, 2), MPoly::monomial(2, &[1, 2], s(1)));
        assert_eq!(p.degree_from(1), Some(2));
    }

    #[test]
    fn permute_swaps_variable_roles() {
        let p = MPoly::monomial(2, &[2, 1], s(5));
        let q = p.permute_vars(&[1, 0]);
        assert_eq!(q, MPoly::monomial(2, &[1, 2], s(5)));
    }

    #[test]
    fn series_inverse_of_unit() {
        // layout (z, t): p = 2 + z t + t^2, check p * p^{-1} = 1 mod t^5
        let p = MPoly::constant(2, s(2))
            .add(&MPoly::monomial(2, &[1, 1], s(1)))
            .add(&MPoly::monomial(2, &[0, 2], s(1)));
        let inv = p.inverse_with_unit_constant(1, 5).unwrap();
        assert_eq!(p.mul(&inv).truncate_from(1, 5), MPoly::one(2));
        // z-dependent head is rejected, as is a zero head
        let q = MPoly::var(2, 0).add(&MPoly::monomial(2, &[0, 1], s(1)));
        assert!(q.inverse_with_unit_constant(1, 5).is_none());
        assert!(MPoly::monomial(2, &[0, 1], s(1))
            .inverse_with_unit_constant(1, 5)
            .is_none());
    }

    #[test]
    fn render_names_terms() {
        let p = MPoly::monomial(2, &[2, 1], s(3)).add(&MPoly::one(2));
        assert_eq!(p.render(&["z1", "t"]), "1 + (3)*z1^2*t");
    }
}
