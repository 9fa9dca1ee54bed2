//! Truncated graded-commutative coefficient algebras.
//!
//! A `GradedArtinAlgebra` is the quotient of a free graded-commutative
//! algebra on finitely many Z-graded variables by
//!
//!   * the truncation ideal: every monomial of total order > N dies,
//!   * squares of odd-degree variables,
//!   * an optional list of extra monomial relations.
//!
//! "Total order" counts one per variable power regardless of Z-degree; it is
//! the order filtration of the maximal ideal m (all variables), so the
//! algebra is local Artin with residue field the exact scalars and m is
//! nilpotent. Odd variables anticommute, even variables are central; every
//! product is normalized to the sorted monomial form, picking up Koszul signs
//! on the way.

use crate::error::AlgebraError;
use std::fmt;

/// A graded variable: a display name and a Z-degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Variable {
    pub name: String,
    pub degree: i64,
}

impl Variable {
    pub fn new(name: impl Into<String>, degree: i64) -> Self {
        Variable { name: name.into(), degree }
    }

    /// Parity of the Z-degree; odd variables anticommute and square to zero.
    pub fn is_odd(&self) -> bool {
        self.degree.rem_euclid(2) == 1
    }
}

/// Exponent vector over the owning algebra's variables, kept in variable
/// order. Ordering is graded lexicographic (total order first), which makes
/// order-by-order iteration over series terms the natural storage order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn unit(num_vars: usize) -> Self {
        Monomial(vec![0; num_vars])
    }

    /// Total order in the maximal ideal (sum of exponents).
    pub fn order(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// True when `self` divides `other` componentwise.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // Graded lex with earlier variables taking precedence: within one
        // total order, t^2 sorts before t*u.
        self.order().cmp(&other.order()).then_with(|| other.0.cmp(&self.0))
    }
}

/// A local Artin coefficient algebra: Z-graded variables, a truncation order,
/// and optional extra monomial relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedArtinAlgebra {
    vars: Vec<Variable>,
    truncation: u32,
    relations: Vec<Monomial>,
}

impl GradedArtinAlgebra {
    /// Build an algebra. Variable names must be distinct and nonempty;
    /// relations must index the declared variables and must not kill the unit.
    pub fn new(
        vars: Vec<Variable>,
        truncation: u32,
        relations: Vec<Monomial>,
    ) -> Result<Self, AlgebraError> {
        for (i, v) in vars.iter().enumerate() {
            if v.name.is_empty() {
                return Err(AlgebraError::BadVariable { name: v.name.clone() });
            }
            if vars[..i].iter().any(|w| w.name == v.name) {
                return Err(AlgebraError::DuplicateVariable { name: v.name.clone() });
            }
        }
        for r in &relations {
            if r.0.len() != vars.len() {
                return Err(AlgebraError::BadRelation { detail: "wrong arity".into() });
            }
            if r.is_unit() {
                return Err(AlgebraError::BadRelation { detail: "relation kills the unit".into() });
            }
        }
        Ok(GradedArtinAlgebra { vars, truncation, relations })
    }

    /// `Q(i)[t]/(t^(n+1))`: one even degree-0 variable, truncation n.
    pub fn power_series_one_var(name: &str, truncation: u32) -> Self {
        GradedArtinAlgebra::new(vec![Variable::new(name, 0)], truncation, vec![]).unwrap()
    }

    /// The trivial algebra (no variables): just the exact scalars. Serves as
    /// the coefficient field for plain linear algebra.
    pub fn scalars() -> Self {
        GradedArtinAlgebra::new(vec![], 0, vec![]).unwrap()
    }

    pub fn vars(&self) -> &[Variable] {
        &self.vars
    }

    /// True for the variable-free algebra (plain scalars).
    pub fn is_trivial(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn relations(&self) -> &[Monomial] {
        &self.relations
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v.name == name)
    }

    /// Z-degree of a monomial: exponent-weighted sum of variable degrees.
    pub fn z_degree(&self, m: &Monomial) -> i64 {
        debug_assert_eq!(m.0.len(), self.vars.len());
        m.0.iter().zip(&self.vars).map(|(&e, v)| e as i64 * v.degree).sum()
    }

    /// Mod-2 parity of a monomial's Z-degree.
    pub fn parity(&self, m: &Monomial) -> bool {
        self.vars
            .iter()
            .zip(&m.0)
            .filter(|(v, _)| v.is_odd())
            .map(|(_, &e)| e)
            .sum::<u32>()
            % 2
            == 1
    }

    /// True when the monomial is killed by truncation, an odd square, or a
    /// declared relation.
    pub fn monomial_is_zero(&self, m: &Monomial) -> bool {
        debug_assert_eq!(m.0.len(), self.vars.len());
        if m.order() > self.truncation {
            return true;
        }
        if self.vars.iter().zip(&m.0).any(|(v, &e)| v.is_odd() && e >= 2) {
            return true;
        }
        self.relations.iter().any(|r| r.divides(m))
    }

    /// Koszul sign of multiplying sorted monomials `a * b`, as +1/-1, or
    /// `None` when the product vanishes because an odd variable squares.
    /// The sign counts transpositions needed to interleave the odd letters of
    /// `b` into those of `a`: each odd letter of `b` at variable j passes the
    /// odd letters of `a` at variables > j.
    pub fn mul_sign(&self, a: &Monomial, b: &Monomial) -> Option<i32> {
        let mut inversions: u64 = 0;
        for (j, vj) in self.vars.iter().enumerate() {
            if !vj.is_odd() || b.0[j] == 0 {
                continue;
            }
            if a.0[j] > 0 {
                return None;
            }
            let crossed: u64 = self
                .vars
                .iter()
                .enumerate()
                .skip(j + 1)
                .filter(|(_, vi)| vi.is_odd())
                .map(|(i, _)| a.0[i] as u64)
                .sum();
            inversions += b.0[j] as u64 * crossed;
        }
        Some(if inversions % 2 == 0 { 1 } else { -1 })
    }

    /// Product of two monomials: `None` if it vanishes in the algebra,
    /// otherwise the sorted product with its Koszul sign.
    pub fn mul_monomials(&self, a: &Monomial, b: &Monomial) -> Option<(Monomial, i32)> {
        let sign = self.mul_sign(a, b)?;
        let prod = Monomial(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect());
        if self.monomial_is_zero(&prod) {
            None
        } else {
            Some((prod, sign))
        }
    }

    /// All surviving monomials of the given total order, in canonical order.
    pub fn monomials_of_order(&self, order: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut current = vec![0u32; self.vars.len()];
        self.enumerate_rec(0, order, &mut current, &mut out);
        out.sort();
        out
    }

    fn enumerate_rec(&self, var: usize, remaining: u32, current: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if var == self.vars.len() {
            if remaining == 0 {
                let m = Monomial(current.clone());
                if !self.monomial_is_zero(&m) {
                    out.push(m);
                }
            }
            return;
        }
        let cap = if self.vars[var].is_odd() { remaining.min(1) } else { remaining };
        for e in 0..=cap {
            current[var] = e;
            self.enumerate_rec(var + 1, remaining - e, current, out);
        }
        current[var] = 0;
    }

    /// All surviving monomials, unit first, ordered by (order, lex).
    pub fn basis_monomials(&self) -> Vec<Monomial> {
        (0..=self.truncation).flat_map(|k| self.monomials_of_order(k)).collect()
    }

    /// Surviving monomials of order >= 1 (a basis of the maximal ideal).
    pub fn maximal_ideal_monomials(&self) -> Vec<Monomial> {
        (1..=self.truncation).flat_map(|k| self.monomials_of_order(k)).collect()
    }

    /// Surviving maximal-ideal monomials of the given Z-degree.
    pub fn ideal_monomials_of_z_degree(&self, degree: i64) -> Vec<Monomial> {
        self.maximal_ideal_monomials()
            .into_iter()
            .filter(|m| self.z_degree(m) == degree)
            .collect()
    }

    /// Smallest q with m^q = 0. The unit algebra has index 1.
    pub fn nilpotency_index(&self) -> u32 {
        for k in (1..=self.truncation).rev() {
            if !self.monomials_of_order(k).is_empty() {
                return k + 1;
            }
        }
        1
    }

    /// Render a monomial in the `t1^2*th1` form; the unit renders as `1`.
    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_unit() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (v, &e) in self.vars.iter().zip(&m.0) {
            match e {
                0 => {}
                1 => parts.push(v.name.clone()),
                _ => parts.push(format!("{}^{}", v.name, e)),
            }
        }
        parts.join("*")
    }
}

impl fmt::Display for GradedArtinAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars: Vec<String> =
            self.vars.iter().map(|v| format!("{}:{}", v.name, v.degree)).collect();
        write!(f, "algebra[{}; trunc {}]", vars.join(", "), self.truncation)
    }
}
