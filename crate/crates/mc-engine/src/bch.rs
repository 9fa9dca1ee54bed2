//! Baker-Campbell-Hausdorff products in nilpotent Lie contexts.
//!
//! The product is the Dynkin series log(exp a · exp b) = Σ_n (-1)^(n-1)/n ·
//! Σ 1/(Σ(r_i+s_i) · Π r_i! s_i!) · [a^(r_1) b^(s_1) ... a^(r_n) b^(s_n)],
//! where the word denotes its right-nested bracketing. Nilpotency makes the
//! sum finite and is verified, not assumed: right-nested words span every
//! bracket of a given weight, so checking the 2^W words of weight W certifies
//! that all brackets of weight >= W vanish.

use exact_core::{ExactScalar, SeriesElement};

use crate::error::McError;
use dgla_core::DglaOverArtin;

/// A Lie context the Dynkin series can run in. `bracket` must be bilinear
/// and alternating; `nilpotency_weight` W promises that every bracket word
/// with at least W letters vanishes, which `bch_product` verifies.
pub trait BchAmbient {
    type Elt: Clone;
    fn zero(&self) -> Self::Elt;
    fn add(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt;
    fn scale(&self, c: &ExactScalar, a: &Self::Elt) -> Self::Elt;
    fn bracket(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt;
    fn is_zero(&self, a: &Self::Elt) -> bool;
    fn nilpotency_weight(&self) -> u32;
}

/// Right-nested bracket of a word over letters a (false) and b (true).
fn nested_word<A: BchAmbient>(amb: &A, a: &A::Elt, b: &A::Elt, word: &[bool]) -> A::Elt {
    let pick = |letter: bool| if letter { b.clone() } else { a.clone() };
    let mut value = pick(*word.last().expect("nonempty word"));
    for &letter in word[..word.len() - 1].iter().rev() {
        value = amb.bracket(&pick(letter), &value);
    }
    value
}

fn word_name(word: &[bool]) -> String {
    let letter = |&l: &bool| if l { "b" } else { "a" };
    if word.len() == 1 {
        return letter(&word[0]).to_string();
    }
    let mut out = String::new();
    for l in &word[..word.len() - 1] {
        out.push('[');
        out.push_str(letter(l));
        out.push(',');
    }
    out.push_str(letter(&word[word.len() - 1]));
    out.push_str(&"]".repeat(word.len() - 1));
    out
}

/// Certifies the promised nilpotency weight by evaluating all 2^W
/// right-nested weight-W words; any nonzero one is returned as a witness.
fn verify_nilpotency<A: BchAmbient>(amb: &A, a: &A::Elt, b: &A::Elt) -> Result<(), McError> {
    let w = amb.nilpotency_weight() as usize;
    for mask in 0u64..(1u64 << w) {
        let word: Vec<bool> = (0..w).map(|i| mask >> i & 1 == 1).collect();
        let value = nested_word(amb, a, b, &word);
        if !amb.is_zero(&value) {
            return Err(McError::NonNilpotent { witness: word_name(&word) });
        }
    }
    Ok(())
}

/// All block sequences ((r_1,s_1),...,(r_n,s_n)) with r_i + s_i >= 1 and
/// total letter count exactly `weight`.
fn compositions(weight: u32) -> Vec<Vec<(u32, u32)>> {
    let mut out = Vec::new();
    let mut stack: Vec<(u32, u32)> = Vec::new();
    fn rec(remaining: u32, stack: &mut Vec<(u32, u32)>, out: &mut Vec<Vec<(u32, u32)>>) {
        if remaining == 0 {
            out.push(stack.clone());
            return;
        }
        for block in 1..=remaining {
            for r in 0..=block {
                stack.push((r, block - r));
                rec(remaining - block, stack, out);
                stack.pop();
            }
        }
    }
    rec(weight, &mut stack, &mut out);
    out
}

fn factorial(n: u32) -> i64 {
    (1..=n as i64).product::<i64>().max(1)
}

/// The BCH product a • b with exp(a • b) = exp(a)·exp(b), summed through
/// weight W-1 after certifying that weight-W brackets vanish.
pub fn bch_product<A: BchAmbient>(amb: &A, a: &A::Elt, b: &A::Elt) -> Result<A::Elt, McError> {
    verify_nilpotency(amb, a, b)?;
    let mut out = amb.zero();
    for weight in 1..amb.nilpotency_weight() {
        for blocks in compositions(weight) {
            let n = blocks.len() as i64;
            let mut word = Vec::with_capacity(weight as usize);
            for &(r, s) in &blocks {
                word.extend(std::iter::repeat(false).take(r as usize));
                word.extend(std::iter::repeat(true).take(s as usize));
            }
            // The innermost bracket repeats a letter: the term vanishes.
            if word.len() >= 2 && word[word.len() - 1] == word[word.len() - 2] {
                continue;
            }
            let mut denom = n * weight as i64;
            for &(r, s) in &blocks {
                denom *= factorial(r) * factorial(s);
            }
            let sign = if n % 2 == 1 { 1 } else { -1 };
            let coeff = ExactScalar::from_ratio(sign, denom);
            let value = nested_word(amb, a, b, &word);
            out = amb.add(&out, &amb.scale(&coeff, &value));
        }
    }
    Ok(out)
}

/// The degree-0 part of a tensor DGLA as a BCH context: nilpotency weight is
/// the coefficient algebra's nilpotency index.
pub struct DegreeZeroBch<'a>(pub &'a DglaOverArtin);

impl BchAmbient for DegreeZeroBch<'_> {
    type Elt = Vec<SeriesElement>;

    fn zero(&self) -> Self::Elt {
        self.0.zero()
    }

    fn add(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt {
        self.0.add(a, b)
    }

    fn scale(&self, c: &ExactScalar, a: &Self::Elt) -> Self::Elt {
        self.0.scale(c, a)
    }

    fn bracket(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt {
        self.0.bracket(a, b)
    }

    fn is_zero(&self, a: &Self::Elt) -> bool {
        self.0.is_zero(a)
    }

    fn nilpotency_weight(&self) -> u32 {
        self.0.algebra().nilpotency_index()
    }
}

/// BCH product of two degree-0 elements of a tensor DGLA. Both inputs must
/// be homogeneous of degree 0 with no constant term; nilpotency then holds
/// and is still verified.
pub fn bch_product_degree_zero(
    ambient: &DglaOverArtin,
    a: &[SeriesElement],
    b: &[SeriesElement],
) -> Result<Vec<SeriesElement>, McError> {
    for (name, v) in [("left", a), ("right", b)] {
        if !ambient.is_homogeneous(v, 0) {
            return Err(McError::Degree {
                detail: format!("{name} BCH factor must be homogeneous of degree 0"),
            });
        }
        if !ambient.in_maximal_ideal(v) {
            return Err(McError::NotInIdeal {
                detail: format!("{name} BCH factor must have no constant term"),
            });
        }
    }
    bch_product(&DegreeZeroBch(ambient), &a.to_vec(), &b.to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use dgla_core::{tensor_artin, Dgla};
    use exact_core::GradedArtinAlgebra;
    use graded_linalg::{BasisVector, GradedVectorSpace};
    use std::sync::Arc;

    fn heisenberg_over(trunc: u32) -> DglaOverArtin {
        let space = GradedVectorSpace::new(vec![
            BasisVector::new("e", 0),
            BasisVector::new("f", 0),
            BasisVector::new("c", 0),
        ])
        .unwrap();
        let l = Dgla::new(space, vec![], vec![(0, 1, vec![(2, ExactScalar::one())])]).unwrap();
        tensor_artin(
            Arc::new(l),
            Arc::new(GradedArtinAlgebra::power_series_one_var("t", trunc)),
        )
    }

    #[test]
    fn commuting_elements_multiply_additively() {
        let ambient = heisenberg_over(3);
        let t = SeriesElement::variable(ambient.algebra(), "t").unwrap();
        let zero = SeriesElement::zero(ambient.algebra());
        // e·t and c·t commute (c is central).
        let x = vec![t.clone(), zero.clone(), zero.clone()];
        let y = vec![zero.clone(), zero.clone(), t.clone()];
        let product = bch_product_degree_zero(&ambient, &x, &y).unwrap();
        assert_eq!(product, ambient.add(&x, &y));
    }

    #[test]
    fn heisenberg_product_gains_half_central_correction() {
        let ambient = heisenberg_over(3);
        let t = SeriesElement::variable(ambient.algebra(), "t").unwrap();
        let zero = SeriesElement::zero(ambient.algebra());
        let x = vec![t.clone(), zero.clone(), zero.clone()];
        let y = vec![zero.clone(), t.clone(), zero.clone()];
        let product = bch_product_degree_zero(&ambient, &x, &y).unwrap();
        let t2_half = t.mul(&t).scale(&ExactScalar::from_ratio(1, 2));
        assert_eq!(product, vec![t.clone(), t, t2_half]);
    }

    #[test]
    fn word_names_render_right_nested() {
        assert_eq!(word_name(&[false]), "a");
        assert_eq!(word_name(&[false, true, false]), "[a,[b,a]]");
    }

    #[test]
    fn degree_one_input_is_rejected() {
        let space = GradedVectorSpace::new(vec![
            BasisVector::new("x", 1),
            BasisVector::new("y", 2),
        ])
        .unwrap();
        let l = Dgla::new(space, vec![], vec![]).unwrap();
        let ambient = tensor_artin(
            Arc::new(l),
            Arc::new(GradedArtinAlgebra::power_series_one_var("t", 2)),
        );
        let t = SeriesElement::variable(ambient.algebra(), "t").unwrap();
        let zero = SeriesElement::zero(ambient.algebra());
        let x = vec![t, zero.clone()];
        let err = bch_product_degree_zero(&ambient, &x, &x);
        assert!(matches!(err, Err(McError::Degree { .. })));
    }

    #[test]
    fn constant_term_is_rejected() {
        let ambient = heisenberg_over(2);
        let one = SeriesElement::one(ambient.algebra());
        let zero = SeriesElement::zero(ambient.algebra());
        let x = vec![one, zero.clone(), zero.clone()];
        let err = bch_product_degree_zero(&ambient, &x, &ambient.zero());
        assert!(matches!(err, Err(McError::NotInIdeal { .. })));
    }

    #[test]
    fn composition_count_matches_direct_enumeration_for_small_weights() {
        // Weight 1: (1,0), (0,1). Weight 2: blocks summing to 2.
        assert_eq!(compositions(1).len(), 2);
        // One block of 2 (3 ways) plus two blocks of 1 (2x2 ways).
        assert_eq!(compositions(2).len(), 7);
    }
}
