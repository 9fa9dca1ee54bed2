//! Deformation-functor evaluation for abelian inputs.
//!
//! When the bracket of L vanishes, the Maurer-Cartan equation on L tensor m_A
//! reduces to d(x) = 0 and the gauge action of a degree-0 element a reduces
//! to the shift x -> x - d(a). The functor value is then the linear quotient
//! (closed degree-1 part) / d(degree-0 part). The differential acts with
//! constant coefficients, so the quotient splits per ideal monomial mu as the
//! direct sum over mu of H^(1 + z(mu))(L), where z(mu) is the Z-degree of the
//! monomial: a degree-1 tensor x (x) mu needs deg(x) - z(mu) = 1.

use std::sync::Arc;

use dgla_core::{tensor_artin, Dgla, DglaOverArtin};
use exact_core::{AlgebraRef, Monomial, SeriesElement};

use crate::error::McError;

/// One basis element of the functor value: a cohomology class of the base
/// carried by one ideal monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctorBasisEntry {
    /// Cohomology degree of the base factor; always 1 + z(monomial).
    pub degree: i64,
    /// Index into the echelon basis of H^degree of the base.
    pub class_index: usize,
    /// The ideal monomial carrying the class.
    pub monomial: Monomial,
}

/// Explicit basis of the functor value for an abelian base, with materialized
/// degree-1 representatives in the tensor DGLA.
#[derive(Clone, Debug)]
pub struct FunctorBasis {
    ambient: DglaOverArtin,
    entries: Vec<FunctorBasisEntry>,
    representatives: Vec<Vec<SeriesElement>>,
}

impl FunctorBasis {
    /// Dimension of the functor value over the base field.
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// The basis entries, ordered by monomial (total order, then lex) and
    /// class index within each monomial.
    pub fn entries(&self) -> &[FunctorBasisEntry] {
        &self.entries
    }

    /// The tensor DGLA the representatives live in.
    pub fn ambient(&self) -> &DglaOverArtin {
        &self.ambient
    }

    /// The materialized representative of the k-th basis entry: a closed
    /// degree-1 element of the maximal-ideal part.
    pub fn representative(&self, k: usize) -> &[SeriesElement] {
        &self.representatives[k]
    }
}

/// Evaluates the deformation functor of an abelian DGLA on an Artin algebra,
/// returning an explicit basis. Rejects inputs with any nonzero bracket.
pub fn abelian_functor_eval(
    base: Arc<Dgla>,
    algebra: AlgebraRef,
) -> Result<FunctorBasis, McError> {
    for (&(i, j), entries) in base.stored_brackets() {
        if !entries.is_empty() {
            return Err(McError::NotAbelian {
                detail: format!(
                    "bracket [{}, {}] is nonzero",
                    base.space().name(i),
                    base.space().name(j)
                ),
            });
        }
    }

    let ambient = tensor_artin(base.clone(), algebra.clone());
    let mut entries = Vec::new();
    let mut representatives = Vec::new();
    for m in algebra.maximal_ideal_monomials() {
        let degree = 1 + algebra.z_degree(&m);
        let h = base.complex().cohomology(degree);
        for (class_index, rep) in h.representatives().iter().enumerate() {
            let mut element = ambient.zero();
            for (i, c) in rep.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let term = ambient.tensor_element(i, m.clone(), c.clone());
                element = ambient.add(&element, &term);
            }
            debug_assert!(
                ambient.is_zero(&ambient.mc_residual(&element)),
                "closed representatives of an abelian DGLA solve Maurer-Cartan"
            );
            entries.push(FunctorBasisEntry { degree, class_index, monomial: m.clone() });
            representatives.push(element);
        }
    }
    Ok(FunctorBasis { ambient, entries, representatives })
}
