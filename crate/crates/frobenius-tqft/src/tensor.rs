//! Structure tensors A_ij^k with entries in a truncated coefficient algebra.
//!
//! The tensor records a coordinate-dependent multiplication t_i * t_j =
//! sum_k A_ij^k t_k on a basis, with each entry a series over the working
//! Artin algebra. Coefficients act from the left of basis vectors; all
//! graded bookkeeping follows that convention.

use crate::error::FrobError;
use exact_core::{AlgebraRef, ExactScalar, SeriesElement};

/// A (1,2)-tensor over a coefficient algebra, flattened as (i*n + j)*n + k.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureTensor {
    n: usize,
    algebra: AlgebraRef,
    entries: Vec<SeriesElement>,
}

impl StructureTensor {
    /// Build from n^3 entries in row-major (i, j, k) order.
    pub fn new(
        n: usize,
        algebra: AlgebraRef,
        entries: Vec<SeriesElement>,
    ) -> Result<Self, FrobError> {
        if entries.len() != n * n * n {
            return Err(FrobError::Shape {
                detail: format!("expected {} tensor entries, got {}", n * n * n, entries.len()),
            });
        }
        for e in &entries {
            if e.algebra().as_ref() != algebra.as_ref() {
                return Err(FrobError::AlgebraMismatch {
                    detail: "tensor entry owned by a foreign algebra".into(),
                });
            }
        }
        Ok(StructureTensor { n, algebra, entries })
    }

    /// Build a coordinate-independent tensor from scalar structure constants.
    pub fn from_constants(
        n: usize,
        algebra: AlgebraRef,
        constants: Vec<ExactScalar>,
    ) -> Result<Self, FrobError> {
        let entries = constants
            .into_iter()
            .map(|c| SeriesElement::from_scalar(&algebra, c))
            .collect();
        StructureTensor::new(n, algebra, entries)
    }

    /// Basis dimension.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The coefficient algebra entries live over.
    pub fn algebra(&self) -> &AlgebraRef {
        &self.algebra
    }

    /// The entry A_ij^k.
    pub fn entry(&self, i: usize, j: usize, k: usize) -> &SeriesElement {
        debug_assert!(i < self.n && j < self.n && k < self.n);
        &self.entries[(i * self.n + j) * self.n + k]
    }

    /// All entries in flattened order.
    pub fn entries(&self) -> &[SeriesElement] {
        &self.entries
    }

    /// The scalar structure constants at the origin, flattened like entries.
    pub fn constants(&self) -> Vec<ExactScalar> {
        self.entries.iter().map(|e| e.constant_term()).collect()
    }
}
