//! Graded vector spaces with named basis vectors.

use crate::error::LinalgError;
use std::fmt;

/// A named basis vector with a Z-degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisVector {
    pub name: String,
    pub degree: i64,
}

impl BasisVector {
    pub fn new(name: impl Into<String>, degree: i64) -> Self {
        BasisVector { name: name.into(), degree }
    }
}

/// A finite-dimensional Z-graded vector space with a fixed ordered basis.
/// The basis order is load-bearing: echelon choices, representative picks,
/// and report output all follow it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedVectorSpace {
    basis: Vec<BasisVector>,
}

impl GradedVectorSpace {
    pub fn new(basis: Vec<BasisVector>) -> Result<Self, LinalgError> {
        for (i, b) in basis.iter().enumerate() {
            if b.name.is_empty() {
                return Err(LinalgError::BadBasis { detail: "empty basis name".into() });
            }
            if basis[..i].iter().any(|c| c.name == b.name) {
                return Err(LinalgError::BadBasis {
                    detail: format!("duplicate basis name {:?}", b.name),
                });
            }
        }
        Ok(GradedVectorSpace { basis })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisVector] {
        &self.basis
    }

    pub fn degree(&self, index: usize) -> i64 {
        self.basis[index].degree
    }

    pub fn name(&self, index: usize) -> &str {
        &self.basis[index].name
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.name == name)
    }

    /// Indices of basis vectors with the given degree, in basis order.
    pub fn indices_of_degree(&self, degree: i64) -> Vec<usize> {
        (0..self.basis.len()).filter(|&i| self.basis[i].degree == degree).collect()
    }

    pub fn dim_of_degree(&self, degree: i64) -> usize {
        self.indices_of_degree(degree).len()
    }

    /// All degrees present, sorted and deduplicated.
    pub fn degrees(&self) -> Vec<i64> {
        let mut d: Vec<i64> = self.basis.iter().map(|b| b.degree).collect();
        d.sort_unstable();
        d.dedup();
        d
    }
}

impl fmt::Display for GradedVectorSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.basis.iter().map(|b| format!("{}:{}", b.name, b.degree)).collect();
        write!(f, "space[{}]", parts.join(", "))
    }
}
