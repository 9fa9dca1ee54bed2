//! Extended-moduli dimension bookkeeping from Hodge numbers.
//!
//! The extended tangent space of a compact complex n-fold collects every
//! H^q(∧^p T^{1,0}) rather than only the classical p = 1 column. With a
//! holomorphic volume form, contraction identifies H^q(∧^p T^{1,0}) with the
//! Dolbeault group of type (n-p, q), so the whole table of dimensions is read
//! off the Hodge numbers as h^{n-p,q}. Summands are graded by q - p: the raw
//! grading q - p + 1 shifted down by one so the classical direction p = 1,
//! q = 1 sits in degree 0.

use std::collections::BTreeMap;

use crate::error::McError;

/// A complete table of Hodge numbers h^{p,q} for 0 <= p, q <= n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeTable {
    n: u32,
    values: BTreeMap<(u32, u32), u64>,
}

impl HodgeTable {
    /// Builds a table from (p, q, value) entries. Every pair in the square
    /// [0, n] x [0, n] must appear exactly once.
    pub fn new(n: u32, entries: &[(u32, u32, u64)]) -> Result<Self, McError> {
        let mut values = BTreeMap::new();
        for &(p, q, value) in entries {
            if p > n || q > n {
                return Err(McError::BadHodgeTable {
                    detail: format!("entry ({p}, {q}) is outside the square [0, {n}]^2"),
                });
            }
            if values.insert((p, q), value).is_some() {
                return Err(McError::BadHodgeTable {
                    detail: format!("entry ({p}, {q}) appears more than once"),
                });
            }
        }
        for p in 0..=n {
            for q in 0..=n {
                if !values.contains_key(&(p, q)) {
                    return Err(McError::BadHodgeTable {
                        detail: format!("entry ({p}, {q}) is missing"),
                    });
                }
            }
        }
        Ok(HodgeTable { n, values })
    }

    /// The complex dimension n.
    pub fn dimension(&self) -> u32 {
        self.n
    }

    /// The Hodge number h^{p,q}.
    pub fn value(&self, p: u32, q: u32) -> u64 {
        self.values[&(p, q)]
    }
}

/// Graded dimensions of the extended moduli directions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedModuliDims {
    /// Nonzero dimensions keyed by shifted degree, ascending.
    pub by_degree: Vec<(i64, u64)>,
    /// Total dimension over all degrees.
    pub total: u64,
    /// The grading convention, recorded so downstream output is unambiguous.
    pub shift_note: &'static str,
}

/// Computes the graded dimensions of ⊕_{p,q} H^q(∧^p T^{1,0}) from a Hodge
/// table via dim H^q(∧^p T^{1,0}) = h^{n-p,q}, graded by q - p.
pub fn extended_moduli_dims(h: &HodgeTable) -> ExtendedModuliDims {
    let n = h.dimension();
    let mut by_degree: BTreeMap<i64, u64> = BTreeMap::new();
    let mut total = 0u64;
    for p in 0..=n {
        for q in 0..=n {
            let dim = h.value(n - p, q);
            if dim == 0 {
                continue;
            }
            let degree = q as i64 - p as i64;
            *by_degree.entry(degree).or_insert(0) += dim;
            total += dim;
        }
    }
    ExtendedModuliDims {
        by_degree: by_degree.into_iter().collect(),
        total,
        shift_note: "degree is q - p: the raw grading q - p + 1 shifted down by one",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn full_table(n: u32, value_at: impl Fn(u32, u32) -> u64) -> HodgeTable {
        let mut entries = Vec::new();
        for p in 0..=n {
            for q in 0..=n {
                entries.push((p, q, value_at(p, q)));
            }
        }
        HodgeTable::new(n, &entries).unwrap()
    }

    #[test]
    fn elliptic_curve_table_totals_four() {
        let dims = extended_moduli_dims(&full_table(1, |_, _| 1));
        assert_eq!(dims.total, 4);
        assert_eq!(dims.by_degree, vec![(-1, 1), (0, 2), (1, 1)]);
    }

    #[test]
    fn all_zero_table_totals_zero() {
        let dims = extended_moduli_dims(&full_table(3, |_, _| 0));
        assert_eq!(dims.total, 0);
        assert!(dims.by_degree.is_empty());
    }

    #[test]
    fn three_fold_table_with_two_large_middle_groups() {
        // Diagonal and corner entries 1, h^{1,2} = h^{2,1} = 101, rest 0.
        // The duality rule h^{n-p,q} rearranges the table without dropping
        // any entry, so the total is the plain sum 4 + 2 + 2*101 = 208.
        let table = full_table(3, |p, q| match (p, q) {
            (0, 0) | (3, 3) | (3, 0) | (0, 3) | (1, 1) | (2, 2) => 1,
            (1, 2) | (2, 1) => 101,
            _ => 0,
        });
        let dims = extended_moduli_dims(&table);
        assert_eq!(dims.total, 208);
        assert_eq!(
            dims.by_degree,
            vec![(-3, 1), (-1, 1), (0, 204), (1, 1), (3, 1)]
        );
    }

    #[test]
    fn incomplete_table_is_rejected() {
        let mut entries = Vec::new();
        for p in 0..=1u32 {
            entries.push((p, 0, 1));
        }
        let err = HodgeTable::new(1, &entries);
        assert!(matches!(err, Err(McError::BadHodgeTable { .. })));
    }

    #[test]
    fn duplicate_and_out_of_range_entries_are_rejected() {
        let dup = HodgeTable::new(1, &[(0, 0, 1), (0, 0, 2), (0, 1, 1), (1, 0, 1), (1, 1, 1)]);
        assert!(matches!(dup, Err(McError::BadHodgeTable { .. })));
        let range = HodgeTable::new(1, &[(0, 0, 1), (0, 1, 1), (1, 0, 1), (2, 1, 1)]);
        assert!(matches!(range, Err(McError::BadHodgeTable { .. })));
    }
}
