//! Dense exact Gaussian elimination over the scalar field.
//!
//! Everything downstream (kernel bases, cohomology, local-ring solves after
//! monomial expansion) reduces to these routines. Pivoting is deterministic:
//! columns are scanned left to right, the first row with a nonzero entry
//! wins, so identical inputs always produce identical echelon data.

use exact_core::ExactScalar;

pub type Row = Vec<ExactScalar>;

/// Reduced row echelon form in place; returns the pivot columns in order.
pub fn rref(rows: &mut Vec<Row>) -> Vec<usize> {
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut next_row = 0usize;
    for col in 0..ncols {
        let Some(pivot_row) = (next_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next_row, pivot_row);
        let inv = rows[next_row][col].inv().expect("nonzero pivot");
        for c in col..ncols {
            rows[next_row][c] = &rows[next_row][c] * &inv;
        }
        for r in 0..rows.len() {
            if r != next_row && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..ncols {
                    let delta = &factor * &rows[next_row][c];
                    rows[r][c] = &rows[r][c] - &delta;
                }
            }
        }
        pivots.push(col);
        next_row += 1;
        if next_row == rows.len() {
            break;
        }
    }
    rows.retain(|r| r.iter().any(|c| !c.is_zero()));
    pivots
}

/// Rank of the matrix given as rows.
pub fn rank(rows: &[Row]) -> usize {
    let mut copy: Vec<Row> = rows.to_vec();
    rref(&mut copy).len()
}

/// Solve `A x = b` where `a` holds the rows of A. Returns the particular
/// solution with every free variable zero, or `None` when inconsistent.
pub fn solve(a: &[Row], b: &[ExactScalar]) -> Option<Vec<ExactScalar>> {
    assert_eq!(a.len(), b.len(), "row/rhs mismatch");
    let ncols = a.first().map(|r| r.len()).unwrap_or(0);
    let mut aug: Vec<Row> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last().is_some_and(|&c| c == ncols) {
        return None;
    }
    let mut x = vec![ExactScalar::zero(); ncols];
    for (row, &col) in aug.iter().zip(&pivots) {
        x[col] = row[ncols].clone();
    }
    Some(x)
}

/// Basis of the kernel of A (rows), one vector per free column, in column
/// order. Deterministic given the matrix. `ncols` must be passed explicitly
/// so a system with no equations still knows its ambient dimension.
pub fn kernel_basis(a: &[Row], ncols: usize) -> Vec<Vec<ExactScalar>> {
    debug_assert!(a.iter().all(|r| r.len() == ncols));
    let mut rows: Vec<Row> = a.to_vec();
    let pivots = rref(&mut rows);
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![ExactScalar::zero(); ncols];
        v[free] = ExactScalar::one();
        for (row, &pc) in rows.iter().zip(&pivots) {
            if !row[free].is_zero() {
                v[pc] = -&row[free];
            }
        }
        basis.push(v);
    }
    basis
}

/// A growing echelon collection supporting reduction with coefficient
/// tracking against tagged rows. Used to build cohomology projections.
#[derive(Clone, Debug)]
pub struct TaggedEchelon {
    /// (pivot column, normalized row, optional tag index)
    rows: Vec<(usize, Row, Option<usize>)>,
    ncols: usize,
}

impl TaggedEchelon {
    pub fn new(ncols: usize) -> Self {
        TaggedEchelon { rows: Vec::new(), ncols }
    }

    /// Reduce `v` against the collection. Returns the remainder and the
    /// coefficient used on each tagged row, indexed by tag.
    pub fn reduce(&self, v: &[ExactScalar], num_tags: usize) -> (Row, Vec<ExactScalar>) {
        assert_eq!(v.len(), self.ncols);
        let mut rem: Row = v.to_vec();
        let mut coeffs = vec![ExactScalar::zero(); num_tags];
        for (pivot, row, tag) in &self.rows {
            if rem[*pivot].is_zero() {
                continue;
            }
            let factor = rem[*pivot].clone();
            for c in 0..self.ncols {
                let delta = &factor * &row[c];
                rem[c] = &rem[c] - &delta;
            }
            // Tags beyond the caller's range are reduced against but not
            // recorded (callers pass 0 when only the remainder matters).
            if let Some(t) = tag {
                if *t < num_tags {
                    coeffs[*t] = &coeffs[*t] + &factor;
                }
            }
        }
        (rem, coeffs)
    }

    /// Insert a vector if independent. The stored row is normalized to unit
    /// pivot; returns false if `v` reduced to zero.
    pub fn insert(&mut self, v: &[ExactScalar], tag: Option<usize>) -> bool {
        let (rem, _) = self.reduce(v, 0);
        let Some(pivot) = rem.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = rem[pivot].inv().expect("nonzero pivot");
        let row: Row = rem.iter().map(|c| c * &inv).collect();
        self.rows.push((pivot, row, tag));
        true
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> ExactScalar {
        ExactScalar::from_int(n)
    }

    #[test]
    fn solve_prefers_zero_free_variables() {
        // x + y = 2 with free y: the returned solution is (2, 0).
        let a = vec![vec![s(1), s(1)]];
        let b = vec![s(2)];
        assert_eq!(solve(&a, &b).unwrap(), vec![s(2), s(0)]);
    }

    #[test]
    fn solve_detects_inconsistency() {
        let a = vec![vec![s(1), s(1)], vec![s(2), s(2)]];
        let b = vec![s(1), s(3)];
        assert!(solve(&a, &b).is_none());
    }

    #[test]
    fn kernel_dimension_matches_rank_nullity() {
        let a = vec![vec![s(1), s(2), s(3)], vec![s(2), s(4), s(6)]];
        assert_eq!(rank(&a), 1);
        let k = kernel_basis(&a, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            for row in &a {
                let dot = row
                    .iter()
                    .zip(v)
                    .fold(ExactScalar::zero(), |acc, (r, x)| acc + (r * x));
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn tagged_echelon_tracks_coefficients() {
        let mut ech = TaggedEchelon::new(2);
        ech.insert(&[s(1), s(0)], Some(0));
        ech.insert(&[s(0), s(1)], Some(1));
        let (rem, coeffs) = ech.reduce(&[s(3), s(-2)], 2);
        assert!(rem.iter().all(|c| c.is_zero()));
        assert_eq!(coeffs, vec![s(3), s(-2)]);
    }
}
