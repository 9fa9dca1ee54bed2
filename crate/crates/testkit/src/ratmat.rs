//! Dense matrices over the exact scalars, used as an independent oracle.
//!
//! For nilpotent N the series exp(N) = Σ N^k/k! and log(I + N) = Σ (-1)^{k-1} N^k/k
//! terminate, so log(exp(A)·exp(B)) is computable exactly and serves as a
//! reference value for the abstract Baker-Campbell-Hausdorff product.

use exact_core::ExactScalar;

/// Dense square matrix with exact scalar entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMat {
    n: usize,
    entries: Vec<ExactScalar>,
}

impl RatMat {
    /// The n-by-n zero matrix.
    pub fn zero(n: usize) -> Self {
        RatMat { n, entries: vec![ExactScalar::zero(); n * n] }
    }

    /// The n-by-n identity matrix.
    pub fn identity(n: usize) -> Self {
        let mut m = RatMat::zero(n);
        for i in 0..n {
            *m.at_mut(i, i) = ExactScalar::one();
        }
        m
    }

    /// Builds a matrix from rows; all rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<ExactScalar>>) -> Self {
        let n = rows.len();
        debug_assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        RatMat { n, entries: rows.into_iter().flatten().collect() }
    }

    /// Side length.
    pub fn size(&self) -> usize {
        self.n
    }

    /// Entry at (row, col).
    pub fn at(&self, i: usize, j: usize) -> &ExactScalar {
        &self.entries[i * self.n + j]
    }

    /// Mutable entry at (row, col).
    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut ExactScalar {
        &mut self.entries[i * self.n + j]
    }

    /// True if every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// True if every entry on or below the diagonal is zero.
    pub fn is_strictly_upper(&self) -> bool {
        (0..self.n).all(|i| (0..=i).all(|j| self.at(i, j).is_zero()))
    }

    /// Entrywise sum.
    pub fn add(&self, other: &RatMat) -> RatMat {
        debug_assert_eq!(self.n, other.n);
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        RatMat { n: self.n, entries }
    }

    /// Entrywise difference.
    pub fn sub(&self, other: &RatMat) -> RatMat {
        debug_assert_eq!(self.n, other.n);
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        RatMat { n: self.n, entries }
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &ExactScalar) -> RatMat {
        let entries = self.entries.iter().map(|e| e.clone() * c.clone()).collect();
        RatMat { n: self.n, entries }
    }

    /// Matrix product.
    pub fn mul(&self, other: &RatMat) -> RatMat {
        debug_assert_eq!(self.n, other.n);
        let mut out = RatMat::zero(self.n);
        for i in 0..self.n {
            for k in 0..self.n {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..self.n {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    *out.at_mut(i, j) += &(a.clone() * b.clone());
                }
            }
        }
        out
    }

    /// Commutator AB - BA.
    pub fn commutator(&self, other: &RatMat) -> RatMat {
        self.mul(other).sub(&other.mul(self))
    }

    /// exp(A) = Σ_{k < n} A^k / k! for nilpotent A (A^n = 0 is assumed, true
    /// for strictly upper triangular A).
    pub fn nilpotent_exp(&self) -> RatMat {
        let mut sum = RatMat::identity(self.n);
        let mut power = RatMat::identity(self.n);
        let mut factorial: i64 = 1;
        for k in 1..self.n as i64 {
            factorial *= k;
            power = power.mul(self);
            if power.is_zero() {
                break;
            }
            sum = sum.add(&power.scale(&ExactScalar::from_ratio(1, factorial)));
        }
        sum
    }

    /// log(A) = Σ_{k < n} (-1)^{k-1} N^k / k with N = A - I nilpotent.
    pub fn nilpotent_log(&self) -> RatMat {
        let nilpotent = self.sub(&RatMat::identity(self.n));
        let mut sum = RatMat::zero(self.n);
        let mut power = RatMat::identity(self.n);
        for k in 1..self.n as i64 {
            power = power.mul(&nilpotent);
            if power.is_zero() {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            sum = sum.add(&power.scale(&ExactScalar::from_ratio(sign, k)));
        }
        sum
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> ExactScalar {
        ExactScalar::from_int(v)
    }

    fn elementary(n: usize, i: usize, j: usize) -> RatMat {
        let mut m = RatMat::zero(n);
        *m.at_mut(i, j) = ExactScalar::one();
        m
    }

    #[test]
    fn exp_of_single_jordan_cell_matches_hand_value() {
        // exp of the 3x3 shift N has 1/2 in the corner: I + N + N^2/2.
        let shift = elementary(3, 0, 1).add(&elementary(3, 1, 2));
        let e = shift.nilpotent_exp();
        assert_eq!(*e.at(0, 1), int(1));
        assert_eq!(*e.at(1, 2), int(1));
        assert_eq!(*e.at(0, 2), ExactScalar::from_ratio(1, 2));
        assert_eq!(*e.at(0, 0), int(1));
    }

    #[test]
    fn log_inverts_exp_on_strictly_upper_matrices() {
        let mut a = RatMat::zero(4);
        *a.at_mut(0, 1) = int(2);
        *a.at_mut(0, 3) = ExactScalar::from_ratio(5, 3);
        *a.at_mut(1, 2) = int(-1);
        *a.at_mut(2, 3) = int(7);
        *a.at_mut(0, 2) = int(3);
        let roundtrip = a.nilpotent_exp().nilpotent_log();
        assert_eq!(roundtrip, a);
    }

    #[test]
    fn commutator_of_commuting_matrices_is_zero() {
        let a = elementary(3, 0, 1);
        let b = elementary(3, 0, 2);
        assert!(a.commutator(&b).is_zero());
    }

    #[test]
    fn strictly_upper_check_sees_diagonal_and_below() {
        let mut a = RatMat::zero(3);
        *a.at_mut(0, 2) = int(4);
        assert!(a.is_strictly_upper());
        *a.at_mut(1, 1) = int(1);
        assert!(!a.is_strictly_upper());
    }
}
