//! Matrices of exact polynomials: products with truncation and inversion by
//! geometric series around an invertible constant head.

use crate::poly::MPoly;
use exact_core::ExactScalar;
use graded_linalg::field;

pub(crate) type PolyMat = Vec<Vec<MPoly>>;

pub(crate) fn identity(size: usize, vars: usize) -> PolyMat {
    (0..size)
        .map(|r| {
            (0..size)
                .map(|c| if r == c { MPoly::one(vars) } else { MPoly::zero(vars) })
                .collect()
        })
        .collect()
}

pub(crate) fn from_scalars(m: &[Vec<ExactScalar>], vars: usize) -> PolyMat {
    m.iter()
        .map(|row| row.iter().map(|c| MPoly::constant(vars, c.clone())).collect())
        .collect()
}

pub(crate) fn add(a: &PolyMat, b: &PolyMat) -> PolyMat {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x.add(y)).collect())
        .collect()
}

pub(crate) fn sub(a: &PolyMat, b: &PolyMat) -> PolyMat {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x.sub(y)).collect())
        .collect()
}

pub(crate) fn neg(a: &PolyMat) -> PolyMat {
    a.iter()
        .map(|row| row.iter().map(MPoly::neg).collect())
        .collect()
}

pub(crate) fn scale(a: &PolyMat, c: &ExactScalar) -> PolyMat {
    a.iter()
        .map(|row| row.iter().map(|x| x.scale(c)).collect())
        .collect()
}

/// Product truncated at total degree `max` in variables `lo..`.
pub(crate) fn mul(a: &PolyMat, b: &PolyMat, lo: usize, max: u32) -> PolyMat {
    let rows = a.len();
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    let vars = a
        .first()
        .and_then(|r| r.first())
        .map_or(0, MPoly::vars);
    (0..rows)
        .map(|r| {
            (0..cols)
                .map(|c| {
                    let mut acc = MPoly::zero(vars);
                    for k in 0..inner {
                        acc = acc.add(&a[r][k].mul(&b[k][c]));
                    }
                    acc.truncate_from(lo, max)
                })
                .collect()
        })
        .collect()
}

pub(crate) fn is_zero(a: &PolyMat) -> bool {
    a.iter().all(|row| row.iter().all(MPoly::is_zero))
}

/// The degree-zero part in variables `lo..`, provided every entry's part is
/// a constant; `None` when some entry keeps coordinate dependence there.
pub(crate) fn constant_head(m: &PolyMat, lo: usize) -> Option<Vec<Vec<ExactScalar>>> {
    let vars = m.first().and_then(|r| r.first()).map_or(0, MPoly::vars);
    let mut out = Vec::with_capacity(m.len());
    for row in m {
        let mut orow = Vec::with_capacity(row.len());
        for entry in row {
            let head = entry.part_with_degree_from(lo, 0);
            let c = head.constant_term();
            if head != MPoly::constant(vars, c.clone()) {
                return None;
            }
            orow.push(c);
        }
        out.push(orow);
    }
    Some(out)
}

/// Exact inverse of a square scalar matrix, or `None` when singular.
pub(crate) fn invert_scalar(h: &[Vec<ExactScalar>]) -> Option<Vec<Vec<ExactScalar>>> {
    let size = h.len();
    if field::rank(h) != size {
        return None;
    }
    let mut cols = Vec::with_capacity(size);
    for k in 0..size {
        let mut e = vec![ExactScalar::zero(); size];
        e[k] = ExactScalar::one();
        cols.push(field::solve(h, &e)?);
    }
    // transpose the solution columns into rows
    Some(
        (0..size)
            .map(|r| (0..size).map(|c| cols[c][r].clone()).collect())
            .collect(),
    )
}

/// Inverse of `m` modulo the truncated ideal of variables `lo..`: the head
/// must be an invertible constant matrix, the tail is handled by the finite
/// geometric series. `None` when the head fails either condition.
pub(crate) fn neumann_inverse(m: &PolyMat, lo: usize, max: u32) -> Option<PolyMat> {
    let vars = m.first().and_then(|r| r.first()).map_or(0, MPoly::vars);
    let head = constant_head(m, lo)?;
    let head_inv = invert_scalar(&head)?;
    let head_inv_poly = from_scalars(&head_inv, vars);
    let tail = sub(m, &from_scalars(&head, vars));
    let k = neg(&mul(&head_inv_poly, &tail, lo, max));
    let size = m.len();
    let mut acc = identity(size, vars);
    let mut power = identity(size, vars);
    for _ in 1..=max {
        power = mul(&power, &k, lo, max);
        if is_zero(&power) {
            break;
        }
        acc = add(&acc, &power);
    }
    Some(mul(&acc, &head_inv_poly, lo, max))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> ExactScalar {
        ExactScalar::from_int(v)
    }

    #[test]
    fn scalar_inverse_round_trip() {
        let h = vec![vec![s(2), s(1)], vec![s(1), s(1)]];
        let hi = invert_scalar(&h).unwrap();
        assert_eq!(hi[0][0], s(1));
        assert_eq!(hi[0][1], s(-1));
        assert_eq!(hi[1][0], s(-1));
        assert_eq!(hi[1][1], s(2));
        assert!(invert_scalar(&[vec![s(1), s(2)], vec![s(2), s(4)]]).is_none());
    }

    #[test]
    fn neumann_inverts_unipotent_family() {
        // layout (t): M = [[1, t],[0, 1]] + t^2 corner
        let t = MPoly::var(1, 0);
        let m = vec![
            vec![MPoly::one(1), t.clone()],
            vec![t.mul(&t), MPoly::one(1)],
        ];
        let inv = neumann_inverse(&m, 0, 6).unwrap();
        let prod = mul(&m, &inv, 0, 6);
        assert_eq!(prod, identity(2, 1));
    }

    #[test]
    fn neumann_rejects_coordinate_dependent_head() {
        // layout (x, t): head entry x is not constant
        let m = vec![
            vec![MPoly::one(2), MPoly::var(2, 0)],
            vec![MPoly::zero(2), MPoly::one(2)],
        ];
        assert!(neumann_inverse(&m, 1, 4).is_none());
        // but a head that is constant with t-tail inverts fine
        let m2 = vec![
            vec![MPoly::one(2), MPoly::var(2, 0).mul(&MPoly::var(2, 1))],
            vec![MPoly::zero(2), MPoly::one(2)],
        ];
        let inv = neumann_inverse(&m2, 1, 4).unwrap();
        assert_eq!(mul(&m2, &inv, 1, 4), identity(2, 2));
    }
}
