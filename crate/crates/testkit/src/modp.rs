//! Brute-force deformation counting over a prime field.
//!
//! For an abelian DGLA tensored with the maximal ideal of an Artin algebra,
//! the deformation set is {x in degree 1 : dx = 0} modulo the translation
//! action x ~ x - d(a). Counting its elements pointwise over F_p gives an
//! independent check of the dimension formula: the count must be p^dim.
//! Entirely self-contained modular arithmetic; shares no solver code with
//! the exact path it cross-checks.

use std::collections::HashSet;

use dgla_core::DglaOverArtin;
use exact_core::{ExactScalar, Monomial};
use graded_linalg::field;
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

/// Reduces an exact rational scalar mod p; None if the scalar has an
/// imaginary part or p divides a denominator.
fn scalar_mod_p(c: &ExactScalar, p: u64) -> Option<u64> {
    if !c.im().is_zero() {
        return None;
    }
    let pb = BigInt::from(p);
    let num = ((c.re().numer() % &pb) + &pb) % &pb;
    let den = ((c.re().denom() % &pb) + &pb) % &pb;
    let den = den.to_u64()?;
    if den == 0 {
        return None;
    }
    Some(mul_mod(num.to_u64()?, inv_mod(den, p), p))
}

/// In-place row reduction over F_p; returns pivot columns (rank = length).
fn rref_mod_p(rows: &mut Vec<Vec<u64>>, p: u64) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(pr) = (row..rows.len()).find(|&r| rows[r][col] % p != 0) else {
            continue;
        };
        rows.swap(row, pr);
        let inv = inv_mod(rows[row][col], p);
        for x in rows[row].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        for r in 0..rows.len() {
            if r != row && rows[r][col] % p != 0 {
                let factor = rows[r][col];
                for c in 0..ncols {
                    let sub = mul_mod(factor, rows[row][c], p);
                    rows[r][c] = (rows[r][c] + p - sub % p) % p;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == rows.len() {
            break;
        }
    }
    rows.retain(|r| r.iter().any(|&x| x % p != 0));
    pivots
}

/// Canonical residue of v modulo the row span of a reduced matrix.
fn reduce_against(v: &[u64], rows: &[Vec<u64>], pivots: &[usize], p: u64) -> Vec<u64> {
    let mut out = v.to_vec();
    for (row, &col) in rows.iter().zip(pivots) {
        let factor = out[col] % p;
        if factor == 0 {
            continue;
        }
        for c in 0..out.len() {
            let sub = mul_mod(factor, row[c], p);
            out[c] = (out[c] + p - sub % p) % p;
        }
    }
    out
}

/// Kernel basis over F_p of a reduced matrix with the given pivot columns.
fn kernel_basis_mod_p(rows: &[Vec<u64>], pivots: &[usize], ncols: usize, p: u64) -> Vec<Vec<u64>> {
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::new();
    for &f in &free {
        let mut v = vec![0u64; ncols];
        v[f] = 1;
        for (row, &col) in rows.iter().zip(pivots) {
            v[col] = (p - row[f] % p) % p;
        }
        basis.push(v);
    }
    basis
}

/// The differential between tensor degrees `deg` and `deg + 1`, expanded to a
/// scalar matrix over the basis pairs (space index, ideal monomial).
fn expanded_differential(
    lm: &DglaOverArtin,
    deg: i64,
) -> (Vec<(usize, Monomial)>, Vec<(usize, Monomial)>, Vec<Vec<ExactScalar>>) {
    let src = lm.tensor_basis_of_degree(deg, true);
    let tgt = lm.tensor_basis_of_degree(deg + 1, true);
    let mut rows = vec![vec![ExactScalar::zero(); src.len()]; tgt.len()];
    for (c, (i, m)) in src.iter().enumerate() {
        let image = lm.d(&lm.tensor_element(*i, m.clone(), ExactScalar::one()));
        for (r, (j, m2)) in tgt.iter().enumerate() {
            rows[r][c] = image[*j].coeff(m2);
        }
    }
    (src, tgt, rows)
}

fn rows_mod_p(rows: &[Vec<ExactScalar>], p: u64) -> Option<Vec<Vec<u64>>> {
    rows.iter()
        .map(|r| r.iter().map(|c| scalar_mod_p(c, p)).collect())
        .collect()
}

/// Counts the deformation set of an abelian DGLA over F_p by enumeration:
/// closed degree-1 vectors modulo translations by exact ones. Returns None
/// when the reduction mod p is unfaithful (imaginary entries, p dividing a
/// denominator, or a rank drop versus the rational matrices) or when the
/// enumeration would exceed `budget` vectors; callers then resample or use
/// a different prime.
pub fn count_abelian_mc_orbits_mod_p(lm: &DglaOverArtin, p: u64, budget: u64) -> Option<u64> {
    let base = lm.base();
    for i in 0..base.space().dim() {
        for j in i..base.space().dim() {
            if !base.bracket_basis(i, j).is_empty() {
                return None;
            }
        }
    }

    let (basis1, _, d1_rows) = expanded_differential(lm, 1);
    let (_, _, d0_rows) = expanded_differential(lm, 0);
    let dim1 = basis1.len();

    let rank1_q = field::rank(&d1_rows);
    let rank0_q = field::rank(&d0_rows);

    let mut d1_p = rows_mod_p(&d1_rows, p)?;
    let d1_pivots = rref_mod_p(&mut d1_p, p);
    if d1_pivots.len() != rank1_q {
        return None;
    }

    // Image of d0 mod p: columns of d0, reduced.
    let dim0 = d0_rows.first().map_or_else(
        || lm.tensor_basis_of_degree(0, true).len(),
        |r| r.len(),
    );
    let d0_p = rows_mod_p(&d0_rows, p)?;
    let mut image_rows: Vec<Vec<u64>> = (0..dim0)
        .map(|c| d0_p.iter().map(|r| r[c]).collect())
        .collect();
    image_rows.retain(|r| !r.is_empty());
    let image_pivots = rref_mod_p(&mut image_rows, p);
    if image_pivots.len() != rank0_q {
        return None;
    }

    // Enumerate closed vectors: the whole degree-1 space when affordable,
    // otherwise combinations of a kernel basis.
    let mut residues: HashSet<Vec<u64>> = HashSet::new();
    let full_size = checked_power(p, dim1 as u32);
    if full_size.is_some_and(|s| s <= budget) {
        let mut v = vec![0u64; dim1];
        loop {
            if matvec_is_zero(&d1_rows, &v, p) {
                residues.insert(reduce_against(&v, &image_rows, &image_pivots, p));
            }
            if !advance(&mut v, p) {
                break;
            }
        }
    } else {
        let kernel = kernel_basis_mod_p(&d1_p, &d1_pivots, dim1, p);
        let combos = checked_power(p, kernel.len() as u32)?;
        if combos > budget {
            return None;
        }
        let mut coeffs = vec![0u64; kernel.len()];
        loop {
            let mut v = vec![0u64; dim1];
            for (a, kv) in coeffs.iter().zip(&kernel) {
                for (slot, x) in v.iter_mut().zip(kv) {
                    *slot = (*slot + mul_mod(*a, *x, p)) % p;
                }
            }
            residues.insert(reduce_against(&v, &image_rows, &image_pivots, p));
            if !advance(&mut coeffs, p) {
                break;
            }
        }
    }
    Some(residues.len() as u64)
}

/// p^e, or None on overflow past u64::MAX / 2 (treated as over budget).
pub fn checked_power(p: u64, e: u32) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..e {
        acc = acc.checked_mul(p)?;
        if acc > u64::MAX / 2 {
            return None;
        }
    }
    Some(acc)
}

fn matvec_is_zero(rows: &[Vec<ExactScalar>], v: &[u64], p: u64) -> bool {
    rows.iter().all(|row| {
        let mut acc = 0u64;
        for (c, x) in row.iter().zip(v) {
            if *x == 0 || c.is_zero() {
                continue;
            }
            let cm = scalar_mod_p(c, p).expect("checked during rank guard");
            acc = (acc + mul_mod(cm, *x, p)) % p;
        }
        acc % p == 0
    })
}

/// Odometer step through F_p^n; false when the sweep wraps to zero.
fn advance(digits: &mut [u64], p: u64) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < p {
            return true;
        }
        *d = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{one_even_parameter, random_abelian_complex, seeded_rng};
    use dgla_core::tensor_artin;
    use std::sync::Arc;

    #[test]
    fn modular_inverse_and_power_behave() {
        assert_eq!(mul_mod(inv_mod(4, 7), 4, 7), 1);
        assert_eq!(pow_mod(3, 6, 7), 1);
        assert_eq!(checked_power(3, 4), Some(81));
    }

    #[test]
    fn count_is_a_prime_power_matching_cohomology() {
        // dim Def = dim H^1(L (x) m); for A = Q[t]/(t^3) the ideal has two
        // monomials, so the count must be p^(2 dim H^1).
        let mut rng = seeded_rng(40);
        let l = Arc::new(random_abelian_complex(&mut rng, [2, 2, 1]));
        let h1 = l.complex().cohomology(1).dim();
        let lm = tensor_artin(l, one_even_parameter(2));
        let count = count_abelian_mc_orbits_mod_p(&lm, 3, 2_000_000).unwrap();
        assert_eq!(count, checked_power(3, 2 * h1 as u32).unwrap());
    }

    #[test]
    fn nonabelian_input_is_rejected() {
        let l = Arc::new(crate::fixtures::obstructed_pair());
        let lm = tensor_artin(l, one_even_parameter(2));
        assert_eq!(count_abelian_mc_orbits_mod_p(&lm, 3, 1000), None);
    }
}
