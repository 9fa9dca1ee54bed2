//! Reference computations kept independent of the production paths.
//!
//! * The BV operator recomputed as η⁻¹ ∘ ∂ ∘ η, where η contracts a
//!   polyvector into the top form dz_1∧…∧dz_n and the complement signs come
//!   from a direct inversion count rather than the shuffle merges used by
//!   the production divergence formula.
//! * The torus family matrix recomputed as the literal conjugation product
//!   Df⁻¹ · J₀ · Df with series-inverse matrices.
//! * The torus deformation series recomputed by solving the eigenvector
//!   equation (J_t + i)v = 0 and changing basis to the complex frame,
//!   bypassing the projector normalization of the production encoding map.

use crate::error::KsError;
use crate::forms::{holomorphic_d, FormElement};
use crate::matrix::{self, PolyMat};
use crate::poly::MPoly;
use crate::pv::PolyVector;
use exact_core::ExactScalar;

/// Sorted complement of a strictly increasing index set inside 0..n.
fn complement(idx: &[u8], n: usize) -> Vec<u8> {
    (0..n as u8).filter(|k| !idx.contains(k)).collect()
}

/// Sign of the permutation sorting the concatenation (a, b), by direct
/// inversion count over the whole word.
fn concat_inversion_sign(a: &[u8], b: &[u8]) -> i32 {
    let word: Vec<u8> = a.iter().chain(b).copied().collect();
    let mut inversions = 0usize;
    for i in 0..word.len() {
        for j in i + 1..word.len() {
            if word[i] > word[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Contraction against dz_1∧…∧dz_n:
/// η(f dz̄_I ⊗ ∂_J) = ε(J) f dz̄_I ∧ dz_{J^c}, ε(J) the sign sorting (J, J^c).
pub fn eta(alpha: &PolyVector) -> FormElement {
    let n = alpha.n();
    let mut out = FormElement::zero(n, alpha.t_vars(), alpha.trunc());
    for (i_idx, j_idx, f) in alpha.terms() {
        let jc = complement(j_idx, n);
        let eps = concat_inversion_sign(j_idx, &jc);
        let coeff = if eps < 0 { f.neg() } else { f.clone() };
        out.insert(i_idx.to_vec(), jc, coeff);
    }
    out
}

/// Inverse contraction: η⁻¹(h dz̄_I ∧ dz_K) = ε(K^c) h dz̄_I ⊗ ∂_{K^c}.
pub fn eta_inv(omega: &FormElement) -> PolyVector {
    let n = omega.n();
    let mut out = PolyVector::zero(n, omega.t_vars(), omega.trunc());
    for (i_idx, k_idx, h) in omega.terms() {
        let j_idx = complement(k_idx, n);
        let eps = concat_inversion_sign(&j_idx, k_idx);
        let coeff = if eps < 0 { h.neg() } else { h.clone() };
        out.insert(i_idx.to_vec(), j_idx, coeff);
    }
    out
}

/// The BV operator along the reference route η⁻¹ ∘ ∂ ∘ η.
pub fn bv_delta_reference(alpha: &PolyVector) -> PolyVector {
    eta_inv(&holomorphic_d(&eta(alpha)))
}

/// Split a modulus series τ(t) into its real and imaginary part series,
/// checking the unit imaginary constant term.
fn tau_series(tau: &[ExactScalar], order: u32) -> Result<(MPoly, MPoly), KsError> {
    let t0 = tau.first().cloned().unwrap_or_else(ExactScalar::zero);
    let two_i = ExactScalar::from_int(2) * ExactScalar::i();
    if t0.clone() - t0.conj() != two_i {
        return Err(KsError::BadTau {
            value: t0.canonical_string(),
        });
    }
    let mut re = MPoly::zero(1);
    let mut im = MPoly::zero(1);
    let half = ExactScalar::from_ratio(1, 2);
    let minus_half_i = ExactScalar::from_ratio_i(-1, 2);
    for (m, c) in tau.iter().enumerate() {
        let exps = [m as u16];
        re = re.add(&MPoly::monomial(1, &exps, (c.clone() + c.conj()) * half.clone()));
        im = im.add(&MPoly::monomial(
            1,
            &exps,
            (c.clone() - c.conj()) * minus_half_i.clone(),
        ));
    }
    Ok((re.truncate_from(0, order), im.truncate_from(0, order)))
}

/// Torus structure matrix as the literal conjugation Df⁻¹ · J₀ · Df for the
/// chart (x, y) -> (x + R y, I y); entries are series in the single
/// deformation variable.
pub fn torus_matrix_by_conjugation(tau: &[ExactScalar], order: u32) -> Result<PolyMat, KsError> {
    let (r, i) = tau_series(tau, order)?;
    let df = vec![
        vec![MPoly::one(1), r],
        vec![MPoly::zero(1), i],
    ];
    let df_inv = matrix::neumann_inverse(&df, 0, order).ok_or(KsError::SingularOrderZeroBlock)?;
    debug_assert!(matrix::is_zero(&matrix::sub(
        &matrix::mul(&df, &df_inv, 0, order),
        &matrix::identity(2, 1),
    )));
    let j0 = matrix::from_scalars(
        &[
            vec![ExactScalar::zero(), -ExactScalar::one()],
            vec![ExactScalar::one(), ExactScalar::zero()],
        ],
        1,
    );
    Ok(matrix::mul(
        &matrix::mul(&df_inv, &j0, 0, order),
        &df,
        0,
        order,
    ))
}

/// Deformation series of the torus family by the eigenvector route: solve
/// (J_t + i)v = 0 with unit ∂y component, rotate into the complex frame via
/// ∂x = ∂z + ∂z̄ and ∂y = i(∂z - ∂z̄), and divide the two components.
/// Returns the coefficients of t^0..t^order (the first is always zero).
pub fn torus_phi_by_eigenvector(
    tau: &[ExactScalar],
    order: u32,
) -> Result<Vec<ExactScalar>, KsError> {
    let j = torus_matrix_by_conjugation(tau, order)?;
    let i_const = MPoly::constant(1, ExactScalar::i());
    let j21_inv = j[1][0]
        .inverse_with_unit_constant(0, order)
        .ok_or(KsError::SingularOrderZeroBlock)?;
    let vx = j[1][1]
        .add(&i_const)
        .mul(&j21_inv)
        .neg()
        .truncate_from(0, order);
    // the other eigen equation row must vanish identically
    let row0 = j[0][0]
        .mul(&vx)
        .add(&j[0][1])
        .add(&vx.scale(&ExactScalar::i()))
        .truncate_from(0, order);
    assert!(row0.is_zero(), "eigenvector equation failed in the first row");
    // v = vx ∂x + ∂y = (vx + i) ∂z + (vx - i) ∂z̄
    let hol = vx.add(&i_const);
    let antihol = vx.sub(&i_const);
    let phi = hol
        .mul(
            &antihol
                .inverse_with_unit_constant(0, order)
                .ok_or(KsError::SingularOrderZeroBlock)?,
        )
        .truncate_from(0, order);
    Ok((0..=order).map(|m| phi.coeff(&[m as u16])).collect())
}
