//! Encoding a family of almost complex structures as a graph deformation.
//!
//! For a family J_t starting at the standard structure, T^{0,1}_t is the
//! graph of a (1,1) polyvector φ_t over T^{0,1}: the columns (1 + iJ_t)∂z̄_k
//! span T^{0,1}_t (they are killed by 1 - iJ_t because (1-iJ)(1+iJ) =
//! 1 + J² = 0), and normalizing their ∂z̄ block to the identity by a
//! local-ring inverse reads off φ_t. The inverse construction rebuilds J_t
//! from φ_t as F·diag(i, -i)·F⁻¹ with F the frame of the graph and its
//! conjugate. Integrability of J_t is equivalent to the Maurer-Cartan
//! equation ∂̄φ_t + ½[φ_t, φ_t] = 0, which is cross-checked order by order
//! against the vanishing of the Nijenhuis tensor computed in real
//! coordinates.

use crate::acs::{conj_chart, nijenhuis_orders, AlmostComplexFamily};
use crate::error::KsError;
use crate::matrix::{self, PolyMat};
use crate::poly::MPoly;
use crate::pv::{dbar, schouten_bracket, PolyVector};
use exact_core::ExactScalar;

/// Graph datum φ_t of a family: bidegree (1,1), zero at t = 0, with
/// (id + φ_t)(T^{0,1}) = T^{0,1}_t order by order.
pub fn encoding_map(j: &AlmostComplexFamily) -> Result<PolyVector, KsError> {
    let n = j.n();
    let dim = 2 * n;
    let trunc = j.trunc();
    let a = j.complexify();
    // B = 1 + iA, twice the (0,1) projector of the deformed structure
    let b = matrix::add(
        &matrix::identity(dim, dim + j.t_vars()),
        &matrix::scale(&a, &ExactScalar::i()),
    );
    // columns over ∂z̄: antiholomorphic rows must stay invertible
    let d_block: PolyMat = (0..n)
        .map(|r| (0..n).map(|c| b[n + r][n + c].clone()).collect())
        .collect();
    let z_block: PolyMat = (0..n)
        .map(|r| (0..n).map(|c| b[r][n + c].clone()).collect())
        .collect();
    let d_inv = matrix::neumann_inverse(&d_block, dim, trunc)
        .ok_or(KsError::SingularOrderZeroBlock)?;
    let phi_mat = matrix::mul(&z_block, &d_inv, dim, trunc);
    let mut phi = PolyVector::zero(n, j.t_vars(), trunc);
    for (jrow, row) in phi_mat.iter().enumerate() {
        for (k, coeff) in row.iter().enumerate() {
            if !coeff.is_zero() {
                phi = phi
                    .add(&PolyVector::term(
                        n,
                        j.t_vars(),
                        trunc,
                        &[k as u8],
                        &[jrow as u8],
                        coeff.clone(),
                    )?)
                    .expect("uniform context");
            }
        }
    }
    Ok(phi)
}

/// Rebuild the family whose antiholomorphic bundle is the graph of `phi`.
/// Requires bidegree (1,1) and φ = 0 at t = 0.
pub fn family_from_graph(phi: &PolyVector) -> Result<AlmostComplexFamily, KsError> {
    let n = phi.n();
    let dim = 2 * n;
    let trunc = phi.trunc();
    let vars = dim + phi.t_vars();
    if !phi.is_zero() && phi.bidegree() != Some((1, 1)) {
        return Err(KsError::BadLayout {
            detail: "graph datum must be of pure bidegree (1,1)".to_string(),
        });
    }
    if !phi.t_order_part(0).is_zero() {
        return Err(KsError::SingularOrderZeroBlock);
    }
    // frame F = [[1, Φ],[Φ̄, 1]]: columns span T^{1,0}_t then T^{0,1}_t
    let mut f = matrix::identity(dim, vars);
    for jrow in 0..n {
        for k in 0..n {
            let c = phi.coeff(&[k as u8], &[jrow as u8]);
            f[jrow][n + k] = c.clone();
            f[n + k][jrow] = conj_chart(&c, n);
        }
    }
    let f_inv =
        matrix::neumann_inverse(&f, dim, trunc).ok_or(KsError::SingularOrderZeroBlock)?;
    let mut eigen = vec![vec![MPoly::zero(vars); dim]; dim];
    for k in 0..n {
        eigen[k][k] = MPoly::constant(vars, ExactScalar::i());
        eigen[n + k][n + k] = MPoly::constant(vars, -ExactScalar::i());
    }
    let a = matrix::mul(&matrix::mul(&f, &eigen, dim, trunc), &f_inv, dim, trunc);
    AlmostComplexFamily::from_complex_frame(n, phi.t_vars(), trunc, &a)
}

/// Maurer-Cartan residual ∂̄φ + ½[φ, φ] of a polyvector.
pub fn mc_residual(phi: &PolyVector) -> Result<PolyVector, KsError> {
    let half = ExactScalar::from_ratio(1, 2);
    dbar(phi).add(&schouten_bracket(phi, phi)?.scale(&half))
}

/// Order-by-order verdicts of the two integrability criteria.
#[derive(Clone, Debug)]
pub struct CrosscheckReport {
    /// Per t-order: every Nijenhuis value N(∂_a, ∂_b) vanishes at that order.
    pub nijenhuis_ok: Vec<bool>,
    /// Per t-order: the Maurer-Cartan residual of φ_t vanishes at that order.
    pub mc_ok: Vec<bool>,
    /// First failing order of the Nijenhuis criterion.
    pub first_nijenhuis_failure: Option<u32>,
    /// First failing order of the Maurer-Cartan criterion.
    pub first_mc_failure: Option<u32>,
    /// The two criteria locate the same first failure.
    pub agree: bool,
    /// The graph datum the residual was computed from.
    pub phi: PolyVector,
}

/// Run both integrability criteria through t-order `order`.
pub fn integrability_crosscheck(
    j: &AlmostComplexFamily,
    order: u32,
) -> Result<CrosscheckReport, KsError> {
    let nijenhuis_ok = nijenhuis_orders(j, order)?;
    let phi = encoding_map(j)?;
    let residual = mc_residual(&phi)?;
    let mc_ok: Vec<bool> = (0..=order)
        .map(|k| residual.t_order_part(k).is_zero())
        .collect();
    let first = |flags: &[bool]| {
        flags
            .iter()
            .position(|&ok| !ok)
            .map(|k| k as u32)
    };
    let first_nijenhuis_failure = first(&nijenhuis_ok);
    let first_mc_failure = first(&mc_ok);
    Ok(CrosscheckReport {
        agree: first_nijenhuis_failure == first_mc_failure,
        nijenhuis_ok,
        mc_ok,
        first_nijenhuis_failure,
        first_mc_failure,
        phi,
    })
}
