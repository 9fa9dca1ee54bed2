//! Families of almost complex structures on a real polynomial patch.
//!
//! A family is a 2n x 2n matrix J_t of polynomials in the real coordinates
//! x_1, y_1, …, x_n, y_n (interleaved pairs, variable slots 2k and 2k+1) and
//! truncated deformation variables t. The structure equation J_t² = -1 is
//! enforced exactly at construction, so every held value is a genuine
//! almost complex family and downstream preconditions reduce to shape
//! checks. The complexification sends the real frame to ∂z_k = (∂x_k -
//! i∂y_k)/2, ∂z̄_k = (∂x_k + i∂y_k)/2 and coordinates to z_k = x_k + i y_k,
//! all exactly over the Gaussian rationals.

use crate::error::KsError;
use crate::matrix::{self, PolyMat};
use crate::poly::MPoly;
use exact_core::ExactScalar;

/// Polynomial family J_t with J_t² = -1, held to truncation order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlmostComplexFamily {
    n: usize,
    t_vars: usize,
    trunc: u32,
    j: PolyMat,
}

impl AlmostComplexFamily {
    /// Validate shape, layout, and the structure equation J² = -1.
    pub fn new(
        n: usize,
        t_vars: usize,
        trunc: u32,
        entries: Vec<Vec<MPoly>>,
    ) -> Result<Self, KsError> {
        let dim = 2 * n;
        let vars = dim + t_vars;
        if entries.len() != dim || entries.iter().any(|row| row.len() != dim) {
            return Err(KsError::BadLayout {
                detail: format!("family matrix must be {dim}x{dim}"),
            });
        }
        if entries
            .iter()
            .any(|row| row.iter().any(|e| e.vars() != vars))
        {
            return Err(KsError::BadLayout {
                detail: format!("family entries need the {vars}-variable coordinate layout"),
            });
        }
        let j: PolyMat = entries
            .iter()
            .map(|row| row.iter().map(|e| e.truncate_from(dim, trunc)).collect())
            .collect();
        let sq = matrix::mul(&j, &j, dim, trunc);
        let id = matrix::identity(dim, vars);
        let defect = matrix::add(&sq, &id);
        for (r, row) in defect.iter().enumerate() {
            for (c, entry) in row.iter().enumerate() {
                if !entry.is_zero() {
                    let names = coordinate_names(n, t_vars);
                    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
                    return Err(KsError::NotAlmostComplex {
                        row: r,
                        col: c,
                        entry: entry.render(&refs),
                    });
                }
            }
        }
        Ok(AlmostComplexFamily { n, t_vars, trunc, j })
    }

    /// The standard constant structure: J∂x_k = ∂y_k, J∂y_k = -∂x_k.
    pub fn standard(n: usize, t_vars: usize, trunc: u32) -> Self {
        let dim = 2 * n;
        let vars = dim + t_vars;
        let mut entries = vec![vec![MPoly::zero(vars); dim]; dim];
        for k in 0..n {
            entries[2 * k][2 * k + 1] = MPoly::one(vars).neg();
            entries[2 * k + 1][2 * k] = MPoly::one(vars);
        }
        AlmostComplexFamily::new(n, t_vars, trunc, entries).expect("standard structure")
    }

    /// Complex patch dimension n.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Real dimension 2n.
    pub fn real_dim(&self) -> usize {
        2 * self.n
    }

    /// Number of deformation variables.
    pub fn t_vars(&self) -> usize {
        self.t_vars
    }

    /// Truncation order.
    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    /// Matrix entry (row, col).
    pub fn entry(&self, row: usize, col: usize) -> &MPoly {
        &self.j[row][col]
    }

    /// Apply J to a tangent field given by its 2n components.
    pub fn apply(&self, v: &[MPoly]) -> Vec<MPoly> {
        let dim = 2 * self.n;
        assert_eq!(v.len(), dim, "field component count mismatch");
        (0..dim)
            .map(|r| {
                let mut acc = MPoly::zero(dim + self.t_vars);
                for c in 0..dim {
                    acc = acc.add(&self.j[r][c].mul(&v[c]));
                }
                acc.truncate_from(dim, self.trunc)
            })
            .collect()
    }

    /// Matrix of J in the complex frame (∂z_1..∂z_n, ∂z̄_1..∂z̄_n), entries
    /// as polynomials in the z | z̄ | t layout.
    pub fn complexify(&self) -> PolyMat {
        let n = self.n;
        let dim = 2 * n;
        let vars = dim + self.t_vars;
        // substitute x_k = (z_k + z̄_k)/2, y_k = -(i/2) z_k + (i/2) z̄_k
        let half = ExactScalar::from_ratio(1, 2);
        let half_i = ExactScalar::from_ratio_i(1, 2);
        let mut images = Vec::with_capacity(vars);
        for k in 0..n {
            let zk = MPoly::var(vars, k);
            let zbk = MPoly::var(vars, n + k);
            images.push(zk.scale(&half).add(&zbk.scale(&half)));
            images.push(zk.scale(&-half_i.clone()).add(&zbk.scale(&half_i)));
        }
        for j in 0..self.t_vars {
            images.push(MPoly::var(vars, dim + j));
        }
        let jc: PolyMat = self
            .j
            .iter()
            .map(|row| row.iter().map(|e| e.substitute(&images)).collect())
            .collect();
        let (s, s_inv) = frame_change(n);
        matrix::mul(
            &matrix::mul(&matrix::from_scalars(&s_inv, vars), &jc, dim, self.trunc),
            &matrix::from_scalars(&s, vars),
            dim,
            self.trunc,
        )
    }

    /// Rebuild a family from its complex-frame matrix; fails when the matrix
    /// is not the complexification of a real operator or breaks J² = -1.
    pub fn from_complex_frame(
        n: usize,
        t_vars: usize,
        trunc: u32,
        a: &PolyMat,
    ) -> Result<Self, KsError> {
        let dim = 2 * n;
        let vars = dim + t_vars;
        let (s, s_inv) = frame_change(n);
        let j_complex_coords = matrix::mul(
            &matrix::mul(&matrix::from_scalars(&s, vars), a, dim, trunc),
            &matrix::from_scalars(&s_inv, vars),
            dim,
            trunc,
        );
        // substitute z_k = x_k + i y_k, z̄_k = x_k - i y_k
        let i_scalar = ExactScalar::i();
        let mut images = Vec::with_capacity(vars);
        for k in 0..n {
            images.push(MPoly::var(vars, 2 * k).add(&MPoly::var(vars, 2 * k + 1).scale(&i_scalar)));
        }
        for k in 0..n {
            images.push(
                MPoly::var(vars, 2 * k).sub(&MPoly::var(vars, 2 * k + 1).scale(&i_scalar)),
            );
        }
        for j in 0..t_vars {
            images.push(MPoly::var(vars, dim + j));
        }
        let mut entries = Vec::with_capacity(dim);
        for (r, row) in j_complex_coords.iter().enumerate() {
            let mut orow = Vec::with_capacity(dim);
            for (c, e) in row.iter().enumerate() {
                let real = e.substitute(&images);
                if let Some((exps, coeff)) = real
                    .terms()
                    .find(|(_, coeff)| **coeff != coeff.conj())
                    .map(|(e2, c2)| (e2.to_vec(), c2.clone()))
                {
                    let names = coordinate_names(n, t_vars);
                    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
                    return Err(KsError::NotRealStructure {
                        row: r,
                        col: c,
                        entry: MPoly::monomial(vars, &exps, coeff).render(&refs),
                    });
                }
                orow.push(real);
            }
            entries.push(orow);
        }
        AlmostComplexFamily::new(n, t_vars, trunc, entries)
    }
}

/// Names x1, y1, …, xn, yn, t1, …, tm for rendering entries.
pub(crate) fn coordinate_names(n: usize, t_vars: usize) -> Vec<String> {
    let mut names = Vec::with_capacity(2 * n + t_vars);
    for k in 1..=n {
        names.push(format!("x{k}"));
        names.push(format!("y{k}"));
    }
    for j in 1..=t_vars {
        names.push(format!("t{j}"));
    }
    names
}

/// Constant change of frame: S has the complex frame as columns over the
/// real slots, S⁻¹ reads complex components off real ones.
fn frame_change(n: usize) -> (Vec<Vec<ExactScalar>>, Vec<Vec<ExactScalar>>) {
    let dim = 2 * n;
    let half = ExactScalar::from_ratio(1, 2);
    let half_i = ExactScalar::from_ratio_i(1, 2);
    let one = ExactScalar::one();
    let i_scalar = ExactScalar::i();
    let mut s = vec![vec![ExactScalar::zero(); dim]; dim];
    let mut s_inv = vec![vec![ExactScalar::zero(); dim]; dim];
    for k in 0..n {
        // ∂z_k = (∂x_k - i ∂y_k)/2, ∂z̄_k = (∂x_k + i ∂y_k)/2
        s[2 * k][k] = half.clone();
        s[2 * k + 1][k] = -half_i.clone();
        s[2 * k][n + k] = half.clone();
        s[2 * k + 1][n + k] = half_i.clone();
        // ∂z-component of a real vector = x-comp + i y-comp, ∂z̄ likewise
        s_inv[k][2 * k] = one.clone();
        s_inv[k][2 * k + 1] = i_scalar.clone();
        s_inv[n + k][2 * k] = one.clone();
        s_inv[n + k][2 * k + 1] = -i_scalar.clone();
    }
    (s, s_inv)
}

/// Conjugate a polynomial on the complex chart: swap z and z̄ exponent
/// blocks and conjugate coefficients; deformation variables stay real.
pub(crate) fn conj_chart(p: &MPoly, n: usize) -> MPoly {
    let vars = p.vars();
    let mut perm: Vec<usize> = (0..vars).collect();
    for k in 0..n {
        perm[k] = n + k;
        perm[n + k] = k;
    }
    p.permute_vars(&perm).conj_coeffs()
}

/// Lie bracket of polynomial tangent fields: [X,Y]^c = X^a ∂_a Y^c - Y^a ∂_a X^c,
/// derivatives running over the 2n coordinate slots.
pub fn field_lie_bracket(x: &[MPoly], y: &[MPoly], real_dim: usize) -> Vec<MPoly> {
    assert_eq!(x.len(), real_dim, "field component count mismatch");
    assert_eq!(y.len(), real_dim, "field component count mismatch");
    let vars = x.first().map_or(0, MPoly::vars);
    (0..real_dim)
        .map(|c| {
            let mut acc = MPoly::zero(vars);
            for a in 0..real_dim {
                acc = acc.add(&x[a].mul(&y[c].derivative(a)));
                acc = acc.sub(&y[a].mul(&x[c].derivative(a)));
            }
            acc
        })
        .collect()
}

/// Nijenhuis tensor N(X,Y) = [X,Y] + J([JX,Y] + [X,JY]) - [JX,JY], exact.
pub fn nijenhuis_tensor(
    j: &AlmostComplexFamily,
    x: &[MPoly],
    y: &[MPoly],
) -> Result<Vec<MPoly>, KsError> {
    let dim = j.real_dim();
    let vars = dim + j.t_vars();
    for field in [x, y] {
        if field.len() != dim || field.iter().any(|c| c.vars() != vars) {
            return Err(KsError::BadLayout {
                detail: format!(
                    "vector fields need {dim} components in the {vars}-variable layout"
                ),
            });
        }
    }
    let jx = j.apply(x);
    let jy = j.apply(y);
    let plain = field_lie_bracket(x, y, dim);
    let jx_y = field_lie_bracket(&jx, y, dim);
    let x_jy = field_lie_bracket(x, &jy, dim);
    let jx_jy = field_lie_bracket(&jx, &jy, dim);
    let mixed = j.apply(&jx_y
        .iter()
        .zip(&x_jy)
        .map(|(a, b)| a.add(b))
        .collect::<Vec<_>>());
    Ok((0..dim)
        .map(|c| {
            plain[c]
                .add(&mixed[c])
                .sub(&jx_jy[c])
                .truncate_from(dim, j.trunc())
        })
        .collect())
}

/// All-coordinate-pair Nijenhuis check: the largest t-order up to `order`
/// at which every N(∂_a, ∂_b) still vanishes, queried order by order.
pub fn nijenhuis_orders(j: &AlmostComplexFamily, order: u32) -> Result<Vec<bool>, KsError> {
    let dim = j.real_dim();
    let vars = dim + j.t_vars();
    let mut per_order = vec![true; (order + 1) as usize];
    for a in 0..dim {
        for b in (a + 1)..dim {
            let mut x = vec![MPoly::zero(vars); dim];
            let mut y = vec![MPoly::zero(vars); dim];
            x[a] = MPoly::one(vars);
            y[b] = MPoly::one(vars);
            let n_ab = nijenhuis_tensor(j, &x, &y)?;
            for comp in &n_ab {
                for k in 0..=order {
                    if !comp.part_with_degree_from(dim, k).is_zero() {
                        per_order[k as usize] = false;
                    }
                }
            }
        }
    }
    Ok(per_order)
}

/// Torus family for a modulus series τ(t) = R(t) + i I(t) with I(0) = 1:
/// pulled back through the lattice chart, J_t = [[-R/I, -I - R²/I], [1/I, R/I]].
pub fn torus_family(tau: &[ExactScalar], trunc: u32) -> Result<AlmostComplexFamily, KsError> {
    let t0 = tau.first().cloned().unwrap_or_else(ExactScalar::zero);
    let two_i = ExactScalar::from_int(2) * ExactScalar::i();
    if t0.clone() - t0.conj() != two_i {
        return Err(KsError::BadTau {
            value: t0.canonical_string(),
        });
    }
    let vars = 3; // x, y, t
    let half = ExactScalar::from_ratio(1, 2);
    let minus_half_i = ExactScalar::from_ratio_i(-1, 2);
    let mut r = MPoly::zero(vars);
    let mut im = MPoly::zero(vars);
    for (m, c) in tau.iter().enumerate() {
        let exps = [0u16, 0, m as u16];
        r = r.add(&MPoly::monomial(vars, &exps, (c.clone() + c.conj()) * half.clone()));
        im = im.add(&MPoly::monomial(
            vars,
            &exps,
            (c.clone() - c.conj()) * minus_half_i.clone(),
        ));
    }
    r = r.truncate_from(2, trunc);
    im = im.truncate_from(2, trunc);
    let inv_i = im
        .inverse_with_unit_constant(2, trunc)
        .ok_or(KsError::SingularOrderZeroBlock)?;
    let cut = |p: MPoly| p.truncate_from(2, trunc);
    let entries = vec![
        vec![
            cut(r.mul(&inv_i).neg()),
            cut(im.add(&r.mul(&r).mul(&inv_i)).neg()),
        ],
        vec![inv_i.clone(), cut(r.mul(&inv_i))],
    ];
    AlmostComplexFamily::new(1, 1, trunc, entries)
}
