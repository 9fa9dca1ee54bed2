//! Seeded random generators for DGLAs, complexes, algebras, and matrices.
//!
//! Every generator takes an explicit ChaCha8 RNG so test runs are
//! reproducible; `seeded_rng(stream)` derives independent deterministic
//! streams from a fixed base seed.

use std::sync::Arc;

use dgla_core::Dgla;
use exact_core::{ExactScalar, GradedArtinAlgebra, Variable};
use graded_linalg::field;
use graded_linalg::{BasisVector, GradedVectorSpace};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::ratmat::RatMat;

/// Deterministic RNG for test stream `stream`.
pub fn seeded_rng(stream: u64) -> ChaCha8Rng {
    let mut seed = [0u8; 32];
    seed[..8].copy_from_slice(&0x9e3779b97f4a7c15u64.to_le_bytes());
    seed[8..16].copy_from_slice(&stream.to_le_bytes());
    ChaCha8Rng::from_seed(seed)
}

/// Uniform integer scalar in [-bound, bound].
pub fn random_int_scalar(rng: &mut ChaCha8Rng, bound: i64) -> ExactScalar {
    ExactScalar::from_int(rng.gen_range(-bound..=bound))
}

/// Random matrix with integer entries in [-bound, bound], given shape.
fn random_int_rows(rng: &mut ChaCha8Rng, rows: usize, cols: usize, bound: i64) -> Vec<Vec<ExactScalar>> {
    (0..rows)
        .map(|_| (0..cols).map(|_| random_int_scalar(rng, bound)).collect())
        .collect()
}

fn rank_of_rows(rows: &[Vec<ExactScalar>]) -> usize {
    field::rank(rows)
}

/// Two-step DGLA on L^1 (+) L^2 with random differential and random symmetric
/// bracket S^2 L^1 -> L^2; all axioms hold because triple brackets and d[.,.]
/// land in degrees where everything vanishes. With `surjective_d` the map
/// d: L^1 -> L^2 has full rank, so H^2 = 0 (requires n1 >= n2).
pub fn random_two_step_dgla(
    rng: &mut ChaCha8Rng,
    n1: usize,
    n2: usize,
    surjective_d: bool,
) -> Dgla {
    assert!(!surjective_d || n1 >= n2, "surjective d needs n1 >= n2");
    let mut basis = Vec::new();
    for i in 0..n1 {
        basis.push(BasisVector::new(format!("x{i}"), 1));
    }
    for i in 0..n2 {
        basis.push(BasisVector::new(format!("y{i}"), 2));
    }
    let space = GradedVectorSpace::new(basis).unwrap();

    // d sends x_j to a combination of y_r; resample until the rank condition
    // holds (small random integer matrices reach full rank almost surely).
    let d_rows = loop {
        let rows = random_int_rows(rng, n2, n1, 2);
        if !surjective_d || rank_of_rows(&rows) == n2 {
            break rows;
        }
    };
    let mut d_entries = Vec::new();
    for r in 0..n2 {
        for j in 0..n1 {
            if !d_rows[r][j].is_zero() {
                d_entries.push((n1 + r, j, d_rows[r][j].clone()));
            }
        }
    }

    // Symmetric structure constants: [x_i, x_j] = [x_j, x_i] (both odd).
    let mut beta = vec![vec![Vec::new(); n1]; n1];
    for i in 0..n1 {
        for j in i..n1 {
            let mut val = Vec::new();
            for r in 0..n2 {
                let c = random_int_scalar(rng, 1);
                if !c.is_zero() {
                    val.push((n1 + r, c));
                }
            }
            beta[i][j] = val.clone();
            beta[j][i] = val;
        }
    }
    let mut bracket_entries = Vec::new();
    for i in 0..n1 {
        for j in i..n1 {
            if !beta[i][j].is_empty() {
                bracket_entries.push((i, j, beta[i][j].clone()));
            }
        }
    }
    Dgla::new(space, d_entries, bracket_entries).expect("two-step axioms hold by degree")
}

/// Random three-term complex V^0 -> V^1 -> V^2 with exact integer entries and
/// del^1 del^0 = 0: del^1 is free, del^0 factors through ker(del^1).
pub struct RandomComplexMaps {
    pub dims: [usize; 3],
    /// del^0 as rows[target][source], V^0 -> V^1.
    pub d0: Vec<Vec<ExactScalar>>,
    /// del^1 as rows[target][source], V^1 -> V^2.
    pub d1: Vec<Vec<ExactScalar>>,
}

/// Generates the two boundary maps of a random three-term complex.
pub fn random_complex_maps(rng: &mut ChaCha8Rng, dims: [usize; 3]) -> RandomComplexMaps {
    let [n0, n1, n2] = dims;
    let d1 = random_int_rows(rng, n2, n1, 2);
    // Columns of d0 are random combinations of a kernel basis of d1.
    let kernel = field::kernel_basis(&d1, n1);
    let mix = random_int_rows(rng, kernel.len(), n0, 2);
    let mut d0 = vec![vec![ExactScalar::zero(); n0]; n1];
    for (k, kv) in kernel.iter().enumerate() {
        for j in 0..n0 {
            if mix[k][j].is_zero() {
                continue;
            }
            for r in 0..n1 {
                let term = kv[r].clone() * mix[k][j].clone();
                let cur = d0[r][j].clone();
                d0[r][j] = cur + term;
            }
        }
    }
    RandomComplexMaps { dims, d0, d1 }
}

/// Boundary maps of a random exact three-term complex: del^1 surjective and
/// del^0 an isomorphism onto its kernel, so all cohomology vanishes. The
/// endomorphism DGLA of an exact complex is itself exact in every degree,
/// which makes every closed slice of a gauge equation solvable.
pub fn random_acyclic_complex_maps(
    rng: &mut ChaCha8Rng,
    n0: usize,
    n2: usize,
) -> RandomComplexMaps {
    let n1 = n0 + n2;
    loop {
        let d1 = random_int_rows(rng, n2, n1, 2);
        if rank_of_rows(&d1) != n2 {
            continue;
        }
        let kernel = field::kernel_basis(&d1, n1);
        debug_assert_eq!(kernel.len(), n0);
        let mix = random_int_rows(rng, n0, n0, 2);
        if rank_of_rows(&mix) != n0 {
            continue;
        }
        let mut d0 = vec![vec![ExactScalar::zero(); n0]; n1];
        for (k, kv) in kernel.iter().enumerate() {
            for j in 0..n0 {
                if mix[k][j].is_zero() {
                    continue;
                }
                for r in 0..n1 {
                    let term = kv[r].clone() * mix[k][j].clone();
                    let cur = d0[r][j].clone();
                    d0[r][j] = cur + term;
                }
            }
        }
        return RandomComplexMaps { dims: [n0, n1, n2], d0, d1 };
    }
}

/// Abelian DGLA (zero bracket) on a random three-term complex in degrees
/// 0, 1, 2.
pub fn random_abelian_complex(rng: &mut ChaCha8Rng, dims: [usize; 3]) -> Dgla {
    let maps = random_complex_maps(rng, dims);
    let [n0, n1, n2] = maps.dims;
    let mut basis = Vec::new();
    for i in 0..n0 {
        basis.push(BasisVector::new(format!("a{i}"), 0));
    }
    for i in 0..n1 {
        basis.push(BasisVector::new(format!("b{i}"), 1));
    }
    for i in 0..n2 {
        basis.push(BasisVector::new(format!("c{i}"), 2));
    }
    let space = GradedVectorSpace::new(basis).unwrap();
    let mut d_entries = Vec::new();
    for r in 0..n1 {
        for j in 0..n0 {
            if !maps.d0[r][j].is_zero() {
                d_entries.push((n0 + r, j, maps.d0[r][j].clone()));
            }
        }
    }
    for r in 0..n2 {
        for j in 0..n1 {
            if !maps.d1[r][j].is_zero() {
                d_entries.push((n0 + n1 + r, n0 + j, maps.d1[r][j].clone()));
            }
        }
    }
    Dgla::new(space, d_entries, vec![]).expect("d^2 = 0 by construction")
}

/// Endomorphism DGLA of a random three-term complex: End^k = (+)_i
/// Hom(V^i, V^{i+k}) with D(f) = del f - (-1)^{|f|} f del and the graded
/// commutator bracket. Nonabelian with nontrivial degree-0 part; total
/// dimension (n0+n1+n2)^2.
pub fn random_endo_dgla(rng: &mut ChaCha8Rng, dims: [usize; 3]) -> Dgla {
    let maps = random_complex_maps(rng, dims);
    endo_dgla_of_complex(&maps)
}

/// Hom-basis bookkeeping for `endo_dgla_of_complex`: index of the basis map
/// e_row <- e_col between the given terms, or None when degrees fall outside.
struct HomBasis {
    /// (source term, target term, row in target, col in source) per basis index.
    entries: Vec<(usize, usize, usize, usize)>,
}

impl HomBasis {
    fn new(dims: [usize; 3]) -> Self {
        let mut entries = Vec::new();
        // Group by DGLA degree k = target - source so the space lists blocks
        // in increasing degree.
        for k in -2i64..=2 {
            for src in 0..3usize {
                let tgt = src as i64 + k;
                if !(0..3).contains(&tgt) {
                    continue;
                }
                let tgt = tgt as usize;
                for row in 0..dims[tgt] {
                    for col in 0..dims[src] {
                        entries.push((src, tgt, row, col));
                    }
                }
            }
        }
        HomBasis { entries }
    }

    fn index_of(&self, src: usize, tgt: usize, row: usize, col: usize) -> usize {
        self.entries
            .iter()
            .position(|&e| e == (src, tgt, row, col))
            .expect("hom basis element exists")
    }

    fn degree(&self, idx: usize) -> i64 {
        let (src, tgt, _, _) = self.entries[idx];
        tgt as i64 - src as i64
    }

    fn name(&self, idx: usize) -> String {
        let (src, tgt, row, col) = self.entries[idx];
        format!("h{src}{tgt}_{row}_{col}")
    }

    fn boundary<'a>(&self, maps: &'a RandomComplexMaps, term: usize) -> Option<&'a Vec<Vec<ExactScalar>>> {
        match term {
            0 => Some(&maps.d0),
            1 => Some(&maps.d1),
            _ => None,
        }
    }

    fn dim(&self) -> usize {
        self.entries.len()
    }
}

/// Endomorphism DGLA of an explicit three-term complex.
pub fn endo_dgla_of_complex(maps: &RandomComplexMaps) -> Dgla {
    let hb = HomBasis::new(maps.dims);
    let basis: Vec<BasisVector> = (0..hb.dim())
        .map(|i| BasisVector::new(hb.name(i), hb.degree(i)))
        .collect();
    let space = GradedVectorSpace::new(basis).unwrap();

    // D(f) = del f - (-1)^{|f|} f del on each basis map f: e_col |-> e_row.
    let mut d_entries = Vec::new();
    for idx in 0..hb.dim() {
        let (src, tgt, row, col) = hb.entries[idx];
        let parity_sign = if hb.degree(idx).rem_euclid(2) == 1 { -1 } else { 1 };
        if let Some(del) = hb.boundary(maps, tgt) {
            // del f : V^src -> V^{tgt+1}, component u picks del[u][row].
            for (u, del_row) in del.iter().enumerate() {
                if !del_row[row].is_zero() {
                    let out = hb.index_of(src, tgt + 1, u, col);
                    d_entries.push((out, idx, del_row[row].clone()));
                }
            }
        }
        if src >= 1 {
            if let Some(del) = hb.boundary(maps, src - 1) {
                // f del : V^{src-1} -> V^tgt, column t picks del[col... ]
                for t in 0..maps.dims[src - 1] {
                    if !del[col][t].is_zero() {
                        let out = hb.index_of(src - 1, tgt, row, t);
                        let c = del[col][t].clone() * ExactScalar::from_int(-parity_sign);
                        d_entries.push((out, idx, c));
                    }
                }
            }
        }
    }
    // Merge duplicate (out, idx) contributions before handing to Dgla::new.
    let d_entries = merge_entries(d_entries);

    // [f, g] = f g - (-1)^{|f||g|} g f on basis pairs, stored for i <= j.
    let mut bracket_entries = Vec::new();
    for i in 0..hb.dim() {
        for j in i..hb.dim() {
            let (si, ti, ri, ci) = hb.entries[i];
            let (sj, tj, rj, cj) = hb.entries[j];
            let both_odd = hb.degree(i).rem_euclid(2) == 1 && hb.degree(j).rem_euclid(2) == 1;
            let mut val: Vec<(usize, ExactScalar)> = Vec::new();
            // f g: g first, lands in V^tj = V^si required; composite e_cj |-> e_ri scaled.
            if tj == si && rj == ci {
                val.push((hb.index_of(sj, ti, ri, cj), ExactScalar::one()));
            }
            // -(-1)^{|f||g|} g f.
            if ti == sj && ri == cj {
                let sign = if both_odd { 1 } else { -1 };
                val.push((hb.index_of(si, tj, rj, ci), ExactScalar::from_int(sign)));
            }
            let val = merge_pairs(val);
            if !val.is_empty() {
                bracket_entries.push((i, j, val));
            }
        }
    }
    Dgla::new(space, d_entries, bracket_entries).expect("endomorphism DGLA axioms hold")
}

fn merge_entries(entries: Vec<(usize, usize, ExactScalar)>) -> Vec<(usize, usize, ExactScalar)> {
    let mut map: std::collections::BTreeMap<(usize, usize), ExactScalar> = Default::default();
    for (r, c, v) in entries {
        let slot = map.entry((r, c)).or_insert_with(ExactScalar::zero);
        *slot += &v;
    }
    map.into_iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|((r, c), v)| (r, c, v))
        .collect()
}

fn merge_pairs(pairs: Vec<(usize, ExactScalar)>) -> Vec<(usize, ExactScalar)> {
    let mut map: std::collections::BTreeMap<usize, ExactScalar> = Default::default();
    for (k, v) in pairs {
        let slot = map.entry(k).or_insert_with(ExactScalar::zero);
        *slot += &v;
    }
    map.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// Q[t]/(t^(trunc+1)) with an even degree-0 generator.
pub fn one_even_parameter(trunc: u32) -> Arc<GradedArtinAlgebra> {
    Arc::new(GradedArtinAlgebra::power_series_one_var("t", trunc))
}

/// Random graded Artin algebra with `num_even` even and `num_odd` odd
/// generators, degrees drawn from [-2, 2] with matching parity.
pub fn random_graded_algebra(
    rng: &mut ChaCha8Rng,
    num_even: usize,
    num_odd: usize,
    trunc: u32,
) -> Arc<GradedArtinAlgebra> {
    let mut vars = Vec::new();
    for i in 0..num_even {
        let degree = 2 * rng.gen_range(-1i64..=1);
        vars.push(Variable::new(format!("t{i}"), degree));
    }
    for i in 0..num_odd {
        let degree = 2 * rng.gen_range(-1i64..=0) + 1;
        vars.push(Variable::new(format!("s{i}"), degree));
    }
    Arc::new(GradedArtinAlgebra::new(vars, trunc, vec![]).unwrap())
}

/// Random strictly upper triangular matrix with integer entries in
/// [-bound, bound].
pub fn random_strictly_upper(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> RatMat {
    let mut m = RatMat::zero(n);
    for i in 0..n {
        for j in (i + 1)..n {
            *m.at_mut(i, j) = random_int_scalar(rng, bound);
        }
    }
    m
}
