//! Surfaces as generator pipelines and their evaluation.
//!
//! A surface is described by boundary counts, a genus, and optionally an
//! explicit pipeline of elementary bordisms acting on a stack of wires: cap
//! (0 to 1), cup (1 to 0), pant (2 to 1), copant (1 to 2), cylinder (1 to
//! 1), and twist (2 to 2). Pipelines are validated by arity typechecking
//! only, so they may also describe disconnected bordisms; the genus field is
//! authoritative only when no pipeline is given, in which case a canonical
//! decomposition of the connected surface is generated.
//!
//! Evaluation assigns the unit to caps, the counit paired against the unit
//! to cups, multiplication to pants, and the metric-dual comultiplication
//! a -> sum_j (a t_j) (x) t^j to copants. All generators act without Koszul
//! dressing except the twist, which swaps two wires with the sign
//! (-1)^{deg a deg b}; with a plain-symmetric invariant pairing this
//! assignment is decomposition-invariant, and the closed torus evaluates to
//! the plain dimension of the algebra.

use crate::data::{check_frobenius_algebra, metric_inverse, FrobeniusData};
use crate::error::FrobError;
use exact_core::ExactScalar;
use std::collections::BTreeMap;

/// An elementary bordism acting on adjacent wires.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    /// Birth of a wire carrying the unit: 0 to 1.
    Cap,
    /// Death of a wire through the counit: 1 to 0.
    Cup,
    /// Multiplication of two adjacent wires: 2 to 1.
    Pant,
    /// Comultiplication into two adjacent wires: 1 to 2.
    Copant,
    /// Identity on one wire: 1 to 1.
    Cylinder,
    /// Signed swap of two adjacent wires: 2 to 2.
    Twist,
}

impl Generator {
    /// Wires consumed and produced.
    pub fn arity(self) -> (usize, usize) {
        match self {
            Generator::Cap => (0, 1),
            Generator::Cup => (1, 0),
            Generator::Pant => (2, 1),
            Generator::Copant => (1, 2),
            Generator::Cylinder => (1, 1),
            Generator::Twist => (2, 2),
        }
    }

    /// The lowercase name used in documents.
    pub fn name(self) -> &'static str {
        match self {
            Generator::Cap => "cap",
            Generator::Cup => "cup",
            Generator::Pant => "pant",
            Generator::Copant => "copant",
            Generator::Cylinder => "cylinder",
            Generator::Twist => "twist",
        }
    }
}

/// One pipeline entry: a generator applied at a wire position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PipelineStep {
    /// Which elementary bordism.
    pub generator: Generator,
    /// Index of the first wire it touches.
    pub position: usize,
}

impl PipelineStep {
    /// Convenience constructor.
    pub fn new(generator: Generator, position: usize) -> Self {
        PipelineStep { generator, position }
    }
}

/// A surface with boundary, optionally carrying an explicit pipeline.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Surface {
    genus: u32,
    inputs: usize,
    outputs: usize,
    pipeline: Option<Vec<PipelineStep>>,
}

impl Surface {
    /// Validate the pipeline (when given) by arity typechecking.
    pub fn new(
        genus: u32,
        inputs: usize,
        outputs: usize,
        pipeline: Option<Vec<PipelineStep>>,
    ) -> Result<Self, FrobError> {
        if let Some(steps) = &pipeline {
            let mut width = inputs;
            for (idx, step) in steps.iter().enumerate() {
                let (consumed, produced) = step.generator.arity();
                let fits = if consumed == 0 {
                    step.position <= width
                } else {
                    step.position + consumed <= width
                };
                if !fits {
                    return Err(FrobError::BadPipeline {
                        step: idx,
                        detail: format!(
                            "{} at position {} does not fit {} wires",
                            step.generator.name(),
                            step.position,
                            width
                        ),
                    });
                }
                width = width - consumed + produced;
            }
            if width != outputs {
                return Err(FrobError::BadPipeline {
                    step: steps.len(),
                    detail: format!("pipeline ends with {width} wires, surface declares {outputs}"),
                });
            }
        }
        Ok(Surface { genus, inputs, outputs, pipeline })
    }

    /// The closed connected surface of the given genus.
    pub fn closed(genus: u32) -> Self {
        Surface { genus, inputs: 0, outputs: 0, pipeline: None }
    }

    /// Declared genus.
    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// Input boundary circles.
    pub fn inputs(&self) -> usize {
        self.inputs
    }

    /// Output boundary circles.
    pub fn outputs(&self) -> usize {
        self.outputs
    }

    /// The explicit pipeline, if one was given.
    pub fn pipeline(&self) -> Option<&[PipelineStep]> {
        self.pipeline.as_deref()
    }

    /// The pipeline to evaluate: the explicit one, or a canonical
    /// decomposition of the connected surface (merge inputs, attach genus
    /// many handles, split into outputs).
    pub fn generators(&self) -> Vec<PipelineStep> {
        if let Some(steps) = &self.pipeline {
            return steps.clone();
        }
        let mut steps = Vec::new();
        let at0 = |g: Generator| PipelineStep::new(g, 0);
        if self.inputs == 0 {
            steps.push(at0(Generator::Cap));
        }
        for _ in 1..self.inputs.max(1) {
            steps.push(at0(Generator::Pant));
        }
        for _ in 0..self.genus {
            steps.push(at0(Generator::Copant));
            steps.push(at0(Generator::Pant));
        }
        for _ in 1..self.outputs.max(1) {
            steps.push(at0(Generator::Copant));
        }
        if self.outputs == 0 {
            steps.push(at0(Generator::Cup));
        }
        steps
    }
}

/// The value of a surface: a scalar for closed surfaces, a matrix otherwise.
#[derive(Clone, Debug, PartialEq)]
pub enum TqftValue {
    /// Closed surface invariant.
    Scalar(ExactScalar),
    /// Linear map from the inputs tensor power to the outputs tensor power.
    Map(TqftMatrix),
}

/// A linear map between tensor powers of the algebra, in the basis of
/// index tuples ranked big-endian.
#[derive(Clone, Debug, PartialEq)]
pub struct TqftMatrix {
    /// Algebra dimension.
    pub dim: usize,
    /// Number of input circles.
    pub inputs: usize,
    /// Number of output circles.
    pub outputs: usize,
    /// Row-major matrix, dim^outputs rows by dim^inputs columns.
    pub matrix: Vec<Vec<ExactScalar>>,
}

fn tuple_rank(tuple: &[usize], dim: usize) -> usize {
    tuple.iter().fold(0, |acc, &i| acc * dim + i)
}

fn apply_step(
    state: &BTreeMap<Vec<usize>, ExactScalar>,
    step: PipelineStep,
    f: &FrobeniusData,
    c: &[ExactScalar],
    ginv: Option<&Vec<Vec<ExactScalar>>>,
) -> Result<BTreeMap<Vec<usize>, ExactScalar>, FrobError> {
    let n = f.n();
    let at = |i: usize, j: usize, k: usize| &c[(i * n + j) * n + k];
    let p = step.position;
    let mut next: BTreeMap<Vec<usize>, ExactScalar> = BTreeMap::new();
    let mut add = |labels: Vec<usize>, coeff: ExactScalar| {
        if coeff.is_zero() {
            return;
        }
        let slot = next.entry(labels).or_insert_with(ExactScalar::zero);
        *slot += &coeff;
    };
    for (labels, coeff) in state {
        match step.generator {
            Generator::Cap => {
                let u = f.unit().expect("checked before evaluation");
                let mut out = labels.clone();
                out.insert(p, u);
                add(out, coeff.clone());
            }
            Generator::Cup => {
                let u = f.unit().expect("checked before evaluation");
                let a = labels[p];
                let mut out = labels.clone();
                out.remove(p);
                add(out, coeff * &f.metric()[a][u]);
            }
            Generator::Pant => {
                let (a, b) = (labels[p], labels[p + 1]);
                for l in 0..n {
                    let w = at(a, b, l);
                    if w.is_zero() {
                        continue;
                    }
                    let mut out = labels.clone();
                    out.remove(p + 1);
                    out[p] = l;
                    add(out, coeff * w);
                }
            }
            Generator::Copant => {
                let gi = ginv.expect("checked before evaluation");
                let a = labels[p];
                for j in 0..n {
                    for l in 0..n {
                        let w = at(a, j, l);
                        if w.is_zero() {
                            continue;
                        }
                        for r in 0..n {
                            let gw = &gi[j][r];
                            if gw.is_zero() {
                                continue;
                            }
                            let mut out = labels.clone();
                            out[p] = l;
                            out.insert(p + 1, r);
                            add(out, &(coeff * w) * gw);
                        }
                    }
                }
            }
            Generator::Cylinder => {
                add(labels.clone(), coeff.clone());
            }
            Generator::Twist => {
                let (a, b) = (labels[p], labels[p + 1]);
                let mut out = labels.clone();
                out.swap(p, p + 1);
                let signed = if f.parity(a) && f.parity(b) { -coeff.clone() } else { coeff.clone() };
                add(out, signed);
            }
        }
    }
    Ok(next)
}

/// Evaluate a surface against Frobenius data.
///
/// The data must pass `check_frobenius_algebra`; cap and cup additionally
/// require a declared unit, and copant requires an invertible metric (which
/// the axiom check already guarantees).
pub fn tqft_eval(f: &FrobeniusData, s: &Surface) -> Result<TqftValue, FrobError> {
    let verdicts = check_frobenius_algebra(f)?;
    if !verdicts.passed() {
        return Err(FrobError::NotFrobenius { detail: format!("{verdicts:?}") });
    }
    let steps = s.generators();
    let needs_unit = steps
        .iter()
        .position(|st| matches!(st.generator, Generator::Cap | Generator::Cup));
    if let Some(step) = needs_unit {
        if f.unit().is_none() {
            return Err(FrobError::MissingUnit { step });
        }
    }
    let needs_copant = steps.iter().any(|st| st.generator == Generator::Copant);
    let c = f.structure_constants()?;
    let ginv = if needs_copant { Some(metric_inverse(f.metric())?) } else { None };

    let n = f.n();
    let in_tuples = n
        .checked_pow(s.inputs() as u32)
        .filter(|&t| t <= 1 << 20)
        .ok_or_else(|| FrobError::Shape { detail: "input state space too large".into() })?;
    let out_tuples = n
        .checked_pow(s.outputs() as u32)
        .filter(|&t| t <= 1 << 20)
        .ok_or_else(|| FrobError::Shape { detail: "output state space too large".into() })?;

    let mut matrix = vec![vec![ExactScalar::zero(); in_tuples]; out_tuples];
    let mut column_tuple = vec![0usize; s.inputs()];
    for col in 0..in_tuples {
        // Decode the big-endian column rank into a wire labeling.
        let mut rest = col;
        for slot in column_tuple.iter_mut().rev() {
            *slot = rest % n;
            rest /= n;
        }
        let mut state = BTreeMap::new();
        state.insert(column_tuple.clone(), ExactScalar::one());
        for &step in &steps {
            state = apply_step(&state, step, f, &c, ginv.as_ref())?;
        }
        for (labels, coeff) in state {
            debug_assert_eq!(labels.len(), s.outputs());
            matrix[tuple_rank(&labels, n)][col] += &coeff;
        }
    }

    if s.inputs() == 0 && s.outputs() == 0 {
        Ok(TqftValue::Scalar(matrix[0][0].clone()))
    } else {
        Ok(TqftValue::Map(TqftMatrix {
            dim: n,
            inputs: s.inputs(),
            outputs: s.outputs(),
            matrix,
        }))
    }
}

/// The handle operator: multiplication composed with comultiplication.
pub fn handle_matrix(f: &FrobeniusData) -> Result<Vec<Vec<ExactScalar>>, FrobError> {
    let n = f.n();
    let c = f.structure_constants()?;
    let ginv = metric_inverse(f.metric())?;
    let at = |i: usize, j: usize, k: usize| &c[(i * n + j) * n + k];
    let mut h = vec![vec![ExactScalar::zero(); n]; n];
    for a in 0..n {
        for j in 0..n {
            for l in 0..n {
                let w = at(a, j, l);
                if w.is_zero() {
                    continue;
                }
                for r in 0..n {
                    for s in 0..n {
                        h[s][a] += &(&(w * &ginv[j][r]) * at(l, r, s));
                    }
                }
            }
        }
    }
    Ok(h)
}

/// Matrix of left multiplication by the element with the given coordinates.
pub fn left_multiplication_matrix(
    f: &FrobeniusData,
    coords: &[ExactScalar],
) -> Result<Vec<Vec<ExactScalar>>, FrobError> {
    let n = f.n();
    if coords.len() != n {
        return Err(FrobError::DimensionMismatch {
            detail: format!("{} coordinates for dimension {n}", coords.len()),
        });
    }
    let c = f.structure_constants()?;
    let at = |i: usize, j: usize, k: usize| &c[(i * n + j) * n + k];
    let mut m = vec![vec![ExactScalar::zero(); n]; n];
    for a in 0..n {
        if coords[a].is_zero() {
            continue;
        }
        for b in 0..n {
            for l in 0..n {
                m[l][b] += &(&coords[a] * at(a, b, l));
            }
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::StructureTensor;
    use exact_core::GradedArtinAlgebra;
    use std::sync::Arc;

    /// The exterior algebra on one odd generator: basis {one, th},
    /// th * th = 0, antidiagonal pairing.
    fn odd_line() -> FrobeniusData {
        let a = Arc::new(GradedArtinAlgebra::scalars());
        let mut c = vec![ExactScalar::zero(); 8];
        c[0] = ExactScalar::one();
        c[(0 * 2 + 1) * 2 + 1] = ExactScalar::one();
        c[(1 * 2 + 0) * 2 + 1] = ExactScalar::one();
        let t = StructureTensor::from_constants(2, a, c).unwrap();
        let g = vec![
            vec![ExactScalar::zero(), ExactScalar::one()],
            vec![ExactScalar::one(), ExactScalar::zero()],
        ];
        FrobeniusData::new(
            vec!["one".into(), "th".into()],
            vec![0, 1],
            g,
            Some(t),
            None,
            Some(0),
        )
        .unwrap()
    }

    #[test]
    fn sphere_pairs_unit_with_itself() {
        // Sphere = cap then cup: <1, 1> = g_00 = 0 for the odd line
        let f = odd_line();
        match tqft_eval(&f, &Surface::closed(0)).unwrap() {
            TqftValue::Scalar(v) => assert_eq!(v, ExactScalar::zero()),
            other => panic!("closed surface must give a scalar, got {other:?}"),
        }
    }

    #[test]
    fn torus_counts_dimension() {
        let f = odd_line();
        match tqft_eval(&f, &Surface::closed(1)).unwrap() {
            TqftValue::Scalar(v) => assert_eq!(v, ExactScalar::from_int(2)),
            other => panic!("closed surface must give a scalar, got {other:?}"),
        }
    }

    #[test]
    fn cylinder_pipeline_is_identity() {
        let f = odd_line();
        let s = Surface::new(
            0,
            1,
            1,
            Some(vec![PipelineStep::new(Generator::Cylinder, 0)]),
        )
        .unwrap();
        match tqft_eval(&f, &s).unwrap() {
            TqftValue::Map(m) => {
                assert_eq!(m.matrix[0][0], ExactScalar::one());
                assert_eq!(m.matrix[1][1], ExactScalar::one());
                assert_eq!(m.matrix[0][1], ExactScalar::zero());
                assert_eq!(m.matrix[1][0], ExactScalar::zero());
            }
            other => panic!("expected a map, got {other:?}"),
        }
    }

    #[test]
    fn twist_squares_to_identity() {
        let f = odd_line();
        let twice = Surface::new(
            0,
            2,
            2,
            Some(vec![
                PipelineStep::new(Generator::Twist, 0),
                PipelineStep::new(Generator::Twist, 0),
            ]),
        )
        .unwrap();
        match tqft_eval(&f, &twice).unwrap() {
            TqftValue::Map(m) => {
                for r in 0..4 {
                    for col in 0..4 {
                        let want =
                            if r == col { ExactScalar::one() } else { ExactScalar::zero() };
                        assert_eq!(m.matrix[r][col], want, "entry ({r},{col})");
                    }
                }
            }
            other => panic!("expected a map, got {other:?}"),
        }
    }

    #[test]
    fn odd_twist_picks_up_a_sign() {
        let f = odd_line();
        let s = Surface::new(
            0,
            2,
            2,
            Some(vec![PipelineStep::new(Generator::Twist, 0)]),
        )
        .unwrap();
        match tqft_eval(&f, &s).unwrap() {
            TqftValue::Map(m) => {
                // Column (th, th) has rank 1*2+1 = 3; swapping two odds
                // flips the sign on the same tuple
                assert_eq!(m.matrix[3][3], -ExactScalar::one());
                // Column (one, th) rank 1 maps to (th, one) rank 2 with +1
                assert_eq!(m.matrix[2][1], ExactScalar::one());
            }
            other => panic!("expected a map, got {other:?}"),
        }
    }

    #[test]
    fn disconnected_pipeline_multiplies_components() {
        // Two disjoint spheres as one pipeline: cap, cup, cap, cup over a
        // one-dimensional algebra with <e,e> = 3, so each sphere gives 3.
        let a = Arc::new(GradedArtinAlgebra::scalars());
        let t = StructureTensor::from_constants(1, a, vec![ExactScalar::one()]).unwrap();
        let f = FrobeniusData::new(
            vec!["e".into()],
            vec![0],
            vec![vec![ExactScalar::from_int(3)]],
            Some(t),
            None,
            Some(0),
        )
        .unwrap();
        let two_spheres = Surface::new(
            0,
            0,
            0,
            Some(vec![
                PipelineStep::new(Generator::Cap, 0),
                PipelineStep::new(Generator::Cup, 0),
                PipelineStep::new(Generator::Cap, 0),
                PipelineStep::new(Generator::Cup, 0),
            ]),
        )
        .unwrap();
        let one_sphere = tqft_eval(&f, &Surface::closed(0)).unwrap();
        let both = tqft_eval(&f, &two_spheres).unwrap();
        match (one_sphere, both) {
            (TqftValue::Scalar(s1), TqftValue::Scalar(s2)) => {
                assert_eq!(s1, ExactScalar::from_int(3));
                assert_eq!(s2, &s1 * &s1);
            }
            _ => panic!("closed surfaces must give scalars"),
        }
    }

    #[test]
    fn pipeline_arity_is_typechecked() {
        let bad = Surface::new(
            0,
            1,
            1,
            Some(vec![PipelineStep::new(Generator::Pant, 0)]),
        );
        assert!(matches!(bad, Err(FrobError::BadPipeline { step: 0, .. })));
        let wrong_end = Surface::new(
            0,
            1,
            2,
            Some(vec![PipelineStep::new(Generator::Cylinder, 0)]),
        );
        assert!(matches!(wrong_end, Err(FrobError::BadPipeline { step: 1, .. })));
    }

    #[test]
    fn missing_unit_is_reported_with_step() {
        let f = odd_line().with_unit(None).unwrap();
        let err = tqft_eval(&f, &Surface::closed(0));
        assert!(matches!(err, Err(FrobError::MissingUnit { step: 0 })));
    }

    #[test]
    fn handle_operator_matches_genus_pipeline() {
        // One-holed torus 1 -> 1 equals the handle matrix
        let f = odd_line();
        let s = Surface::new(1, 1, 1, None).unwrap();
        let h = handle_matrix(&f).unwrap();
        match tqft_eval(&f, &s).unwrap() {
            TqftValue::Map(m) => assert_eq!(m.matrix, h),
            other => panic!("expected a map, got {other:?}"),
        }
    }
}
