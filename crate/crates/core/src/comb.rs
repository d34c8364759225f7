//! Comb attachments on `P1 x P1`.
//!
//! A [`CombSpec`] lists base points `t_j` and, for each, a blowup word over a
//! point `A_j` of the fiber `F_j`. Executing the words yields a surface `V`
//! with boundary
//!
//! ```text
//! D = F_inf + D_inf + (all exceptional curves) + Σ (F_j' - E_j)
//! ```
//!
//! where `E_j` is the last exceptional curve over `t_j`. The open surface
//! `X = V \ D` carries an A1-ruling whose only possibly non-reduced fibers are
//! `E_j ∩ X`, of multiplicity `m_j`, and `H_1(X; Z) = ⊕ Z/m_j`.
//!
//! `π_1(X)` is the free product of the `Z/m_j`; only its abelianization is
//! computed here.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lattice::{cokernel_invariants, AbelianGroupInvariants, IntMatrix};
use crate::surface::{
    fiber_label, BlowupCenter, DualGraph, PicardModel, SurfaceError, D_INF, INFINITY,
};

/// Alias for the exceptional curve of the previous blowup in a word.
pub const PREV: &str = "E_prev";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct CombSpec {
    pub points: Vec<CombPoint>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CombPoint {
    pub label: String,
    pub word: Vec<Step>,
}

/// One blowup of a word, named by incidence with tracked curves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "at", rename_all = "lowercase")]
pub enum Step {
    Free { on: String },
    Meet { curves: [String; 2] },
}

impl Step {
    pub fn free(on: impl Into<String>) -> Self {
        Step::Free { on: on.into() }
    }

    pub fn meet(a: impl Into<String>, b: impl Into<String>) -> Self {
        Step::Meet {
            curves: [a.into(), b.into()],
        }
    }
}

impl CombSpec {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn single(label: impl Into<String>, word: Vec<Step>) -> Self {
        CombSpec {
            points: vec![CombPoint {
                label: label.into(),
                word,
            }],
        }
    }

    pub fn from_json(s: &str) -> Result<Self, CombError> {
        serde_json::from_str(s).map_err(|e| CombError::Schema(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec serializes")
    }

    /// A word over `t` whose last exceptional curve is a tip of multiplicity
    /// `d` not meeting `D_inf`: a free blowup on `F_t`, `d - 1` blowups at
    /// the point where the newest curve meets `F_t'`, then a free point of
    /// the newest curve.
    pub fn multiplicity_word(point: &str, d: u64) -> Vec<Step> {
        let f = fiber_label(point);
        let mut word = vec![Step::free(&f)];
        if d >= 2 {
            for _ in 1..d {
                word.push(Step::meet(PREV, format!("{f}'")));
            }
            word.push(Step::free(PREV));
        }
        word
    }
}

/// The conditions a comb attachment has to satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Bullet {
    /// Every blowup after the first lies on the previous exceptional curve.
    Chain,
    /// `D_inf · E_j = 0`.
    SectionDisjoint,
    /// `E_j` is a tip of the fiber's dual graph.
    Tip,
    /// The fiber's dual graph is a comb with all degrees at most 3.
    CombShape,
}

impl fmt::Display for Bullet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Bullet::Chain => {
                "bullet (i): every blowup over A_j after the first must be centered on the previous exceptional (-1)-curve"
            }
            Bullet::SectionDisjoint => "bullet (ii): D_inf . E_j = 0 for the last (-1)-curve E_j",
            Bullet::Tip => "bullet (iii): E_j must be a tip of the dual graph of its fiber",
            Bullet::CombShape => "the dual graph of the fiber must be a comb with all vertex degrees <= 3",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub bullet: Bullet,
    pub point: String,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "point {}: {} ({})", self.point, self.bullet, self.detail)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CombError {
    #[error("malformed comb spec: {0}")]
    Schema(String),
    #[error("point {point}, step {step}: {reason}")]
    InvalidCenter {
        point: String,
        step: usize,
        reason: String,
    },
    #[error("{0}")]
    Constraint(Violation),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineFiber {
    pub point: String,
    /// Label of the last exceptional curve `E_j`.
    pub exceptional: String,
    pub multiplicity: u64,
}

/// A built comb surface: the model `V`, its boundary `D` and the affine
/// fibers `E_j ∩ X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombedSurface {
    pub spec: CombSpec,
    pub model: PicardModel,
    pub boundary: Vec<String>,
    pub affine_fibers: Vec<AffineFiber>,
    /// Fiber components kept in `X` besides `E_j`; always empty for combs.
    pub gamma_components: BTreeMap<String, Vec<String>>,
    chain_breaks: Vec<(String, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CombValidation {
    pub violations: Vec<Violation>,
}

impl CombValidation {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceReport {
    pub euler_x: i64,
    pub pic_x: AbelianGroupInvariants,
    pub q_acyclic: bool,
    pub z_acyclic: bool,
    pub multiplicities: Vec<u64>,
    /// Euler characteristic recomputed fiberwise from the affine fibers.
    pub suzuki_euler: i64,
}

fn strip_primes(s: &str) -> &str {
    s.trim_end_matches('\'')
}

fn exceptional_label(point: &str, k: usize) -> String {
    format!("E_{point}_{k}")
}

/// Executes the blowup words without judging them against the bullets.
pub fn assemble_comb(spec: &CombSpec) -> Result<CombedSurface, CombError> {
    let mut seen = BTreeSet::new();
    for p in &spec.points {
        if p.label.is_empty() || p.label == INFINITY {
            return Err(CombError::Schema(format!(
                "invalid point label {:?}",
                p.label
            )));
        }
        if !seen.insert(p.label.as_str()) {
            return Err(CombError::Schema(format!("duplicate point {:?}", p.label)));
        }
        if p.word.is_empty() {
            return Err(CombError::Schema(format!(
                "empty blowup word at {:?}",
                p.label
            )));
        }
    }

    let mut model = PicardModel::quadric();
    model.add_fiber(INFINITY)?;
    for p in &spec.points {
        model.add_fiber(&p.label)?;
    }

    let mut chain_breaks = Vec::new();
    let mut boundary = vec![fiber_label(INFINITY), D_INF.to_string()];
    let mut affine_fibers = Vec::new();
    for p in &spec.points {
        let fiber = fiber_label(&p.label);
        let mut prev: Option<String> = None;
        for (k, step) in p.word.iter().enumerate() {
            let invalid = |reason: String| CombError::InvalidCenter {
                point: p.label.clone(),
                step: k,
                reason,
            };
            let resolve = |name: &str| -> Result<String, CombError> {
                let name = strip_primes(name);
                if name == PREV {
                    return prev
                        .clone()
                        .ok_or_else(|| invalid("E_prev used in the first step".into()));
                }
                if name == D_INF {
                    if k == 0 {
                        return Ok(D_INF.to_string());
                    }
                    return Err(invalid("only the first center may lie on D_inf".into()));
                }
                let curve = model
                    .curve(name)
                    .map_err(|_| invalid(format!("unknown curve {name:?}")))?;
                if curve.fiber_id.as_deref() != Some(p.label.as_str()) {
                    return Err(invalid(format!(
                        "{name} is not a curve of the fiber over {}",
                        p.label
                    )));
                }
                Ok(name.to_string())
            };
            let center = match step {
                Step::Free { on } => BlowupCenter::Free(resolve(on)?),
                Step::Meet { curves: [a, b] } => BlowupCenter::Meet(resolve(a)?, resolve(b)?),
            };
            match (&prev, &center) {
                (None, BlowupCenter::Free(c)) if *c == fiber => {}
                (None, BlowupCenter::Meet(a, b))
                    if (*a == fiber && b == D_INF) || (a == D_INF && *b == fiber) => {}
                (None, _) => {
                    return Err(invalid(format!(
                        "the first center must be a point of {fiber}"
                    )));
                }
                (Some(e), BlowupCenter::Free(c)) if c == e => {}
                (Some(e), BlowupCenter::Meet(a, b)) if a == e || b == e => {}
                (Some(_), _) => chain_breaks.push((p.label.clone(), k)),
            }
            let label = exceptional_label(&p.label, k + 1);
            model
                .blowup_in_place(&center, &label)
                .map_err(|e| match e {
                    SurfaceError::DisjointCurves(a, b) => {
                        invalid(format!("{a} and {b} do not meet"))
                    }
                    SurfaceError::SameCurve(a) => invalid(format!("{a} named twice")),
                    other => CombError::Surface(other),
                })?;
            if let Some(e) = prev.replace(label) {
                boundary.push(e);
            }
        }
        let last = prev.expect("nonempty word");
        boundary.push(fiber);
        let multiplicity = model.multiplicity(&p.label, &last)?;
        affine_fibers.push(AffineFiber {
            point: p.label.clone(),
            exceptional: last,
            multiplicity,
        });
    }

    Ok(CombedSurface {
        spec: spec.clone(),
        model,
        boundary,
        gamma_components: spec
            .points
            .iter()
            .map(|p| (p.label.clone(), Vec::new()))
            .collect(),
        affine_fibers,
        chain_breaks,
    })
}

/// Checks the three bullet conditions and the comb shape of every fiber.
pub fn validate_comb(combed: &CombedSurface) -> CombValidation {
    let mut violations: Vec<Violation> = combed
        .chain_breaks
        .iter()
        .map(|(point, step)| Violation {
            bullet: Bullet::Chain,
            point: point.clone(),
            detail: format!("step {step} is not centered on the previous exceptional curve"),
        })
        .collect();
    let model = &combed.model;
    for af in &combed.affine_fibers {
        let mut push = |bullet, detail: String| {
            violations.push(Violation {
                bullet,
                point: af.point.clone(),
                detail,
            })
        };
        match model.intersection(D_INF, &af.exceptional) {
            Ok(p) if p.is_zero() => {}
            Ok(p) => push(
                Bullet::SectionDisjoint,
                format!("D_inf . {} = {p}", af.exceptional),
            ),
            Err(e) => push(Bullet::SectionDisjoint, e.to_string()),
        }
        match model.fiber_graph(&af.point) {
            Ok(g) => {
                if !g.is_tip(&af.exceptional).unwrap_or(false) {
                    let deg = g.index_of(&af.exceptional).map_or(0, |i| g.degree(i));
                    push(
                        Bullet::Tip,
                        format!("{} has degree {deg} in its fiber", af.exceptional),
                    );
                }
                if !g.is_comb() {
                    push(
                        Bullet::CombShape,
                        format!("fiber graph is not a comb (max degree {})", g.max_degree()),
                    );
                }
            }
            Err(e) => push(Bullet::CombShape, e.to_string()),
        }
    }
    violations.sort_by_key(|v| v.bullet);
    CombValidation { violations }
}

/// Executes and validates a spec; the first violated condition is an error.
pub fn build_comb(spec: &CombSpec) -> Result<CombedSurface, CombError> {
    let combed = assemble_comb(spec)?;
    if let Some(v) = validate_comb(&combed).violations.into_iter().next() {
        return Err(CombError::Constraint(v));
    }
    Ok(combed)
}

impl CombedSurface {
    pub fn boundary_graph(&self) -> Result<DualGraph, SurfaceError> {
        self.model.dual_graph(&self.boundary)
    }

    pub fn fiber_graph(&self, point: &str) -> Result<DualGraph, SurfaceError> {
        self.model.fiber_graph(point)
    }

    /// Euler characteristic of `E_j ∩ X`: a rational curve minus its points
    /// on the boundary.
    pub fn affine_fiber_euler(&self, exceptional: &str) -> Result<i64, SurfaceError> {
        let mut hits = 0i64;
        for b in &self.boundary {
            hits += i64::from(self.model.meet_count(exceptional, b)?);
        }
        Ok(2 - hits)
    }

    /// The boundary-class matrix whose cokernel is `Pic(X)`.
    pub fn boundary_matrix(&self) -> Result<IntMatrix, SurfaceError> {
        let cols: Vec<Vec<BigInt>> = self
            .boundary
            .iter()
            .map(|l| self.model.curve(l).map(|c| c.class.0.clone()))
            .collect::<Result<_, _>>()?;
        Ok(IntMatrix::from_columns(self.model.rank(), &cols)?)
    }
}

/// Euler characteristic of a fibration over a curve of Euler number
/// `base_euler` with general fiber `general_fiber_euler`, corrected by each
/// degenerate fiber.
pub fn suzuki_euler(
    base_euler: i64,
    general_fiber_euler: i64,
    degenerate_fiber_eulers: &[i64],
) -> i64 {
    base_euler * general_fiber_euler
        + degenerate_fiber_eulers
            .iter()
            .map(|e| e - general_fiber_euler)
            .sum::<i64>()
}

/// Invariants of `X = V \ D`.
pub fn affine_report(combed: &CombedSurface) -> Result<SurfaceReport, CombError> {
    let graph = combed.boundary_graph()?;
    if !graph.is_tree() {
        return Err(CombError::Inconsistent(
            "boundary divisor is not a connected tree".into(),
        ));
    }
    let euler_x = combed.model.euler_characteristic() - graph.rational_euler();
    let pic_x = cokernel_invariants(&combed.boundary_matrix()?);

    // Fibered count over the base P1 \ {t_inf}; the general fiber meets D
    // only in D_inf.
    let model = &combed.model;
    let f = model.fiber_class();
    let general_hits: BigInt = combed
        .boundary
        .iter()
        .map(|l| model.curve(l).map(|c| model.pairing(&f, &c.class)))
        .sum::<Result<BigInt, _>>()?;
    let general =
        2 - i64::try_from(general_hits).map_err(|_| CombError::Inconsistent("overflow".into()))?;
    let degenerate = combed
        .affine_fibers
        .iter()
        .map(|af| combed.affine_fiber_euler(&af.exceptional))
        .collect::<Result<Vec<_>, _>>()?;
    let suzuki = suzuki_euler(1, general, &degenerate);

    let q_acyclic = euler_x == 1 && pic_x.free_rank == 0;
    let z_acyclic = q_acyclic && pic_x.torsion.is_empty();
    if validate_comb(combed).is_valid() && (euler_x != 1 || suzuki != euler_x) {
        return Err(CombError::Inconsistent(format!(
            "valid comb with e(X) = {euler_x}, fiberwise count {suzuki}"
        )));
    }
    Ok(SurfaceReport {
        euler_x,
        pic_x,
        q_acyclic,
        z_acyclic,
        multiplicities: combed
            .affine_fibers
            .iter()
            .map(|a| a.multiplicity)
            .collect(),
        suzuki_euler: suzuki,
    })
}

/// A random spec with up to `max_points` points and words of length
/// `1..=max_word_len`, each center drawn uniformly among the centers the
/// word syntax allows at that moment. The result need not be valid.
pub fn random_spec<R: Rng + ?Sized>(
    rng: &mut R,
    max_points: usize,
    max_word_len: usize,
) -> CombSpec {
    let n = rng.gen_range(0..=max_points);
    let mut model = PicardModel::quadric();
    let points = (1..=n)
        .map(|j| {
            let label = format!("t{j}");
            let word = random_word(rng, &mut model, &label, max_word_len);
            CombPoint { label, word }
        })
        .collect();
    CombSpec { points }
}

fn random_word<R: Rng + ?Sized>(
    rng: &mut R,
    model: &mut PicardModel,
    label: &str,
    max_word_len: usize,
) -> Vec<Step> {
    let fiber = model.add_fiber(label).expect("distinct labels");
    let len = rng.gen_range(1..=max_word_len.max(1));
    let mut word = Vec::with_capacity(len);
    let mut prev: Option<String> = None;
    for k in 0..len {
        let step = match &prev {
            None => {
                if rng.gen_bool(0.5) {
                    Step::free(&fiber)
                } else {
                    Step::meet(&fiber, D_INF)
                }
            }
            Some(e) => {
                let mut options = vec![Step::free(PREV)];
                for c in model.fiber_components(label) {
                    if c != *e && model.meet_count(e, &c).unwrap_or(0) > 0 {
                        options.push(Step::meet(PREV, c));
                    }
                }
                options.choose(rng).expect("nonempty").clone()
            }
        };
        let center = match &step {
            Step::Free { on } if on == PREV => BlowupCenter::Free(prev.clone().unwrap()),
            Step::Free { on } => BlowupCenter::Free(on.clone()),
            Step::Meet { curves: [a, b] } => {
                let r = |s: &String| {
                    if s == PREV {
                        prev.clone().unwrap()
                    } else {
                        s.clone()
                    }
                };
                BlowupCenter::Meet(r(a), r(b))
            }
        };
        let e = exceptional_label(label, k + 1);
        model.blowup_in_place(&center, &e).expect("legal center");
        prev = Some(e);
        word.push(step);
    }
    word
}

/// Like [`random_spec`], but every word is rejection-sampled until its
/// fiber passes [`validate_comb`]. Fibers are independent, so this is the
/// distribution of [`random_spec`] conditioned on validity, apart from the
/// number of points, which stays uniform.
pub fn random_valid_spec<R: Rng + ?Sized>(
    rng: &mut R,
    max_points: usize,
    max_word_len: usize,
) -> CombSpec {
    let n = rng.gen_range(0..=max_points);
    let points = (1..=n)
        .map(|j| {
            let label = format!("t{j}");
            loop {
                let word = random_word(rng, &mut PicardModel::quadric(), &label, max_word_len);
                let spec = CombSpec::single(label.clone(), word);
                if assemble_comb(&spec).is_ok_and(|c| validate_comb(&c).is_valid()) {
                    break spec.points.into_iter().next().expect("one point");
                }
            }
        })
        .collect();
    CombSpec { points }
}
