//! Inner blowups over `D0 = M_a + Mbar_a + F_0 + F_1 + F_inf` on a
//! Hirzebruch surface, producing a Q-homology plane with an untwisted
//! A1*-fibration whose degenerate fibers are `Γ + n·E_0` over 0 and
//! `m·E_1` over 1.

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::FamilyError;
use crate::dpd::{self, DpdReport, FamilyParams, FiberKind};
use crate::lattice::{cokernel_invariants, AbelianGroupInvariants, IntMatrix, Rational};
use crate::surface::{fiber_label, BlowupCenter, FiberComponent, PicardModel};

use crate::comb::PREV;

/// Fiber ids of the two degenerate fibers.
pub const FIBER_CROSS: &str = "0";
pub const FIBER_MULTIPLE: &str = "1";

/// One inner blowup, at the intersection point of two curves. `E_prev`
/// names the newest exceptional curve of the same word.
pub type InnerStep = [String; 2];

pub fn inner(a: &str, b: &str) -> InnerStep {
    [a.to_string(), b.to_string()]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionSurface {
    pub a: u32,
    pub model: PicardModel,
    pub boundary: Vec<String>,
    /// The unique (-1)-curve over 0.
    pub e0: String,
    /// The unique (-1)-curve over 1.
    pub e1: String,
    /// Proper transform of `F_0`; `Γ = F_0' ∩ X`.
    pub gamma: String,
    pub n: u64,
    pub m: u64,
    pub fiber0: Vec<FiberComponent>,
    pub fiber1: Vec<FiberComponent>,
    /// Weights of the chain over 0, read from `F_0'`.
    pub fiber0_weights: Vec<i64>,
    pub gamma_dot_e0: i64,
    pub euler_x: i64,
    pub pic_x: AbelianGroupInvariants,
    pub q_acyclic: bool,
}

impl ConstructionSurface {
    pub fn multiplicity_of(&self, label: &str) -> Option<u64> {
        self.fiber0
            .iter()
            .chain(&self.fiber1)
            .find(|c| c.label == label)
            .map(|c| c.multiplicity)
    }
}

fn run_word(model: &mut PicardModel, fiber: &str, word: &[InnerStep]) -> Result<(), FamilyError> {
    let mut prev: Option<String> = None;
    for (k, [a, b]) in word.iter().enumerate() {
        let resolve = |s: &str| -> Result<String, FamilyError> {
            let s = s.trim_end_matches('\'');
            if s == PREV {
                prev.clone().ok_or_else(|| {
                    FamilyError::Construction(format!("fiber {fiber}: E_prev in the first step"))
                })
            } else {
                Ok(s.to_string())
            }
        };
        let (a, b) = (resolve(a)?, resolve(b)?);
        let in_fiber = |l: &str| {
            model
                .curve(l)
                .map(|c| c.fiber_id.as_deref() == Some(fiber))
                .unwrap_or(false)
        };
        if !in_fiber(&a) && !in_fiber(&b) {
            return Err(FamilyError::Construction(format!(
                "fiber {fiber}, step {k}: {a} ∩ {b} does not lie over {fiber}"
            )));
        }
        let label = format!("E_{fiber}_{}", k + 1);
        model.blowup_in_place(&BlowupCenter::Meet(a, b), &label)?;
        prev = Some(label);
    }
    Ok(())
}

fn unique_minus_one(model: &PicardModel, fiber: &str) -> Result<String, FamilyError> {
    let mut found = Vec::new();
    for l in model.fiber_components(fiber) {
        if model.self_intersection(&l)? == -1 {
            found.push(l);
        }
    }
    match found.len() {
        1 => Ok(found.remove(0)),
        count => Err(FamilyError::NoUniqueMinusOneCurve {
            fiber: fiber.to_string(),
            count,
        }),
    }
}

/// Runs the two inner-blowup words on `Σ_a` and reads off `(n, m)`, the
/// boundary and the invariants of `X`.
pub fn build_construction(
    a: u32,
    word0: &[InnerStep],
    word1: &[InnerStep],
) -> Result<ConstructionSurface, FamilyError> {
    let mut model = PicardModel::hirzebruch(a);
    run_word(&mut model, FIBER_CROSS, word0)?;
    run_word(&mut model, FIBER_MULTIPLE, word1)?;

    let e0 = unique_minus_one(&model, FIBER_CROSS)?;
    let e1 = unique_minus_one(&model, FIBER_MULTIPLE)?;
    let gamma = fiber_label(FIBER_CROSS);
    let fiber0 = model.fiber_decomposition(FIBER_CROSS)?;
    let fiber1 = model.fiber_decomposition(FIBER_MULTIPLE)?;
    let mult = |fiber: &[FiberComponent], l: &str| {
        fiber.iter().find(|c| c.label == l).map(|c| c.multiplicity)
    };
    let n = mult(&fiber0, &e0).expect("E_0 lies over 0");
    let m = mult(&fiber1, &e1).expect("E_1 lies over 1");

    let gamma_sq = model.self_intersection(&gamma)?;
    if n < 2 || gamma_sq != -(n as i64) {
        return Err(FamilyError::Construction(format!(
            "F_0'^2 = {gamma_sq} but E_0 has multiplicity {n}; need F_0'^2 = -n <= -2"
        )));
    }

    let g0 = model.fiber_graph(FIBER_CROSS)?;
    let fiber0_weights = g0
        .chain_from(&gamma)
        .ok_or_else(|| {
            FamilyError::Construction("fiber over 0 is not a chain starting at F_0'".into())
        })?
        .into_iter()
        .map(|i| g0.nodes()[i].weight)
        .collect();
    let gamma_dot_e0 = model
        .intersection(&gamma, &e0)?
        .to_i64()
        .expect("small intersection number");

    let removed = [e0.as_str(), e1.as_str(), gamma.as_str()];
    let boundary: Vec<String> = model
        .curves()
        .iter()
        .map(|c| c.label.clone())
        .filter(|l| !removed.contains(&l.as_str()))
        .collect();
    let graph = model.dual_graph(&boundary)?;
    if !graph.is_tree() {
        return Err(FamilyError::Construction(
            "boundary is not an SNC tree".into(),
        ));
    }
    let euler_x = model.euler_characteristic() - graph.rational_euler();
    let columns: Vec<_> = boundary
        .iter()
        .map(|l| model.curve(l).map(|c| c.class.0.clone()))
        .collect::<Result<_, _>>()?;
    let pic_x = cokernel_invariants(&IntMatrix::from_columns(model.rank(), &columns)?);
    let q_acyclic = euler_x == 1 && pic_x.free_rank == 0;

    Ok(ConstructionSurface {
        a,
        model,
        boundary,
        e0,
        e1,
        gamma,
        n,
        m,
        fiber0,
        fiber1,
        fiber0_weights,
        gamma_dot_e0,
        euler_x,
        pic_x,
        q_acyclic,
    })
}

/// Word over 0 giving the chain `[-n, -1, -2, ..., -2]` from `F_0'`: blow
/// up `F_0 ∩ M_a`, then `n - 1` times the point where the newest curve
/// meets `F_0'`.
pub fn cross_fiber_word(n: u64) -> Vec<InnerStep> {
    chain_word(FIBER_CROSS, n)
}

fn chain_word(fiber: &str, k: u64) -> Vec<InnerStep> {
    let f = fiber_label(fiber);
    let mut word = vec![inner(&f, "M_a")];
    for _ in 1..k {
        word.push(inner(PREV, &f));
    }
    word
}

/// A curated pair of words realizing `(m, n)`, paired with a family member
/// `(e, m, n)` for the DPD side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionFixture {
    pub params: FamilyParams,
    pub a: u32,
    pub word0: Vec<InnerStep>,
    pub word1: Vec<InnerStep>,
}

impl ConstructionFixture {
    pub fn build(&self) -> Result<ConstructionSurface, FamilyError> {
        build_construction(self.a, &self.word0, &self.word1)
    }
}

/// Fixtures for `(m, n)` in `{(2, 2), (2, 3), (3, 2)}`.
pub fn fixtures() -> Vec<ConstructionFixture> {
    let fx = |e, m, n, a, word1| ConstructionFixture {
        params: FamilyParams::new(e, m, n).expect("fixture parameters are valid"),
        a,
        word0: cross_fiber_word(n),
        word1,
    };
    vec![
        fx(1, 2, 2, 0, chain_word(FIBER_MULTIPLE, 2)),
        fx(1, 2, 3, 1, chain_word(FIBER_MULTIPLE, 2)),
        // F_1' = f - e1 - e2, E_1_1 = e1 - e2 - e3, E_1_2 = e2 - e3 and
        // E_1_3 = e3 give f = F_1' + E_1_1 + 2 E_1_2 + 3 E_1_3.
        fx(
            1,
            3,
            2,
            2,
            vec![
                inner("F_1", "M_a"),
                inner(PREV, "F_1"),
                inner(PREV, "E_1_1"),
            ],
        ),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheck {
    pub agree: bool,
    pub diagnostics: Vec<String>,
}

/// Compares the lattice-side construction with the DPD report of the
/// matching family member.
pub fn crosscheck(construction: &ConstructionSurface, report: &DpdReport) -> CrossCheck {
    let mut diagnostics = Vec::new();
    let mut expect = |what: &str, lattice: String, dpd: String| {
        if lattice != dpd {
            diagnostics.push(format!("{what}: lattice side {lattice}, DPD side {dpd}"));
        }
    };
    expect(
        "e(X)",
        construction.euler_x.to_string(),
        report.euler.to_string(),
    );
    expect(
        "Q-acyclic",
        construction.q_acyclic.to_string(),
        report.q_acyclic.to_string(),
    );
    expect("reducible fibers", "1".into(), report.l.to_string());
    expect("multiple fibers", "1".into(), report.k.to_string());

    let zero = Rational::zero();
    let one = Rational::from(1);
    let gamma_mult = construction
        .multiplicity_of(&construction.gamma)
        .unwrap_or(0);
    let mut lattice_cross = vec![gamma_mult, construction.n];
    lattice_cross.sort_unstable();
    let dpd_cross = report
        .fibers
        .iter()
        .find(|f| f.point == zero)
        .and_then(|f| match f.kind {
            FiberKind::Cross {
                m_plus, m_minus, ..
            } => {
                let mut v = vec![m_plus, m_minus];
                v.sort_unstable();
                Some(v)
            }
            _ => None,
        });
    expect(
        "cross fiber over 0",
        format!("{lattice_cross:?}"),
        dpd_cross.map_or("none".into(), |v| format!("{v:?}")),
    );
    let dpd_multiple = report
        .fibers
        .iter()
        .find(|f| f.point == one)
        .and_then(|f| match f.kind {
            FiberKind::Multiple { m } => Some(m),
            _ => None,
        });
    expect(
        "multiple fiber over 1",
        construction.m.to_string(),
        dpd_multiple.map_or("none".into(), |m| m.to_string()),
    );
    if construction.gamma_dot_e0 != 1 {
        diagnostics.push(format!("Γ · E_0 = {} != 1", construction.gamma_dot_e0));
    }
    CrossCheck {
        agree: diagnostics.is_empty(),
        diagnostics,
    }
}

/// Builds the fixture and checks it against `construction_spec(e, m, n)`.
pub fn crosscheck_fixture(fixture: &ConstructionFixture) -> Result<CrossCheck, FamilyError> {
    let surface = fixture.build()?;
    let report = dpd::report(&dpd::construction_spec(fixture.params));
    Ok(crosscheck(&surface, &report))
}
