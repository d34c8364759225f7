//! Picard lattices of rational surfaces built from `P1 x P1` or a Hirzebruch
//! surface by blowups, with a set of tracked curves.
//!
//! Blowup centers are named only by incidence: a free point of one tracked
//! curve, or an intersection point of two. Intersection counts between
//! distinct tracked curves are kept incrementally and can be checked against
//! the lattice pairing with [`PicardModel::check_consistency`].

mod graph;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lattice::{self, IntMatrix, RationalSolution};

pub use graph::{DualGraph, DualGraphJson, GraphNode};

/// Fiber id of the fiber at infinity.
pub const INFINITY: &str = "inf";
/// Label of the section `P1 x {inf}` on the quadric.
pub const D_INF: &str = "D_inf";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SurfaceError {
    #[error("unknown curve {0:?}")]
    UnknownCurve(String),
    #[error("curve label {0:?} already in use")]
    DuplicateLabel(String),
    #[error("curves {0:?} and {1:?} do not meet")]
    DisjointCurves(String, String),
    #[error("blowup center names the same curve {0:?} twice")]
    SameCurve(String),
    #[error("malformed fiber {fiber:?}: {reason}")]
    MalformedFiber { fiber: String, reason: String },
    #[error("inconsistent model: {0}")]
    Inconsistent(String),
    #[error("malformed graph: {0}")]
    MalformedGraph(String),
    #[error(transparent)]
    Lattice(#[from] lattice::LatticeError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CurveRole {
    FiberComponent,
    Section,
    Exceptional,
}

/// Coefficients of a divisor class in the model's Picard basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveClass(pub Vec<BigInt>);

impl CurveClass {
    pub fn basis(rank: usize, i: usize) -> Self {
        let mut v = vec![BigInt::zero(); rank];
        v[i] = BigInt::one();
        CurveClass(v)
    }

    fn extend(&mut self) {
        self.0.push(BigInt::zero());
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrackedCurve {
    pub label: String,
    pub class: CurveClass,
    pub role: CurveRole,
    pub fiber_id: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlowupCenter {
    /// A point of the curve lying on no other tracked curve.
    Free(String),
    /// An intersection point of two tracked curves.
    Meet(String, String),
}

impl BlowupCenter {
    pub fn free(c: impl Into<String>) -> Self {
        BlowupCenter::Free(c.into())
    }

    pub fn meet(a: impl Into<String>, b: impl Into<String>) -> Self {
        BlowupCenter::Meet(a.into(), b.into())
    }

    pub fn is_inner(&self) -> bool {
        matches!(self, BlowupCenter::Meet(..))
    }
}

/// A component of a fiber with its multiplicity in the fiber divisor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberComponent {
    pub label: String,
    pub multiplicity: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PicardModel {
    basis_labels: Vec<String>,
    gram: IntMatrix,
    curves: Vec<TrackedCurve>,
    /// Intersection counts between distinct tracked curves, keyed `(i, j)`, `i < j`.
    meets: BTreeMap<(usize, usize), u32>,
    blowup_count: usize,
}

impl PicardModel {
    /// `P1 x P1` with basis `{f, h}` and the section `D_inf` tracked.
    pub fn quadric() -> Self {
        let mut model = PicardModel {
            basis_labels: vec!["f".into(), "h".into()],
            gram: IntMatrix::from_rows(&[[0, 1], [1, 0]]),
            curves: Vec::new(),
            meets: BTreeMap::new(),
            blowup_count: 0,
        };
        model
            .add_curve(D_INF, CurveClass::basis(2, 1), CurveRole::Section, None)
            .expect("fresh model");
        model
    }

    /// The Hirzebruch surface with basis `{f, m}`, `m^2 = -a`, tracking the
    /// sections `M_a` and `Mbar_a ~ m + a f` and the fibers `F_0`, `F_1`, `F_inf`.
    pub fn hirzebruch(a: u32) -> Self {
        let a = i64::from(a);
        let mut model = PicardModel {
            basis_labels: vec!["f".into(), "m".into()],
            gram: IntMatrix::from_rows(&[[0, 1], [1, -a]]),
            curves: Vec::new(),
            meets: BTreeMap::new(),
            blowup_count: 0,
        };
        let m = CurveClass::basis(2, 1);
        let mbar = CurveClass(vec![BigInt::from(a), BigInt::one()]);
        model
            .add_curve("M_a", m, CurveRole::Section, None)
            .and_then(|_| model.add_curve("Mbar_a", mbar, CurveRole::Section, None))
            .expect("fresh model");
        for t in ["0", "1", INFINITY] {
            model.add_fiber(t).expect("fresh model");
        }
        model
    }

    /// Adds a general fiber over the base point `point`, labelled `F_<point>`.
    /// It meets every tracked curve according to the lattice pairing.
    pub fn add_fiber(&mut self, point: &str) -> Result<String, SurfaceError> {
        if self
            .curves
            .iter()
            .any(|c| c.fiber_id.as_deref() == Some(point))
        {
            return Err(SurfaceError::DuplicateLabel(fiber_label(point)));
        }
        let label = fiber_label(point);
        let class = CurveClass::basis(self.rank(), 0);
        self.add_curve(
            &label,
            class,
            CurveRole::FiberComponent,
            Some(point.to_string()),
        )?;
        Ok(label)
    }

    fn add_curve(
        &mut self,
        label: &str,
        class: CurveClass,
        role: CurveRole,
        fiber_id: Option<String>,
    ) -> Result<(), SurfaceError> {
        if self.index_of(label).is_some() {
            return Err(SurfaceError::DuplicateLabel(label.to_string()));
        }
        let new = self.curves.len();
        for (i, c) in self.curves.iter().enumerate() {
            let p = self.pairing(&class, &c.class);
            if p.is_negative() {
                return Err(SurfaceError::Inconsistent(format!(
                    "new curve {label} pairs negatively with {}",
                    c.label
                )));
            }
            let p = p.to_u32().unwrap_or(u32::MAX);
            if p > 0 {
                self.meets.insert((i, new), p);
            }
        }
        self.curves.push(TrackedCurve {
            label: label.to_string(),
            class,
            role,
            fiber_id,
        });
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.basis_labels.len()
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn blowup_count(&self) -> usize {
        self.blowup_count
    }

    pub fn curves(&self) -> &[TrackedCurve] {
        &self.curves
    }

    /// Topological Euler characteristic of the surface.
    pub fn euler_characteristic(&self) -> i64 {
        4 + self.blowup_count as i64
    }

    /// Class of a fiber of the ruling.
    pub fn fiber_class(&self) -> CurveClass {
        CurveClass::basis(self.rank(), 0)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.curves.iter().position(|c| c.label == label)
    }

    pub fn curve(&self, label: &str) -> Result<&TrackedCurve, SurfaceError> {
        self.index_of(label)
            .map(|i| &self.curves[i])
            .ok_or_else(|| SurfaceError::UnknownCurve(label.to_string()))
    }

    pub fn pairing(&self, a: &CurveClass, b: &CurveClass) -> BigInt {
        let gb = self.gram.apply(&b.0).expect("class length matches rank");
        a.0.iter().zip(&gb).map(|(x, y)| x * y).sum()
    }

    /// Lattice pairing of two tracked curves (self-intersection when equal).
    pub fn intersection(&self, a: &str, b: &str) -> Result<BigInt, SurfaceError> {
        Ok(self.pairing(&self.curve(a)?.class, &self.curve(b)?.class))
    }

    pub fn self_intersection(&self, label: &str) -> Result<i64, SurfaceError> {
        let v = self.intersection(label, label)?;
        v.to_i64().ok_or_else(|| {
            SurfaceError::Inconsistent(format!("self-intersection of {label} overflows"))
        })
    }

    /// Incrementally maintained number of intersection points.
    pub fn meet_count(&self, a: &str, b: &str) -> Result<u32, SurfaceError> {
        let i = self
            .index_of(a)
            .ok_or_else(|| SurfaceError::UnknownCurve(a.to_string()))?;
        let j = self
            .index_of(b)
            .ok_or_else(|| SurfaceError::UnknownCurve(b.to_string()))?;
        Ok(self.meets_idx(i, j))
    }

    fn meets_idx(&self, i: usize, j: usize) -> u32 {
        if i == j {
            return 0;
        }
        self.meets.get(&(i.min(j), i.max(j))).copied().unwrap_or(0)
    }

    fn set_meets(&mut self, i: usize, j: usize, n: u32) {
        let key = (i.min(j), i.max(j));
        if n == 0 {
            self.meets.remove(&key);
        } else {
            self.meets.insert(key, n);
        }
    }

    /// Labels of tracked curves lying in the fiber over `fiber_id`.
    pub fn fiber_components(&self, fiber_id: &str) -> Vec<String> {
        self.curves
            .iter()
            .filter(|c| c.fiber_id.as_deref() == Some(fiber_id))
            .map(|c| c.label.clone())
            .collect()
    }

    /// Blows up `center`; the new exceptional curve is tracked as `new_label`.
    pub fn blowup(
        &self,
        center: &BlowupCenter,
        new_label: &str,
    ) -> Result<PicardModel, SurfaceError> {
        let mut next = self.clone();
        next.blowup_in_place(center, new_label)?;
        Ok(next)
    }

    pub fn blowup_in_place(
        &mut self,
        center: &BlowupCenter,
        new_label: &str,
    ) -> Result<(), SurfaceError> {
        if self.index_of(new_label).is_some() {
            return Err(SurfaceError::DuplicateLabel(new_label.to_string()));
        }
        let incident: Vec<usize> = match center {
            BlowupCenter::Free(c) => {
                vec![self
                    .index_of(c)
                    .ok_or_else(|| SurfaceError::UnknownCurve(c.clone()))?]
            }
            BlowupCenter::Meet(a, b) => {
                let i = self
                    .index_of(a)
                    .ok_or_else(|| SurfaceError::UnknownCurve(a.clone()))?;
                let j = self
                    .index_of(b)
                    .ok_or_else(|| SurfaceError::UnknownCurve(b.clone()))?;
                if i == j {
                    return Err(SurfaceError::SameCurve(a.clone()));
                }
                if self.meets_idx(i, j) == 0 {
                    return Err(SurfaceError::DisjointCurves(a.clone(), b.clone()));
                }
                vec![i, j]
            }
        };

        let old_rank = self.rank();
        let rank = old_rank + 1;
        let mut gram = IntMatrix::zeros(rank, rank);
        for i in 0..old_rank {
            for j in 0..old_rank {
                gram.set(i, j, self.gram.get(i, j).clone());
            }
        }
        gram.set(old_rank, old_rank, BigInt::from(-1));
        self.gram = gram;
        self.blowup_count += 1;
        self.basis_labels.push(format!("e{}", self.blowup_count));
        for c in &mut self.curves {
            c.class.extend();
        }
        for &i in &incident {
            self.curves[i].class.0[old_rank] -= 1;
        }
        if let [i, j] = incident[..] {
            let n = self.meets_idx(i, j);
            self.set_meets(i, j, n - 1);
        }

        let fiber_id = incident
            .iter()
            .find_map(|&i| self.curves[i].fiber_id.clone());
        let e = self.curves.len();
        self.curves.push(TrackedCurve {
            label: new_label.to_string(),
            class: CurveClass::basis(rank, old_rank),
            role: CurveRole::Exceptional,
            fiber_id,
        });
        for &i in &incident {
            self.set_meets(i, e, 1);
        }
        debug_assert!(self.check_pairings().is_ok(), "{:?}", self.check_pairings());
        Ok(())
    }

    /// Incremental intersection counts agree with class pairings.
    pub fn check_pairings(&self) -> Result<(), SurfaceError> {
        for i in 0..self.curves.len() {
            for j in i + 1..self.curves.len() {
                let p = self.pairing(&self.curves[i].class, &self.curves[j].class);
                let m = BigInt::from(self.meets_idx(i, j));
                if p != m {
                    return Err(SurfaceError::Inconsistent(format!(
                        "{}.{} = {p} in the lattice but {m} tracked",
                        self.curves[i].label, self.curves[j].label
                    )));
                }
            }
        }
        Ok(())
    }

    /// Full lattice self-check: symmetric unimodular gram of signature
    /// `(1, rank - 1)`, rank `2 + blowups`, and tracked pairings consistent.
    pub fn check_consistency(&self) -> Result<(), SurfaceError> {
        let bad = |s: String| Err(SurfaceError::Inconsistent(s));
        if !self.gram.is_symmetric() {
            return bad("gram matrix not symmetric".into());
        }
        if self.rank() != 2 + self.blowup_count {
            return bad(format!(
                "rank {} after {} blowups",
                self.rank(),
                self.blowup_count
            ));
        }
        let det = self.gram.determinant()?;
        if det.abs() != BigInt::one() {
            return bad(format!("gram determinant {det}"));
        }
        let sig = lattice::inertia(&self.gram)?;
        if sig != (1, self.rank() - 1, 0) {
            return bad(format!("signature {sig:?}"));
        }
        self.check_pairings()
    }

    /// Dual graph of the given tracked curves.
    pub fn dual_graph<S: AsRef<str>>(&self, labels: &[S]) -> Result<DualGraph, SurfaceError> {
        let idx: Vec<usize> = labels
            .iter()
            .map(|l| {
                self.index_of(l.as_ref())
                    .ok_or_else(|| SurfaceError::UnknownCurve(l.as_ref().to_string()))
            })
            .collect::<Result<_, _>>()?;
        let nodes = labels
            .iter()
            .map(|l| {
                Ok(GraphNode {
                    label: l.as_ref().to_string(),
                    weight: self.self_intersection(l.as_ref())?,
                })
            })
            .collect::<Result<Vec<_>, SurfaceError>>()?;
        let mut edges = Vec::new();
        for a in 0..idx.len() {
            for b in a + 1..idx.len() {
                let m = self.meets_idx(idx[a], idx[b]);
                if m > 0 {
                    edges.push((a, b, m));
                }
            }
        }
        Ok(DualGraph::new(nodes, edges))
    }

    pub fn fiber_graph(&self, fiber_id: &str) -> Result<DualGraph, SurfaceError> {
        self.dual_graph(&self.fiber_components(fiber_id))
    }

    /// Writes the fiber class as `f = Σ a_i C_i` over the tracked components
    /// of the fiber. The coefficients are the multiplicities of the
    /// components in the fiber divisor.
    pub fn fiber_decomposition(&self, fiber_id: &str) -> Result<Vec<FiberComponent>, SurfaceError> {
        let labels = self.fiber_components(fiber_id);
        let malformed = |reason: String| SurfaceError::MalformedFiber {
            fiber: fiber_id.to_string(),
            reason,
        };
        if labels.is_empty() {
            return Err(malformed("no tracked components".into()));
        }
        let columns: Vec<Vec<BigInt>> = labels
            .iter()
            .map(|l| self.curve(l).map(|c| c.class.0.clone()))
            .collect::<Result<_, _>>()?;
        let a = IntMatrix::from_columns(self.rank(), &columns)?;
        let solution = match lattice::solve_rational(&a, &self.fiber_class().0)? {
            RationalSolution::Unique(x) => x,
            RationalSolution::Inconsistent => {
                return Err(malformed(
                    "fiber class not in the span of its components".into(),
                ))
            }
            RationalSolution::Underdetermined => {
                return Err(malformed("component classes are linearly dependent".into()))
            }
        };
        labels
            .into_iter()
            .zip(solution)
            .map(|(label, x)| {
                if !x.is_integer() || !x.is_positive() {
                    return Err(SurfaceError::Inconsistent(format!(
                        "component {label} of fiber {fiber_id} has coefficient {x}"
                    )));
                }
                let multiplicity = x.numer().to_u64().ok_or_else(|| {
                    SurfaceError::Inconsistent(format!("multiplicity of {label} overflows"))
                })?;
                Ok(FiberComponent {
                    label,
                    multiplicity,
                })
            })
            .collect()
    }

    pub fn multiplicity(&self, fiber_id: &str, label: &str) -> Result<u64, SurfaceError> {
        self.fiber_decomposition(fiber_id)?
            .into_iter()
            .find(|c| c.label == label)
            .map(|c| c.multiplicity)
            .ok_or_else(|| SurfaceError::UnknownCurve(label.to_string()))
    }

    /// Zariski-lemma check: the intersection form on the fiber components is
    /// negative semidefinite with kernel spanned by the fiber divisor.
    pub fn fiber_matrix_check(&self, fiber_id: &str) -> bool {
        let Ok(decomp) = self.fiber_decomposition(fiber_id) else {
            return false;
        };
        let n = decomp.len();
        let mut form = IntMatrix::zeros(n, n);
        for (i, a) in decomp.iter().enumerate() {
            for (j, b) in decomp.iter().enumerate() {
                match self.intersection(&a.label, &b.label) {
                    Ok(v) => form.set(i, j, v),
                    Err(_) => return false,
                }
            }
        }
        let mults: Vec<BigInt> = decomp
            .iter()
            .map(|c| BigInt::from(c.multiplicity))
            .collect();
        zariski_check(&form, &mults)
    }
}

/// True iff the symmetric `form` is negative semidefinite with kernel
/// exactly the line through `candidate`.
pub fn zariski_check(form: &IntMatrix, candidate: &[BigInt]) -> bool {
    if !form.is_symmetric() || candidate.len() != form.rows() || candidate.iter().all(Zero::is_zero)
    {
        return false;
    }
    match form.apply(candidate) {
        Ok(v) if v.iter().all(Zero::is_zero) => {}
        _ => return false,
    }
    matches!(lattice::inertia(form), Ok((0, neg, 1)) if neg + 1 == form.rows())
}

pub fn fiber_label(point: &str) -> String {
    format!("F_{point}")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn quadric_lattice() {
        let mut q = PicardModel::quadric();
        assert_eq!(q.rank(), 2);
        assert_eq!(q.gram(), &IntMatrix::from_rows(&[[0, 1], [1, 0]]));
        q.add_fiber("0").unwrap();
        q.add_fiber("1").unwrap();
        assert_eq!(q.intersection("F_0", "F_1").unwrap(), BigInt::zero());
        assert_eq!(q.intersection("F_0", D_INF).unwrap(), BigInt::one());
        assert_eq!(q.meet_count("F_0", D_INF).unwrap(), 1);
        assert!(q.add_fiber("0").is_err());
        q.check_consistency().unwrap();
    }

    #[test]
    fn hirzebruch_lattice() {
        let h0 = PicardModel::hirzebruch(0);
        assert_eq!(h0.gram(), PicardModel::quadric().gram());
        for a in 0..5 {
            let h = PicardModel::hirzebruch(a);
            assert_eq!(h.intersection("M_a", "Mbar_a").unwrap(), BigInt::zero());
            // (m + a f)^2 = m^2 + 2a m.f = -a + 2a
            assert_eq!(h.self_intersection("Mbar_a").unwrap(), i64::from(a));
            assert_eq!(h.self_intersection("M_a").unwrap(), -i64::from(a));
            assert_eq!(h.meet_count("F_1", "Mbar_a").unwrap(), 1);
            h.check_consistency().unwrap();
        }
    }

    #[test]
    fn inner_blowup_separates() {
        let mut q = PicardModel::quadric();
        q.add_fiber("1").unwrap();
        let b = q.blowup(&BlowupCenter::meet("F_1", D_INF), "E").unwrap();
        assert_eq!(b.self_intersection("F_1").unwrap(), -1);
        assert_eq!(b.self_intersection(D_INF).unwrap(), -1);
        assert_eq!(b.intersection("F_1", D_INF).unwrap(), BigInt::zero());
        assert_eq!(b.intersection("F_1", "E").unwrap(), BigInt::one());
        assert_eq!(b.intersection(D_INF, "E").unwrap(), BigInt::one());
        assert_eq!(b.rank(), 3);
        b.check_consistency().unwrap();
        // value semantics
        assert_eq!(q.rank(), 2);
    }

    #[test]
    fn free_blowup() {
        let mut q = PicardModel::quadric();
        q.add_fiber("0").unwrap();
        let b = q.blowup(&BlowupCenter::free("F_0"), "E").unwrap();
        assert_eq!(b.self_intersection("F_0").unwrap(), -1);
        assert_eq!(b.self_intersection(D_INF).unwrap(), 0);
        assert_eq!(b.meet_count("F_0", D_INF).unwrap(), 1);
    }

    #[test]
    fn two_inner_blowups_chain() {
        // Hand expansion: F = f - e1 - e2, E1 = e1 - e2, E2 = e2.
        // Weights F^2 = -2, E1^2 = -2, E2^2 = -1; chain F - E2 - E1.
        let mut q = PicardModel::quadric();
        q.add_fiber("0").unwrap();
        let b = q
            .blowup(&BlowupCenter::free("F_0"), "E1")
            .and_then(|m| m.blowup(&BlowupCenter::meet("E1", "F_0"), "E2"))
            .unwrap();
        let g = b.fiber_graph("0").unwrap();
        let order = g.chain_from("F_0").unwrap();
        let w: Vec<i64> = order.iter().map(|&i| g.nodes()[i].weight).collect();
        assert_eq!(w, vec![-2, -1, -2]);
        assert_eq!(b.curve("F_0").unwrap().class.0, big(&[1, 0, -1, -1]));
        assert_eq!(b.curve("E1").unwrap().class.0, big(&[0, 0, 1, -1]));
    }

    #[test]
    fn blowup_errors() {
        let mut q = PicardModel::quadric();
        q.add_fiber("0").unwrap();
        q.add_fiber("1").unwrap();
        assert!(matches!(
            q.blowup(&BlowupCenter::meet("F_0", "F_1"), "E"),
            Err(SurfaceError::DisjointCurves(..))
        ));
        assert!(matches!(
            q.blowup(&BlowupCenter::free("F_7"), "E"),
            Err(SurfaceError::UnknownCurve(_))
        ));
        assert!(matches!(
            q.blowup(&BlowupCenter::free("F_0"), "F_1"),
            Err(SurfaceError::DuplicateLabel(_))
        ));
        assert!(matches!(
            q.blowup(&BlowupCenter::meet("F_0", "F_0"), "E"),
            Err(SurfaceError::SameCurve(_))
        ));
    }

    #[test]
    fn fiber_decompositions() {
        let mut q = PicardModel::quadric();
        q.add_fiber(INFINITY).unwrap();
        q.add_fiber("1").unwrap();
        assert_eq!(
            q.fiber_decomposition(INFINITY).unwrap(),
            vec![FiberComponent {
                label: "F_inf".into(),
                multiplicity: 1
            }]
        );
        // Solve f = a F' + b E1 + c E2 by hand in the rank-4 lattice:
        // F' = f - e1 - e2, E1 = e1 - e2, E2 = e2 gives a = 1, b = 1, c = 2.
        let b = q
            .blowup(&BlowupCenter::free("F_1"), "E1")
            .and_then(|m| m.blowup(&BlowupCenter::meet("E1", "F_1"), "E2"))
            .unwrap();
        let d: Vec<u64> = b
            .fiber_decomposition("1")
            .unwrap()
            .iter()
            .map(|c| c.multiplicity)
            .collect();
        assert_eq!(d, vec![1, 1, 2]);
        assert!(b.fiber_matrix_check("1"));
        assert!(b.fiber_matrix_check(INFINITY));
        assert!(b.fiber_decomposition("nowhere").is_err());
    }

    #[test]
    fn zariski_form() {
        let chain = IntMatrix::from_rows(&[[-2, 1, 0], [1, -1, 1], [0, 1, -2]]);
        assert!(zariski_check(&chain, &big(&[1, 2, 1])));
        assert!(!zariski_check(&chain, &big(&[1, 1, 1])));
        let corrupted = IntMatrix::from_rows(&[[-2, 1, 0], [1, -1, 1], [0, 1, -3]]);
        assert!(!zariski_check(&corrupted, &big(&[1, 2, 1])));
        assert!(zariski_check(&IntMatrix::from_rows(&[[0]]), &big(&[1])));
    }
}
