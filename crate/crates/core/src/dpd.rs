//! Hyperbolic C*-surfaces over `A1` given by a pair of Q-divisors
//! `(D+, D-)` with `D+ + D- <= 0`.
//!
//! The graded ring itself is never built; every invariant here is read off
//! the divisor pair. Points of `A1` carry exact rational coordinates.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lattice::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DpdError {
    #[error("malformed DPD spec: {0}")]
    Schema(String),
    #[error("D+ + D- = {sum} > 0 at point {point}")]
    PositiveSum {
        point: Box<Rational>,
        sum: Box<Rational>,
    },
    #[error("invalid family parameters: {0}")]
    InvalidParams(String),
}

/// A Q-divisor on `A1`: finitely many points with nonzero rational
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash)]
pub struct QDivisor(BTreeMap<Rational, Rational>);

impl QDivisor {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `coeff · [point]`.
    pub fn point(point: Rational, coeff: Rational) -> Self {
        let mut d = Self::zero();
        d.add_term(point, coeff);
        d
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Rational, Rational)>) -> Self {
        let mut d = Self::zero();
        for (p, c) in terms {
            d.add_term(p, c);
        }
        d
    }

    pub fn add_term(&mut self, point: Rational, coeff: Rational) {
        let c = self.coeff(&point) + coeff;
        if c.is_zero() {
            self.0.remove(&point);
        } else {
            self.0.insert(point, c);
        }
    }

    pub fn coeff(&self, point: &Rational) -> Rational {
        self.0.get(point).cloned().unwrap_or_default()
    }

    pub fn support(&self) -> impl Iterator<Item = &Rational> {
        self.0.keys()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Rational, &Rational)> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn neg(&self) -> QDivisor {
        QDivisor(self.0.iter().map(|(p, c)| (p.clone(), -c)).collect())
    }

    pub fn add(&self, other: &QDivisor) -> QDivisor {
        let mut out = self.clone();
        for (p, c) in other.terms() {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    /// The integral divisor `⌊D⌋`.
    pub fn floor(&self) -> QDivisor {
        QDivisor::from_terms(
            self.terms()
                .map(|(p, c)| (p.clone(), Rational::from_integer(c.floor()))),
        )
    }

    /// The fractional part `{D} = D - ⌊D⌋`.
    pub fn fractional(&self) -> QDivisor {
        self.add(&self.floor().neg())
    }

    pub fn is_integral(&self) -> bool {
        self.0.values().all(Rational::is_integer)
    }
}

impl fmt::Display for QDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})[{p}]")?;
        }
        Ok(())
    }
}

/// A DPD presentation `(D+, D-)` on `A1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DpdSpec {
    d_plus: QDivisor,
    d_minus: QDivisor,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Plus,
    Minus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FiberKind {
    /// Irreducible reduced fiber `A1*`.
    General,
    /// Two orbit closures meeting in a fixed point.
    Cross {
        m_plus: u64,
        m_minus: u64,
        smooth: bool,
    },
    /// Irreducible fiber `A1*` of multiplicity `m >= 2`.
    Multiple { m: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberData {
    pub point: Rational,
    /// `(D+ + D-)(point)`.
    pub sum: Rational,
    #[serde(flatten)]
    pub kind: FiberKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DpdReport {
    /// Number of cross fibers.
    pub l: usize,
    /// Number of multiple fibers.
    pub k: usize,
    pub euler: i64,
    pub picq_trivial: bool,
    pub q_acyclic: bool,
    pub smooth_surface: bool,
    pub fibers: Vec<FiberData>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    point: Rational,
    coeff: Rational,
}

#[derive(Serialize, Deserialize)]
struct SpecJson {
    d_plus: Vec<TermJson>,
    d_minus: Vec<TermJson>,
}

fn divisor_from_json(terms: Vec<TermJson>, side: &str) -> Result<QDivisor, DpdError> {
    let mut seen = BTreeSet::new();
    let mut d = QDivisor::zero();
    for t in terms {
        if !seen.insert(t.point.clone()) {
            return Err(DpdError::Schema(format!(
                "point {} listed twice in {side}",
                t.point
            )));
        }
        d.add_term(t.point, t.coeff);
    }
    Ok(d)
}

fn divisor_to_json(d: &QDivisor) -> Vec<TermJson> {
    d.terms()
        .map(|(p, c)| TermJson {
            point: p.clone(),
            coeff: c.clone(),
        })
        .collect()
}

fn small_denominator(r: &Rational) -> Result<u64, DpdError> {
    r.denom()
        .to_u64()
        .ok_or_else(|| DpdError::Schema(format!("denominator of {r} is too large")))
}

impl DpdSpec {
    pub fn new(d_plus: QDivisor, d_minus: QDivisor) -> Result<Self, DpdError> {
        let spec = DpdSpec { d_plus, d_minus };
        for p in spec.points() {
            let sum = spec.sum_at(&p);
            if sum.is_positive() {
                return Err(DpdError::PositiveSum {
                    point: Box::new(p),
                    sum: Box::new(sum),
                });
            }
            small_denominator(&spec.d_plus.coeff(&p))?;
            small_denominator(&spec.d_minus.coeff(&p))?;
        }
        Ok(spec)
    }

    pub fn trivial() -> Self {
        DpdSpec {
            d_plus: QDivisor::zero(),
            d_minus: QDivisor::zero(),
        }
    }

    pub fn d_plus(&self) -> &QDivisor {
        &self.d_plus
    }

    pub fn d_minus(&self) -> &QDivisor {
        &self.d_minus
    }

    /// Union of both supports, sorted.
    pub fn points(&self) -> Vec<Rational> {
        let set: BTreeSet<Rational> = self
            .d_plus
            .support()
            .chain(self.d_minus.support())
            .cloned()
            .collect();
        set.into_iter().collect()
    }

    pub fn sum_at(&self, p: &Rational) -> Rational {
        self.d_plus.coeff(p) + self.d_minus.coeff(p)
    }

    pub fn from_json(s: &str) -> Result<Self, DpdError> {
        let raw: SpecJson = serde_json::from_str(s).map_err(|e| DpdError::Schema(e.to_string()))?;
        DpdSpec::new(
            divisor_from_json(raw.d_plus, "d_plus")?,
            divisor_from_json(raw.d_minus, "d_minus")?,
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&SpecJson {
            d_plus: divisor_to_json(&self.d_plus),
            d_minus: divisor_to_json(&self.d_minus),
        })
        .expect("spec serializes")
    }
}

impl fmt::Display for DpdSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D+ = {}, D- = {}", self.d_plus, self.d_minus)
    }
}

/// Smallest positive `m` with `m · D±(p)` integral.
pub fn m_pm(spec: &DpdSpec, p: &Rational, side: Side) -> u64 {
    let c = match side {
        Side::Plus => spec.d_plus.coeff(p),
        Side::Minus => spec.d_minus.coeff(p),
    };
    small_denominator(&c).expect("validated on construction")
}

/// Classifies the orbit-map fiber over every point in the support; all other
/// fibers are general.
pub fn fiber_analysis(spec: &DpdSpec) -> Vec<FiberData> {
    spec.points()
        .into_iter()
        .map(|p| {
            let sum = spec.sum_at(&p);
            let m_plus = m_pm(spec, &p, Side::Plus);
            let m_minus = m_pm(spec, &p, Side::Minus);
            let kind = if sum.is_negative() {
                let product = BigInt::from(m_plus) * m_minus;
                let smooth = sum.numer() == &BigInt::from(-1) && sum.denom() == &product;
                FiberKind::Cross {
                    m_plus,
                    m_minus,
                    smooth,
                }
            } else if m_plus >= 2 {
                FiberKind::Multiple { m: m_plus }
            } else {
                FiberKind::General
            };
            FiberData {
                point: p,
                sum,
                kind,
            }
        })
        .collect()
}

pub fn report(spec: &DpdSpec) -> DpdReport {
    let fibers = fiber_analysis(spec);
    let l = fibers
        .iter()
        .filter(|f| matches!(f.kind, FiberKind::Cross { .. }))
        .count();
    let k = fibers
        .iter()
        .filter(|f| matches!(f.kind, FiberKind::Multiple { .. }))
        .count();
    let smooth_surface = fibers
        .iter()
        .all(|f| !matches!(f.kind, FiberKind::Cross { smooth: false, .. }));
    DpdReport {
        l,
        k,
        euler: l as i64,
        picq_trivial: l <= 1,
        q_acyclic: l == 1 && smooth_surface,
        smooth_surface,
        fibers,
    }
}

/// Shifts by the principal divisor `-⌊D+⌋` so that `0 <= D+(p) < 1`.
pub fn normalize(spec: &DpdSpec) -> DpdSpec {
    let shift = spec.d_plus.floor();
    DpdSpec {
        d_plus: spec.d_plus.add(&shift.neg()),
        d_minus: spec.d_minus.add(&shift),
    }
}

/// Whether the two presentations differ by an integral (hence principal)
/// divisor.
pub fn equivalent(a: &DpdSpec, b: &DpdSpec) -> bool {
    normalize(a) == normalize(b)
}

/// `(D+, D-) ↦ (D-, D+)`, the effect of `λ ↦ λ^{-1}`.
pub fn invert(spec: &DpdSpec) -> DpdSpec {
    DpdSpec {
        d_plus: spec.d_minus.clone(),
        d_minus: spec.d_plus.clone(),
    }
}

/// Parameters `(e, m, n)` of the family `D+ = (e/m)[1]`,
/// `D- = -(1/n)[0] - (e/m)[1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FamilyParams {
    pub e: u64,
    pub m: u64,
    pub n: u64,
}

impl FamilyParams {
    /// Requires `0 < e < m`, `gcd(e, m) = 1`, `m >= 2`, `n >= 1`.
    pub fn new(e: u64, m: u64, n: u64) -> Result<Self, DpdError> {
        if m < 2 {
            return Err(DpdError::InvalidParams(format!(
                "m = {m} must be at least 2"
            )));
        }
        if e == 0 || e >= m {
            return Err(DpdError::InvalidParams(format!(
                "need 0 < e < m, got e = {e}, m = {m}"
            )));
        }
        if e.gcd(&m) != 1 {
            return Err(DpdError::InvalidParams(format!(
                "gcd(e, m) = gcd({e}, {m}) != 1"
            )));
        }
        if n == 0 {
            return Err(DpdError::InvalidParams("n must be positive".into()));
        }
        if m > i64::MAX as u64 || n > i64::MAX as u64 {
            return Err(DpdError::InvalidParams("parameters too large".into()));
        }
        Ok(FamilyParams { e, m, n })
    }

    /// `n >= 2`; the Q-homology planes of the inner-blowup construction.
    pub fn in_construction_range(&self) -> bool {
        self.n >= 2
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(e, m, n) = ({}, {}, {})", self.e, self.m, self.n)
    }
}

pub fn construction_spec(params: FamilyParams) -> DpdSpec {
    let FamilyParams { e, m, n } = params;
    let em = Rational::ratio(e as i64, m as i64);
    let zero = Rational::zero();
    let one = Rational::from(1);
    DpdSpec {
        d_plus: QDivisor::point(one.clone(), em.clone()),
        d_minus: QDivisor::from_terms([(zero, -Rational::ratio(1, n as i64)), (one, -em)]),
    }
}

/// Recognizes a presentation equivalent to a member of the family.
pub fn recognize_family(spec: &DpdSpec) -> Option<FamilyParams> {
    let s = normalize(spec);
    let zero = Rational::zero();
    let one = Rational::from(1);
    if s.points().iter().any(|p| *p != zero && *p != one) {
        return None;
    }
    let em = s.d_plus.coeff(&one);
    if !s.d_plus.coeff(&zero).is_zero() || !em.is_positive() || s.d_minus.coeff(&one) != -em.clone()
    {
        return None;
    }
    let at0 = -s.d_minus.coeff(&zero);
    if !at0.is_positive() || !at0.numer().is_one() {
        return None;
    }
    let e = em.numer().to_u64()?;
    let m = em.denom().to_u64()?;
    let n = at0.denom().to_u64()?;
    FamilyParams::new(e, m, n).ok()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalClass {
    /// `-(e(n-1) + 1) mod m`, the coefficient of `[O_1]` in `Z/m`.
    pub residue: u64,
    pub is_trivial: bool,
}

/// `K_X = -(e(n-1) + 1)[O_1]` with `m[O_1] = 0`.
pub fn canonical_class(params: FamilyParams) -> CanonicalClass {
    let FamilyParams { e, m, n } = params;
    let (e, m, n) = (u128::from(e), u128::from(m), u128::from(n));
    let k = (e * (n - 1) + 1) % m;
    let residue = ((m - k) % m) as u64;
    CanonicalClass {
        residue,
        is_trivial: residue == 0,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MlClass {
    /// A unique A1-ruling (class ML1).
    #[serde(rename = "ML1-unique-ruling")]
    UniqueRuling,
    /// Trivial Makar-Limanov invariant.
    #[serde(rename = "ML-trivial")]
    Trivial,
    #[serde(rename = "unknown")]
    Unknown,
}

impl fmt::Display for MlClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MlClass::UniqueRuling => "ML1-unique-ruling",
            MlClass::Trivial => "ML-trivial",
            MlClass::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MlClassification {
    pub class: MlClass,
    /// Number of points in the support of `{D+}`.
    pub plus_fractional_support: usize,
    /// Number of points in the support of `{D-}`.
    pub minus_fractional_support: usize,
    pub note: Option<String>,
}

/// Makar-Limanov class, decided only inside the `(e, m, n)` family. When
/// `family` is `None` the spec is matched against the family up to
/// equivalence.
pub fn ml_class(spec: &DpdSpec, family: Option<FamilyParams>) -> MlClassification {
    let plus_fractional_support = spec.d_plus.fractional().support().count();
    let minus_fractional_support = spec.d_minus.fractional().support().count();
    let family = family.or_else(|| recognize_family(spec));
    let (class, note) = match family {
        Some(p) if p.n > 1 => (
            MlClass::UniqueRuling,
            Some("{D-} is supported on 2 points; X has a unique A1-ruling".to_string()),
        ),
        Some(p) => {
            let note = if p.e == 1 && p.m == 2 {
                "second A1-ruling exists; X is isomorphic to P2 minus a smooth conic"
            } else {
                "second A1-ruling exists"
            };
            (MlClass::Trivial, Some(note.to_string()))
        }
        None => (MlClass::Unknown, None),
    };
    MlClassification {
        class,
        plus_fractional_support,
        minus_fractional_support,
        note,
    }
}

/// Log Kodaira dimension of `X \ Γ`: 0 when `m = n = 2`, 1 otherwise.
pub fn kodaira_of_complement(params: FamilyParams) -> Result<u8, DpdError> {
    if params.n < 2 {
        return Err(DpdError::InvalidParams(format!(
            "n = {} is outside the construction range n >= 2",
            params.n
        )));
    }
    Ok(if params.m == 2 && params.n == 2 { 0 } else { 1 })
}

/// One row of a family sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRow {
    pub e: u64,
    pub m: u64,
    pub n: u64,
    pub l: usize,
    pub k: usize,
    pub euler: i64,
    pub q_acyclic: bool,
    #[serde(rename = "K_trivial")]
    pub k_trivial: bool,
    pub ml_class: MlClass,
    pub kbar_complement: Option<u8>,
}

pub fn family_row(params: FamilyParams) -> FamilyRow {
    let spec = construction_spec(params);
    let r = report(&spec);
    FamilyRow {
        e: params.e,
        m: params.m,
        n: params.n,
        l: r.l,
        k: r.k,
        euler: r.euler,
        q_acyclic: r.q_acyclic,
        k_trivial: canonical_class(params).is_trivial,
        ml_class: ml_class(&spec, Some(params)).class,
        kbar_complement: kodaira_of_complement(params).ok(),
    }
}

/// Every valid `(e, m, n)` in the given inclusive ranges, in lexicographic
/// order; invalid combinations are skipped.
pub fn family_sweep(
    e: std::ops::RangeInclusive<u64>,
    m: std::ops::RangeInclusive<u64>,
    n: std::ops::RangeInclusive<u64>,
) -> Vec<FamilyRow> {
    let mut rows = Vec::new();
    for e in e {
        for m in m.clone() {
            for n in n.clone() {
                if let Ok(p) = FamilyParams::new(e, m, n) {
                    rows.push(family_row(p));
                }
            }
        }
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::ratio(p, q)
    }

    fn fam(e: u64, m: u64, n: u64) -> FamilyParams {
        FamilyParams::new(e, m, n).unwrap()
    }

    #[test]
    fn denominators() {
        let spec = construction_spec(fam(2, 5, 3));
        assert_eq!(m_pm(&spec, &r(7, 1), Side::Plus), 1);
        assert_eq!(m_pm(&spec, &r(0, 1), Side::Minus), 3);
        assert_eq!(m_pm(&spec, &r(1, 1), Side::Plus), 5);
        assert_eq!(m_pm(&spec, &r(0, 1), Side::Plus), 1);
    }

    #[test]
    fn family_fibers() {
        let spec = construction_spec(fam(1, 2, 2));
        let fibers = fiber_analysis(&spec);
        assert_eq!(fibers.len(), 2);
        assert_eq!(fibers[0].point, r(0, 1));
        assert_eq!(
            fibers[0].kind,
            FiberKind::Cross {
                m_plus: 1,
                m_minus: 2,
                smooth: true
            }
        );
        assert_eq!(fibers[1].kind, FiberKind::Multiple { m: 2 });
        let rep = report(&spec);
        assert_eq!((rep.l, rep.k, rep.euler), (1, 1, 1));
        assert!(rep.q_acyclic && rep.picq_trivial && rep.smooth_surface);
    }

    #[test]
    fn trivial_spec() {
        let rep = report(&DpdSpec::trivial());
        assert_eq!((rep.l, rep.k, rep.euler), (0, 0, 0));
        assert!(rep.picq_trivial);
        assert!(!rep.q_acyclic);
    }

    #[test]
    fn smooth_cross_with_both_denominators() {
        // 1/2 - 2/3 = -1/6 = -1/(2·3)
        let spec = DpdSpec::new(
            QDivisor::point(r(0, 1), r(1, 2)),
            QDivisor::point(r(0, 1), r(-2, 3)),
        )
        .unwrap();
        assert_eq!(
            fiber_analysis(&spec)[0].kind,
            FiberKind::Cross {
                m_plus: 2,
                m_minus: 3,
                smooth: true
            }
        );
        // D+ = 0 and D- = -1/2: m+ = 1, m- = 2, smooth; -2/3 with m- = 3 is not
        let spec = DpdSpec::new(QDivisor::zero(), QDivisor::point(r(0, 1), r(-1, 2))).unwrap();
        assert!(matches!(
            fiber_analysis(&spec)[0].kind,
            FiberKind::Cross { smooth: true, .. }
        ));
        let spec = DpdSpec::new(QDivisor::zero(), QDivisor::point(r(0, 1), r(-2, 3))).unwrap();
        assert!(matches!(
            fiber_analysis(&spec)[0].kind,
            FiberKind::Cross { smooth: false, .. }
        ));
        assert!(!report(&spec).q_acyclic);
    }

    #[test]
    fn two_crosses() {
        let spec = DpdSpec::new(
            QDivisor::zero(),
            QDivisor::from_terms([(r(0, 1), r(-1, 2)), (r(1, 1), r(-1, 2))]),
        )
        .unwrap();
        let rep = report(&spec);
        assert_eq!((rep.l, rep.euler), (2, 2));
        assert!(!rep.picq_trivial);
        assert!(!rep.q_acyclic);
    }

    #[test]
    fn positive_sum_rejected() {
        let err = DpdSpec::new(QDivisor::point(r(0, 1), r(1, 2)), QDivisor::zero()).unwrap_err();
        assert!(matches!(err, DpdError::PositiveSum { .. }));
    }

    #[test]
    fn normalization() {
        let spec = DpdSpec::new(
            QDivisor::point(r(1, 1), r(3, 2)),
            QDivisor::point(r(1, 1), r(-3, 2)),
        )
        .unwrap();
        let n = normalize(&spec);
        assert_eq!(n.d_plus(), &QDivisor::point(r(1, 1), r(1, 2)));
        assert_eq!(n.d_minus(), &QDivisor::point(r(1, 1), r(-1, 2)));
        assert_eq!(normalize(&n), n);
        let fam = construction_spec(fam(1, 2, 2));
        assert_eq!(normalize(&fam), fam);
        // negative coefficients shift upward
        let spec = DpdSpec::new(
            QDivisor::point(r(2, 1), r(-1, 3)),
            QDivisor::point(r(2, 1), r(-1, 3)),
        )
        .unwrap();
        assert_eq!(
            normalize(&spec).d_plus(),
            &QDivisor::point(r(2, 1), r(2, 3))
        );
        assert_eq!(
            normalize(&spec).d_minus(),
            &QDivisor::point(r(2, 1), r(-4, 3))
        );
    }

    #[test]
    fn equivalences() {
        let a = construction_spec(fam(1, 2, 2));
        let shift = QDivisor::from_terms([(r(5, 1), r(2, 1)), (r(1, 1), r(-1, 1))]);
        let b = DpdSpec::new(a.d_plus().add(&shift), a.d_minus().add(&shift.neg())).unwrap();
        assert!(equivalent(&a, &b));
        assert!(!equivalent(&a, &construction_spec(fam(1, 3, 2))));
        assert!(!equivalent(&a, &invert(&a)));
    }

    #[test]
    fn inversion() {
        let sym = DpdSpec::new(
            QDivisor::point(r(0, 1), r(-1, 2)),
            QDivisor::point(r(0, 1), r(-1, 2)),
        )
        .unwrap();
        assert_eq!(invert(&sym), sym);
        let a = construction_spec(fam(2, 3, 4));
        assert_eq!(invert(&invert(&a)), a);
        assert_eq!(
            fiber_analysis(&invert(&a))[0].kind,
            FiberKind::Cross {
                m_plus: 4,
                m_minus: 1,
                smooth: true
            }
        );
    }

    #[test]
    fn construction_values() {
        let s = construction_spec(fam(1, 2, 2));
        assert_eq!(s.d_plus(), &QDivisor::point(r(1, 1), r(1, 2)));
        assert_eq!(
            s.d_minus(),
            &QDivisor::from_terms([(r(0, 1), r(-1, 2)), (r(1, 1), r(-1, 2))])
        );
        let s = construction_spec(fam(2, 3, 4));
        assert_eq!(s.d_plus(), &QDivisor::point(r(1, 1), r(2, 3)));
        assert_eq!(
            s.d_minus(),
            &QDivisor::from_terms([(r(0, 1), r(-1, 4)), (r(1, 1), r(-2, 3))])
        );
        assert!(FamilyParams::new(2, 4, 2).is_err());
        assert!(FamilyParams::new(0, 3, 2).is_err());
        assert!(FamilyParams::new(3, 3, 2).is_err());
        assert!(FamilyParams::new(1, 1, 2).is_err());
        assert!(FamilyParams::new(1, 2, 0).is_err());
        assert!(!fam(1, 2, 1).in_construction_range());
    }

    #[test]
    fn canonical_classes() {
        // e(n-1) + 1 = 2 ≡ 0 mod 2
        assert_eq!(
            canonical_class(fam(1, 2, 2)),
            CanonicalClass {
                residue: 0,
                is_trivial: true
            }
        );
        // -(1·1 + 1) = -2 ≡ 1 mod 3
        assert_eq!(
            canonical_class(fam(1, 3, 2)),
            CanonicalClass {
                residue: 1,
                is_trivial: false
            }
        );
        // 2·2 + 1 = 5 ≡ 0 mod 5
        assert!(canonical_class(fam(2, 5, 3)).is_trivial);
    }

    #[test]
    fn ml_classes() {
        let c = ml_class(&construction_spec(fam(1, 2, 2)), Some(fam(1, 2, 2)));
        assert_eq!(c.class, MlClass::UniqueRuling);
        assert_eq!(c.minus_fractional_support, 2);
        let c = ml_class(&construction_spec(fam(1, 2, 1)), None);
        assert_eq!(c.class, MlClass::Trivial);
        assert!(c.note.unwrap().contains("P2 minus a smooth conic"));
        assert_eq!(c.minus_fractional_support, 1);
        assert_eq!(ml_class(&DpdSpec::trivial(), None).class, MlClass::Unknown);
    }

    #[test]
    fn recognition() {
        for (e, m, n) in [(1, 2, 2), (2, 5, 3), (1, 2, 1), (3, 7, 6)] {
            let p = fam(e, m, n);
            assert_eq!(recognize_family(&construction_spec(p)), Some(p));
        }
        assert_eq!(recognize_family(&DpdSpec::trivial()), None);
    }

    #[test]
    fn kodaira() {
        assert_eq!(kodaira_of_complement(fam(1, 2, 2)).unwrap(), 0);
        assert_eq!(kodaira_of_complement(fam(1, 3, 2)).unwrap(), 1);
        assert_eq!(kodaira_of_complement(fam(2, 3, 3)).unwrap(), 1);
        assert!(kodaira_of_complement(fam(1, 2, 1)).is_err());
    }

    #[test]
    fn json_round_trip() {
        let s = r#"{"d_plus":[{"point":"1","coeff":"1/2"}],"d_minus":[{"point":"0","coeff":"-1/2"},{"point":"1","coeff":"-1/2"}]}"#;
        let spec = DpdSpec::from_json(s).unwrap();
        assert_eq!(spec, construction_spec(fam(1, 2, 2)));
        assert_eq!(DpdSpec::from_json(&spec.to_json()).unwrap(), spec);
        let bad = r#"{"d_plus":[{"point":"1","coeff":"1/2"}],"d_minus":[]}"#;
        assert!(matches!(
            DpdSpec::from_json(bad),
            Err(DpdError::PositiveSum { .. })
        ));
        let dup =
            r#"{"d_plus":[{"point":"1","coeff":"1/2"},{"point":"1","coeff":"1/2"}],"d_minus":[]}"#;
        assert!(matches!(DpdSpec::from_json(dup), Err(DpdError::Schema(_))));
    }

    #[test]
    fn sweep_filters_invalid() {
        let rows = family_sweep(1..=2, 2..=5, 2..=5);
        assert!(rows.iter().all(|r| r.e < r.m && r.e.gcd(&r.m) == 1));
        // e = 1: m in 2..=5 (4 values); e = 2: m in {3, 5}; times 4 values of n
        assert_eq!(rows.len(), (4 + 2) * 4);
        let first = &rows[0];
        assert_eq!((first.e, first.m, first.n), (1, 2, 2));
        assert!(first.k_trivial && first.q_acyclic);
        assert_eq!(first.kbar_complement, Some(0));
    }
}
