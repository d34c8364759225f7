//! Exact integer and rational linear algebra.
//!
//! Everything here works over arbitrary-precision integers. Intersection
//! matrices of long blowup chains have small entries, but cokernel orders are
//! products of fiber multiplicities and fixed-width arithmetic is never safe.

mod matrix;
mod rational;
mod snf;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use matrix::IntMatrix;
pub use rational::Rational;
pub use snf::{snf, SnfResult};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("shape mismatch: expected {expected}, found {found}")]
    Shape { expected: usize, found: usize },
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
}

/// A finitely generated abelian group `Z^free_rank ⊕ Z/t1 ⊕ ... ⊕ Z/tk`
/// with `t1 | t2 | ... | tk` and every `ti >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct AbelianGroupInvariants {
    pub free_rank: usize,
    #[serde(with = "bigint_list")]
    pub torsion: Vec<BigInt>,
}

impl AbelianGroupInvariants {
    pub fn trivial() -> Self {
        Self::default()
    }

    /// Invariant-factor form of `⊕ Z/orders[i]`. Orders of 0 contribute a
    /// free summand; orders of ±1 vanish.
    pub fn from_cyclic_orders(orders: &[BigInt]) -> Self {
        let n = orders.len();
        let mut diag = IntMatrix::zeros(n, n);
        for (i, o) in orders.iter().enumerate() {
            diag.set(i, i, o.clone());
        }
        cokernel_invariants(&diag)
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Group order when finite.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.torsion.iter().product())
    }

    /// Torsion entries as machine integers, for tests and reports.
    pub fn torsion_u64(&self) -> Vec<u64> {
        self.torsion
            .iter()
            .map(|t| u64::try_from(t).expect("torsion coefficient exceeds u64"))
            .collect()
    }
}

impl fmt::Display for AbelianGroupInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Invariants of `Z^rows / im(A)`, where the columns of `A` generate the image.
pub fn cokernel_invariants(a: &IntMatrix) -> AbelianGroupInvariants {
    let factors = snf(a).invariant_factors();
    AbelianGroupInvariants {
        free_rank: a.rows() - factors.len(),
        torsion: factors.into_iter().filter(|d| !d.is_one()).collect(),
    }
}

/// Rank over Q by fraction-free row reduction. Deliberately does not go
/// through [`snf`], so the two can be cross-checked.
pub fn rational_rank(a: &IntMatrix) -> usize {
    let mut m = a.clone();
    let (rows, cols) = (m.rows(), m.cols());
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !m.get(i, c).is_zero()) else {
            continue;
        };
        m.swap_rows(rank, p);
        let pivot = m.get(rank, c).clone();
        for i in rank + 1..rows {
            let f = m.get(i, c).clone();
            if f.is_zero() {
                continue;
            }
            for j in c..cols {
                let v = m.get(i, j) * &pivot - &f * m.get(rank, j);
                m.set(i, j, v);
            }
        }
        rank += 1;
    }
    rank
}

/// Outcome of solving `A·x = b` over Q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RationalSolution {
    Unique(Vec<Rational>),
    Inconsistent,
    Underdetermined,
}

/// Solves `A·x = b` exactly over Q by Gauss-Jordan elimination.
pub fn solve_rational(a: &IntMatrix, b: &[BigInt]) -> Result<RationalSolution, LatticeError> {
    if b.len() != a.rows() {
        return Err(LatticeError::Shape {
            expected: a.rows(),
            found: b.len(),
        });
    }
    let (rows, cols) = (a.rows(), a.cols());
    let mut m: Vec<Vec<BigRational>> = (0..rows)
        .map(|i| {
            let mut r: Vec<BigRational> = a
                .row(i)
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect();
            r.push(BigRational::from_integer(b[i].clone()));
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone();
            for j in c..=cols {
                let v = &f * &m[r][j];
                m[i][j] -= v;
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return Ok(RationalSolution::Inconsistent);
    }
    if pivots.len() < cols {
        return Ok(RationalSolution::Underdetermined);
    }
    let mut x = vec![Rational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = Rational::from(m[i][cols].clone());
    }
    Ok(RationalSolution::Unique(x))
}

/// Inertia `(positive, negative, zero)` of a symmetric integer matrix,
/// by congruence diagonalization over Q.
pub fn inertia(a: &IntMatrix) -> Result<(usize, usize, usize), LatticeError> {
    if !a.is_square() {
        return Err(LatticeError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigRational::from_integer(a.get(i, j).clone()))
                .collect()
        })
        .collect();
    let (mut pos, mut neg, mut zero) = (0, 0, 0);
    let mut k = 0;
    while k < n {
        if m[k][k].is_zero() {
            if let Some(i) = (k + 1..n).find(|&i| !m[i][i].is_zero()) {
                m.swap(k, i);
                for row in m.iter_mut() {
                    row.swap(k, i);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !m[k][j].is_zero()) {
                // e_k <- e_k + e_j gives diagonal 2*m[k][j] since both diagonals vanish
                for c in 0..n {
                    let v = m[j][c].clone();
                    m[k][c] += v;
                }
                for r in 0..n {
                    let v = m[r][j].clone();
                    m[r][k] += v;
                }
            } else {
                zero += 1;
                k += 1;
                continue;
            }
        }
        let pivot = m[k][k].clone();
        if pivot.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in k + 1..n {
            let f = &m[i][k] / &pivot;
            if f.is_zero() {
                continue;
            }
            for c in k..n {
                let v = &f * &m[k][c];
                m[i][c] -= v;
            }
            for r in k..n {
                let v = &f * &m[r][k];
                m[r][i] -= v;
            }
        }
        k += 1;
    }
    Ok((pos, neg, zero))
}

/// Serializes big integers as JSON numbers when they fit in `i64`, and as
/// decimal strings otherwise.
pub mod bigint_list {
    use num_bigint::BigInt;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Small(i64),
        Big(String),
    }

    fn to_repr(x: &BigInt) -> Repr {
        i64::try_from(x).map_or_else(|_| Repr::Big(x.to_string()), Repr::Small)
    }

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(to_repr).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<Repr>::deserialize(d)?
            .into_iter()
            .map(|r| match r {
                Repr::Small(x) => Ok(BigInt::from(x)),
                Repr::Big(s) => s.parse().map_err(D::Error::custom),
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    /// Number of distinct cosets of dZ in Z, counted by reducing 0..3d.
    fn enumerate_cosets(d: i64) -> usize {
        let mut seen = std::collections::BTreeSet::new();
        for x in 0..3 * d {
            seen.insert(x.rem_euclid(d));
        }
        seen.len()
    }

    #[test]
    fn cokernel_of_scalar() {
        for d in 2..=6 {
            let inv = cokernel_invariants(&IntMatrix::from_rows(&[[d]]));
            assert_eq!(inv.free_rank, 0);
            assert_eq!(inv.torsion, big(&[d]));
            assert_eq!(inv.order().unwrap(), BigInt::from(enumerate_cosets(d)));
        }
    }

    #[test]
    fn cokernel_trivial_cases() {
        assert!(cokernel_invariants(&IntMatrix::identity(2)).is_trivial());
        let inv = cokernel_invariants(&IntMatrix::from_rows(&[[1], [0]]));
        assert_eq!(inv.free_rank, 1);
        assert!(inv.torsion.is_empty());
    }

    #[test]
    fn cyclic_orders_combine() {
        let inv = AbelianGroupInvariants::from_cyclic_orders(&big(&[2, 3]));
        assert_eq!(inv.torsion, big(&[6]));
        let inv = AbelianGroupInvariants::from_cyclic_orders(&big(&[2, 4, 1]));
        assert_eq!(inv.torsion, big(&[2, 4]));
        assert_eq!(inv.to_string(), "Z/2 + Z/4");
        assert_eq!(AbelianGroupInvariants::trivial().to_string(), "0");
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rational_rank(&IntMatrix::identity(4)), 4);
        assert_eq!(rational_rank(&IntMatrix::from_rows(&[[1, 2], [2, 4]])), 1);
        assert_eq!(rational_rank(&IntMatrix::zeros(3, 2)), 0);
        assert_eq!(rational_rank(&IntMatrix::zeros(0, 0)), 0);
    }

    #[test]
    fn inertia_examples() {
        assert_eq!(
            inertia(&IntMatrix::from_rows(&[[0, 1], [1, 0]])).unwrap(),
            (1, 1, 0)
        );
        assert_eq!(
            inertia(&IntMatrix::from_rows(&[[0, 1], [1, -3]])).unwrap(),
            (1, 1, 0)
        );
        assert_eq!(
            inertia(&IntMatrix::from_rows(&[[-2, 1, 0], [1, -1, 1], [0, 1, -2]])).unwrap(),
            (0, 2, 1)
        );
        assert_eq!(
            inertia(&IntMatrix::from_rows(&[[0, 0], [0, 0]])).unwrap(),
            (0, 0, 2)
        );
    }

    #[test]
    fn solve_examples() {
        let a = IntMatrix::from_rows(&[[1, 0], [1, 1], [0, 2]]);
        match solve_rational(&a, &big(&[1, 2, 2])).unwrap() {
            RationalSolution::Unique(x) => {
                assert_eq!(x, vec![Rational::from(1), Rational::from(1)])
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            solve_rational(&a, &big(&[1, 2, 3])).unwrap(),
            RationalSolution::Inconsistent
        );
        let a = IntMatrix::from_rows(&[[2, 4]]);
        assert_eq!(
            solve_rational(&a, &big(&[2])).unwrap(),
            RationalSolution::Underdetermined
        );
        let a = IntMatrix::from_rows(&[[2]]);
        assert_eq!(
            solve_rational(&a, &big(&[1])).unwrap(),
            RationalSolution::Unique(vec![Rational::ratio(1, 2)])
        );
    }

    #[test]
    fn torsion_serde() {
        let inv = AbelianGroupInvariants {
            free_rank: 0,
            torsion: vec![BigInt::from(6), "100000000000000000000000".parse().unwrap()],
        };
        let s = serde_json::to_string(&inv).unwrap();
        assert_eq!(
            s,
            r#"{"free_rank":0,"torsion":[6,"100000000000000000000000"]}"#
        );
        assert_eq!(
            serde_json::from_str::<AbelianGroupInvariants>(&s).unwrap(),
            inv
        );
    }
}
