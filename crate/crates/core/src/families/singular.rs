//! The cusp-type curves `V(x^k - y^l)`.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::FamilyError;
use crate::lattice::Rational;

/// `coeff · x^i y^j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Monomial {
    pub coeff: i64,
    pub x: u32,
    pub y: u32,
}

/// `x^k - y^l`.
pub fn curve_polynomial(k: u32, l: u32) -> Vec<Monomial> {
    vec![
        Monomial {
            coeff: 1,
            x: k,
            y: 0,
        },
        Monomial {
            coeff: -1,
            x: 0,
            y: l,
        },
    ]
}

/// Weighted degree of each monomial under `(x, y) ↦ (λ^wx x, λ^wy y)`.
pub fn weighted_degrees(poly: &[Monomial], wx: u64, wy: u64) -> Vec<u64> {
    poly.iter()
        .map(|m| wx * u64::from(m.x) + wy * u64::from(m.y))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaneCurveSingularity {
    pub k: u32,
    pub l: u32,
    pub mu: u64,
    pub milnor_genus: Rational,
    /// Common weight of `x^k - y^l` under `(x, y) ↦ (λ^l x, λ^k y)`.
    pub weight: u64,
}

pub fn singular_line(k: u32, l: u32) -> Result<PlaneCurveSingularity, FamilyError> {
    if k < 2 || l < 2 || k.gcd(&l) != 1 {
        return Err(FamilyError::InvalidParams(format!(
            "V(x^{k} - y^{l}) needs coprime k, l >= 2"
        )));
    }
    let degrees = weighted_degrees(&curve_polynomial(k, l), u64::from(l), u64::from(k));
    let weight = u64::from(k) * u64::from(l);
    if degrees.iter().any(|&w| w != weight) {
        return Err(FamilyError::InvalidParams(format!(
            "x^{k} - y^{l} is not semi-invariant: weights {degrees:?}"
        )));
    }
    let mu = u64::from(k - 1) * u64::from(l - 1);
    Ok(PlaneCurveSingularity {
        k,
        l,
        mu,
        milnor_genus: Rational::ratio(mu as i64, 2),
        weight,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cusp() {
        let s = singular_line(2, 3).unwrap();
        assert_eq!(s.mu, 2);
        assert_eq!(s.milnor_genus, 1);
        assert_eq!(s.weight, 6);
        assert_eq!(singular_line(3, 4).unwrap().weight, 12);
    }

    #[test]
    fn rejects() {
        assert!(singular_line(2, 2).is_err());
        assert!(singular_line(1, 3).is_err());
        assert!(singular_line(4, 6).is_err());
    }
}
