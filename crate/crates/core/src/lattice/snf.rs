use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// Smith normal form `U·A·V = S` of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    /// The nonzero diagonal entries `d1 | d2 | ...` of `S`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let k = self.s.rows().min(self.s.cols());
        (0..k)
            .map(|i| self.s.get(i, i).clone())
            .take_while(|d| !d.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// Computes the Smith normal form together with unimodular transforms.
///
/// Pivots on the entry of smallest absolute value in the trailing submatrix,
/// which keeps intermediate entries small. The diagonal is normalized to be
/// nonnegative, so `S` is unique.
pub fn snf(a: &IntMatrix) -> SnfResult {
    let rows = a.rows();
    let cols = a.cols();
    let mut s = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = smallest_nonzero(&s, t) else {
                return SnfResult { u, s, v };
            };
            s.swap_rows(t, pi);
            u.swap_rows(t, pi);
            s.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let pivot = s.get(t, t).clone();
            let mut remainder = false;
            for i in t + 1..rows {
                let q = s.get(i, t) / &pivot;
                let neg_q = -q;
                s.add_row_multiple(i, t, &neg_q);
                u.add_row_multiple(i, t, &neg_q);
                remainder |= !s.get(i, t).is_zero();
            }
            for j in t + 1..cols {
                let q = s.get(t, j) / &pivot;
                let neg_q = -q;
                s.add_col_multiple(j, t, &neg_q);
                v.add_col_multiple(j, t, &neg_q);
                remainder |= !s.get(t, j).is_zero();
            }
            if remainder {
                continue;
            }

            // Pivot must divide the whole trailing block.
            let offending =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !s.get(i, j).is_multiple_of(&pivot)));
            match offending {
                Some(i) => {
                    let one = BigInt::from(1);
                    s.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if s.get(t, t).is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    SnfResult { u, s, v }
}

fn smallest_nonzero(s: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in t..s.rows() {
        for j in t..s.cols() {
            let x = s.get(i, j);
            if x.is_zero() {
                continue;
            }
            let ax = x.abs();
            if best.as_ref().is_none_or(|(_, _, b)| ax < *b) {
                best = Some((i, j, ax));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(a: &IntMatrix) -> SnfResult {
        let r = snf(a);
        assert_eq!(&(&r.u * a) * &r.v, r.s);
        assert_eq!(r.u.determinant().unwrap().abs(), BigInt::from(1));
        assert_eq!(r.v.determinant().unwrap().abs(), BigInt::from(1));
        for i in 0..r.s.rows() {
            for j in 0..r.s.cols() {
                if i != j {
                    assert!(r.s.get(i, j).is_zero());
                }
            }
        }
        let d = r.invariant_factors();
        for w in d.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        r
    }

    #[test]
    fn identity_is_fixed() {
        let r = check(&IntMatrix::identity(2));
        assert_eq!(r.s, IntMatrix::identity(2));
    }

    #[test]
    fn two_by_two() {
        let r = check(&IntMatrix::from_rows(&[[2, 4], [6, 8]]));
        assert_eq!(r.s, IntMatrix::from_rows(&[[2, 0], [0, 4]]));
    }

    #[test]
    fn zero_and_empty() {
        let r = check(&IntMatrix::zeros(3, 2));
        assert_eq!(r.s, IntMatrix::zeros(3, 2));
        let r = check(&IntMatrix::zeros(0, 3));
        assert_eq!(r.s.rows(), 0);
        assert_eq!(r.v, IntMatrix::identity(3));
    }

    #[test]
    fn non_divisible_diagonal() {
        // diag(2, 3) has invariant factors 1, 6
        let r = check(&IntMatrix::from_rows(&[[2, 0], [0, 3]]));
        assert_eq!(
            r.invariant_factors(),
            vec![BigInt::from(1), BigInt::from(6)]
        );
    }

    #[test]
    fn negative_entries() {
        let r = check(&IntMatrix::from_rows(&[[-4, 0, 0], [0, 6, 0], [0, 0, -10]]));
        let d: Vec<i64> = r
            .invariant_factors()
            .iter()
            .map(|x| x.try_into().unwrap())
            .collect();
        assert_eq!(d, vec![2, 2, 60]);
    }
}
