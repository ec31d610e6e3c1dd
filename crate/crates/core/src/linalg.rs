//! Small dense exact linear algebra over `Ratio<i64>`.

use alloc::vec::Vec;
use num_traits::{One, Zero};

use crate::Rational;

pub(crate) type Matrix = Vec<Vec<Rational>>;

pub(crate) fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect()
}

/// Gauss-Jordan inverse. Returns `None` for singular input.
pub(crate) fn inverse(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let mut m = a.clone();
    let mut inv = identity(n);
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        inv.swap(col, pivot);
        let p = m[col][col];
        for j in 0..n {
            m[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col];
            for j in 0..n {
                let (mc, ic) = (m[col][j], inv[col][j]);
                m[r][j] -= f * mc;
                inv[r][j] -= f * ic;
            }
        }
    }
    Some(inv)
}

pub(crate) fn mat_vec(a: &Matrix, v: &[Rational]) -> Vec<Rational> {
    a.iter()
        .map(|row| row.iter().zip(v).fold(Rational::zero(), |acc, (x, y)| acc + x * y))
        .collect()
}

/// Leading principal minors, used to confirm positive definiteness.
pub(crate) fn leading_minors(a: &Matrix) -> Vec<Rational> {
    let n = a.len();
    let mut out = Vec::with_capacity(n);
    for k in 1..=n {
        let mut m: Matrix = a[..k].iter().map(|r| r[..k].to_vec()).collect();
        let mut det = Rational::one();
        for col in 0..k {
            let Some(pivot) = (col..k).find(|&r| !m[r][col].is_zero()) else {
                det = Rational::zero();
                break;
            };
            if pivot != col {
                m.swap(col, pivot);
                det = -det;
            }
            let p = m[col][col];
            det *= p;
            for r in col + 1..k {
                let f = m[r][col] / p;
                for j in col..k {
                    let v = m[col][j];
                    m[r][j] -= f * v;
                }
            }
        }
        out.push(det);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn inverse_of_a2_cartan() {
        let a = vec![vec![r(2), r(-1)], vec![r(-1), r(2)]];
        let inv = inverse(&a).unwrap();
        assert_eq!(inv[0][0], Rational::new(2, 3));
        assert_eq!(inv[0][1], Rational::new(1, 3));
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        let a = vec![vec![r(1), r(2)], vec![r(2), r(4)]];
        assert!(inverse(&a).is_none());
        assert_eq!(leading_minors(&a)[1], r(0));
    }
}
