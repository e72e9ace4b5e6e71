//! Small exact linear algebra over `Rational64`.

use num_rational::Rational64;
use num_traits::{One, Zero};

pub type RatMatrix = Vec<Vec<Rational64>>;

/// Determinant and inverse by Gauss-Jordan elimination.
/// Returns `None` for a singular matrix.
pub fn det_and_inverse(m: &RatMatrix) -> Option<(Rational64, RatMatrix)> {
    let n = m.len();
    let mut a = m.clone();
    let mut inv: RatMatrix = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rational64::one() } else { Rational64::zero() }).collect())
        .collect();
    let mut det = Rational64::one();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        if pivot != col {
            a.swap(pivot, col);
            inv.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col];
        det *= p;
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col];
            for j in 0..n {
                let (ac, ic) = (a[col][j], inv[col][j]);
                a[r][j] -= f * ac;
                inv[r][j] -= f * ic;
            }
        }
    }
    Some((det, inv))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational64 {
        Rational64::from_integer(n)
    }

    #[test]
    fn inverts_a2_cartan() {
        let m = vec![vec![r(2), r(-1)], vec![r(-1), r(2)]];
        let (det, inv) = det_and_inverse(&m).unwrap();
        assert_eq!(det, r(3));
        assert_eq!(inv[0][0], Rational64::new(2, 3));
        assert_eq!(inv[0][1], Rational64::new(1, 3));
    }

    #[test]
    fn singular_is_none() {
        let m = vec![vec![r(1), r(2)], vec![r(2), r(4)]];
        assert!(det_and_inverse(&m).is_none());
    }
}
