//! Weyl group enumeration.
//!
//! The orbit of a dominant weight is walked as a tree: a non-dominant weight
//! `ν` has the unique parent `s_i ν` where `i` is the first index with
//! `ν_i < 0`. No hashing is needed, and for a regular weight the tree depth
//! of a point is the length of the Weyl element reaching it.

use num_rational::Rational64;
use serde::Serialize;

use super::{DominantWeight, LieData};
use crate::error::{Error, Result};

/// `|W| = ∏ (e_i + 1)` over the exponents.
pub fn weyl_group_order(data: &LieData) -> u128 {
    data.exponents.iter().map(|&e| e as u128 + 1).product()
}

/// Calls `visit(point, sign)` once for every point of the Weyl orbit of the
/// dominant weight `lambda`. `sign` is `(-1)^depth`, which is the signature
/// of the unique Weyl element reaching the point when `lambda` is regular.
pub fn for_each_orbit_point(cartan: &[Vec<i64>], lambda: &[i64], mut visit: impl FnMut(&[i64], i32)) {
    fn walk(cartan: &[Vec<i64>], mu: &mut [i64], sign: i32, visit: &mut impl FnMut(&[i64], i32)) {
        visit(mu, sign);
        let n = mu.len();
        for i in 0..n {
            let c = mu[i];
            if c <= 0 {
                continue;
            }
            let row = &cartan[i];
            if (0..i).any(|j| mu[j] - c * row[j] < 0) {
                continue;
            }
            for j in 0..n {
                mu[j] -= c * row[j];
            }
            walk(cartan, mu, -sign, visit);
            for j in 0..n {
                mu[j] += c * row[j];
            }
        }
    }
    debug_assert!(lambda.iter().all(|&x| x >= 0), "orbit walk needs a dominant weight");
    let mut mu = lambda.to_vec();
    walk(cartan, &mut mu, 1, &mut visit);
}

/// A Weyl group element acting on fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeylElement {
    /// Integer matrix acting on column vectors of weight coordinates.
    pub matrix: Vec<Vec<i64>>,
    pub signature: i8,
}

impl WeylElement {
    pub fn apply(&self, w: &DominantWeight) -> DominantWeight {
        DominantWeight::new(
            self.matrix
                .iter()
                .map(|row| row.iter().zip(&w.coords).map(|(&a, b)| b * a).sum::<Rational64>())
                .collect(),
        )
    }

    pub fn apply_ints(&self, w: &[i64]) -> Vec<i64> {
        self.matrix
            .iter()
            .map(|row| row.iter().zip(w).map(|(a, b)| a * b).sum())
            .collect()
    }
}

/// All Weyl group elements, ordered by the orbit walk of `ρ`.
pub fn weyl_group(data: &LieData, cap: u64) -> Result<Vec<WeylElement>> {
    let order = weyl_group_order(data);
    if order > cap as u128 {
        return Err(Error::WeylCapExceeded {
            group: data.lie_type.to_string(),
            order,
            cap,
        });
    }
    let n = data.rank();
    let cartan = &data.cartan;
    let identity: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    let mut out = Vec::with_capacity(order as usize);

    // explicit stack: (point, matrix, signature)
    let mut stack = vec![(vec![1i64; n], identity, 1i8)];
    while let Some((mu, m, sign)) = stack.pop() {
        for i in (0..n).rev() {
            let c = mu[i];
            if c <= 0 || (0..i).any(|j| mu[j] - c * cartan[i][j] < 0) {
                continue;
            }
            let nu: Vec<i64> = (0..n).map(|j| mu[j] - c * cartan[i][j]).collect();
            // s_i on coordinates: row j of S_i M is M_j - C_ij M_i
            let child: Vec<Vec<i64>> = (0..n)
                .map(|j| (0..n).map(|l| m[j][l] - cartan[i][j] * m[i][l]).collect())
                .collect();
            stack.push((nu, child, -sign));
        }
        out.push(WeylElement { matrix: m, signature: sign });
    }
    if out.len() as u128 != order {
        return Err(Error::Consistency(format!(
            "{}: enumerated {} Weyl elements, expected {order}",
            data.lie_type,
            out.len()
        )));
    }
    Ok(out)
}
