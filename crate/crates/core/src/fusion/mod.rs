//! The fusion category `A_k(G)`.

mod character;
mod dims;
mod modular;
mod verlinde;

use std::cmp::Ordering;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::lie_core::{DominantWeight, LieData};
use crate::numeric::{Precision, Real};
use crate::qnum::{QContext, SineTable};

pub use character::{character_value, qdim_via_character, weight_system};
pub use dims::{
    chern_simons_s3, classical_asymptote, classical_limit_constant, global_dimension_closed,
    global_dimension_sum, kac_wakimoto_su, level_rank_check, s00_closed_form, su_global_dimension,
};
pub use modular::{modular_data, ModularChecks, ModularData};
pub use verlinde::{check_fusion_ring, verlinde_all, verlinde_fusion, FusionMatrix};

/// Integrable weights of `G` at level `k`, with the data needed to evaluate
/// quantum dimensions.
#[derive(Clone, Debug)]
pub struct LevelKCategory {
    pub lie: LieData,
    pub level: u32,
    pub weights: Vec<DominantWeight>,
    pub ctx: QContext,
    coords: Vec<Vec<i64>>,
    /// Per positive root, `den · ⟨ω_i, α⟩` for each `i`.
    root_pairings: Vec<Vec<i64>>,
    sines: SineTable,
}

impl LevelKCategory {
    pub fn rank(&self) -> usize {
        self.lie.rank()
    }

    pub fn altitude(&self) -> u32 {
        self.ctx.altitude()
    }

    pub fn precision(&self) -> Precision {
        self.ctx.precision()
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Integer coordinates of the `i`-th weight.
    pub fn coords(&self, i: usize) -> &[i64] {
        &self.coords[i]
    }

    pub fn index_of(&self, w: &DominantWeight) -> Option<usize> {
        let ints = w.to_ints()?;
        self.coords.iter().position(|c| *c == ints)
    }

    pub(crate) fn index_of_ints(&self, w: &[i64]) -> Option<usize> {
        self.coords
            .binary_search_by(|c| weight_order(&self.lie, c, w))
            .ok()
    }

    pub fn level_of_index(&self, i: usize) -> i64 {
        self.lie.level_of_ints(&self.coords[i])
    }

    fn require_integrable(&self, w: &DominantWeight) -> Result<usize> {
        self.index_of(w).ok_or_else(|| Error::NotIntegrable {
            weight: w.to_string(),
            level: self.level,
        })
    }

    /// `qdim` of the `i`-th weight via the quantum Weyl formula.
    pub fn qdim_index(&self, i: usize) -> Real {
        self.qdim_ints(&self.coords[i])
    }

    fn qdim_ints(&self, lambda: &[i64]) -> Real {
        let mut num = Real::one(self.precision());
        let mut den = Real::one(self.precision());
        for pair in &self.root_pairings {
            let rho: i64 = pair.iter().sum();
            let shifted: i64 = rho + pair.iter().zip(lambda).map(|(a, b)| a * b).sum::<i64>();
            if shifted == rho {
                continue;
            }
            num = num * self.sines.sin(shifted);
            den = den * self.sines.sin(rho);
        }
        num / den
    }

    /// All quantum dimensions, in weight order.
    pub fn qdims(&self) -> Vec<Real> {
        (0..self.len()).map(|i| self.qdim_index(i)).collect()
    }
}

/// Ordering of integrable weights: ascending level, then descending on the
/// coordinates read from last to first.
fn weight_order(lie: &LieData, a: &[i64], b: &[i64]) -> Ordering {
    lie.level_of_ints(a)
        .cmp(&lie.level_of_ints(b))
        .then_with(|| b.iter().rev().cmp(a.iter().rev()))
}

/// All dominant integral weights of level at most `k`, ordered.
pub fn integrable_weights(lie: &LieData, k: u32, precision: Precision) -> Result<LevelKCategory> {
    let ctx = QContext::new(lie.dual_coxeter + k, precision)?;
    let n = lie.rank();
    let mut coords = Vec::new();
    let mut current = vec![0i64; n];
    fn fill(i: usize, budget: i64, comarks: &[i64], current: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if i == comarks.len() {
            out.push(current.clone());
            return;
        }
        let mut c = 0;
        while c * comarks[i] <= budget {
            current[i] = c;
            fill(i + 1, budget - c * comarks[i], comarks, current, out);
            c += 1;
        }
        current[i] = 0;
    }
    fill(0, k as i64, &lie.comarks, &mut current, &mut coords);
    coords.sort_by(|a, b| weight_order(lie, a, b));

    let pairing_den = lie
        .gram
        .iter()
        .enumerate()
        .fold(1i64, |acc, (i, row)| acc.lcm((row[i] / 2).denom()));
    let root_pairings = lie
        .positive_roots_simple
        .iter()
        .map(|beta| {
            (0..n)
                .map(|i| {
                    let v = lie.gram[i][i] / 2 * beta[i] * pairing_den;
                    v.to_integer()
                })
                .collect()
        })
        .collect();
    let modulus = pairing_den * ctx.altitude() as i64;
    Ok(LevelKCategory {
        lie: lie.clone(),
        level: k,
        weights: coords.iter().map(|c| DominantWeight::from_ints(c)).collect(),
        ctx,
        coords,
        root_pairings,
        sines: SineTable::new(modulus, precision),
    })
}

/// Quantum dimension of an integrable weight.
pub fn quantum_dimension(cat: &LevelKCategory, n: &DominantWeight) -> Result<Real> {
    let i = cat.require_integrable(n)?;
    Ok(cat.qdim_index(i))
}

/// Number of integrable weights of `SU(N)` at level `k`: `C(N+k-1, N-1)`.
pub fn su_object_count(n: u64, k: u64) -> u128 {
    let mut c: u128 = 1;
    for i in 0..(n - 1) as u128 {
        c = c * (k as u128 + 1 + i) / (i + 1);
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie_core::build_lie_data;
    use crate::numeric::rel_close;
    use num_rational::Rational64;

    fn cat(s: &str, k: u32) -> LevelKCategory {
        integrable_weights(&build_lie_data(s.parse().unwrap()).unwrap(), k, Precision::default()).unwrap()
    }

    #[test]
    fn level_zero_is_trivial() {
        for s in ["A3", "G2", "E7"] {
            let c = cat(s, 0);
            assert_eq!(c.len(), 1);
            assert!(c.weights[0].is_zero());
            assert_eq!(c.qdim_index(0), Real::one(c.precision()));
        }
    }

    #[test]
    fn first_weight_is_trivial_and_levels_ascend() {
        let c = cat("B3", 3);
        assert!(c.weights[0].is_zero());
        let levels: Vec<i64> = (0..c.len()).map(|i| c.level_of_index(i)).collect();
        assert!(levels.windows(2).all(|w| w[0] <= w[1]));
        for i in 0..c.len() {
            assert_eq!(c.index_of_ints(c.coords(i)), Some(i));
        }
    }

    #[test]
    fn su2_qdims_are_q_numbers() {
        let c = cat("A1", 28);
        assert_eq!(c.len(), 29);
        for n in 0..29 {
            let want = crate::qnum::q_number(&c.ctx, Rational64::from_integer(n as i64 + 1));
            assert!(rel_close(&c.qdim_index(n), &want, &Real::ten_pow_neg(30, c.precision())));
        }
    }

    #[test]
    fn non_integrable_is_rejected() {
        let c = cat("A2", 1);
        assert!(quantum_dimension(&c, &DominantWeight::from_ints(&[1, 1])).is_err());
    }

    #[test]
    fn su_counts() {
        assert_eq!(su_object_count(2, 28), 29);
        assert_eq!(su_object_count(4, 6), 84);
        assert_eq!(su_object_count(3, 10), 66);
    }
}
