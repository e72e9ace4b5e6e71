use std::collections::BTreeSet;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::linalg::{det_and_inverse, RatMatrix};
use super::{DominantWeight, Family, LieType};
use crate::error::{Error, Result};

/// Cartan data, quadratic form and root system of a simple type.
#[derive(Clone, Debug, Serialize)]
pub struct LieData {
    pub lie_type: LieType,
    /// `C_ij = 2 (α_i, α_j) / (α_j, α_j)`.
    pub cartan: Vec<Vec<i64>>,
    /// Gram matrix of the simple roots, long roots of norm 2.
    pub gram: RatMatrix,
    /// `⟨ω_i, ω_j⟩`.
    pub quad_form: RatMatrix,
    /// Positive roots in the fundamental-weight basis, ordered by height then coordinates.
    pub positive_roots: Vec<DominantWeight>,
    /// The same roots as integer combinations of simple roots.
    pub positive_roots_simple: Vec<Vec<i64>>,
    pub highest_root: DominantWeight,
    pub weyl_vector: DominantWeight,
    pub coxeter: u32,
    pub dual_coxeter: u32,
    pub exponents: Vec<u32>,
    /// Determinant of the quadratic form.
    pub delta: Rational64,
    /// `⟨ω_i, θ⟩`, so that the level of `λ` is `Σ λ_i · comarks_i`.
    pub comarks: Vec<i64>,
}

impl LieData {
    pub fn rank(&self) -> usize {
        self.lie_type.rank
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// `dim G = r (γ + 1)`.
    pub fn dimension(&self) -> u64 {
        self.rank() as u64 * (self.coxeter as u64 + 1)
    }

    /// Level of an integral weight given by its coordinates.
    pub fn level_of_ints(&self, lambda: &[i64]) -> i64 {
        lambda.iter().zip(&self.comarks).map(|(l, c)| l * c).sum()
    }

    /// Least common denominator of the quadratic form entries.
    pub fn quad_denominator(&self) -> i64 {
        self.quad_form
            .iter()
            .flatten()
            .fold(1, |acc, x| acc.lcm(x.denom()))
    }

    /// `D · F` as integers, with `D` from [`LieData::quad_denominator`].
    pub fn quad_form_scaled(&self) -> Vec<Vec<i64>> {
        let d = self.quad_denominator();
        self.quad_form
            .iter()
            .map(|row| row.iter().map(|x| (x * d).to_integer()).collect())
            .collect()
    }

    /// `⟨λ, μ⟩` for integral coordinate vectors, as a rational.
    pub fn inner_ints(&self, lambda: &[i64], mu: &[i64]) -> Rational64 {
        let mut acc = Rational64::zero();
        for (i, &l) in lambda.iter().enumerate() {
            if l == 0 {
                continue;
            }
            for (j, &m) in mu.iter().enumerate() {
                acc += self.quad_form[i][j] * (l * m);
            }
        }
        acc
    }

    /// Number of positive roots `Σ₊ = r γ / 2`.
    pub fn sigma_plus(&self) -> u32 {
        self.exponents.iter().sum()
    }
}

fn r(n: i64) -> Rational64 {
    Rational64::from_integer(n)
}

fn half(n: i64) -> Rational64 {
    Rational64::new(n, 2)
}

/// Simple-root Gram matrix, Bourbaki numbering (0-based here).
fn gram_matrix(t: LieType) -> RatMatrix {
    let n = t.rank;
    let mut b = vec![vec![r(0); n]; n];
    let mut link = |i: usize, j: usize, v: Rational64| {
        b[i][j] = v;
        b[j][i] = v;
    };
    match t.family {
        Family::A => {
            for i in 0..n.saturating_sub(1) {
                link(i, i + 1, r(-1));
            }
        }
        Family::B => {
            for i in 0..n - 1 {
                link(i, i + 1, r(-1));
            }
        }
        Family::C => {
            for i in 0..n - 2 {
                link(i, i + 1, half(-1));
            }
            link(n - 2, n - 1, r(-1));
        }
        Family::D => {
            for i in 0..n - 2 {
                link(i, i + 1, r(-1));
            }
            link(n - 3, n - 1, r(-1));
        }
        Family::E => {
            // 1-3-4-...-n chain, node 2 on node 4
            link(0, 2, r(-1));
            link(1, 3, r(-1));
            for i in 2..n - 1 {
                link(i, i + 1, r(-1));
            }
        }
        Family::F => {
            link(0, 1, r(-1));
            link(1, 2, r(-1));
            link(2, 3, half(-1));
        }
        Family::G => {
            link(0, 1, r(-1));
        }
    }
    for (i, row) in b.iter_mut().enumerate() {
        row[i] = match t.family {
            Family::B if i == n - 1 => r(1),
            Family::C if i < n - 1 => r(1),
            Family::F if i >= 2 => r(1),
            Family::G if i == 0 => Rational64::new(2, 3),
            _ => r(2),
        };
    }
    b
}

fn exponents(t: LieType) -> Vec<u32> {
    let n = t.rank as u32;
    match t.family {
        Family::A => (1..=n).collect(),
        Family::B | Family::C => (0..n).map(|i| 2 * i + 1).collect(),
        Family::D => {
            let mut e: Vec<u32> = (0..n - 1).map(|i| 2 * i + 1).collect();
            e.push(n - 1);
            e.sort_unstable();
            e
        }
        Family::E => match n {
            6 => vec![1, 4, 5, 7, 8, 11],
            7 => vec![1, 5, 7, 9, 11, 13, 17],
            _ => vec![1, 7, 11, 13, 17, 19, 23, 29],
        },
        Family::F => vec![1, 5, 7, 11],
        Family::G => vec![1, 5],
    }
}

fn positive_roots_simple(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let unit = |i: usize| {
        let mut v = vec![0i64; n];
        v[i] = 1;
        v
    };
    let coroot_pairing = |beta: &[i64], i: usize| -> i64 { (0..n).map(|j| beta[j] * cartan[j][i]).sum() };

    let mut all: BTreeSet<Vec<i64>> = (0..n).map(unit).collect();
    let mut layer: Vec<Vec<i64>> = (0..n).map(unit).collect();
    while !layer.is_empty() {
        let mut next = BTreeSet::new();
        for beta in &layer {
            for i in 0..n {
                // p = largest p with beta - p alpha_i a root
                let mut p = 0;
                let mut probe = beta.clone();
                loop {
                    probe[i] -= 1;
                    if all.contains(&probe) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let q = p - coroot_pairing(beta, i);
                if q > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next.into_iter().collect();
    }
    all.into_iter().collect()
}

/// Builds the full structural data of a simple type.
pub fn build_lie_data(t: LieType) -> Result<LieData> {
    let t = LieType::new(t.family, t.rank)?;
    let n = t.rank;
    let gram = gram_matrix(t);
    let cartan: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = gram[i][j] * 2 / gram[j][j];
                    debug_assert!(c.is_integer());
                    c.to_integer()
                })
                .collect()
        })
        .collect();
    let cartan_rat: RatMatrix = cartan.iter().map(|row| row.iter().map(|&c| r(c)).collect()).collect();
    let (_, cinv) = det_and_inverse(&cartan_rat).ok_or_else(|| Error::Consistency(format!("singular Cartan matrix for {t}")))?;
    let quad_form: RatMatrix = (0..n)
        .map(|k| (0..n).map(|j| cinv[k][j] * gram[j][j] / 2).collect())
        .collect();
    let (delta, _) = det_and_inverse(&quad_form).ok_or_else(|| Error::Consistency(format!("singular quadratic form for {t}")))?;

    let mut simple = positive_roots_simple(&cartan);
    let to_omega = |beta: &[i64]| -> Vec<i64> {
        (0..n).map(|i| (0..n).map(|j| beta[j] * cartan[j][i]).sum()).collect()
    };
    simple.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| to_omega(a).cmp(&to_omega(b)))
    });
    let positive_roots: Vec<DominantWeight> = simple.iter().map(|b| DominantWeight::from_ints(&to_omega(b))).collect();
    let top = simple.iter().map(|b| b.iter().sum::<i64>()).max().unwrap_or(0);
    let tops: Vec<usize> = (0..simple.len()).filter(|&i| simple[i].iter().sum::<i64>() == top).collect();
    if tops.len() != 1 {
        return Err(Error::Consistency(format!("{t}: highest root not unique")));
    }
    let highest_root = positive_roots[tops[0]].clone();
    let theta = highest_root.to_ints().expect("integral root");
    let comarks: Vec<i64> = (0..n)
        .map(|i| {
            let c: Rational64 = (0..n).map(|j| quad_form[i][j] * theta[j]).sum();
            debug_assert!(c.is_integer());
            c.to_integer()
        })
        .collect();

    let coxeter = (top + 1).to_u32().expect("small height");
    let dual_coxeter = (comarks.iter().sum::<i64>() + 1).to_u32().expect("small");
    Ok(LieData {
        lie_type: t,
        cartan,
        gram,
        quad_form,
        positive_roots,
        positive_roots_simple: simple,
        highest_root,
        weyl_vector: DominantWeight::rho(n),
        coxeter,
        dual_coxeter,
        exponents: exponents(t),
        delta,
        comarks,
    })
}
