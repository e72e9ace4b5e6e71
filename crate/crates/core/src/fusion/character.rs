//! Classical characters evaluated at points of order `κ`.

use std::collections::BTreeMap;

use num_rational::Rational64;
use num_traits::Zero;

use super::modular::dominant_representative;
use super::LevelKCategory;
use crate::error::{Error, Result};
use crate::lie_core::{for_each_orbit_point, weyl_group_order, DominantWeight, LieData};
use crate::numeric::{Complex, Real};
use crate::tolerance::DEFAULT_WEIGHT_SYSTEM_CAP;

/// Alternating orbit sum `Σ_w ε_w exp(2πi ⟨w λ, μ⟩ / κ)` for regular dominant `λ`.
fn alternating_sum(lie: &LieData, lambda: &[i64], mu: &[i64], kappa: i64, cat: &LevelKCategory) -> Complex {
    let d = lie.quad_denominator();
    let f = lie.quad_form_scaled();
    let modulus = d * kappa;
    let fm: Vec<i64> = f.iter().map(|row| row.iter().zip(mu).map(|(a, b)| a * b).sum()).collect();
    let mut counts = vec![0i64; modulus as usize];
    for_each_orbit_point(&lie.cartan, lambda, |x, sign| {
        let j: i64 = x.iter().zip(&fm).map(|(a, b)| a * b).sum();
        counts[j.rem_euclid(modulus) as usize] += sign as i64;
    });
    let prec = cat.precision();
    let mut acc = Complex::zero(prec);
    for (j, &c) in counts.iter().enumerate() {
        if c != 0 {
            let phase = Complex::exp_i_pi(&Rational64::new(2 * j as i64, modulus), prec);
            acc = &acc + &phase.scale(&Real::from_i64(c, prec));
        }
    }
    acc
}

/// `χ(m)[n + ρ]`: the character of `m` evaluated, by the Weyl character
/// formula, at the point `exp(2πi ⟨·, n + ρ⟩ / κ)`.
pub fn character_value(
    cat: &LevelKCategory,
    m: &DominantWeight,
    n: &DominantWeight,
    weyl_cap: u64,
) -> Result<Complex> {
    let lie = &cat.lie;
    let order = weyl_group_order(lie);
    if order > weyl_cap as u128 {
        return Err(Error::WeylCapExceeded {
            group: lie.lie_type.to_string(),
            order,
            cap: weyl_cap,
        });
    }
    let mi = cat.require_integrable(m)?;
    let ni = cat.require_integrable(n)?;
    let kappa = cat.altitude() as i64;
    let shift = |i: usize| -> Vec<i64> { cat.coords(i).iter().map(|c| c + 1).collect() };
    let (m_rho, n_rho) = (shift(mi), shift(ni));
    let rho = vec![1i64; cat.rank()];
    let num = alternating_sum(lie, &m_rho, &n_rho, kappa, cat);
    let den = alternating_sum(lie, &rho, &n_rho, kappa, cat);
    if den.abs() < crate::tolerance::agreement(cat.precision()) {
        return Err(Error::Consistency(format!("Weyl denominator vanishes at {n} + rho")));
    }
    Ok(&num / &den)
}

/// Dominant weights of the irreducible representation `λ` with their
/// multiplicities (Freudenthal), together with the total number of weights
/// counted without multiplicity.
pub fn weight_system(lie: &LieData, lambda: &[i64], cap: usize) -> Result<(Vec<(Vec<i64>, i64)>, usize)> {
    let n = lie.rank();
    let too_big = || Error::WeightSystemCap {
        weight: DominantWeight::from_ints(lambda).to_string(),
        cap,
    };
    // coroot pairing ⟨μ, α∨⟩ = 2⟨μ,α⟩/⟨α,α⟩, α given in ω-coords
    let roots: Vec<Vec<i64>> = lie.positive_roots.iter().map(|r| r.to_ints().expect("integral")).collect();
    let root_norms: Vec<Rational64> = roots.iter().map(|a| lie.inner_ints(a, a)).collect();

    // saturation: dominant weights reachable by root strings
    let mut dominant: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    let mut queue = vec![lambda.to_vec()];
    dominant.insert(lambda.to_vec(), 0);
    while let Some(mu) = queue.pop() {
        for (a, norm) in roots.iter().zip(&root_norms) {
            let pairing = lie.inner_ints(&mu, a) * 2 / norm;
            let steps = pairing.to_integer();
            for t in 1..=steps {
                let nu: Vec<i64> = (0..n).map(|i| mu[i] - t * a[i]).collect();
                let dom = dominant_representative(&lie.cartan, nu);
                if !dominant.contains_key(&dom) {
                    dominant.insert(dom.clone(), 0);
                    queue.push(dom);
                    if dominant.len() > cap {
                        return Err(too_big());
                    }
                }
            }
        }
    }

    let shifted_norm = |mu: &[i64]| {
        let x: Vec<i64> = mu.iter().map(|c| c + 1).collect();
        lie.inner_ints(&x, &x)
    };
    let top = shifted_norm(lambda);
    let mut order: Vec<Vec<i64>> = dominant.keys().cloned().collect();
    order.sort_by(|a, b| shifted_norm(b).cmp(&shifted_norm(a)));

    let mut mult: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for mu in order {
        if mu == lambda {
            mult.insert(mu, 1);
            continue;
        }
        let mut acc = Rational64::zero();
        for a in &roots {
            let mut j = 1;
            loop {
                let nu: Vec<i64> = (0..n).map(|i| mu[i] + j * a[i]).collect();
                let dom = dominant_representative(&lie.cartan, nu.clone());
                match mult.get(&dom) {
                    Some(&m) if m > 0 => acc += lie.inner_ints(&nu, a) * m,
                    _ if dominant.contains_key(&dom) => {}
                    _ => break,
                }
                j += 1;
            }
        }
        let value = acc * 2 / (top - shifted_norm(&mu));
        if !value.is_integer() {
            return Err(Error::Consistency(format!("non-integral multiplicity {value} for {mu:?}")));
        }
        mult.insert(mu, value.to_integer());
    }

    let mut total = 0usize;
    let mut out = Vec::with_capacity(mult.len());
    for (mu, m) in mult {
        if m == 0 {
            continue;
        }
        let mut size = 0usize;
        for_each_orbit_point(&lie.cartan, &mu, |_, _| size += 1);
        total += size;
        if total > cap {
            return Err(too_big());
        }
        out.push((mu, m));
    }
    Ok((out, total))
}

/// `qdim(m) = χ(m; q^{2ρ^1}, …, q^{2ρ^r})`, summing
/// `mult(p) · exp(2πi ⟨p, ρ⟩ / κ)` over the full weight system.
pub fn qdim_via_character(cat: &LevelKCategory, m: &DominantWeight) -> Result<Real> {
    let i = cat.require_integrable(m)?;
    let lie = &cat.lie;
    let (system, _) = weight_system(lie, cat.coords(i), DEFAULT_WEIGHT_SYSTEM_CAP)?;
    let d = lie.quad_denominator();
    let modulus = d * cat.altitude() as i64;
    let f = lie.quad_form_scaled();
    let f_rho: Vec<i64> = f.iter().map(|row| row.iter().sum()).collect();
    let mut counts = vec![0i64; modulus as usize];
    for (mu, mult) in &system {
        for_each_orbit_point(&lie.cartan, mu, |x, _| {
            let j: i64 = x.iter().zip(&f_rho).map(|(a, b)| a * b).sum();
            counts[j.rem_euclid(modulus) as usize] += mult;
        });
    }
    // the sum is real: only cosines survive
    let prec = cat.precision();
    let step = Real::pi(prec) * Real::from_i64(2, prec) / Real::from_i64(modulus, prec);
    let mut acc = Real::zero(prec);
    for (j, &c) in counts.iter().enumerate() {
        if c != 0 {
            acc = acc + (&step * Real::from_i64(j as i64, prec)).cos() * Real::from_i64(c, prec);
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::integrable_weights;
    use crate::lie_core::build_lie_data;
    use crate::numeric::{rel_close, Precision};

    fn cat(s: &str, k: u32) -> LevelKCategory {
        integrable_weights(&build_lie_data(s.parse().unwrap()).unwrap(), k, Precision::default()).unwrap()
    }

    #[test]
    fn su2_weight_system_is_string() {
        let lie = build_lie_data("A1".parse().unwrap()).unwrap();
        let (w, total) = weight_system(&lie, &[4], 100).unwrap();
        assert_eq!(w, vec![(vec![0], 1), (vec![2], 1), (vec![4], 1)]);
        assert_eq!(total, 5);
    }

    #[test]
    fn adjoint_of_a2_has_zero_weight_twice() {
        let lie = build_lie_data("A2".parse().unwrap()).unwrap();
        let (w, total) = weight_system(&lie, &[1, 1], 100).unwrap();
        assert_eq!(total, 7);
        assert!(w.contains(&(vec![0, 0], 2)));
    }

    #[test]
    fn g2_small_dims() {
        let lie = build_lie_data("G2".parse().unwrap()).unwrap();
        // classical dimension = Σ mult · orbit size
        let dim = |l: &[i64]| -> i64 {
            let (w, _) = weight_system(&lie, l, 1000).unwrap();
            w.iter()
                .map(|(mu, m)| {
                    let mut s = 0;
                    for_each_orbit_point(&lie.cartan, mu, |_, _| s += 1);
                    s * m
                })
                .sum()
        };
        assert_eq!(dim(&[1, 0]), 7);
        assert_eq!(dim(&[0, 1]), 14);
        assert_eq!(dim(&[2, 0]), 27);
    }

    #[test]
    fn trivial_character_is_one() {
        let c = cat("A2", 3);
        let zero = DominantWeight::zero(2);
        for n in &c.weights {
            let v = character_value(&c, &zero, n, 1000).unwrap();
            assert!((&v.re - &Real::one(c.precision())).abs() < Real::ten_pow_neg(35, c.precision()));
        }
    }

    #[test]
    fn qdim_routes_agree_small() {
        let c = cat("A2", 4);
        for (i, w) in c.weights.iter().enumerate() {
            let a = qdim_via_character(&c, w).unwrap();
            assert!(rel_close(&a, &c.qdim_index(i), &Real::ten_pow_neg(30, c.precision())), "{w}");
        }
    }
}
