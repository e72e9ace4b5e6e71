//! Kac-Peterson modular data.

use num_rational::Rational64;
use serde::Serialize;

use super::LevelKCategory;
use crate::error::{Error, Result};
use crate::lie_core::{for_each_orbit_point, weyl_group_order};
use crate::numeric::{Complex, ComplexMatrix, Precision, Real};

/// `S`, `T` and charge conjugation for `A_k(G)`.
#[derive(Clone, Debug)]
pub struct ModularData {
    pub s: ComplexMatrix,
    /// Diagonal of `T`.
    pub t: Vec<Complex>,
    /// Diagonal of `t = T · exp(2πi c/24)`.
    pub t_shifted: Vec<Complex>,
    /// `T_mm = exp(2πi · t_exponents[m])`.
    pub t_exponents: Vec<Rational64>,
    /// `C` as a permutation: `m ↦ charge[m]`.
    pub charge: Vec<usize>,
    /// Central charge `c = dim(G) k / (g + k)`.
    pub central_charge: Rational64,
    precision: Precision,
}

/// Largest residues of the modular identities.
#[derive(Clone, Debug, Serialize)]
pub struct ModularChecks {
    pub symmetry: f64,
    pub unitarity: f64,
    pub st_cubed_vs_s_squared: f64,
    pub s_squared_vs_c: f64,
    pub c_involution: bool,
    pub row0_imaginary: f64,
    pub row0_positive: bool,
}

impl ModularChecks {
    pub fn max_residue(&self) -> f64 {
        [
            self.symmetry,
            self.unitarity,
            self.st_cubed_vs_s_squared,
            self.s_squared_vs_c,
            self.row0_imaginary,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.c_involution && self.row0_positive && self.max_residue() <= tol
    }
}

/// Kac-Peterson `S` and `T` by explicit alternating Weyl sums, with charge conjugation.
pub fn modular_data(cat: &LevelKCategory, weyl_cap: u64) -> Result<ModularData> {
    let lie = &cat.lie;
    let order = weyl_group_order(lie);
    if order > weyl_cap as u128 {
        return Err(Error::WeylCapExceeded {
            group: lie.lie_type.to_string(),
            order,
            cap: weyl_cap,
        });
    }
    let prec = cat.precision();
    let n = cat.len();
    let r = cat.rank();
    let kappa = cat.altitude() as i64;
    let d = lie.quad_denominator();
    let f = lie.quad_form_scaled();
    let modulus = d * kappa;

    // exp(-2πi j / N)
    let table: Vec<Complex> = (0..modulus)
        .map(|j| Complex::exp_i_pi(&Rational64::new(-2 * j, modulus), prec))
        .collect();

    let shifted: Vec<Vec<i64>> = (0..n).map(|i| cat.coords(i).iter().map(|c| c + 1).collect()).collect();
    // i^{Σ₊} · sqrt(Δ / κ^r)
    let scale = (Real::from_ratio(&lie.delta, prec) / Real::from_i64(kappa, prec).powi(r)).sqrt();
    let sigma_plus = lie.sigma_plus() as i64;

    let mut s_rows: Vec<Vec<Complex>> = Vec::with_capacity(n);
    let mut counts = vec![vec![0i64; modulus as usize]; n];
    let mut fx = vec![0i64; r];
    for m in 0..n {
        for row in counts.iter_mut() {
            row.iter_mut().for_each(|c| *c = 0);
        }
        for_each_orbit_point(&lie.cartan, &shifted[m], |x, sign| {
            for (a, out) in fx.iter_mut().enumerate() {
                *out = f[a].iter().zip(x).map(|(p, q)| p * q).sum();
            }
            for (col, y) in shifted.iter().enumerate() {
                let j: i64 = fx.iter().zip(y).map(|(p, q)| p * q).sum();
                counts[col][j.rem_euclid(modulus) as usize] += sign as i64;
            }
        });
        let row = counts
            .iter()
            .map(|c| {
                let mut acc = Complex::zero(prec);
                for (j, &cnt) in c.iter().enumerate() {
                    if cnt != 0 {
                        acc = &acc + &table[j].scale(&Real::from_i64(cnt, prec));
                    }
                }
                acc.scale(&scale).mul_i_pow(sigma_plus)
            })
            .collect();
        s_rows.push(row);
    }
    let s = ComplexMatrix::from_fn(n, |i, j| s_rows[i][j].clone());

    let rho_norm = lie.inner_ints(&vec![1; r], &vec![1; r]);
    let g = lie.dual_coxeter as i64;
    let central_charge = Rational64::new(lie.dimension() as i64 * cat.level as i64, kappa);
    let t_exponents: Vec<Rational64> = shifted
        .iter()
        .map(|x| lie.inner_ints(x, x) / (2 * kappa) - rho_norm / (2 * g))
        .collect();
    let t = t_exponents.iter().map(|e| Complex::exp_i_pi(&(e * 2), prec)).collect();
    let t_shifted = t_exponents
        .iter()
        .map(|e| Complex::exp_i_pi(&((e + central_charge / 24) * 2), prec))
        .collect();

    let charge = (0..n)
        .map(|m| {
            let dual = dominant_representative(&lie.cartan, cat.coords(m).iter().map(|c| -c).collect());
            cat.index_of_ints(&dual)
                .ok_or_else(|| Error::Consistency(format!("conjugate of {} is not integrable", cat.weights[m])))
        })
        .collect::<Result<Vec<_>>>()?;

    let md = ModularData {
        s,
        t,
        t_shifted,
        t_exponents,
        charge,
        central_charge,
        precision: prec,
    };
    // row 0 must come out real and positive
    let tol = crate::tolerance::agreement(prec);
    for j in 0..n {
        let e = md.s.get(0, j);
        if e.im.abs() > tol || !e.re.is_positive() {
            return Err(Error::Consistency(format!("S[0][{j}] = {:?} + {:?} i is not real positive", e.re, e.im)));
        }
    }
    Ok(md)
}

/// Reflects `mu` into the dominant chamber.
pub(crate) fn dominant_representative(cartan: &[Vec<i64>], mut mu: Vec<i64>) -> Vec<i64> {
    while let Some(i) = mu.iter().position(|&c| c < 0) {
        let c = mu[i];
        for (j, m) in mu.iter_mut().enumerate() {
            *m -= c * cartan[i][j];
        }
    }
    mu
}

impl ModularData {
    pub fn len(&self) -> usize {
        self.s.dim()
    }

    pub fn is_empty(&self) -> bool {
        self.s.dim() == 0
    }

    pub fn precision(&self) -> Precision {
        self.precision
    }

    pub fn s00(&self) -> Real {
        self.s.get(0, 0).re.clone()
    }

    /// `C` as a dense matrix.
    pub fn charge_matrix(&self) -> ComplexMatrix {
        let p = self.precision;
        ComplexMatrix::from_fn(self.len(), |i, j| {
            if self.charge[i] == j {
                Complex::one(p)
            } else {
                Complex::zero(p)
            }
        })
    }

    /// Residues of every modular identity.
    pub fn checks(&self) -> ModularChecks {
        let n = self.len();
        let p = self.precision;
        let s = &self.s;
        let symmetry = s.max_abs_diff(&s.transpose()).to_f64();
        let unitarity = s.mul(&s.conj_transpose()).max_abs_diff(&ComplexMatrix::identity(n, p)).to_f64();
        let st = s.mul_diag(&self.t);
        let st3 = st.mul(&st).mul(&st);
        let s2 = s.mul(s);
        let st_cubed_vs_s_squared = st3.max_abs_diff(&s2).to_f64();
        let s_squared_vs_c = s2.max_abs_diff(&self.charge_matrix()).to_f64();
        let c_involution = (0..n).all(|m| self.charge[self.charge[m]] == m);
        let row0_imaginary = (0..n).map(|j| s.get(0, j).im.abs().to_f64()).fold(0.0, f64::max);
        let row0_positive = (0..n).all(|j| s.get(0, j).re.is_positive());
        ModularChecks {
            symmetry,
            unitarity,
            st_cubed_vs_s_squared,
            s_squared_vs_c,
            c_involution,
            row0_imaginary,
            row0_positive,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::integrable_weights;
    use crate::lie_core::build_lie_data;

    fn md(s: &str, k: u32) -> (LevelKCategory, ModularData) {
        let cat = integrable_weights(&build_lie_data(s.parse().unwrap()).unwrap(), k, Precision::default()).unwrap();
        let md = modular_data(&cat, 10_000_000).unwrap();
        (cat, md)
    }

    #[test]
    fn su2_level1() {
        let (_, m) = md("A1", 1);
        let p = m.precision();
        let h = Real::from_i64(2, p).sqrt().recip();
        let want = [[h.clone(), h.clone()], [h.clone(), -&h]];
        for i in 0..2 {
            for j in 0..2 {
                assert!((&m.s.get(i, j).re - &want[i][j]).abs() < Real::ten_pow_neg(40, p));
                assert!(m.s.get(i, j).im.abs() < Real::ten_pow_neg(40, p));
            }
        }
    }

    #[test]
    fn su2_hurwitz_form() {
        let k = 5;
        let (_, m) = md("A1", k);
        let p = m.precision();
        let kappa = (k + 2) as i64;
        let pref = (Real::from_i64(2, p) / Real::from_i64(kappa, p)).sqrt();
        for a in 0..=k as i64 {
            for b in 0..=k as i64 {
                let angle = Real::pi(p) * Real::from_i64((a + 1) * (b + 1), p) / Real::from_i64(kappa, p);
                let want = &pref * angle.sin();
                let got = m.s.get(a as usize, b as usize);
                assert!((&got.re - &want).abs() < Real::ten_pow_neg(40, p));
            }
        }
    }

    #[test]
    fn su3_level1_charge_swaps_fundamentals() {
        let (cat, m) = md("A2", 1);
        let a = cat.index_of(&crate::DominantWeight::from_ints(&[1, 0])).unwrap();
        let b = cat.index_of(&crate::DominantWeight::from_ints(&[0, 1])).unwrap();
        assert_eq!(m.charge[a], b);
        assert!(m.checks().passes(1e-40));
    }

    #[test]
    fn cap_refusal_names_order() {
        let cat = integrable_weights(&build_lie_data("E8".parse().unwrap()).unwrap(), 1, Precision::default()).unwrap();
        let err = modular_data(&cat, 10_000_000).unwrap_err();
        assert!(matches!(err, Error::WeylCapExceeded { order: 696729600, .. }));
    }
}
