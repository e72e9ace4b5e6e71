//! Global dimensions, `S₀₀`, level-rank duality and Chern-Simons values.

use num_traits::ToPrimitive;

use super::LevelKCategory;
use crate::error::Result;
use crate::lie_core::{build_lie_data, LieData, LieType};
use crate::numeric::{Precision, Real};
use crate::qnum::{classical_superfactorial, q_superfactorial, QContext};

/// `Σ qdim(n)²` over the integrable weights.
pub fn global_dimension_sum(cat: &LevelKCategory) -> Real {
    cat.qdims().into_iter().map(|q| &q * &q).sum()
}

fn altitude_ctx(lie: &LieData, k: u32, prec: Precision) -> Result<QContext> {
    QContext::new(lie.dual_coxeter + k, prec)
}

/// `S₀₀ = 2^{rγ/2} √Δ sin^{rγ/2}(π/κ) sf_G[q] / κ^{r/2}`.
pub fn s00_closed_form(lie: &LieData, k: u32, prec: Precision) -> Result<Real> {
    let ctx = altitude_ctx(lie, k, prec)?;
    let sf = q_superfactorial(&ctx, lie.lie_type)?;
    let half_rg = lie.sigma_plus() as usize;
    let kappa = Real::from_i64(ctx.altitude() as i64, prec);
    let two_sin = Real::from_i64(2, prec) * ctx.angle().sin();
    let delta = Real::from_ratio(&lie.delta, prec);
    Ok((delta / kappa.powi(lie.rank())).sqrt() * two_sin.powi(half_rg) * sf)
}

/// `|A_k(G)| = κ^r / (2^{rγ} Δ sin^{rγ}(π/κ) sf_G[q]²)`.
pub fn global_dimension_closed(lie: &LieData, k: u32, prec: Precision) -> Result<Real> {
    let ctx = altitude_ctx(lie, k, prec)?;
    let sf = q_superfactorial(&ctx, lie.lie_type)?;
    let rg = 2 * lie.sigma_plus() as usize;
    let kappa = Real::from_i64(ctx.altitude() as i64, prec);
    let two_sin = Real::from_i64(2, prec) * ctx.angle().sin();
    let delta = Real::from_ratio(&lie.delta, prec);
    Ok(kappa.powi(lie.rank()) / (delta * two_sin.powi(rg) * &sf * &sf))
}

/// `|A_k(SU(n))|` from the closed form, with `|A_k(SU(1))| = 1`.
pub fn su_global_dimension(n: u32, k: u32, prec: Precision) -> Result<Real> {
    if n == 1 {
        return Ok(Real::one(prec));
    }
    global_dimension_closed(&build_lie_data(LieType::su(n as usize)?)?, k, prec)
}

/// Both sides of `k |A_k(A_{g-1})| = g |A_g(A_{k-1})|`.
pub fn level_rank_check(g: u32, k: u32, prec: Precision) -> Result<(Real, Real)> {
    let lhs = Real::from_i64(k as i64, prec) * su_global_dimension(g, k, prec)?;
    let rhs = Real::from_i64(g as i64, prec) * su_global_dimension(k, g, prec)?;
    Ok((lhs, rhs))
}

/// `1 / (2^{rγ} Δ π^{rγ} sf_G²)`, the large-level limit of `|A_k| / k^{dim G}`.
pub fn classical_limit_constant(lie: &LieData, prec: Precision) -> Real {
    let rg = 2 * lie.sigma_plus() as usize;
    let sf = Real::from_big_ratio(&classical_superfactorial(lie.lie_type), prec);
    let two_pi = Real::from_i64(2, prec) * Real::pi(prec);
    (Real::from_ratio(&lie.delta, prec) * two_pi.powi(rg) * &sf * &sf).recip()
}

/// `|A_k(G)| / k^{dim G}` for each level in `levels`.
pub fn classical_asymptote(lie: &LieData, levels: &[u32], prec: Precision) -> Result<Vec<Real>> {
    let dim = lie.dimension().to_usize().expect("small dimension");
    levels
        .iter()
        .map(|&k| {
            let a = global_dimension_closed(lie, k, prec)?;
            Ok(a / Real::from_i64(k as i64, prec).powi(dim))
        })
        .collect()
}

/// `Z_CS[S³, G, k] = S₀₀`.
pub fn chern_simons_s3(lie: &LieData, k: u32, prec: Precision) -> Result<Real> {
    s00_closed_form(lie, k, prec)
}

/// `(N+k)^{-N/2} √((N+k)/N) ∏_{j=1}^{N-1} (2 sin(πj/(N+k)))^{N-j}`.
pub fn kac_wakimoto_su(n: u32, k: u32, prec: Precision) -> Real {
    let kappa = Real::from_i64((n + k) as i64, prec);
    let angle = Real::pi(prec) / &kappa;
    let mut prod = Real::one(prec);
    for j in 1..n {
        let s = Real::from_i64(2, prec) * (&angle * Real::from_i64(j as i64, prec)).sin();
        prod = prod * s.powi((n - j) as usize);
    }
    let pre = (&kappa / Real::from_i64(n as i64, prec)).sqrt() / kappa.sqrt().powi(n as usize);
    pre * prod
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::integrable_weights;
    use crate::numeric::rel_close;

    fn lie(s: &str) -> LieData {
        build_lie_data(s.parse().unwrap()).unwrap()
    }

    fn tol(p: Precision) -> Real {
        Real::ten_pow_neg(30, p)
    }

    #[test]
    fn su2_closed_forms() {
        let p = Precision::default();
        let a1 = lie("A1");
        for k in 0..8u32 {
            let kappa = Real::from_i64(k as i64 + 2, p);
            let sin = (Real::pi(p) / &kappa).sin();
            let s00 = (Real::from_i64(2, p) / &kappa).sqrt() * &sin;
            assert!(rel_close(&s00_closed_form(&a1, k, p).unwrap(), &s00, &tol(p)));
            let dim = &kappa / (Real::from_i64(2, p) * &sin * &sin);
            assert!(rel_close(&global_dimension_closed(&a1, k, p).unwrap(), &dim, &tol(p)));
        }
    }

    #[test]
    fn level_zero_dimension_is_one() {
        let p = Precision::default();
        for s in ["G2", "E8", "C4"] {
            let v = global_dimension_closed(&lie(s), 0, p).unwrap();
            assert!(rel_close(&v, &Real::one(p), &tol(p)), "{s}: {v:?}");
        }
    }

    #[test]
    fn sum_matches_closed_on_small_cases() {
        let p = Precision::default();
        for (s, k) in [("A2", 3), ("G2", 2), ("C3", 2), ("B2", 3)] {
            let l = lie(s);
            let cat = integrable_weights(&l, k, p).unwrap();
            let a = global_dimension_sum(&cat);
            let b = global_dimension_closed(&l, k, p).unwrap();
            assert!(rel_close(&a, &b, &tol(p)), "{s} k={k}: {a:?} vs {b:?}");
        }
    }

    #[test]
    fn kac_wakimoto_su2() {
        let p = Precision::default();
        let v = kac_wakimoto_su(2, 1, p);
        let want = Real::from_i64(2, p).sqrt().recip();
        assert!(rel_close(&v, &want, &tol(p)));
    }
}
