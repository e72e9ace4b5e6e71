//! Property tests for the structural invariants.

use levelk_core::fusion::{global_dimension_closed, global_dimension_sum, integrable_weights, level_rank_check};
use levelk_core::lie_core::{build_lie_data, for_each_orbit_point, inner_product, weyl_group_order};
use levelk_core::module_cat::{annular_matrices, generate_catalog, AdeGraph, EmbeddingRecord};
use levelk_core::numeric::rel_close;
use levelk_core::qnum::{q_number, QContext};
use levelk_core::{DominantWeight, LieType, Precision, Real};
use num_rational::Rational64;
use proptest::prelude::*;

const SMALL: [&str; 9] = ["A1", "A2", "A3", "B2", "C3", "D4", "G2", "B3", "F4"];

fn lie_type() -> impl Strategy<Value = LieType> {
    prop::sample::select(SMALL.to_vec()).prop_map(|s| s.parse().unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn orbit_has_one_dominant_point(t in lie_type(), seed in prop::collection::vec(0i64..3, 4)) {
        let l = build_lie_data(t).unwrap();
        let lambda: Vec<i64> = seed.into_iter().take(l.rank()).collect();
        let mut points = Vec::new();
        let mut dominant = 0;
        for_each_orbit_point(&l.cartan, &lambda, |x, _| {
            if x.iter().all(|&c| c >= 0) {
                dominant += 1;
            }
            points.push(x.to_vec());
        });
        prop_assert_eq!(dominant, 1);
        let n = points.len();
        points.sort();
        points.dedup();
        prop_assert_eq!(points.len(), n);
        prop_assert_eq!(weyl_group_order(&l) % n as u128, 0);
    }

    #[test]
    fn inner_product_is_symmetric_bilinear(t in lie_type(), a in prop::collection::vec(-3i64..4, 4), b in prop::collection::vec(-3i64..4, 4), c in prop::collection::vec(-3i64..4, 4)) {
        let l = build_lie_data(t).unwrap();
        let r = l.rank();
        let w = |v: &[i64]| DominantWeight::from_ints(&v[..r]);
        let (x, y, z) = (w(&a), w(&b), w(&c));
        prop_assert_eq!(inner_product(&l, &x, &y).unwrap(), inner_product(&l, &y, &x).unwrap());
        let lhs = inner_product(&l, &x.add(&y), &z).unwrap();
        prop_assert_eq!(lhs, inner_product(&l, &x, &z).unwrap() + inner_product(&l, &y, &z).unwrap());
    }

    #[test]
    fn q_numbers_reflect_and_stay_positive(kappa in 3u32..60, n in 1i64..59) {
        prop_assume!(n < kappa as i64);
        let ctx = QContext::new(kappa, Precision::digits(30)).unwrap();
        let a = q_number(&ctx, Rational64::from_integer(n));
        let b = q_number(&ctx, Rational64::from_integer(kappa as i64 - n));
        prop_assert!(a.is_positive());
        prop_assert!(rel_close(&a, &b, &Real::ten_pow_neg(25, ctx.precision())));
    }

    #[test]
    fn closed_form_matches_sum(t in lie_type(), k in 0u32..4) {
        let p = Precision::digits(30);
        let l = build_lie_data(t).unwrap();
        let cat = integrable_weights(&l, k, p).unwrap();
        for q in cat.qdims() {
            prop_assert!(q > Real::one(p) - Real::ten_pow_neg(25, p));
        }
        let closed = global_dimension_closed(&l, k, p).unwrap();
        prop_assert!(rel_close(&closed, &global_dimension_sum(&cat), &Real::ten_pow_neg(25, p)));
    }

    #[test]
    fn level_rank_duality(g in 2u32..9, k in 2u32..9) {
        let (lhs, rhs) = level_rank_check(g, k, Precision::digits(30)).unwrap();
        prop_assert!(rel_close(&lhs, &rhs, &Real::ten_pow_neg(25, Precision::digits(30))));
    }

    #[test]
    fn chebyshev_period(s in prop::sample::select(vec!["A2", "A5", "A9", "D4", "D6", "D7", "E6", "E7", "E8"]), n in 0usize..60) {
        let g = AdeGraph::new(s.parse().unwrap()).unwrap();
        let period = 2 * g.coxeter as usize;
        let n = n % (2 * period + 1);
        let f = annular_matrices(&g, n + period);
        prop_assert_eq!(&f[n + period], &f[n]);
        // F_n is symmetric
        for i in 0..g.len() {
            for j in 0..g.len() {
                prop_assert_eq!(f[n][i][j], f[n][j][i]);
            }
        }
    }

    #[test]
    fn regular_series_are_conformal(g in 4u32..40) {
        let su = |n: u32| LieType::su(n as usize).unwrap();
        for rec in [
            EmbeddingRecord::new(su(g), g - 2, su(g * (g - 1) / 2), "antisymmetric", "p"),
            EmbeddingRecord::new(su(g), g, LieType::spin((g * g - 1) as usize).unwrap(), "adjoint", "p"),
            EmbeddingRecord::new(su(g), g + 2, su(g * (g + 1) / 2), "symmetric", "p"),
        ] {
            prop_assert!(rec.validate().is_ok(), "{}", rec.id());
        }
    }
}

#[test]
fn catalog_is_conformal_for_large_g_max() {
    for rec in generate_catalog(40) {
        let (a, b) = rec.central_charges().unwrap();
        assert_eq!(a, b, "{}", rec.id());
    }
}
