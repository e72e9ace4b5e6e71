//! Root data across the simple types.

use levelk_core::lie_core::{build_lie_data, for_each_orbit_point, ribbon_table, weyl_group, weyl_group_order};
use levelk_core::qnum::superfactorial_arguments;
use levelk_core::{DominantWeight, Family, LieType};
use num_rational::Rational64;

fn all_types(max_rank: usize) -> Vec<LieType> {
    let mut out = Vec::new();
    for (f, lo) in [(Family::A, 1), (Family::B, 2), (Family::C, 2), (Family::D, 4)] {
        out.extend((lo..=max_rank).map(|r| LieType::new(f, r).unwrap()));
    }
    for (f, r) in [(Family::E, 6), (Family::E, 7), (Family::E, 8), (Family::F, 4), (Family::G, 2)] {
        out.push(LieType::new(f, r).unwrap());
    }
    out
}

#[test]
fn roster_invariants() {
    for t in all_types(8) {
        let l = build_lie_data(t).unwrap();
        let r = l.rank();
        assert_eq!(l.num_positive_roots() as u32, l.exponents.iter().sum::<u32>(), "{t}");
        assert_eq!(l.dimension(), (r + 2 * l.num_positive_roots()) as u64, "{t}");
        assert_eq!(l.coxeter as u64, t.coxeter_number(), "{t}");
        assert_eq!(l.dual_coxeter as u64, t.dual_coxeter_number(), "{t}");
        assert_eq!(*l.exponents.iter().max().unwrap() + 1, l.coxeter, "{t}");
        // θ has norm 2, ρ sits at level g - 1
        let theta = &l.highest_root;
        assert_eq!(l.inner_ints(&theta.to_ints().unwrap(), &theta.to_ints().unwrap()), Rational64::from_integer(2));
        assert_eq!(l.level_of_ints(&vec![1; r]), l.dual_coxeter as i64 - 1, "{t}");
        let w: u128 = l.exponents.iter().map(|&e| e as u128 + 1).product();
        assert_eq!(weyl_group_order(&l), w, "{t}");
    }
}

#[test]
fn rho_ribbon_is_superfactorial_multiset() {
    for t in all_types(8) {
        let l = build_lie_data(t).unwrap();
        let mut got: Vec<Rational64> = ribbon_table(&l, &DominantWeight::rho(l.rank()))
            .unwrap()
            .into_iter()
            .map(|(_, v)| v)
            .collect();
        got.sort();
        assert_eq!(got, superfactorial_arguments(t), "{t}");
    }
}

#[test]
fn ribbons_of_small_weights() {
    // heights of the positive roots of A5
    let a5 = build_lie_data("A5".parse().unwrap()).unwrap();
    let mut counts = [0usize; 6];
    for (_, v) in ribbon_table(&a5, &DominantWeight::rho(5)).unwrap() {
        counts[v.to_integer() as usize] += 1;
    }
    assert_eq!(counts, [0, 5, 4, 3, 2, 1]);
    // ω1 of D4 pairs to 0 or 1 with each positive root
    let d4 = build_lie_data("D4".parse().unwrap()).unwrap();
    let ribbon = ribbon_table(&d4, &DominantWeight::from_ints(&[1, 0, 0, 0])).unwrap();
    assert_eq!(ribbon.iter().filter(|(_, v)| *v == Rational64::from_integer(1)).count(), 6);
    assert_eq!(ribbon.iter().filter(|(_, v)| *v == Rational64::from_integer(0)).count(), 6);
    // Σ_{α>0} ⟨λ, α⟩ = 2⟨λ, ρ⟩, for G2 with λ = ω1
    let g2 = build_lie_data("G2".parse().unwrap()).unwrap();
    let total: Rational64 = ribbon_table(&g2, &DominantWeight::from_ints(&[1, 0])).unwrap().into_iter().map(|x| x.1).sum();
    assert_eq!(total, g2.inner_ints(&[1, 0], &[1, 1]) * 2);
    assert_eq!(total, Rational64::new(10, 3));
}

#[test]
fn weyl_group_closes_and_matches_order() {
    for s in ["A3", "B3", "C3", "G2", "D4", "F4"] {
        let l = build_lie_data(s.parse().unwrap()).unwrap();
        let w = weyl_group(&l, 10_000).unwrap();
        assert_eq!(w.len() as u128, weyl_group_order(&l), "{s}");
        let mut mats: Vec<_> = w.iter().map(|e| e.matrix.clone()).collect();
        mats.sort();
        mats.dedup();
        assert_eq!(mats.len(), w.len(), "{s}: repeated elements");
        // the orbit of ρ is regular, signatures alternate with length
        let rho = vec![1i64; l.rank()];
        let mut plus = 0i64;
        let mut size = 0usize;
        for_each_orbit_point(&l.cartan, &rho, |_, sign| {
            size += 1;
            plus += sign as i64;
        });
        assert_eq!(size, w.len(), "{s}");
        assert_eq!(plus, 0, "{s}");
        assert_eq!(w.iter().map(|e| e.signature as i64).sum::<i64>(), 0, "{s}");
    }
}
