//! SU(2) module categories and the conformal-embedding catalog.

use levelk_core::fusion::global_dimension_sum;
use levelk_core::module_cat::{
    ambient_category, embedding_catalog, essential_matrix, induction_qdim, load_catalog, module_global_dim,
    parse_catalog, peter_weyl_check, AdeGraph, Route, RouteInputs,
};
use levelk_core::numeric::rel_close;
use levelk_core::{Error, Precision, Real};

fn tol() -> Real {
    Real::ten_pow_neg(30, Precision::default())
}

#[test]
fn four_routes_agree_and_f_times_e_is_a() {
    let p = Precision::default();
    for s in ["D4", "E6", "E8"] {
        let g = AdeGraph::new(s.parse().unwrap()).unwrap();
        let inputs = RouteInputs::standard(&g).unwrap();
        let values: Vec<Real> = Route::ALL
            .iter()
            .map(|&r| module_global_dim(&g, r, &inputs, p).unwrap())
            .collect();
        for v in &values[1..] {
            assert!(rel_close(v, &values[0], &tol()), "{s}");
        }
        let ambient = ambient_category(&g, p).unwrap();
        let f = induction_qdim(&g, &ambient, 0).unwrap();
        assert!(rel_close(&(f * &values[0]), &global_dimension_sum(&ambient), &tol()), "{s}");
        for a in 0..g.len() {
            let (lhs, rhs) = peter_weyl_check(&g, a, p).unwrap();
            assert!(rel_close(&lhs, &rhs, &tol()), "{s} vertex {a}");
        }
    }
}

#[test]
fn d4_induction_is_triality_symmetric() {
    let g = AdeGraph::new("D4".parse().unwrap()).unwrap();
    let e = essential_matrix(&g, 0).unwrap();
    // columns 0, 2, 3 are the three legs; 1 is the centre
    let col = |b: usize| e.iter().map(|row| row[b]).collect::<Vec<_>>();
    assert_eq!(col(0), vec![1, 0, 0, 0, 1]);
    assert_eq!(col(2), vec![0, 0, 1, 0, 0]);
    assert_eq!(col(3), vec![0, 0, 1, 0, 0]);
    assert_eq!(col(1), vec![0, 1, 0, 1, 0]);
}

#[test]
fn catalog_file_round_trip() {
    let catalog = embedding_catalog();
    let path = std::env::temp_dir().join(format!("levelk-catalog-{}.json", std::process::id()));
    std::fs::write(&path, serde_json::to_string(&catalog).unwrap()).unwrap();
    assert_eq!(load_catalog(&path).unwrap(), catalog);
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn duplicate_ids_are_rejected() {
    let one = r#"{"inner_family":"A","inner_rank":8,"level":1,"outer_family":"E","outer_rank":8,"tag":"sporadic","source":"x"}"#;
    match parse_catalog(&format!("[{one},{one}]")) {
        Err(Error::Catalog { reason, .. }) => assert!(reason.contains("su9-k1-sporadic")),
        other => panic!("{other:?}"),
    }
}

#[test]
fn unknown_family_is_rejected() {
    let bad = r#"[{"inner_family":"X","inner_rank":1,"level":1,"outer_family":"E","outer_rank":8,"tag":"t","source":"x"}]"#;
    assert!(matches!(parse_catalog(bad), Err(Error::Catalog { .. })));
}
