//! End-to-end runs of the `levelk` binary.

use std::process::{Command, Output};

use levelk_core::numeric::ComplexMatrix;
use levelk_core::{Complex, Precision, Real};
use serde_json::Value;

fn levelk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_levelk"))
        .args(args)
        .env_remove("LEVELK_PRECISION")
        .env_remove("LEVELK_CATALOG")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = levelk(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn parse(v: &Value, p: Precision) -> Real {
    Real::parse(v.as_str().expect("decimal string"), p).expect("parsable decimal")
}

#[test]
fn globaldim_su2_level_10() {
    let v = json(&["globaldim", "A1", "--level", "10", "--format", "json"]);
    let p = Precision::default();
    let want = Real::from_i64(24, p) * (Real::from_i64(2, p) + Real::from_i64(3, p).sqrt());
    let got = parse(&v["value"], p);
    assert!((got - want).abs() < Real::ten_pow_neg(45, p));
    for key in ["group", "level", "altitude", "precision"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["altitude"], 12);
}

#[test]
fn globaldim_level_zero_is_one() {
    let v = json(&["globaldim", "G2", "-k", "0", "--format", "json"]);
    let p = Precision::default();
    assert_eq!(parse(&v["value"], p), Real::one(p));
}

#[test]
fn capstone_subgroup() {
    let v = json(&["subgroup", "e8-k30-adjoint", "--format", "json"]);
    let s = v["value"].as_str().unwrap();
    assert!(s.starts_with("5.57902") && s.ends_with("e22"), "{s}");
}

#[test]
fn smatrix_json_round_trip_is_unitary() {
    let v = json(&["smatrix", "SU(3)", "-k", "3", "--format", "json", "-p", "40"]);
    let p = Precision::digits(v["precision"].as_u64().unwrap() as u32);
    let rows = v["values"].as_array().unwrap();
    let n = rows.len();
    assert_eq!(n, 10);
    let s = ComplexMatrix::from_fn(n, |i, j| {
        let z = &rows[i][j];
        Complex::new(parse(&z["re"], p), parse(&z["im"], p))
    });
    let residue = s.mul(&s.conj_transpose()).max_abs_diff(&ComplexMatrix::identity(n, p));
    assert!(residue < Real::ten_pow_neg(37, p), "{residue}");
}

#[test]
fn precision_from_env() {
    let out = Command::new(env!("CARGO_BIN_EXE_levelk"))
        .args(["cs3", "A2", "-k", "2", "--format", "json"])
        .env("LEVELK_PRECISION", "35")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["precision"], 35);
    assert_eq!(v["value"], v["kac_wakimoto"]);
}

#[test]
fn exit_codes() {
    assert_eq!(levelk(&["globaldim", "Q7", "-k", "1"]).status.code(), Some(2));
    assert_eq!(levelk(&["globaldim", "A1"]).status.code(), Some(2));
    assert_eq!(levelk(&["frobnicate"]).status.code(), Some(2));
    let capped = levelk(&["smatrix", "E8", "-k", "1", "--weyl-cap", "1000"]);
    assert_eq!(capped.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&capped.stderr).contains("1000"));
    assert_eq!(levelk(&["subgroup", "nope"]).status.code(), Some(1));
    assert_eq!(levelk(&["fusion", "A2", "3,0", "-k", "2"]).status.code(), Some(1));
}

#[test]
fn bad_catalog_is_rejected_with_record() {
    let path = std::env::temp_dir().join(format!("levelk-bad-{}.json", std::process::id()));
    std::fs::write(
        &path,
        r#"[{"inner_family":"A","inner_rank":1,"level":5,"outer_family":"G","outer_rank":2,"tag":"sporadic","source":"x"}]"#,
    )
    .unwrap();
    let out = levelk(&["catalog", "--catalog", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("\"level\":5"));
}

#[test]
fn csv_fusion_has_header() {
    let out = levelk(&["fusion", "A1", "1", "-k", "3", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), r"n \ p,(0),(1),(2),(3)");
    assert_eq!(lines.next().unwrap(), "(0),0,1,0,0");
}

#[test]
fn check_subset_passes_and_is_repeatable() {
    let a = levelk(&["check", "--only", "5,8"]);
    let b = levelk(&["check", "--only", "5,8"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.contains("[PASS]")).count(), 2);
}

#[test]
fn check_reports_failure_status() {
    let out = levelk(&["check", "--only", "99"]);
    assert_eq!(out.status.code(), Some(1));
}
