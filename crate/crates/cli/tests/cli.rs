use std::process::{Command, Output};

use icosa_core::poly::io::{curve_from_json, polynomial_from_json};

fn icosa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_icosa")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn molien_u4_degree_four() {
    let o = icosa(&["molien", "--rep", "u4", "--max-degree", "4"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "1 0 0 0 2");
}

#[test]
fn scan_s3_is_smooth() {
    let o = icosa(&["scan", "--surface", "s3", "--prime", "61"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("0 singular points"), "{}", stdout(&o));
}

#[test]
fn scan_hashimoto_member() {
    let o = icosa(&["scan", "--surface", "hashimoto:t=13/20"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("hashimoto:t=13/20: 5 singular points mod 61"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(icosa(&["bogus"]).status.code(), Some(2));
    assert_eq!(icosa(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(icosa(&["verify", "web", "--frobnicate"]).status.code(), Some(2));
}

#[test]
fn bad_prime_exits_one() {
    let o = icosa(&["scan", "--surface", "s3", "--prime", "7"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn passing_suites_exit_zero() {
    for suite in ["pencil2", "web", "steinerian", "catalecticant", "sextics", "hashimoto"] {
        let o = icosa(&["verify", suite]);
        let out = stdout(&o);
        let fails: Vec<&str> = out.lines().filter(|l| l.contains("[fail]")).collect();
        assert_eq!(o.status.code() == Some(0), fails.is_empty(), "{suite}: {out}");
    }
}

#[test]
fn maschke_orders_fail() {
    let o = icosa(&["verify", "maschke"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("[fail] maschke.orders"));
}

#[test]
fn json_report_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    icosa(&["verify", "sextics", "--json", a.to_str().unwrap()]);
    icosa(&["--threads", "1", "verify", "sextics", "--json", b.to_str().unwrap()]);
    let ja = std::fs::read(&a).unwrap();
    assert_eq!(ja, std::fs::read(&b).unwrap());
    let v: serde_json::Value = serde_json::from_slice(&ja).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["suite"], "sextics");
    for c in v["checks"].as_array().unwrap() {
        let s = c["status"].as_str().unwrap();
        assert!(["pass", "fail", "recorded-discrepancy"].contains(&s));
        assert!(c["anchor"].as_str().is_some_and(|a| !a.is_empty()));
    }
}

#[test]
fn emit_round_trips() {
    let o = icosa(&["emit", "--surface", "f1"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let (f, names) = polynomial_from_json(&text).unwrap();
    assert_eq!(names, ["x0", "x1", "x2", "x3"]);
    assert_eq!(f, icosa_core::pencil::pencil_generators().unwrap().f1);
    let again = icosa_core::poly::io::polynomial_to_json(&f, &["x0", "x1", "x2", "x3"]);
    assert_eq!(again, text);

    let o = icosa(&["emit", "--curve", "gamma1"]);
    let (label, comps) = curve_from_json(&stdout(&o)).unwrap();
    assert_eq!(label, "Gamma1");
    assert_eq!(comps.len(), 3);
}

#[test]
fn emit_needs_a_target() {
    assert_eq!(icosa(&["emit"]).status.code(), Some(2));
    assert_eq!(icosa(&["emit", "--surface", "f1", "--curve", "phi12"]).status.code(), Some(2));
}
