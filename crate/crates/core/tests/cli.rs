use std::process::Command;

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_spinor-cover"));
    c.env_remove("SPINOR_COVER_SEED");
    c
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let out = bin().args(args).output().unwrap();
    let code = out.status.code().unwrap();
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (code, v)
}

fn pass_pattern(v: &Value) -> Vec<(String, bool)> {
    v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| (c["name"].as_str().unwrap().to_string(), c["pass"].as_bool().unwrap()))
        .collect()
}

#[test]
fn every_battery_passes_by_default() {
    for args in [&["verify-groups"][..], &["spatial"], &["kfg"], &["kfg", "--schrodinger"]] {
        let (code, v) = run_json(args);
        assert_eq!(code, 0, "{args:?}");
        assert_eq!(v["schema"], "1");
        assert_eq!(v["summary"]["failed"], 0);
    }
}

#[test]
fn runs_are_deterministic() {
    let a = bin().args(["--seed", "7", "spatial"]).output().unwrap().stdout;
    let b = bin().args(["--seed", "7", "spatial"]).output().unwrap().stdout;
    assert_eq!(a, b);
}

#[test]
fn seed_changes_values_but_not_outcomes() {
    let (_, a) = run_json(&["--seed", "1", "verify-groups"]);
    let (_, b) = run_json(&["--seed", "2", "verify-groups"]);
    assert_eq!(pass_pattern(&a), pass_pattern(&b));
    assert_ne!(a["checks"], b["checks"]);
}

#[test]
fn seed_falls_back_to_the_environment() {
    let a = bin().env("SPINOR_COVER_SEED", "99").arg("spatial").output().unwrap().stdout;
    let b = bin().args(["--seed", "99", "spatial"]).output().unwrap().stdout;
    assert_eq!(a, b);
}

#[test]
fn tightened_tolerance_fails_with_exit_one() {
    let (code, v) = run_json(&["--tol", "covering homomorphism=1e-20", "verify-groups"]);
    assert_eq!(code, 1);
    assert_eq!(v["summary"]["failed"], 1);
}

#[test]
fn configuration_errors_exit_two() {
    for args in [
        &["--tol", "no such check=1e-3", "verify-groups"][..],
        &["--tol", "garbage", "kfg"],
        &["kfg", "--nodes", "7"],
        &["kfg", "--half-width", "40"],
        &["spatial", "--chart", "toroidal"],
        &["frobnicate"],
    ] {
        assert_eq!(bin().args(args).output().unwrap().status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn csv_and_human_outputs() {
    let csv = bin().args(["--output", "csv", "kfg"]).output().unwrap();
    let text = String::from_utf8(csv.stdout).unwrap();
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let headers = rdr.headers().unwrap().clone();
    assert!(headers.iter().any(|h| h == "pass"));
    assert!(rdr.records().count() > 10);
    let human = bin().args(["--output", "human", "kfg", "--table", "u", "--space", "spinor"]).output().unwrap();
    let text = String::from_utf8(human.stdout).unwrap();
    assert!(text.contains("PASS"));
}

#[test]
fn table_filter_limits_selection_tables() {
    let (_, v) = run_json(&["kfg", "--table", "x", "--space", "vector"]);
    let tables = v["tables"].as_array().unwrap();
    assert_eq!(tables.len(), 1);
    assert_eq!(tables[0]["coordinate"], "x");
}

#[test]
fn out_file_and_dumps() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let field = dir.path().join("field.csv");
    let phi = dir.path().join("phi.csv");
    let status = bin()
        .args(["--out", report.to_str().unwrap(), "spatial", "--chart", "spherical", "--dump-field", field.to_str().unwrap()])
        .status()
        .unwrap();
    assert!(status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["battery"], "spatial");
    let field = std::fs::read_to_string(&field).unwrap();
    assert_eq!(field.lines().next().unwrap(), "chart,y1,y2,y3,sheet,re_c1,im_c1,re_c2,im_c2");

    let status = bin().args(["kfg", "--class", "-+", "--dump-phi", phi.to_str().unwrap()]).status().unwrap();
    assert!(status.success());
    let phi = std::fs::read_to_string(&phi).unwrap();
    assert_eq!(phi.lines().next().unwrap(), "class,u,v,x,y,phi");
    assert_eq!(phi.lines().count(), 1 + 41 * 41);
}

#[test]
fn library_entry_point_matches_the_binary() {
    assert_eq!(spinor_cover::cli::run(["spinor-cover", "--samples", "50", "verify-groups"]), 0);
    assert_eq!(spinor_cover::cli::run(["spinor-cover", "kfg", "--nodes", "3"]), 2);
}
