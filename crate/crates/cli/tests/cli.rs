use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn outersix(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_outersix"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let out = outersix(&all);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], "outersix/1");
    assert_eq!(v["passed"], true);
    v
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

#[test]
fn classes_six() {
    let v = json(&["classes", "--n", "6"]);
    let rows: Vec<(u64, u64)> = v["findings"]["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| (r["j"].as_u64().unwrap(), r["size"].as_u64().unwrap()))
        .collect();
    assert_eq!(rows, [(1, 15), (2, 45), (3, 15)]);
}

#[test]
fn aut_six_counts() {
    let f = json(&["aut", "--n", "6"])["findings"].clone();
    assert_eq!(f["aut_order"], 1440);
    assert_eq!(f["inn_order"], 720);
    assert_eq!(f["out_order"], 2);
    assert_eq!(f["involutive_outer_count"], 36);
}

#[test]
fn aut_small_degrees_have_no_outer() {
    for n in ["2", "3", "4", "5"] {
        assert_eq!(json(&["aut", "--n", n])["findings"]["out_order"], 1, "n = {n}");
    }
}

#[test]
fn lemma1_finds_stars() {
    let v = json(&["lemma1", "--n", "5"]);
    assert_eq!(v["findings"]["count"], 5);
}

#[test]
fn lemma2_single_survivor() {
    let v = json(&["lemma2", "--n-max", "8"]);
    assert_eq!(v["findings"]["surviving"], serde_json::json!([[6, 3]]));
}

#[test]
fn icosa_emits() {
    let v = json(&["icosa", "--emit", "pairs"]);
    assert_eq!(v["findings"]["dual_pairs"].as_array().unwrap().len(), 6);
    let v = json(&["icosa", "--emit", "phi"]);
    assert_eq!(v["findings"]["transposition_images"].as_array().unwrap().len(), 15);
    assert_eq!(v["findings"]["phi"].as_array().unwrap().len(), 720);
    let v = json(&["icosa", "--emit", "labelings"]);
    assert_eq!(v["findings"]["classes"].as_array().unwrap().len(), 12);
}

#[test]
fn json_is_byte_identical_across_runs() {
    for args in [&["verify-all", "--json"][..], &["icosa", "--emit", "phi", "--json"], &["k6", "--emit", "tutte", "--format", "json"]] {
        let a = outersix(args);
        let b = outersix(args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn tutte_dot() {
    let out = outersix(&["k6", "--emit", "tutte", "--format", "dot"]);
    assert_eq!(out.status.code(), Some(0));
    let dot = String::from_utf8(out.stdout).unwrap();
    assert!(dot.starts_with("graph "));
    assert_eq!(dot.matches(" -- ").count(), 45);
    assert_eq!(dot.lines().filter(|l| l.contains("fillcolor=")).count(), 30);
}

#[test]
fn k6_text_listings() {
    let out = outersix(&["k6", "--emit", "factors"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.trim().starts_with("12|") ).count(), 3);
    let v = json(&["k6", "--emit", "doily"]);
    assert_eq!(v["findings"]["lines"].as_array().unwrap().len(), 15);
}

#[test]
fn verify_all_passes() {
    let v = json(&["verify-all"]);
    let checks = v["findings"]["checks"].as_array().unwrap();
    assert!(checks.len() > 10);
    assert!(checks.iter().all(|c| c["passed"] == true));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = outersix(&["classes", "--n", "4", "--json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["command"], "classes");
}

#[test]
fn explicit_model_file_passes() {
    let model = fixture("icosahedron.json");
    assert_eq!(json(&["verify-all", "--model", model.to_str().unwrap()])["passed"], true);
}

#[test]
fn corrupted_model_names_the_invariant() {
    let model = fixture("missing_face.json");
    let out = outersix(&["verify-all", "--json", "--model", model.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], false);
    assert!(String::from_utf8_lossy(&out.stderr).contains("icosa-face-count"));

    let out = outersix(&["icosa", "--emit", "pairs", "--model", model.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("icosa-face-count"));
}

#[test]
fn non_involutive_antipode_is_rejected() {
    let mut tables: Value = serde_json::from_str(&std::fs::read_to_string(fixture("icosahedron.json")).unwrap()).unwrap();
    let antipode = tables["antipode"].as_array_mut().unwrap();
    antipode.swap(0, 1);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, tables.to_string()).unwrap();
    let out = outersix(&["verify-all", "--model", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("icosa-antipode"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["aut", "--n", "7"][..],
        &["classes", "--n", "1"],
        &["lemma2", "--n-max", "12"],
        &["icosa", "--emit", "nothing"],
        &["k6", "--emit", "factors", "--format", "dot"],
        &["k6", "--emit", "tutte", "--format", "dot", "--json"],
        &["verify-all", "--model", "/nonexistent/model.json"],
        &["bogus"],
        &[],
    ] {
        assert_eq!(outersix(args).status.code(), Some(2), "{args:?}");
    }
}
