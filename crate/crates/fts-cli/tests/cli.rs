use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fts(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fts")).args(args).env("FTS_THREADS", "2").output().unwrap()
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).to_string_lossy().into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn build_diagonal_matches_golden() {
    let o = fts(&["build", "--pq", &data("diag.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), include_str!("golden/build_diag.txt"));
    assert!(stdout(&o).starts_with("Nx: -27*x1*x2*x3\n"));
}

#[test]
fn build_identity_pair_is_degenerate() {
    let o = fts(&["build", "--pq", &data("identity.json")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("underdetermined"));
}

#[test]
fn build_parametric_pair() {
    let o = fts(&["build", "--pq", &data("parametric.json")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().next().unwrap().contains("p11"));
    assert_eq!(out.lines().count(), 4);
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(fts(&["build", "--pq", "/nonexistent/pq.json"]).status.code(), Some(2));
    assert_eq!(fts(&["check", "--suite", "bogus"]).status.code(), Some(2));
    assert_eq!(fts(&["emit", "--variety", "X99"]).status.code(), Some(2));
    assert_eq!(fts(&["emit", "--variety", "F22", "--format", "xml"]).status.code(), Some(2));
}

#[test]
fn identities_on_diagonal_pair_pass() {
    let o = fts(&["check", "--suite", "identities", "--pq", &data("diag.json")]);
    assert_eq!(o.status.code(), Some(0));
    let recs = lines(&o);
    assert!(recs.iter().all(|r| r["status"] == "pass"));
    let names: Vec<&str> = recs.iter().map(|r| r["check_name"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    assert!(names.contains(&"identities.pq.peirce_spectrum"));
    assert!(names.contains(&"identities.z12.beta_adjoint"));
}

#[test]
fn corrupted_norm_fails_axioms() {
    let o = fts(&["check", "--suite", "axioms", "--pq", &data("corrupt.json")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(lines(&o).iter().any(|r| r["check_name"] == "axioms.pq.A3" && r["status"] == "fail"));
}

#[test]
fn cl10_presentations_are_equivalent() {
    let o = fts(&["check", "--suite", "variety:CL10"]);
    assert_eq!(o.status.code(), Some(0));
    let recs = lines(&o);
    assert!(recs.iter().any(|r| r["check_name"].as_str().unwrap().contains("CL10_vs_CL10_alt")));
    assert!(recs.iter().all(|r| r["duration_ms"] == 0));
}

#[test]
fn strict_mode_reports_inconclusive() {
    // bound 1 is too small to certify the strict-regularity components
    let o = fts(&["check", "--suite", "identities", "--pq", &data("diag.json"), "--bound", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let open: Vec<Value> = lines(&o).into_iter().filter(|r| r["status"] != "pass").collect();
    assert_eq!(open.len(), 8);
    assert!(open.iter().all(|r| r["status"] == "inconclusive"
        && r["check_name"].as_str().unwrap().starts_with("identities.pq.streg_consistency:")));
    let strict = fts(&["check", "--suite", "identities", "--pq", &data("diag.json"), "--bound", "1", "--strict"]);
    assert_eq!(strict.status.code(), Some(3));
}

#[test]
fn emit_matches_golden_files() {
    let o = fts(&["emit", "--variety", "F22"]);
    assert_eq!(stdout(&o), include_str!("golden/F22.txt"));
    assert_eq!(stdout(&o).lines().filter(|l| !l.starts_with('#')).count(), 9);
    let o = fts(&["variety", "S8", "--format", "json"]);
    assert_eq!(stdout(&o), include_str!("golden/S8.json"));
    let o = fts(&["emit", "--variety", "P23_transform"]);
    assert_eq!(stdout(&o), include_str!("golden/P23_transform.txt"));
}

#[test]
fn emit_writes_file() {
    let path = std::env::temp_dir().join(format!("fts-emit-{}.json", std::process::id()));
    let o = fts(&["emit", "--variety", "U14", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(v["name"], "U14");
    assert_eq!(v["equations"].as_array().unwrap().len(), 9);
}

#[test]
fn weights_with_table() {
    let o = fts(&["weights", "U14", "--table", &data("u14_weights.json")]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["solution"]["dimension"], 6);
    assert_eq!(v["table"]["homogeneous"], true);
    assert_eq!(v["graded"]["delta"], "11");
}

#[test]
fn fibers_suite_passes() {
    let o = fts(&["check", "--suite", "fibers"]);
    assert_eq!(o.status.code(), Some(0));
    let recs = lines(&o);
    let scroll = recs.iter().find(|r| r["check_name"] == "fibers.tangential_scroll").unwrap();
    assert_eq!(scroll["details"]["constant"], "27");
}

#[test]
fn weights_suite_reports_base_locus() {
    let o = fts(&["check", "--suite", "weights"]);
    let recs = lines(&o);
    let bl = recs.iter().find(|r| r["check_name"] == "weights.u14.base_locus").unwrap();
    let residual: Vec<&str> = bl["details"]["residual"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
    assert_eq!(residual, ["s*t", "t*y3", "y3^2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(recs.iter().filter(|r| r["check_name"] != "weights.u14.base_locus").all(|r| r["status"] == "pass"));
}
