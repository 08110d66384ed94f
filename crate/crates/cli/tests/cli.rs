use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name).to_string_lossy().into_owned()
}

fn schull(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schull")).args(args).output().unwrap()
}

#[test]
fn text_format_is_one_line() {
    let out = schull(&["compute", "--input", &fixture("square_probs.json"), "--stat", "width", "--method", "witness", "--format", "text"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 1);
    assert!(text.starts_with("width witness value="));
}

#[test]
fn timing_is_opt_in() {
    let base = ["compute", "--input", &fixture("two_points.json"), "--stat", "diameter", "--method", "oracle"];
    let plain: serde_json::Value = serde_json::from_slice(&schull(&base).stdout).unwrap();
    assert!(plain["elapsed_ms"].is_null());
    assert_eq!(plain["value"], 0.25);
    let timed: serde_json::Value = serde_json::from_slice(&schull(&[&base[..], &["--timing"]].concat()).stdout).unwrap();
    assert!(timed["elapsed_ms"].is_number());
    assert_eq!(plain["dataset_digest"], timed["dataset_digest"]);
}

#[test]
fn unavailable_method_is_a_capability_error() {
    let out = schull(&["compute", "--input", &fixture("square_probs.json"), "--stat", "width", "--method", "two-approx"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn invalid_dataset_is_a_validation_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{"dim":2,"points":[{"coords":[0.0,0.0],"prob":1.5}]}"#).unwrap();
    let out = schull(&["compute", "--input", path.to_str().unwrap(), "--stat", "width", "--method", "witness"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("probability"));
}

#[test]
fn missing_method_is_a_usage_error() {
    let out = schull(&["compute", "--input", &fixture("two_points.json"), "--stat", "diameter"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_reports_pass() {
    let out = schull(&["verify", "--input", &fixture("square_probs.json"), "--stat", "diameter", "--method", "two-approx", "--format", "text"]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().trim_end().ends_with("PASS"));
}
