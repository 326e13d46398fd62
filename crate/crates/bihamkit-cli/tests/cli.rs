//! End-to-end runs of the installed binary: exit codes, report text,
//! and byte-determinism of the JSON output.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bihamkit"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, body).expect("write fixture");
    path.to_str().expect("utf8 path").to_string()
}

const FLAT_PENCIL: &str = r#"{"dim": 4,
 "A": [[0,1,0,0],[-1,0,0,0],[0,0,0,0],[0,0,0,0]],
 "B": [[0,0,1,0],[0,0,0,0],[-1,0,0,0],[0,0,0,0]]}"#;

const JORDAN_PENCIL: &str = r#"{"dim": 4,
 "A": [[0,1,0,0],[-1,0,0,0],[0,0,0,1],[0,0,-1,0]],
 "B": [[0,0,0,0],[0,0,0,0],[0,0,0,2],[0,0,-2,0]]}"#;

const STRAT_PAIR: &str = r#"{"vars": ["p1","p2","q1","q2","q3","q4"],
 "first":  [{"idx": [1,3], "poly": "1"}, {"idx": [2,4], "poly": "1"}],
 "second": [{"idx": [1,4], "poly": "1"}, {"idx": [1,5], "poly": "q1"}, {"idx": [2,6], "poly": "1"}]}"#;

const INCOMPATIBLE_PAIR: &str = r#"{"vars": ["p1","p2","q1","q2","q3","q4"],
 "first":  [{"idx": [1,3], "poly": "1"}, {"idx": [2,4], "poly": "1"}],
 "second": [{"idx": [1,4], "poly": "1"}, {"idx": [1,5], "poly": "q1*q2"}, {"idx": [2,6], "poly": "1"}]}"#;

#[test]
fn examples_verify_passes() {
    let out = run(&["examples", "verify"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("15 of 15 checks passed"), "{text}");
    assert!(!text.contains("FAIL"), "{text}");
}

#[test]
fn examples_verify_json_is_byte_identical() {
    let a = run(&["examples", "verify", "--format", "json"]);
    let b = run(&["examples", "verify", "--format", "json"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let doc: serde_json::Value = serde_json::from_slice(&a.stdout).expect("valid json");
    let criteria: Vec<u64> = doc["criteria"]
        .as_array()
        .expect("criteria array")
        .iter()
        .map(|c| c["criterion"].as_u64().expect("criterion number"))
        .collect();
    assert_eq!(criteria, vec![1, 2, 3, 4]);
    assert!(doc["ok"].as_bool().expect("ok flag"));
}

#[test]
fn only_filter_restricts_checks() {
    let out = run(&["examples", "verify", "--only", "4.5", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).expect("valid json");
    let checks = doc["checks"].as_array().expect("checks array");
    assert!(!checks.is_empty());
    for c in checks {
        assert!(c["id"].as_str().expect("id").contains("4.5"));
    }
}

#[test]
fn unknown_only_filter_is_an_input_error() {
    let out = run(&["examples", "verify", "--only", "zzz"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("zzz"));
}

#[test]
fn constant_pencil_analyze() {
    let dir = TempDir::new().expect("tempdir");
    let path = write(dir.path(), "flat.json", FLAT_PENCIL);
    let out = run(&["pencil", "analyze", "--input", &path]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("type           (0,1)"), "{text}");
    assert!(text.contains("complete       true"), "{text}");
}

#[test]
fn pair_document_with_point_analyzes_the_evaluated_pencil() {
    let dir = TempDir::new().expect("tempdir");
    let path = write(dir.path(), "pair.json", STRAT_PAIR);
    let on = run(&[
        "pencil", "analyze", "--input", &path, "--point", "0,0,0,1,2,3",
    ]);
    assert_eq!(code(&on), 0, "stderr: {}", stderr(&on));
    assert!(stdout(&on).contains("type           (0,2)"));
    let off = run(&[
        "pencil", "analyze", "--input", &path, "--point", "0,0,1,1,2,3",
    ]);
    assert_eq!(code(&off), 0);
    assert!(stdout(&off).contains("type           (1,1)"));
}

#[test]
fn point_flag_mismatches_are_input_errors() {
    let dir = TempDir::new().expect("tempdir");
    let flat = write(dir.path(), "flat.json", FLAT_PENCIL);
    let pair = write(dir.path(), "pair.json", STRAT_PAIR);
    let with_point = run(&["pencil", "analyze", "--input", &flat, "--point", "1,2"]);
    assert_eq!(code(&with_point), 2);
    let without_point = run(&["pencil", "analyze", "--input", &pair]);
    assert_eq!(code(&without_point), 2);
}

#[test]
fn compatible_pair_check_passes() {
    let dir = TempDir::new().expect("tempdir");
    let path = write(dir.path(), "pair.json", STRAT_PAIR);
    let out = run(&["poisson", "check", "--input", &path]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("compatibility   ok"));
}

#[test]
fn incompatible_pair_reports_the_offending_component() {
    let dir = TempDir::new().expect("tempdir");
    let path = write(dir.path(), "pair.json", INCOMPATIBLE_PAIR);
    let out = run(&["poisson", "check", "--input", &path]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("compatibility   FAIL"), "{text}");
    assert!(text.contains("offending       [1,2,5] of the mixed bracket"), "{text}");
}

#[test]
fn two_bivector_files_are_accepted() {
    let dir = TempDir::new().expect("tempdir");
    let first = write(
        dir.path(),
        "so3.json",
        r#"{"vars": ["x","y","z"],
 "components": [{"idx": [1,2], "poly": "z"}, {"idx": [1,3], "poly": "-y"}, {"idx": [2,3], "poly": "x"}]}"#,
    );
    let second = write(
        dir.path(),
        "frozen.json",
        r#"{"vars": ["x","y","z"], "components": [{"idx": [1,2], "poly": "1"}]}"#,
    );
    let out = run(&["poisson", "check", "--input", &first, "--input", &second]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("compatibility   ok"));
}

#[test]
fn web_build_certifies_the_flat_pencil() {
    let dir = TempDir::new().expect("tempdir");
    let path = write(dir.path(), "flat.json", FLAT_PENCIL);
    let out = run(&["web", "build", "--input", &path, "--format", "json"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).expect("valid json");
    assert_eq!(doc["web_type"], serde_json::json!([0, 1]));
    assert_eq!(doc["phi_dims"], serde_json::json!([4, 3, 1]));
    assert!(doc["certified"].as_bool().expect("certified"));
}

#[test]
fn jordan_pencil_fails_basis_and_web() {
    let dir = TempDir::new().expect("tempdir");
    let path = write(dir.path(), "jordan.json", JORDAN_PENCIL);
    for sub in [["pencil", "basis"], ["web", "build"]] {
        let out = run(&[sub[0], sub[1], "--input", &path]);
        assert_eq!(code(&out), 1, "{:?}: {}", sub, stderr(&out));
        assert!(stderr(&out).contains("not complete"));
    }
}

#[test]
fn lie_translate_witness_search_is_deterministic() {
    let a = run(&["lie", "translate", "--algebra", "sl3", "--format", "json"]);
    let b = run(&["lie", "translate", "--algebra", "sl3", "--format", "json"]);
    assert_eq!(code(&a), 0, "stderr: {}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
    let doc: serde_json::Value = serde_json::from_slice(&a.stdout).expect("valid json");
    assert_eq!(doc["theorem"]["minimal_indices"], serde_json::json!([1, 2]));
    assert!(doc["theorem"]["ok"].as_bool().expect("ok"));
}

#[test]
fn lie_translate_accepts_explicit_shift_and_point() {
    let out = run(&[
        "lie", "translate", "--algebra", "sl2", "--shift", "1,0,0", "--point", "1,2,3",
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("overall        ok"));
}

#[test]
fn zero_shift_is_an_input_error() {
    let out = run(&["lie", "translate", "--algebra", "sl2", "--shift", "0,0,0"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("zero"));
}

#[test]
fn point_without_shift_is_an_input_error() {
    let out = run(&["lie", "translate", "--algebra", "sl2", "--point", "1,2,3"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn custom_algebra_runs_from_document_files() {
    let dir = TempDir::new().expect("tempdir");
    let sc = write(
        dir.path(),
        "sl2-sc.json",
        r#"{"dim": 3, "labels": ["h","e","f"],
 "brackets": [[1,2,2,2], [1,3,3,-2], [2,3,1,1]]}"#,
    );
    let cas = write(dir.path(), "sl2-cas.json", r#"["h*h + 4*e*f"]"#);
    let out = run(&["lie", "translate", "--input", &sc, "--input", &cas]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("indices        (1)  match ok"));
}

#[test]
fn broken_jacobi_table_is_an_input_error() {
    let dir = TempDir::new().expect("tempdir");
    // J(x1,x2,x3) = [[x2,x3],x1] = -x3, nonzero
    let sc = write(
        dir.path(),
        "bad-sc.json",
        r#"{"dim": 3, "brackets": [[1,2,3,1], [2,3,2,1]]}"#,
    );
    let cas = write(dir.path(), "cas.json", r#"["x1*x1"]"#);
    let out = run(&["lie", "translate", "--input", &sc, "--input", &cas]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("Jacobi"), "{}", stderr(&out));
}

#[test]
fn malformed_inputs_are_input_errors() {
    let dir = TempDir::new().expect("tempdir");
    let garbage = write(dir.path(), "garbage.json", r#"{"not": "valid"}"#);
    let broken = write(dir.path(), "broken.json", "{");
    let missing = dir.path().join("missing.json");
    for path in [&garbage, &broken, missing.to_str().expect("utf8")] {
        let out = run(&["pencil", "analyze", "--input", path]);
        assert_eq!(code(&out), 2, "{path}: {}", stderr(&out));
    }
}

#[test]
fn usage_errors_exit_two() {
    let no_input = run(&["pencil", "analyze"]);
    assert_eq!(code(&no_input), 2);
    let bad_subcommand = run(&["bogus"]);
    assert_eq!(code(&bad_subcommand), 2);
}
