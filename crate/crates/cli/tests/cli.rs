use std::path::PathBuf;
use std::process::Command;

use csp_cli::io::{io_roundtrip, Document};

fn csp(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_csp")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

const WORDS: &str = r#"{"n":6,"rows":[["2","1","0","0","0","11"],["0","0","2","0","0","7"],["0","0","0","0","0","11"],["0","1","2","0","0","7"],["0","0","0","0","0","11"],["0","0","2","0","0","7"]]}"#;

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn matrix_file_round_trips_and_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(&dir, "m.json", WORDS);
    let doc = io_roundtrip(&path).unwrap();
    assert_eq!(doc.to_json(), WORDS);
    let Document::Matrix(a) = doc else { panic!("not a matrix") };
    assert!(a.verify());

    let p = path.to_str().unwrap();
    let (code, out, _) = csp(&["cone", "verify", "--file", p]);
    assert_eq!((code, out.trim()), (0, r#"{"verifies":true}"#));
    let (code, out, _) = csp(&["cone", "project", "--file", p]);
    assert_eq!(code, 0);
    assert!(out.starts_with(r#"{"n":6,"rows":[["2","1","2","0","0","9"]"#), "{out}");
    let (code, out, _) = csp(&["cone", "decompose", "--file", p]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["prefixes_verify"], true);
    assert!(!v["swaps"].as_array().unwrap().is_empty());
}

#[test]
fn non_csp_matrix_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(&dir, "bad.json", r#"{"n":2,"rows":[["0","0"],["1","0"]]}"#);
    let (code, out, _) = csp(&["cone", "verify", "--file", path.to_str().unwrap()]);
    assert_eq!((code, out.trim()), (1, r#"{"verifies":false}"#));
}

#[test]
fn malformed_input_reports_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(&dir, "z.json", "{\"n\":1,\n \"rows\":[[\"1/0\"]]}");
    let (code, _, err) = csp(&["cone", "verify", "--file", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("1/0") && err.contains("line 2"), "{err}");
    let (code, _, err) = csp(&["cone", "verify", "--file", "/nonexistent/m.json"]);
    assert_eq!(code, 2);
    assert!(err.contains("cannot read"), "{err}");
}

#[test]
fn poly_file_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(&dir, "f.json", r#"{"n":6,"coeffs":[10,1,0,3,0,1]}"#);
    let (code, out, _) = csp(&["--table", "check-poly", "--file", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(
        out,
        "evaluations: 8,12,5,12,8,15\nsieve: 8,4,-3,0,0,6\nverdict: no (negative_orbit_count, k=3)\n"
    );
}

#[test]
fn fast_grid_and_thread_cap() {
    let out = Command::new(env!("CARGO_BIN_EXE_csp"))
        .args(["grid", "--fast"])
        .env("CSP_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["summary"]["points"], 288);
    assert_eq!(v["summary"]["no"], 0);
}

#[test]
fn sweeps_exit_zero() {
    assert_eq!(csp(&["catalan", "--max-n", "10"]).0, 0);
    assert_eq!(csp(&["appendix", "--grid-max", "3", "--samples", "10"]).0, 0);
    let (code, out, _) = csp(&["--table", "cone", "count", "--p", "3", "--m", "8", "--brute-force"]);
    assert_eq!(code, 0);
    assert!(out.contains("matrices: 11") && out.contains("brute force: 11"), "{out}");
}
