use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn sgrank(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sgrank")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(stdout(o).trim()).expect("valid JSON on stdout")
}

#[test]
fn small_cw_polynomial() {
    let o = sgrank(&["sgr", "--poly", "x0*x1^2 + x0*x2^2"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("sgr: 2\n"));
}

#[test]
fn json_report_has_sorted_keys() {
    let o = sgrank(&["sgr", "--poly", "3*x0^2*x1", "--gr", "--json"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with(r#"{"ambient":2,"field":"QQ","gr":2,"ms":"#), "{text}");
    let v = json(&o);
    assert_eq!((v["sgr"].as_u64(), v["gr"].as_u64()), (Some(1), Some(2)));
}

#[test]
fn exit_codes() {
    assert_eq!(sgrank(&["sgr", "--poly", "0"]).status.code(), Some(3));
    assert_eq!(sgrank(&["sgr", "--poly", "x0 + x1"]).status.code(), Some(3));
    assert_eq!(sgrank(&["sgr", "--poly", "x0^2 + x1"]).status.code(), Some(3));
    assert_eq!(sgrank(&["sgr", "--poly", "x0 +* x1"]).status.code(), Some(2));
    assert_eq!(sgrank(&["sgr", "--poly", "y^2"]).status.code(), Some(2));
    assert_eq!(sgrank(&["sgr", "--poly", "x0^3", "--field", "Fp:8"]).status.code(), Some(2));
    assert_eq!(sgrank(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(sgrank(&["sample", "secant", "-r", "5", "-n", "2"]).status.code(), Some(3));
}

#[test]
fn timeout_reports_partial_progress() {
    let f: Vec<String> = (0..9).flat_map(|i| (0..9).map(move |j| format!("x{i}*x{j}*x{}", (i * j) % 9))).collect();
    let o = sgrank(&["sgr", "--poly", &f.join(" + "), "--timeout", "0.001"]);
    assert_eq!(o.status.code(), Some(4));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("timeout after") && err.contains("basis size"), "{err}");
}

#[test]
fn tensor_file_same_rank_in_both_fields() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("icw.json");
    // big CW with q = 2, n = 3
    fs::write(
        &path,
        r#"{"order": 3, "dim": 4, "symmetric": true, "entries": [
            {"idx": [0, 1, 1], "val": "1"}, {"idx": [0, 2, 2], "val": "1"}, {"idx": [0, 0, 3], "val": 1}]}"#,
    )
    .unwrap();
    let p = path.to_str().unwrap();
    let qq = sgrank(&["sgr", "--tensor", p, "--json"]);
    let fp = sgrank(&["sgr", "--tensor", p, "--json", "--field", "Fp:2147483647"]);
    assert_eq!(json(&qq)["sgr"], 2);
    assert_eq!(json(&fp)["sgr"], 2);
    assert_eq!(json(&fp)["field"], "Fp:2147483647");
    assert!(String::from_utf8_lossy(&fp.stderr).contains("note:"));
    let gr = sgrank(&["gr", "--tensor", p]);
    assert!(stdout(&gr).contains("gr: 3"), "{}", stdout(&gr));
}

#[test]
fn general_tensor_needs_gr() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.json");
    fs::write(&path, r#"{"order": 2, "dim": 2, "symmetric": false, "entries": [{"idx": [0, 1], "val": "1"}]}"#)
        .unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(sgrank(&["sgr", "--tensor", p]).status.code(), Some(3));
    let o = sgrank(&["gr", "--tensor", p, "--json"]);
    assert!(o.status.success());
    assert_eq!(json(&o)["gr"], 1);
    fs::write(&path, "{not json").unwrap();
    assert_eq!(sgrank(&["gr", "--tensor", p]).status.code(), Some(2));
}

#[test]
fn matrix_gr_is_rank() {
    let o = sgrank(&["gr", "--poly", "x0^2 + 2*x0*x1 + x1^2 + x2^2 + x3^2", "--json"]);
    let v = json(&o);
    assert_eq!((v["sgr"].as_u64(), v["gr"].as_u64()), (Some(3), Some(3)));
}

#[test]
fn dim_of_ideals() {
    let o = sgrank(&["dim", "--poly", "x0*x1; x1*x2", "--poly", "x0*x2", "--json"]);
    assert_eq!(json(&o)["dim"], 1);
    let o = sgrank(&["dim", "--poly", "x0", "--vars", "4", "--order", "lex", "--json"]);
    assert_eq!((json(&o)["dim"].as_i64(), json(&o)["ambient"].as_u64()), (Some(3), Some(4)));
    let o = sgrank(&["dim", "--poly", "x0 - 1; x0"]);
    assert!(stdout(&o).starts_with("dim: -1"));
}

#[test]
fn hypergraph_files() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, text: &str| {
        let p = dir.path().join(name);
        fs::write(&p, text).unwrap();
        p.to_str().unwrap().to_string()
    };
    let triangle = write("tri.txt", "# triangle\n1 2\n2 3\n1 3\n");
    let o = sgrank(&["hypergraph", &triangle, "--json"]);
    let v = json(&o);
    assert_eq!(v["sgr"], 3);
    assert!(v["annotation"].as_str().unwrap().contains("symmetric subrank <= sgr = 3"));
    let edge = write("edge.txt", "1 2 3\n");
    assert!(stdout(&sgrank(&["hypergraph", &edge])).starts_with("sgr: 2\n"));
    assert_eq!(sgrank(&["hypergraph", &write("empty.txt", "")]).status.code(), Some(2));
    assert_eq!(sgrank(&["hypergraph", &write("mixed.txt", "1 2\n1 2 3\n")]).status.code(), Some(2));
    assert_eq!(sgrank(&["hypergraph", "/nonexistent/edges.txt"]).status.code(), Some(2));
}

#[test]
fn sampling_with_checks() {
    let o = sgrank(&["sample", "tangential", "-n", "3", "--seed", "7", "--check"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("check: sgr = 1 (expected 1) ok"));
    let o = sgrank(&["sample", "secant", "-r", "2", "-n", "2", "--seed", "1", "--check"]);
    assert!(o.status.success());
    let o = sgrank(&["sample", "reducible", "--d1", "2", "--d2", "1", "-n", "3", "--check"]);
    assert!(o.status.success());
    let o = sgrank(&["sample", "c-ir", "-n", "3", "--seed", "4", "--check", "--json"]);
    assert_eq!(json(&o)["sgr"], 2);
}

#[test]
fn samples_are_reproducible_and_sidecar_records_them() {
    let dir = tempfile::tempdir().unwrap();
    let side = dir.path().join("s.json");
    let a = sgrank(&["sample", "secant", "-r", "3", "-n", "3", "--seed", "11", "--sidecar", side.to_str().unwrap()]);
    let b = sgrank(&["sample", "secant", "-r", "3", "-n", "3", "--seed", "11"]);
    assert_eq!(stdout(&a), stdout(&b));
    let meta: Value = serde_json::from_str(&fs::read_to_string(&side).unwrap()).unwrap();
    assert_eq!(meta["seed"], 11);
    assert_eq!(meta["kind"], "secant");
    assert_eq!(meta["params"]["r"], 3);
    assert_eq!(meta["polynomial"].as_str().unwrap(), stdout(&a).trim());
}

#[test]
fn verify_suites_pass() {
    for suite in ["paper-values", "sm", "discriminant", "tangency"] {
        let o = sgrank(&["verify", suite, "--jobs", "2"]);
        assert!(o.status.success(), "{suite}: {}", stdout(&o));
        assert!(!stdout(&o).contains("FAIL"));
    }
    let o = sgrank(&["verify", "identity", "--json"]);
    let v = json(&o);
    assert_eq!(v["passed"], v["total"]);
}
