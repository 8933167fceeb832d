use std::io::Write;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("pezzo").chain(args.iter().copied());
    let code = pezzo_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let (code, out, err) = run(&full);
    assert!(code != 0 || err.is_empty(), "stderr: {err}");
    let v = if out.is_empty() { Value::Null } else { serde_json::from_str(&out).unwrap() };
    (code, v)
}

fn instance(body: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(body.as_bytes()).unwrap();
    f
}

#[test]
fn classify_intermediate_and_json_format() {
    let (code, v) = run_json(&["classify", "--m", "3", "--n", "7", "--ell", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["format"], 1);
    assert_eq!(v["rational"], "yes");
    assert_eq!(v["cylindrical"], "yes");

    let (code, v) = run_json(&["classify", "--m", "2", "--n", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["rational"], "yes");
}

#[test]
fn classify_missing_ell_is_parameter_error() {
    let (code, out, err) = run(&["classify", "--m", "3", "--n", "8"]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert!(err.contains("ell"));
}

#[test]
fn rr_table_for_m4() {
    let (code, v) = run_json(&["rr", "--m", "4", "--n", "8", "--max-j", "6", "--embedding"]);
    assert_eq!(code, 0);
    let h0: Vec<i64> = v["table"].as_array().unwrap().iter().map(|r| r["h0"].as_i64().unwrap()).collect();
    assert_eq!(h0, [2, 4, 7, 11, 16, 22]);
    assert_eq!(v["embedding"]["ambient_weights"], serde_json::json!([1, 1, 2, 3]));
}

#[test]
fn ell_swap_action_gives_zero() {
    let f = instance(
        r#"{"model":{"m":2,"n":6,"kind":"plane"},"curves":"auto",
            "galois":[[7,8,9,10,11,12,1,2,3,4,5,6]],"q_point":"no"}"#,
    );
    let (code, v) = run_json(&["ell", "--instance", f.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["ell"], 0);
    assert_eq!(v["witness"], serde_json::json!([]));
    assert_eq!(v["verdict"]["rational"], "no");
}

#[test]
fn ell_trivial_action_uses_all_curves() {
    let f = instance(r#"{"model":{"m":3,"n":7,"kind":"plane"}}"#);
    let (code, v) = run_json(&["ell", "--instance", f.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["ell"], 7);
    let witness: Vec<i64> = v["witness"].as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect();
    assert_eq!(witness.len(), 7);
    assert!(witness.iter().all(|&i| i >= 1));
}

#[test]
fn ell_rejects_bad_instances() {
    let wrong_len = instance(r#"{"model":{"m":2,"n":6,"kind":"plane"},"galois":[[2,1]]}"#);
    let (code, _, err) = run(&["ell", "--instance", wrong_len.path().to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(!err.is_empty());

    // Swapping E_1 with E_2' alone breaks the intersection form.
    let not_isometry = instance(
        r#"{"model":{"m":2,"n":6,"kind":"plane"},"galois":[[8,2,3,4,5,6,7,1,9,10,11,12]]}"#,
    );
    let (code, _, err) = run(&["ell", "--instance", not_isometry.path().to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(!err.is_empty());

    let unknown_key = instance(r#"{"model":{"m":2,"n":6,"kind":"plane"},"extra":true}"#);
    let (code, _, _) = run(&["ell", "--instance", unknown_key.path().to_str().unwrap()]);
    assert_eq!(code, 1);

    let (code, _, _) = run(&["ell", "--instance", "/nonexistent/instance.json"]);
    assert_eq!(code, 1);
}

#[test]
fn curves_and_lattice_json() {
    let (code, v) = run_json(&["curves", "--m", "2", "--n", "6", "--kind", "plane", "--meeting-q"]);
    assert_eq!(code, 0);
    assert_eq!(v["total"], 12);

    let (code, v) = run_json(&["lattice", "--m", "3", "--n", "7"]);
    assert_eq!(code, 0);
    assert_eq!(v["signature"], serde_json::json!([1, 8]));
    assert_eq!(v["k_squared"], 1);

    let doc = instance(r#"{"m":2,"n":6,"kind":"hirzebruch","classes":[[1,0,0,0,0,0,0,0],[0,1,0,0,0,0,0,0]]}"#);
    let (code, v) = run_json(&["lattice", "--document", doc.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["intersections"], serde_json::json!([[-2, 1], [1, 0]]));
}

#[test]
fn sections_lines_census() {
    let (code, v) = run_json(&["sections", "lines", "--a", "1,0,-5,0,4", "--b", "1,0,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["total"], 12);
    assert!(v["splits"].as_array().unwrap().iter().all(|s| s["rational_pair"] != true));

    let (code, _, err) = run(&["sections", "lines", "--a", "1,0,-2,0,1", "--b", "1,0,1"]);
    assert_eq!(code, 1, "repeated root must be rejected: {err}");
}

#[test]
fn sections_ci_roots() {
    let (code, v) = run_json(&["sections", "ci", "--h", "1,0,0,0,1"]);
    assert_eq!(code, 0);
    let roots: Vec<&str> = v["rational_roots"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["value"].as_str().unwrap())
        .collect();
    assert_eq!(roots, ["-2", "2"]);
}

#[test]
fn invalid_arguments_exit_one_and_help_exits_zero() {
    assert_eq!(run(&["classify", "--m", "x", "--n", "7"]).0, 1);
    assert_eq!(run(&["frobnicate"]).0, 1);
    assert_eq!(run(&["lattice", "--m", "1", "--n", "5"]).0, 1);
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("classify"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["--json", "curves", "--m", "3", "--n", "7"][..],
        &["rr", "--m", "5", "--max-j", "8"][..],
        &["--json", "verify"][..],
    ] {
        assert_eq!(run(args), run(args));
    }
}

#[test]
fn verify_exit_code_matches_checks() {
    let (code, out, _) = run(&["verify"]);
    let failing: Vec<&str> = out.lines().filter(|l| l.contains(" FAIL ")).collect();
    assert_eq!(code == 0, failing.is_empty());
    if code != 0 {
        assert_eq!(code, 2);
        assert!(out.contains("first failing clause"));
    }
    let (jcode, v) = run_json(&["verify"]);
    assert_eq!(jcode, code);
    assert_eq!(v["passed"], code == 0);
    assert_eq!(v["checks"].as_array().unwrap().len(), 9);
}
