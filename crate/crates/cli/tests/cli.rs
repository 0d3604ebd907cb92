use std::process::{Command, Output};

use serde_json::Value;

const EXAMPLE: &str = "x1^3 - 6 x1 x2^2 - 6 x2^3 + 6 x1^2 x3 + 18 x1 x2 x3 + 12 x2^2 x3 + 4 x3^3";

fn tcubic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tcubic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = tcubic(&full);
    let v = serde_json::from_slice(&out.stdout).expect("report is JSON");
    (out.status.code().expect("exit code"), v)
}

#[test]
fn classify_worked_example() {
    let (code, v) = json(&["classify", EXAMPLE]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], "ternary-cubic-report/1");
    assert_eq!(v["command"], "classify");
    assert_eq!(v["input"]["form"], EXAMPLE);
    assert_eq!(v["result"]["kind"], "CompletelyReducibleGeneric");
    assert_eq!(v["result"]["witnesses"]["lambda"], "-108");
}

#[test]
fn classify_fermat_is_negative() {
    let (code, v) = json(&["classify", "x1^3 + x2^3 + x3^3"]);
    assert_eq!(code, 1);
    assert_eq!(v["result"]["kind"], "NotCompletelyReducible");
}

#[test]
fn classify_single_criterion() {
    let (code, v) = json(&["classify", "--criterion", "gamma", EXAMPLE]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["result"]["completely_reducible"], true);
}

#[test]
fn factor_coordinate_triangle() {
    let (code, v) = json(&["factor", "x1 x2 x3"]);
    assert_eq!(code, 0);
    let exact = &v["result"]["exact"];
    assert_eq!(exact["scalar"], "1");
    let mut lines: Vec<&str> = exact["factors"].as_array().unwrap().iter().map(|l| l.as_str().unwrap()).collect();
    lines.sort();
    assert_eq!(lines, ["x1", "x2", "x3"]);
    let scalar = &v["result"]["scalar"];
    assert!(scalar["re"].is_f64() && scalar["im"].is_f64());
}

#[test]
fn factor_refuses_irreducible() {
    let (code, v) = json(&["factor", "x1^3 + x2^3 + x3^3"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["code"], "NotReducible");
}

#[test]
fn concomitant_s_vanishes() {
    let (code, v) = json(&["concomitant", "--kind", "S", "x1 (x1 x2 + x3^2)"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["values"]["S"], "0");
    let text = tcubic(&["concomitant", "--kind", "S", "x1 (x1 x2 + x3^2)"]);
    assert_eq!(String::from_utf8(text.stdout).unwrap(), "S = 0\n");
}

#[test]
fn concomitant_verify_passes() {
    let (code, v) = json(&["concomitant", "--verify", "--kind", "delta", "x1 x2 x3"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["result"]["verified"], true);
}

#[test]
fn parse_errors_exit_two() {
    let (code, v) = json(&["factor", "x1^3 +"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["code"], "SyntaxError");
    let (code, v) = json(&["classify", "x1^2"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["code"], "DegreeMismatch");
    assert_eq!(tcubic(&["classify", "--criterion", "nope", "x1^3"]).status.code(), Some(2));
    assert_eq!(tcubic(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn forms_read_from_file() {
    let dir = std::env::temp_dir().join(format!("tcubic-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("form.txt");
    std::fs::write(&path, format!("{EXAMPLE}\n")).unwrap();
    let arg = format!("@{}", path.display());
    let (code, v) = json(&["classify", &arg]);
    assert_eq!(code, 0);
    assert_eq!(v["input"]["form"], EXAMPLE);
    let (code, v) = json(&["classify", "@/nonexistent/form.txt"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["code"], "UnreadableInput");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn quad_reports_squares_and_factors() {
    let (code, v) = json(&["quad", "x1^2 - x2^2"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["discriminant"], "0");
    assert_eq!(v["result"]["squares"].as_array().unwrap().len(), 2);
    assert!(v["result"]["factors"]["exact"].is_object());
    let (code, v) = json(&["quad", "x1^2 + x2^2 + x3^2"]);
    assert_eq!(code, 0);
    assert!(v["result"]["factors"].is_null());
}

#[test]
fn symmetric_forms() {
    let (code, v) = json(&["symmetric", "x1 x2 x3"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["result"]["cyclic"], true);
    assert_eq!(v["result"]["completely_reducible"], true);
    let (code, v) = json(&["symmetric", "x1^3 + 2 x2^3"]);
    assert_eq!(code, 1);
    assert_eq!(v["result"]["cyclic"], false);
}

#[test]
fn verify_identities_by_id() {
    let (code, v) = json(&["verify-identities", "--id", "euler-cubic", "--id", "product-delta"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["result"]["passed"], 2);
    let out = tcubic(&["verify-identities", "--jsonl", "--id", "euler-cubic"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 1);
    let (code, v) = json(&["verify-identities", "--id", "no-such-identity"]);
    assert_eq!(code, 3);
    assert_eq!(v["error"]["code"], "BuilderFailure");
}

#[test]
fn json_is_byte_identical_across_runs() {
    for args in [
        vec!["--json", "classify", EXAMPLE],
        vec!["--json", "factor", EXAMPLE],
        vec!["--json", "concomitant", "x1^3 + x2^3 + x3^3"],
        vec!["verify-identities", "--jsonl", "--tier", "2"],
    ] {
        let a = tcubic(&args).stdout;
        let b = tcubic(&args).stdout;
        assert!(!a.is_empty());
        assert_eq!(a, b, "{args:?}");
    }
}
