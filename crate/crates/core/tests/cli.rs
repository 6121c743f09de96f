use std::path::Path;
use std::process::Command;

use serde_json::Value;
use triarea::cli::run;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_triarea"))
}

/// Runs in-process and returns (exit code, stdout, stderr).
fn call(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("triarea").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(s: &str) -> Value {
    serde_json::from_str(s).unwrap_or_else(|e| panic!("not JSON ({e}): {s}"))
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn unit_square_min_census() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "sq.txt", "dim=2\n0 0\n1 0\n1 1\n0 1\n");
    let (code, out, _) = call(&["census", "--in", &f, "--mode", "min"]);
    assert_eq!(code, 0);
    let r = json(&out);
    assert_eq!(r["command"], "census");
    assert_eq!(r["results"]["key"], "1");
    assert_eq!(r["results"]["count"], 4);
    assert_eq!(r["input_digest"].as_str().unwrap().len(), 64);
    assert!(r["runtime_ms"].is_u64());
}

#[test]
fn gen_writes_points_and_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let pts = dir.path().join("g.txt");
    let (code, out, _) = call(&["gen", "grid", "--w", "3", "--h", "3", "--out", pts.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["results"]["n"], 9);
    let cert = dir.path().join("g.cert.json");
    assert!(cert.exists());

    // the certificate audits clean against the file it came with
    let (code, out, _) = call(&["audit", "--check", "certificate", "--in", pts.to_str().unwrap(), "--cert", cert.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn gen_is_deterministic_for_a_seed() {
    let a = call(&["gen", "convex-unit", "--i", "2", "--seed", "11"]).1;
    let b = call(&["gen", "convex-unit", "--i", "2", "--seed", "11"]).1;
    assert_eq!(a, b);
    assert!(a.starts_with("dim=2\n"));
}

#[test]
fn census_report_is_stable_apart_from_timing() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "t.txt", "dim=3\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n1 1 1\n");
    let strip = |s: String| {
        let mut v = json(&s);
        v.as_object_mut().unwrap().remove("runtime_ms");
        v
    };
    let a = strip(call(&["census", "--in", &f]).1);
    let b = strip(call(&["census", "--in", &f, "--threads", "1"]).1);
    assert_eq!(a["results"], b["results"]);
    assert_eq!(a["results"]["triples"], 10);
}

#[test]
fn grid_audit_passes_and_reports_clauses() {
    let (code, out, _) = call(&["audit", "--check", "grid", "--w", "4", "--h", "4"]);
    assert_eq!(code, 0);
    let r = json(&out);
    assert_eq!(r["results"]["pass"], true);
    assert_eq!(r["results"]["clauses"].as_array().unwrap().len(), 4);
}

#[test]
fn rich_lines_of_a_three_grid() {
    let dir = tempfile::tempdir().unwrap();
    let mut text = String::from("dim=2\n");
    for x in 0..3 {
        for y in 0..3 {
            text.push_str(&format!("{x} {y}\n"));
        }
    }
    let f = write(dir.path(), "g.txt", &text);
    let (code, out, _) = call(&["incidence", "--points", &f, "--rich", "3"]);
    assert_eq!(code, 0);
    // 3 rows, 3 columns, 2 diagonals
    assert_eq!(json(&out)["results"]["rich_lines"]["count"], 8);
}

#[test]
fn cylinder_triple_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        dir.path(),
        "c.json",
        r#"{"cylinders": [
            {"point":["0","0","0"],"dir":["1","0","0"],"radius_sq":"1"},
            {"point":["0","0","0"],"dir":["0","1","0"],"radius_sq":"1"},
            {"point":["0","0","0"],"dir":["0","0","1"],"radius_sq":"1"}]}"#,
    );
    let (code, out, _) = call(&["incidence", "--cyl-triple", &f]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["results"]["cylinder_triple"]["count"], 8);
}

#[test]
fn usage_and_parse_errors_exit_2() {
    assert_eq!(call(&["gen", "nope"]).0, 2);
    assert_eq!(call(&["census"]).0, 2);
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "bad.txt", "dim=2\n0 0\n0 0\n");
    let (code, _, err) = call(&["census", "--in", &f]);
    assert_eq!(code, 2);
    assert!(err.contains("duplicate"), "{err}");
    let missing = dir.path().join("missing.txt");
    assert_ne!(call(&["census", "--in", missing.to_str().unwrap()]).0, 0);
}

#[test]
fn collinear_input_has_no_minimum() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "l.txt", "dim=2\n0 0\n1 1\n2 2\n");
    let (code, out, _) = call(&["census", "--in", &f, "--mode", "min"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["results"], "none");
}

#[test]
fn binary_writes_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "sq.txt", "dim=2\n0 0\n2 0\n0 2\n");
    let rep = dir.path().join("r.json");
    let st = bin().args(["census", "--in", &f, "--mode", "unit", "--out", rep.to_str().unwrap()]).status().unwrap();
    assert!(st.success());
    let r = json(&std::fs::read_to_string(&rep).unwrap());
    assert_eq!(r["command"], "census");
    // legs 2 and 2: area 2, so no unit triangle
    assert_eq!(r["results"]["count"], 0);

    let st = bin().args(["audit", "--check", "charge2d"]).status().unwrap();
    assert_eq!(st.code(), Some(2));
}
