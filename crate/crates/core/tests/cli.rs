//! The `liecoh` binary: documented invocations, file round-trips, exit codes
//! and byte-for-byte determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn liecoh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liecoh"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("invalid JSON ({e}): {}", stdout(o)))
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("liecoh-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn cohomology_of_su2() {
    let o = liecoh(&["cohomology", "--builtin", "su2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o), serde_json::json!({"dims": [1, 0, 0, 1]}));
}

#[test]
fn classify_su2_borel_is_elliptic() {
    let o = liecoh(&["classify", "--builtin", "su2", "--sub", r#"{"span":[["0","0","1"],["1","-1i","0"]]}"#]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        json(&o),
        serde_json::json!({"elliptic": true, "complex": false, "CR": false, "essentially_real": false})
    );
}

#[test]
fn subalgebra_from_file() {
    let sub = scratch("borel.json", r#"{"span":[["0","0","1"],["1","-1i","0"]]}"#);
    let arg = format!("@{}", sub.display());
    let o = liecoh(&["classify", "--builtin", "su2", "--sub", &arg]);
    assert_eq!(json(&o)["elliptic"], Value::Bool(true));
}

#[test]
fn torus_solve_reports_resonance_at_one_one() {
    let f = scratch("f.json", r#"{"R": 2, "modes": [{"xi": 1, "eta": 1, "re": 1.0, "im": 0.0}]}"#);
    let path = f.to_str().unwrap();
    let lenient = liecoh(&["torus-solve", "--mu", "1", "--rhs", path]);
    assert_eq!(lenient.status.code(), Some(0));
    let strict = liecoh(&["--strict", "torus-solve", "--mu", "1", "--rhs", path]);
    assert_eq!(strict.status.code(), Some(1));
    let report = json(&strict);
    assert_eq!(report["obstructions"], serde_json::json!([{"xi": 1, "eta": 1}]));
    let clean = liecoh(&["--strict", "torus-solve", "--mu", "1/2", "--rhs", path]);
    assert_eq!(clean.status.code(), Some(0));
    assert_eq!(json(&clean)["obstructions"], serde_json::json!([]));
}

#[test]
fn torus_profile_table() {
    let o = liecoh(&["torus-solve", "--mu", "1/2", "--profile", "8"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let rows = v["profile"].as_array().expect("profile rows");
    assert_eq!(rows.len(), 8);
    assert!(rows.iter().all(|r| r["running_min"].as_f64() == Some(0.5)));
}

#[test]
fn verify_exit_status_follows_the_report() {
    for suite in ["su3-tables", "bott", "product", "all"] {
        let o = liecoh(&["verify", "--suite", suite]);
        let v = json(&o);
        let all_pass = v["all_pass"].as_bool().unwrap();
        assert_eq!(o.status.code(), Some(if all_pass { 0 } else { 1 }), "{suite}");
        for check in v["checks"].as_array().unwrap() {
            let p = check["provenance"].as_str().unwrap();
            assert!(p == "paper-table" || p == "cross-oracle");
        }
    }
    assert_eq!(liecoh(&["verify", "--suite", "bott"]).status.code(), Some(0));
    assert_eq!(liecoh(&["verify", "--suite", "product"]).status.code(), Some(0));
}

#[test]
fn su3_table_failures_are_the_four_known_cells() {
    let v = json(&liecoh(&["verify", "--suite", "su3-tables"]));
    let failed: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "fail")
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(failed.len(), 4, "{failed:?}");
    for cell in ["[L1, Lb2]", "[L2, Lb1]", "[L2, Lb3]", "[L3, Lb2]"] {
        assert!(failed.iter().any(|n| n.contains(cell)), "{cell} in {failed:?}");
    }
}

#[test]
fn export_round_trips_every_builtin() {
    for name in ["su2", "su3", "torus(3)", "heisenberg3"] {
        let first = liecoh(&["export", "--builtin", name]);
        assert_eq!(first.status.code(), Some(0), "{name}: {}", stderr(&first));
        let file = scratch(&format!("{}.json", name.replace(['(', ')'], "_")), &stdout(&first));
        let path = file.to_str().unwrap();
        let again = liecoh(&["export", "--algebra", path]);
        assert_eq!(stdout(&again), stdout(&first), "{name}");
        assert_eq!(liecoh(&["check", "--algebra", path]).status.code(), Some(0));
        let a = liecoh(&["cohomology", "--builtin", name]);
        let b = liecoh(&["cohomology", "--algebra", path]);
        assert_eq!(stdout(&a), stdout(&b));
    }
}

#[test]
fn output_is_deterministic() {
    let runs: &[&[&str]] = &[
        &["bigraded", "--builtin", "su3", "--sub", r#"{"span":[["0","0","1","-1i","0","0","0","0"]]}"#],
        &["levi", "--builtin", "su3", "--sub", r#"{"span":[["1","-1i","0","0","0","0","0","0"],["0","0","1","-1i","0","0","0","0"],["0","0","0","0","1","-1i","0","0"]]}"#],
        &["roots", "--builtin", "su3"],
        &["hodge", "--builtin", "su2"],
        &["verify", "--suite", "all"],
        &["--format", "text", "verify", "--suite", "bott"],
    ];
    for args in runs {
        let a = liecoh(args);
        let b = liecoh(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status.code(), b.status.code());
    }
    let threaded = Command::new(env!("CARGO_BIN_EXE_liecoh"))
        .args(["bigraded", "--builtin", "su3"])
        .env("LIECOH_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(threaded.stdout, liecoh(&["bigraded", "--builtin", "su3"]).stdout);
}

#[test]
fn verbose_timing_stays_off_stdout() {
    let quiet = liecoh(&["cohomology", "--builtin", "su2"]);
    let loud = liecoh(&["--verbose", "cohomology", "--builtin", "su2"]);
    assert_eq!(quiet.stdout, loud.stdout);
    assert!(!stderr(&loud).is_empty());
}

#[test]
fn input_errors_exit_with_two() {
    let unknown = liecoh(&["cohomology", "--builtin", "so5"]);
    assert_eq!(unknown.status.code(), Some(2));
    assert!(stderr(&unknown).contains("so5"));

    let bad = scratch("bad.json", "{\n  \"name\": \"x\",\n  \"basis\": [\"A\" \"B\"]\n}");
    let malformed = liecoh(&["cohomology", "--algebra", bad.to_str().unwrap()]);
    assert_eq!(malformed.status.code(), Some(2));
    let msg = stderr(&malformed);
    assert!(msg.contains("line 3"), "{msg}");
    assert!(msg.contains("column"), "{msg}");

    assert_eq!(liecoh(&[]).status.code(), Some(2));
    assert_eq!(liecoh(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(liecoh(&["torus-solve", "--mu", "1/0", "--profile", "3"]).status.code(), Some(2));
    assert_eq!(liecoh(&["classify", "--builtin", "su2", "--sub", r#"{"span":[["1","0","0"],["0","1","0"]]}"#]).status.code(), Some(2));
    assert_eq!(liecoh(&["--help"]).status.code(), Some(0));
}

#[test]
fn jacobi_failure_exits_with_one_and_a_witness() {
    let broken = scratch(
        "broken.json",
        r#"{"name":"broken","basis":["X","Y","T"],"brackets":[
            {"i":0,"j":1,"terms":[{"k":0,"c":"1"},{"k":2,"c":"2"}]},
            {"i":0,"j":2,"terms":[{"k":1,"c":"-2"}]},
            {"i":1,"j":2,"terms":[{"k":0,"c":"2"}]}]}"#,
    );
    let o = liecoh(&["check", "--algebra", broken.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let all = format!("{}{}", stdout(&o), stderr(&o));
    assert!(all.contains("X") && all.contains("Y") && all.contains("T"), "{all}");
}

#[test]
fn text_format_is_line_oriented() {
    let o = liecoh(&["--format", "text", "cohomology", "--builtin", "su2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(!text.trim_start().starts_with('{'));
    assert!(text.contains('1'));
}
