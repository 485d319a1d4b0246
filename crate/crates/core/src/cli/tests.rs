use std::f64::consts::PI;
use std::path::PathBuf;

use super::main_with_args;

fn out_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("polywidth-{}-{name}", std::process::id()))
}

fn run(args: &[&str], name: &str) -> (i32, String) {
    let path = out_path(name);
    let mut full = vec!["polywidth"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--output", path.to_str().unwrap()]);
    let code = main_with_args(full);
    let text = std::fs::read_to_string(&path).unwrap_or_default();
    let _ = std::fs::remove_file(&path);
    (code, text)
}

fn json(text: &str) -> serde_json::Value {
    serde_json::from_str(text).unwrap()
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(main_with_args(["polywidth", "--help"]), 0);
    assert_eq!(main_with_args(["polywidth", "--version"]), 0);
    assert_eq!(main_with_args(["polywidth", "extremality", "--help"]), 0);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(main_with_args(["polywidth"]), 1);
    assert_eq!(main_with_args(["polywidth", "frobnicate"]), 1);
    assert_eq!(main_with_args(["polywidth", "spectrum1d", "--p", "x"]), 1);
    assert_eq!(run(&["spectrum1d", "--p", "9"], "p9").0, 1);
    assert_eq!(run(&["spectrum1d", "--count", "30"], "count").0, 1);
    assert_eq!(run(&["disk-spectrum", "--l-max", "40"], "lmax").0, 1);
    assert_eq!(run(&["extremality", "--n-max", "12"], "nmax").0, 1);
}

#[test]
fn spectrum1d_second_eigenvalue_is_pi_squared() {
    let (code, text) = run(&["spectrum1d", "--p", "1", "--basis", "40", "--format", "json"], "spec");
    assert_eq!(code, 0);
    let v = json(&text);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["subcommand"], "spectrum1d");
    assert_eq!(v["pass"], true);
    let row = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["label"] == "eigenvalue" && r["index"] == 2)
        .unwrap();
    assert!((row["value"].as_f64().unwrap() - PI * PI).abs() < 1e-7);
    assert_eq!(row["oracle"].as_f64().unwrap(), PI * PI);
    assert!(row["rel_err"].as_f64().unwrap() <= 1e-8);
    assert_eq!(row["provenance"], "neumann_closed_form");
}

#[test]
fn widths1d_below_p_is_inf() {
    let (code, text) = run(&["widths1d", "--p", "1", "--N", "0"], "w0");
    assert_eq!(code, 0);
    let v = json(&text);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["value"], "inf");
    assert_eq!(rows[0]["pass"], true);
    let (code, text) = run(&["widths1d", "--p", "2", "--basis", "60", "--format", "csv"], "w2");
    assert_eq!(code, 0);
    assert!(text.lines().nth(1).unwrap().starts_with("width,0,,inf,inf,"));
    assert!(text.lines().nth(2).unwrap().starts_with("width,1,,inf,inf,"));
}

#[test]
fn jacobi_check_determinant_two() {
    let (code, text) = run(&["jacobi-check"], "jac");
    assert_eq!(code, 0);
    let v = json(&text);
    let det = v["rows"].as_array().unwrap().iter().find(|r| r["label"] == "abs_determinant").unwrap();
    assert_eq!(det["value"].as_f64().unwrap(), 2.0);
}

#[test]
fn failing_check_exits_two_and_still_writes() {
    let (code, text) = run(&["spectrum1d", "--basis", "6", "--count", "2"], "fail");
    assert_eq!(code, 2);
    let v = json(&text);
    assert_eq!(v["pass"], false);
    assert_eq!(v["failures"][0], "eigenvalue[2]");
}

#[test]
fn seed_is_recorded_in_both_formats() {
    let (_, text) = run(&["green-check", "--seed", "99", "--pairs", "4"], "seedj");
    let v = json(&text);
    assert_eq!(v["seed"], 99);
    assert_eq!(v["config"]["seed"], 99);
    let (_, text) = run(&["green-check", "--seed", "99", "--pairs", "4", "--format", "csv"], "seedc");
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(rdr.headers().unwrap().iter().next_back(), Some("seed"));
    let rows: Vec<csv::StringRecord> = rdr.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().all(|r| &r[11] == "99" && &r[10] == "true"));
}

#[test]
fn every_subcommand_passes_with_defaults() {
    for sub in [
        "spectrum1d",
        "widths1d",
        "asymptotics",
        "jackson1d",
        "disk-spectrum",
        "clamped-free",
        "jackson-disk",
        "unbounded-demo",
        "jacobi-check",
        "green-check",
    ] {
        let (code, text) = run(&[sub], sub);
        assert_eq!(code, 0, "{sub}");
        assert_eq!(json(&text)["pass"], true, "{sub}");
    }
    let (code, _) = run(&["extremality", "--trials", "20"], "ext");
    assert_eq!(code, 0);
}

#[test]
fn notes_state_the_truncation() {
    let (_, text) = run(&["extremality", "--trials", "5", "--n-max", "2"], "notes");
    let v = json(&text);
    assert!(v["notes"][0].as_str().unwrap().contains("truncation"));
    let missing: Vec<_> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["label"] == "missing_axis")
        .collect();
    assert_eq!(missing.len(), 2 * 9);
    assert!(missing.iter().all(|r| r["value"] == "inf"));
}

#[test]
fn clamped_free_runs_for_first_order() {
    let (code, text) = run(&["clamped-free", "--p", "1"], "cf1");
    assert_eq!(code, 0);
    assert_eq!(json(&text)["rows"].as_array().unwrap().len(), 5 * 5 * 4);
}

#[test]
fn disk_spectrum_second_order_uses_other_variant() {
    let (code, text) = run(&["disk-spectrum", "--p", "2", "--variant", "free"], "ds2");
    assert_eq!(code, 0);
    let v = json(&text);
    assert!(v["rows"].as_array().unwrap().iter().any(|r| r["provenance"] == "other_variant"));
}
