//! End-to-end tests of the command-line binary: golden outputs, exit
//! codes, schema shapes, and cold/warm cache determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jackcc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_with_cache(args: &[&str], cache: &std::path::Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jackcc"))
        .args(args)
        .env("JACKCC_CACHE_DIR", cache)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn coeff_prints_list_and_human_form() {
    let out = run(&["coeff", "--lambda", "2", "--mu", "2", "--nu", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "[0, 1]\nb\n");

    let out = run(&["coeff", "--lambda", "1", "--mu", "1", "--nu", "1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "[1]\n1\n");
}

#[test]
fn coeff_evaluates_at_a_point() {
    let out = run(&[
        "coeff", "--lambda", "1,1", "--mu", "2", "--nu", "2", "--at", "3",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "4\n");
}

#[test]
fn coeff_usage_errors_exit_2() {
    let out = run(&["coeff", "--lambda", "2,1", "--mu", "3", "--nu", "1,1"]);
    assert_eq!(code(&out), 2);
    let out = run(&["coeff", "--lambda", "x", "--mu", "1", "--nu", "1"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn golden_q3_text() {
    let out = run(&["fh", "--kind", "Q", "--r", "3"]);
    assert_eq!(code(&out), 0);
    let expected = "\
pi\\rho   [3]  [2,1]  [1,1,1]
[3]        4      1        0
[2,1]      6      4        3
[1,1,1]    1      1        1
";
    assert_eq!(stdout(&out), expected);
}

#[test]
fn golden_m3_block_text() {
    let out = run(&["fh", "--kind", "M", "--r", "3", "--i", "2"]);
    assert_eq!(code(&out), 0);
    let expected = "\
f\\c      [2,1]  [3]
[2,1]       10   -3
[1,1,1]     -3    1
";
    assert_eq!(stdout(&out), expected);
}

#[test]
fn golden_n5_text() {
    let out = run(&["fh", "--kind", "N", "--r", "5"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 8);
    assert!(lines[0].starts_with("f\\g"));
    assert!(lines[1].starts_with("[5]"));
    assert!(lines[7].starts_with("[1,1,1,1,1]"));
    let row = |label: &str| {
        let line = lines.iter().find(|l| l.starts_with(label)).unwrap();
        line.trim_start_matches(label)
            .split_whitespace()
            .map(|v| v.parse::<i64>().unwrap())
            .collect::<Vec<_>>()
    };
    assert_eq!(row("[3,2]"), vec![0, 0, 3, -2, -12, 3, 0]);
    assert_eq!(row("[3,1,1]"), vec![0, 0, -1, 1, 0, 0, 4]);
    assert_eq!(row("[4,1]"), vec![0, 1, 0, 0, 0, 0, -4]);
}

#[test]
fn fh_usage_errors_exit_2() {
    let out = run(&["fh", "--kind", "X", "--r", "3"]);
    assert_eq!(code(&out), 2);
    let out = run(&["fh", "--kind", "Q", "--r", "3", "--i", "2"]);
    assert_eq!(code(&out), 2);
    let out = run(&["fh", "--kind", "M", "--r", "3", "--i", "4"]);
    assert_eq!(code(&out), 2);
    let out = run(&["fh", "--kind", "M", "--r", "0"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn fh_json_and_latex_formats() {
    let out = run(&["fh", "--kind", "Q", "--r", "3", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["kind"], "Q");
    assert_eq!(doc["rows"][0], "3");
    assert_eq!(doc["entries"][1][0], 6);

    let out = run(&["fh", "--kind", "U", "--r", "3", "--format", "latex"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("\\begin{tabular}"));
    assert!(text.contains("\\mathfrak{f}_\\lambda \\backslash \\mathfrak{m}_\\mu"));
    assert!(text.contains("$[2,1]$"));
}

#[test]
fn table_json_has_expected_shapes_and_values() {
    let out = run(&["table", "--n", "1", "--kind", "c"]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["entries"].as_array().unwrap().len(), 1);
    assert_eq!(doc["entries"][0]["poly_b"][0], 1);

    let out = run(&["table", "--n", "3", "--kind", "marginal"]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["entries"].as_array().unwrap().len(), 27);

    let out = run(&["table", "--n", "2", "--kind", "a"]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let hit = doc["entries"]
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["lambda"] == "2" && e["mu"] == "2" && e["nu"] == "2")
        .unwrap();
    assert_eq!(hit["count"], 1);
}

#[test]
fn table_guards_exit_4() {
    let out = run(&["table", "--n", "9", "--kind", "c"]);
    assert_eq!(code(&out), 4);
    let out = run(&["table", "--n", "7", "--kind", "a"]);
    assert_eq!(code(&out), 4);
}

#[test]
fn table_csv_and_latex() {
    let out = run(&["table", "--n", "2", "--kind", "c", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("lambda,mu,nu,poly_b\n"));
    assert!(text.contains("2,2,2,\"0,1\""));

    let out = run(&["table", "--n", "2", "--kind", "c", "--format", "latex"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("\\begin{tabular}"));
}

#[test]
fn table_writes_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let out = run(&[
        "table", "--n", "2", "--kind", "c", "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).is_empty());
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["n"], 2);
}

#[test]
fn verify_suites_pass_and_report() {
    let out = run(&["verify", "--suite", "matchings", "--n", "3"]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["passed"], true);
    assert_eq!(doc["suite"], "matchings");
    for check in doc["checks"].as_array().unwrap() {
        assert_eq!(check["status"], "pass");
    }

    let out = run(&["verify", "--suite", "reconstruct", "--n", "3"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn verify_guard_exit_4() {
    let out = run(&["verify", "--suite", "fh", "--r", "7"]);
    assert_eq!(code(&out), 4);
    let out = run(&["verify", "--suite", "matchings", "--n", "8"]);
    assert_eq!(code(&out), 4);
}

#[test]
fn cold_and_warm_cache_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["table", "--n", "4", "--kind", "c"];
    let cold = run_with_cache(&args, dir.path());
    assert_eq!(code(&cold), 0);
    let entries = std::fs::read_dir(dir.path()).unwrap().count();
    assert!(entries > 0, "first run populates the cache");
    let warm = run_with_cache(&args, dir.path());
    assert_eq!(code(&warm), 0);
    assert_eq!(cold.stdout, warm.stdout);

    let unset = run(&args);
    assert_eq!(unset.stdout, cold.stdout);
}
