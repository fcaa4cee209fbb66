//! End-to-end checks of the `wpb` binary: flag handling, exit codes,
//! persisted artifacts and determinism.

use std::path::Path;
use std::process::{Command, Output};

use wpb_core::RunResult;

fn wpb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wpb"))
        .args(args)
        .env_remove("WPB_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn analyze_reports_the_worked_example() {
    let output = wpb(&["analyze", "53a3", "--n", "4"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("is_wpb: true"));
    assert!(text.contains("pen: 0"));
    assert!(text.contains("truth table (hex): 53a3"));
}

#[test]
fn analyze_accepts_binary_tables_and_reports_penalty() {
    let output = wpb(&["analyze", "0000000000000001", "--n", "4"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("pen: 7"));
    assert!(text.contains("is_wpb: false"));
}

#[test]
fn analyze_rejects_malformed_input_with_usage_exit() {
    let output = wpb(&["analyze", "zz", "--n", "4"]);
    assert_eq!(output.status.code(), Some(1));
    let output = wpb(&["analyze", "53a3", "--n", "5"]);
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn spaces_prints_table_values() {
    let output = wpb(&["spaces", "--n", "4"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("65536"));
    assert!(text.contains("12870"));
    assert!(text.contains("720"));

    let output = wpb(&["spaces", "--n", "6"]);
    assert!(stdout(&output).contains("infeasible"));
}

#[test]
fn enumerate_small_census() {
    let output = wpb(&["enumerate", "--n", "2"]);
    assert!(output.status.success());
    let text = stdout(&output);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "truth_table_hex,is_linear,nl_1");
    assert_eq!(lines.count(), 2);

    let output = wpb(&["enumerate", "--n", "4"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert_eq!(text.lines().count(), 721); // header + all 720 functions
    assert_eq!(text.matches(",true,").count(), 288);

    let output = wpb(&["enumerate", "--n", "8"]);
    assert_eq!(output.status.code(), Some(1));
}

fn evolve_into(dir: &Path, extra: &[&str]) -> Output {
    let mut args = vec![
        "evolve",
        "--algorithm",
        "ga-cb",
        "--n",
        "4",
        "--pop",
        "20",
        "--budget",
        "2000",
        "--runs",
        "2",
        "--seed",
        "7",
        "--out",
    ];
    let out = dir.to_str().unwrap();
    args.push(out);
    args.extend_from_slice(extra);
    wpb(&args)
}

#[test]
fn evolve_writes_results_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let first = evolve_into(&dir.path().join("a"), &[]);
    assert!(first.status.success(), "{first:?}");
    let second = evolve_into(&dir.path().join("b"), &["--jobs", "2"]);
    assert!(second.status.success());

    let a = std::fs::read(dir.path().join("a/results.jsonl")).unwrap();
    let b = std::fs::read(dir.path().join("b/results.jsonl")).unwrap();
    assert_eq!(a, b, "same seed must give byte-identical records");

    let traces_a = std::fs::read(dir.path().join("a/traces.csv")).unwrap();
    let traces_b = std::fs::read(dir.path().join("b/traces.csv")).unwrap();
    assert_eq!(traces_a, traces_b);

    // every record parses back identically
    let text = String::from_utf8(a).unwrap();
    assert_eq!(text.lines().count(), 2);
    for line in text.lines() {
        let record: RunResult = serde_json::from_str(line).unwrap();
        assert_eq!(serde_json::to_string(&record).unwrap(), line);
    }
}

#[test]
fn evolve_rejects_invalid_configs() {
    let dir = tempfile::tempdir().unwrap();
    let output = wpb(&[
        "evolve",
        "--algorithm",
        "ga-cb",
        "--n",
        "6",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(1));

    let output = wpb(&[
        "evolve",
        "--algorithm",
        "nope",
        "--n",
        "8",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn wpb_seed_env_overrides_the_flag() {
    let dir = tempfile::tempdir().unwrap();
    let from_env = Command::new(env!("CARGO_BIN_EXE_wpb"))
        .args([
            "evolve", "--algorithm", "ga-cb", "--n", "4", "--pop", "20", "--budget", "2000",
            "--runs", "1", "--seed", "1",
        ])
        .arg("--out")
        .arg(dir.path().join("env"))
        .env("WPB_SEED", "7")
        .output()
        .unwrap();
    assert!(from_env.status.success());
    let flag_run = Command::new(env!("CARGO_BIN_EXE_wpb"))
        .args([
            "evolve", "--algorithm", "ga-cb", "--n", "4", "--pop", "20", "--budget", "2000",
            "--runs", "1", "--seed", "7",
        ])
        .arg("--out")
        .arg(dir.path().join("flag"))
        .env_remove("WPB_SEED")
        .output()
        .unwrap();
    assert!(flag_run.status.success());

    let a = std::fs::read(dir.path().join("env/results.jsonl")).unwrap();
    let b = std::fs::read(dir.path().join("flag/results.jsonl")).unwrap();
    assert_eq!(a, b, "WPB_SEED=7 must behave exactly like --seed 7");
}

#[test]
fn stats_aggregates_results() {
    let dir = tempfile::tempdir().unwrap();
    let run_dir = dir.path().join("runs");
    assert!(evolve_into(&run_dir, &[]).status.success());

    let output = wpb(&["stats", "--in", run_dir.to_str().unwrap()]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("algorithm fitness p_mut runs average std_dev median min max"));
    assert!(text.contains("ga-cb fit1 0.1 2"));

    let csv = std::fs::read_to_string(run_dir.join("distribution.csv")).unwrap();
    assert_eq!(csv.lines().count(), 3); // header + 2 runs
    assert!(csv.starts_with("algorithm,fitness,p_mut,run_id,best_fitness"));

    let empty = tempfile::tempdir().unwrap();
    let output = wpb(&["stats", "--in", empty.path().to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn usage_error_exits_one() {
    let output = wpb(&["evolve"]);
    assert_eq!(output.status.code(), Some(1));
    let output = wpb(&["no-such-command"]);
    assert_eq!(output.status.code(), Some(1));
}
