//! End-to-end tests of the command-line contract: output formats, stream
//! separation and exit codes (0 success, 1 verification failure, 2 usage or
//! validation error).

use std::path::PathBuf;
use std::process::{Command, Output};

fn josephus(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_josephus"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).unwrap()
}

#[test]
fn solve_defaults_to_maxnim_one_indexed() {
    let out = josephus(&["solve", "--n", "7", "--k", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "4\n");
    assert_eq!(stderr(&out), "");
}

#[test]
fn solve_zero_index_flag() {
    let out = josephus(&["solve", "--n", "7", "--k", "3", "--index", "zero"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "3\n");
}

#[test]
fn solve_single_label() {
    let out = josephus(&["solve", "--n", "1", "--k", "100"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn solve_all_algorithms_agree() {
    for alg in ["maxnim", "linear", "block", "oracle"] {
        let out = josephus(&["solve", "--n", "41", "--k", "3", "--alg", alg]);
        assert!(out.status.success(), "alg={alg}");
        assert_eq!(stdout(&out), "31\n", "alg={alg}");
    }
}

#[test]
fn solve_rejects_invalid_and_oversized_instances() {
    let out = josephus(&["solve", "--n", "0", "--k", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("n must be at least 1"));
    assert_eq!(stdout(&out), "");

    let out = josephus(&["solve", "--n", "18446744073709551615", "--k", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("does not fit in 64 bits"));
}

#[test]
fn solve_rejects_non_decimal_input() {
    let out = josephus(&["solve", "--n", "1e9", "--k", "3"]);
    assert_eq!(out.status.code(), Some(2));

    let out = josephus(&["solve", "--n", "-5", "--k", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_subcommand_is_a_usage_error() {
    let out = josephus(&["conquer"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn trace_prints_iterates_then_p_then_survivor() {
    let out = josephus(&["trace", "--n", "7", "--k", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "2\n4\n7\n11\n17\np=4\nsurvivor=4\n");

    let out = josephus(&["trace", "--n", "1", "--k", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1\np=0\nsurvivor=1\n");

    let out = josephus(&["trace", "--n", "5", "--k", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1\n3\n7\np=2\nsurvivor=3\n");
}

#[test]
fn trace_rejects_k_one_with_a_named_requirement() {
    let out = josephus(&["trace", "--n", "7", "--k", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("k must be at least 2"));
    assert_eq!(stdout(&out), "");
}

#[test]
fn bounds_prints_all_five_values() {
    let out = josephus(&["bounds", "--n", "7", "--k", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("v=4.79"), "got {text}");
    assert!(text.contains("ceil_v=5"));
    assert!(text.contains("w=3.41"));
    assert!(text.contains("floor_w=3"));
    assert!(text.trim_end().ends_with("p=4"));

    let out = josephus(&["bounds", "--n", "1", "--k", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("v=0.000000"));
    assert!(text.trim_end().ends_with("p=0"));

    let out = josephus(&["bounds", "--n", "1000000", "--k", "2"]);
    assert!(out.status.success(), "bracket must hold at n=1e6");
}

#[test]
fn order_prints_removals_then_survivor() {
    let out = josephus(&["order", "--n", "7", "--k", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "3,6,2,7,5,1 survivor=4\n");

    let out = josephus(&["order", "--n", "4", "--k", "1"]);
    assert_eq!(stdout(&out), "1,2,3 survivor=4\n");

    let out = josephus(&["order", "--n", "1", "--k", "9"]);
    assert_eq!(stdout(&out), "survivor=1\n");
}

#[test]
fn verify_reports_pass_with_check_count() {
    let out = josephus(&["verify", "--n-max", "50", "--k-max", "16"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "PASS 800 checks\n");

    let out = josephus(&[
        "verify", "--n-max", "10", "--k-max", "4", "--samples", "25", "--n-limit", "1000000",
        "--k-limit", "100", "--seed", "9",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "PASS 40 checks\nPASS 25 checks\n");
}

#[test]
fn verify_structured_emits_summary_records() {
    let out = josephus(&["verify", "--n-max", "5", "--k-max", "2", "--structured"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 1);
    assert!(text.contains("\"record\":\"summary\""));
    assert!(text.contains("\"checks\":10"));
    assert!(text.contains("\"pass\":true"));
}

#[test]
fn bench_writes_csv_with_one_row_per_cell() {
    let path = temp_path("bench_rows.csv");
    let out = josephus(&[
        "bench", "--n-list", "1000", "--k-list", "3", "--reps", "10", "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4, "header plus one row per algorithm");
    assert_eq!(
        lines[0],
        "algorithm,n,k,reps,total_ns,mean_ns,median_ns,min_ns,survivor,truncated"
    );
    for row in &lines[1..] {
        assert_eq!(row.split(',').count(), 10);
        assert!(row.ends_with(",604,0"), "survivor of (1000, 3) is 604: {row}");
    }
    assert!(lines[1].starts_with("block,"));
    assert!(lines[2].starts_with("linear,"));
    assert!(lines[3].starts_with("maxnim,"));
}

#[test]
fn bench_structured_output_and_algorithm_subset() {
    let out = josephus(&[
        "bench", "--n-list", "100,10", "--k-list", "2", "--reps", "5", "--algs",
        "maxnim,block", "--structured",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 4);
    assert!(text.lines().all(|l| l.starts_with("{\"algorithm\":\"")));
    assert!(text.lines().all(|l| l.contains("\"error\":null")));
}

#[test]
fn bench_rejects_oracle_and_zero_reps() {
    let out = josephus(&["bench", "--n-list", "10", "--k-list", "2", "--algs", "oracle"]);
    assert_eq!(out.status.code(), Some(2));

    let out = josephus(&["bench", "--n-list", "10", "--k-list", "2", "--reps", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("repetitions"));
}

fn temp_path(name: &str) -> PathBuf {
    let mut path = std::env::temp_dir();
    path.push(format!("josephus_cli_{}_{name}", std::process::id()));
    path
}
