use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn hybridk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hybridk"))
        .args(args)
        .env_remove("HYBRIDK_SEED")
        .output()
        .expect("binary runs")
}

fn ok_stdout(args: &[&str]) -> String {
    let out = hybridk(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn record(args: &[&str]) -> Value {
    serde_json::from_str(ok_stdout(args).trim()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn centers_file(dir: &Path, rec: &Value) -> PathBuf {
    let rows = rec["centers"].as_array().unwrap();
    let d = rows[0].as_array().unwrap().len();
    let mut text = format!("d={d} n={}\n", rows.len());
    for row in rows {
        let coords: Vec<String> = row.as_array().unwrap().iter().map(|x| format!("{}", x.as_f64().unwrap())).collect();
        text.push_str(&coords.join(","));
        text.push('\n');
    }
    write(dir, "centers.txt", &text)
}

fn strip_time(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("wall_time_ms");
    v
}

const FOUR_POINTS: &str = "d=2 n=4\n3,6\n1,5\n5,1\n6,9\n";
const TWO_CENTERS: &str = "d=2 n=2\n3,3\n6,6\n";

#[test]
fn eval_reproduces_four_point_value() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "p.txt", FOUR_POINTS);
    let f = write(dir.path(), "f.txt", TWO_CENTERS);
    let rec = record(&["eval", "--instance", s(&p), "--centers", s(&f), "--r", "2"]);
    let expected = 2.0 * (1.0 + 8f64.sqrt() - 2.0);
    assert!((rec["cost"].as_f64().unwrap() - expected).abs() <= 1e-9 * expected);
    assert_eq!(rec["k"], 2);
}

#[test]
fn eval_with_huge_radius_factor_covers_everything() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "p.txt", FOUR_POINTS);
    let f = write(dir.path(), "f.txt", TWO_CENTERS);
    let rec = record(&["eval", "--instance", s(&p), "--centers", s(&f), "--r", "2", "--radius-factor", "1000"]);
    assert_eq!(rec["cost"].as_f64().unwrap(), 0.0);
    assert_eq!(rec["covered_count"], 4);
}

#[test]
fn eval_at_zero_radius_is_kmedian_cost() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "p.txt", FOUR_POINTS);
    let f = write(dir.path(), "f.txt", TWO_CENTERS);
    let rec = record(&["eval", "--instance", s(&p), "--centers", s(&f)]);
    // distances 3, sqrt(8), sqrt(8), 3
    let expected = 6.0 + 2.0 * 8f64.sqrt();
    assert!((rec["cost"].as_f64().unwrap() - expected).abs() <= 1e-12);
}

#[test]
fn gen_is_deterministic() {
    let args = ["gen", "--n", "10", "--d", "2", "--seed", "1"];
    let a = ok_stdout(&args);
    assert_eq!(a, ok_stdout(&args));
    assert!(a.starts_with("d=2 n=10\n"));
    assert_ne!(a, ok_stdout(&["gen", "--n", "10", "--d", "2", "--seed", "2"]));
}

#[test]
fn seed_falls_back_to_environment() {
    let with_env = Command::new(env!("CARGO_BIN_EXE_hybridk"))
        .args(["gen", "--n", "5"])
        .env("HYBRIDK_SEED", "9")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(with_env.stdout).unwrap(), ok_stdout(&["gen", "--n", "5", "--seed", "9"]));
}

#[test]
fn mixture_has_requested_size() {
    let text = ok_stdout(&["gen", "--n", "17", "--d", "3", "--dist", "gaussian-mixture", "--components", "3"]);
    assert_eq!(text.lines().count(), 18);
}

#[test]
fn two_scale_blobs_with_stragglers_are_cheap() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("p.txt");
    ok_stdout(&[
        "gen", "--n", "12", "--dist", "two-scale", "--blob-centers", "3,3;6,6", "--blob-radius", "2",
        "--stragglers", "4", "--gap", "0.9", "--seed", "3", "--out", s(&p),
    ]);
    let rec = record(&["oracle", "--instance", s(&p), "--k", "2", "--r", "2", "--method", "certified"]);
    assert!(rec["cost"].as_f64().unwrap() <= 2.0 * (1.0 + 8f64.sqrt() - 2.0));
}

#[test]
fn solve_then_eval_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("p.txt");
    ok_stdout(&["gen", "--n", "25", "--seed", "4", "--out", s(&p)]);
    for (r, z) in [("0", "1"), ("0.7", "1"), ("0.7", "2")] {
        let rec = record(&["solve", "--instance", s(&p), "--k", "3", "--r", r, "--z", z, "--repetitions", "2"]);
        let f = centers_file(dir.path(), &rec);
        let factor = rec["radius_factor"].as_f64().unwrap().to_string();
        let ev = record(&["eval", "--instance", s(&p), "--centers", s(&f), "--r", r, "--z", z, "--radius-factor", &factor]);
        let (a, b) = (rec["cost"].as_f64().unwrap(), ev["cost"].as_f64().unwrap());
        assert!((a - b).abs() <= 1e-9 * a.abs().max(b.abs()).max(1e-300), "{a} vs {b}");
        assert_eq!(rec["covered_count"], ev["covered_count"]);
    }
}

#[test]
fn solve_on_singleton_costs_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "p.txt", "d=3 n=1\n1,2,3\n");
    for r in ["0", "0.5"] {
        let rec = record(&["solve", "--instance", s(&p), "--k", "1", "--r", r]);
        assert_eq!(rec["cost"].as_f64().unwrap(), 0.0);
    }
}

#[test]
fn solve_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("p.txt");
    ok_stdout(&["gen", "--n", "20", "--seed", "5", "--out", s(&p)]);
    let args = ["solve", "--instance", s(&p), "--k", "2", "--r", "0.5", "--seed", "11", "--repetitions", "2"];
    assert_eq!(strip_time(record(&args)), strip_time(record(&args)));
}

#[test]
fn oracle_examples() {
    let dir = tempfile::tempdir().unwrap();
    let three = write(dir.path(), "three.txt", "d=2 n=3\n0,0\n1,1\n5,2\n");
    let rec = record(&["oracle", "--instance", s(&three), "--k", "3", "--r", "0.2"]);
    assert_eq!(rec["cost"].as_f64().unwrap(), 0.0);
    let line = write(dir.path(), "line.txt", "d=1 n=3\n0\n1\n7\n");
    let res = 0.01;
    let rec = record(&["oracle", "--instance", s(&line), "--k", "1", "--r", "1", "--resolution", "0.01"]);
    assert!((rec["cost"].as_f64().unwrap() - 5.0).abs() <= 3.0 * res);
}

#[test]
fn oracle_not_above_solver_at_unit_factor() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("p.txt");
    ok_stdout(&["gen", "--n", "9", "--seed", "6", "--out", s(&p)]);
    let oracle = record(&["oracle", "--instance", s(&p), "--k", "2", "--r", "0.5", "--method", "certified"]);
    let sol = record(&["solve", "--instance", s(&p), "--k", "2", "--r", "0.5", "--repetitions", "2"]);
    let f = centers_file(dir.path(), &sol);
    let ev = record(&["eval", "--instance", s(&p), "--centers", s(&f), "--r", "0.5"]);
    let lb = oracle["lower_bound"].as_f64().unwrap();
    assert!(lb <= ev["cost"].as_f64().unwrap() + 1e-9);
}

#[test]
fn single_cell_bench_matches_solve() {
    let dir = tempfile::tempdir().unwrap();
    let out = ok_stdout(&["bench", "--n", "15", "--k", "2", "--r", "0.4", "--seed", "8", "--repetitions", "2"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 1);
    let bench: Value = serde_json::from_str(lines[0]).unwrap();
    let seed = bench["seed"].as_u64().unwrap().to_string();
    assert_eq!(bench["cell"]["instance_seed"].as_u64().unwrap().to_string(), seed);
    let p = dir.path().join("p.txt");
    ok_stdout(&["gen", "--n", "15", "--seed", &seed, "--out", s(&p)]);
    let solo = record(&["solve", "--instance", s(&p), "--k", "2", "--r", "0.4", "--seed", &seed, "--repetitions", "2"]);
    for key in ["centers", "cost", "covered_count", "radius_factor", "source"] {
        assert_eq!(bench[key], solo[key], "{key}");
    }
    assert!(bench["oracle_cost"].as_f64().is_some());
}

#[test]
fn bench_costs_shrink_with_radius_factor() {
    let out = ok_stdout(&["bench", "--n", "12", "--k", "2", "--r", "0.5", "--eps", "0.1,0.5", "--repetitions", "1"]);
    let recs: Vec<Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(recs.len(), 2);
    let dir = tempfile::tempdir().unwrap();
    let seed = recs[0]["seed"].as_u64().unwrap().to_string();
    let p = dir.path().join("p.txt");
    ok_stdout(&["gen", "--n", "12", "--seed", &seed, "--out", s(&p)]);
    let f = centers_file(dir.path(), &recs[0]);
    let eval = |factor: &str| record(&["eval", "--instance", s(&p), "--centers", s(&f), "--r", "0.5", "--radius-factor", factor]);
    assert!(eval("1.5")["cost"].as_f64().unwrap() <= eval("1.1")["cost"].as_f64().unwrap());
}

#[test]
fn bench_records_cell_errors_and_continues() {
    let out = ok_stdout(&["bench", "--n", "5", "--k", "1", "--r", "0.5", "--eps", "1.5,0.5", "--repetitions", "1"]);
    let recs: Vec<Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(recs.len(), 2);
    assert!(recs[0]["error"].is_string());
    assert!(recs[0]["cost"].is_null());
    assert!(recs[1]["cost"].as_f64().is_some());
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "d=2 n=2\n1,2\n3,x\n");
    let out = hybridk(&["solve", "--instance", s(&bad), "--k", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));

    assert_eq!(hybridk(&["solve", "--instance", "/nonexistent/p.txt", "--k", "1"]).status.code(), Some(2));
    assert_eq!(hybridk(&["solve", "--bogus"]).status.code(), Some(2));

    let p = write(dir.path(), "p.txt", "d=1 n=3\n0\n10\n20\n");
    let wide = write(dir.path(), "wide.txt", "d=2 n=1\n0,0\n");
    assert_eq!(
        hybridk(&["eval", "--instance", s(&p), "--centers", s(&wide)]).status.code(),
        Some(2)
    );
    let infeasible = hybridk(&["solve", "--instance", s(&p), "--k", "1", "--r", "0.1", "--algorithm", "center-like"]);
    assert_eq!(infeasible.status.code(), Some(3));
    let budget = hybridk(&["oracle", "--instance", s(&p), "--k", "1", "--method", "discrete", "--budget", "1"]);
    assert_eq!(budget.status.code(), Some(4));
    assert_eq!(hybridk(&["eval", "--instance", s(&p), "--centers", s(&p)]).status.code(), Some(0));
}
