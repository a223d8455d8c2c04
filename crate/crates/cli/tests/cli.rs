use std::path::Path;
use std::process::{Command, Output};

use dequation::fixtures;
use dequation::formats::{parse_graded_file, parse_matrix_file};

fn dequation(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dequation"))
        .args(args)
        .env_remove("DEQUATION_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_examples(dir: &Path) {
    let o = dequation(&["examples", "--dir", dir.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
}

fn example(dir: &Path, name: &str) -> String {
    dir.join(format!("{name}.txt")).to_str().unwrap().to_string()
}

#[test]
fn yb_operator_is_not_a_d_solution() {
    let dir = tempfile::tempdir().unwrap();
    write_examples(dir.path());
    let o = dequation(&["check", &example(dir.path(), "yb-operator")]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("\nD false\n"));
    assert!(out.contains("\nQYBE true\n"));
    let o = dequation(&["check", "--require", "qybe", &example(dir.path(), "yb-operator")]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn identity_passes_everything() {
    let dir = tempfile::tempdir().unwrap();
    write_examples(dir.path());
    let o = dequation(&["check", &example(dir.path(), "identity")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for key in ["D", "QYBE", "Hopf", "pentagon", "form T", "form U", "form W", "forms agree"] {
        assert!(out.contains(&format!("\n{key} true\n")), "{key} in\n{out}");
    }
}

#[test]
fn frt_relations_for_the_kronecker_family() {
    let dir = tempfile::tempdir().unwrap();
    write_examples(dir.path());
    for name in ["eq100", "eq100-unit"] {
        let o = dequation(&["frt", &example(dir.path(), name)]);
        assert_eq!(o.status.code(), Some(0));
        let out = stdout(&o);
        assert!(out.contains("\n  c21 = 0\n  c22 - c11 = 0\n"), "{out}");
        assert!(out.contains("round trip: ok"));
    }
}

#[test]
fn frt_refuses_non_solutions_with_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    write_examples(dir.path());
    let o = dequation(&["frt", &example(dir.path(), "yb-operator")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("not a solution"));
}

#[test]
fn examples_round_trip_through_the_parser() {
    let dir = tempfile::tempdir().unwrap();
    write_examples(dir.path());
    for fx in fixtures::all() {
        let text = std::fs::read_to_string(dir.path().join(format!("{}.txt", fx.name))).unwrap();
        assert_eq!(parse_matrix_file(&text).unwrap(), fx.r, "{}", fx.name);
    }
    let text = std::fs::read_to_string(dir.path().join("s3-graded-module.txt")).unwrap();
    assert_eq!(parse_graded_file(&text).unwrap(), fixtures::s3_graded_module(&dequation::exactmath::Field::Rationals));
}

#[test]
fn parse_errors_carry_position_and_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "field Q\ndim 1\n\n  1/0\n").unwrap();
    let o = dequation(&["check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    // the column points at the zero denominator
    assert!(err.contains("line 4, column 5"), "{err}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(dequation(&["check"]).status.code(), Some(2));
    assert_eq!(dequation(&["classify", "--n", "2", "--p", "4"]).status.code(), Some(2));
    assert_eq!(dequation(&["classify", "--n", "5", "--p", "2"]).status.code(), Some(2));
    assert_eq!(dequation(&["classify", "--n", "2", "--p", "2", "--filter", "odd"]).status.code(), Some(2));
}

#[test]
fn oversized_operators_are_refused() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("big.txt");
    let mut text = String::from("field F 2\ndim 5\n");
    for r in 0..25 {
        let row: Vec<&str> = (0..25).map(|c| if r == c { "1" } else { "0" }).collect();
        text.push_str(&row.join(" "));
        text.push('\n');
    }
    std::fs::write(&path, text).unwrap();
    let o = dequation(&["check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn classify_refuses_large_scans_with_an_estimate() {
    let o = dequation(&["classify", "--n", "2", "--p", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("43046721"));
}

#[test]
fn classify_report_is_stable_across_workers() {
    let dir = tempfile::tempdir().unwrap();
    let mut reports = Vec::new();
    for w in ["1", "4"] {
        let out = dir.path().join(format!("census-{w}.txt"));
        let o = dequation(&["classify", "--n", "2", "--p", "2", "--orbits", "--workers", w, "--out", out.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        reports.push(std::fs::read(&out).unwrap());
    }
    assert_eq!(reports[0], reports[1]);
    let text = String::from_utf8(reports.pop().unwrap()).unwrap();
    assert!(text.starts_with("census\nfield F 2\nn 2\nfilter all\ncandidates 65536\nsolutions 100\n"));
}

#[test]
fn sidecar_is_key_value() {
    let dir = tempfile::tempdir().unwrap();
    write_examples(dir.path());
    let side = dir.path().join("check.kv");
    let o = dequation(&["check", "--sidecar", side.to_str().unwrap(), &example(dir.path(), "yb-operator")]);
    assert_eq!(o.status.code(), Some(1));
    let kv = std::fs::read_to_string(&side).unwrap();
    assert!(kv.lines().all(|l| l.split_once('=').is_some()));
    assert!(kv.contains("\nD=false\n") && kv.contains("\nQYBE=true\n"));
    assert!(kv.contains("first_failure="));
}

#[test]
fn dmap_report_for_r_q() {
    let dir = tempfile::tempdir().unwrap();
    write_examples(dir.path());
    let o = dequation(&["dmap", &example(dir.path(), "rq")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("\nstrong false\n"));
    assert!(out.contains("\nis dmap true\n"));
    assert!(out.contains("  c21 = 0\n"));
    let o = dequation(&["dmap", &example(dir.path(), "identity")]);
    let out = stdout(&o);
    assert!(out.contains("\nsymmetric true\n"));
    assert!(out.contains("\nconvolution inverse exists\n"));
}

#[test]
fn dimodule_regenerates_the_s3_operator() {
    let dir = tempfile::tempdir().unwrap();
    write_examples(dir.path());
    let regen = dir.path().join("regen.txt");
    let o = dequation(&["dimodule", &example(dir.path(), "s3-graded-module"), "--out", regen.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let out = stdout(&o);
    assert!(out.contains("\ncompatible true\n"));
    assert!(out.contains("\nregenerated D true\n"));
    assert!(out.contains("\nregenerated QYBE false\n"));
    let text = std::fs::read_to_string(regen).unwrap();
    assert_eq!(parse_matrix_file(&text).unwrap(), fixtures::by_name("s3-graded").unwrap().r);
}

#[test]
fn selftest_is_reproducible() {
    let a = dequation(&["selftest", "--seed", "11", "--cases", "30"]);
    let b = dequation(&["selftest", "--seed", "11", "--cases", "30"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).ends_with("result ok\n"));
}
