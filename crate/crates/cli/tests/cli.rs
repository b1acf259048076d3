//! End-to-end tests of the binary: pipe composition, record formats and the
//! exit-status contract.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_jfgraph"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary exits")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn gen_emits_graph6() {
    let out = run(&["gen", "jellyfish", "--p", "2", "--q", "3"]);
    assert!(out.status.success());
    let line = stdout(&out);
    let g = jfgraph::graph6::decode(line.trim()).unwrap();
    assert_eq!((g.order(), g.size()), (9, 9));

    let out = run(&["gen", "star", "--p", "3"]);
    assert_eq!(stdout(&out).trim(), "Cs");
}

#[test]
fn gen_transforms_read_stdin() {
    let cycle = stdout(&run(&["gen", "cycle", "--q", "5"]));
    let out = run_with_stdin(&["gen", "line-graph"], &cycle);
    let line_graph = jfgraph::graph6::decode(stdout(&out).trim()).unwrap();
    // The line graph of a cycle is an isomorphic cycle.
    assert_eq!((line_graph.order(), line_graph.size()), (5, 5));

    let out = run_with_stdin(&["gen", "complement"], &cycle);
    let comp = jfgraph::graph6::decode(stdout(&out).trim()).unwrap();
    assert_eq!(comp.size(), 5); // C(5,2) - 5
}

#[test]
fn spec_pipeline_matches_closed_form() {
    let graph = stdout(&run(&["gen", "jellyfish", "--p", "1", "--q", "3"]));
    let out = run_with_stdin(&["spec", "--matrix", "q", "--float"], &graph);
    let line = stdout(&out);
    // Six eigenvalues in value×multiplicity groups.
    let total: usize = line
        .trim()
        .split(' ')
        .map(|pair| {
            pair.split('\u{d7}')
                .nth(1)
                .unwrap()
                .parse::<usize>()
                .unwrap()
        })
        .sum();
    assert_eq!(total, 6);
    assert!(line.starts_with("5.23606797750\u{d7}1 2.61803398875\u{d7}2"));

    let out = run_with_stdin(&["spec", "--matrix", "q"], &graph);
    assert_eq!(stdout(&out).trim(), "4 -30 81 -96 51 -12 1");
}

#[test]
fn invariants_records() {
    let graph = stdout(&run(&["gen", "sun", "--q", "4"]));
    let out = run_with_stdin(&["invariants"], &graph);
    let line = stdout(&out);
    assert!(line.contains("n=8 m=8"));
    assert!(line.contains("det-q=0"));
    assert!(line.contains("spanning-trees=4"));

    let out = run_with_stdin(&["invariants", "--format", "json"], &graph);
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(value["n"], 8);
    assert_eq!(value["det-q"], "0");
}

#[test]
fn cospectral_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.g6");
    let b = dir.path().join("b.g6");
    // The classic adjacency-cospectral pair.
    std::fs::write(&a, "Ds_\n").unwrap(); // K_{1,4}
    std::fs::write(&b, "DBW\n").unwrap(); // C_4 + K_1

    let out = run(&[
        "cospectral",
        "--matrix",
        "a",
        a.to_str().unwrap(),
        b.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));

    let out = run(&[
        "cospectral",
        "--matrix",
        "q",
        a.to_str().unwrap(),
        b.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));

    let out = run(&[
        "cospectral",
        "--matrix",
        "a",
        "/nonexistent",
        b.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(65));
}

#[test]
fn search_finds_classic_mate() {
    let out = run(&["search", "--target", "Ds_", "--matrix", "a", "--m", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("isomorphic-hits=1"));
    assert!(text.contains("mates=1"));
    assert!(text.contains("mate=DBW"));
}

#[test]
fn search_accepts_candidate_files() {
    let dir = tempfile::tempdir().unwrap();
    let candidates = dir.path().join("candidates.g6");
    std::fs::write(&candidates, "Ds_\nDBW\nD~{\n").unwrap();
    let out = run(&[
        "search",
        "--target",
        "Ds_",
        "--matrix",
        "a",
        "--candidates",
        candidates.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(value["candidates-examined"], 3);
    assert_eq!(value["mates"][0], "DBW");
}

#[test]
fn verify_dqs_default_grid() {
    let out = run(&["verify", "--suite", "dqs", "--grid", "p=1..2,q=3..4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("PASS dqs p=1 q=3"));
    assert!(text.contains("PASS dqs p=2 q=3"));
    assert!(text.contains("SKIP dqs p=2 q=4"));
}

#[test]
fn verify_dls_skips_odd_cycles() {
    let out = run(&["verify", "--suite", "dls", "--grid", "p=1..1,q=3..4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("SKIP dls p=1 q=3"));
    assert!(text.contains("PASS dls p=1 q=4"));
}

#[test]
fn verify_formula_suites() {
    for suite in [
        "lemma5.1",
        "cor5.2",
        "lemma3.1",
        "thm2.2",
        "thm2.6",
        "lemma2.10",
    ] {
        let out = run(&["verify", "--suite", suite, "--grid", "p=1..2,q=3..4"]);
        assert_eq!(out.status.code(), Some(0), "suite {suite}");
        assert!(!stdout(&out).contains("FAIL"), "suite {suite}");
    }
}

#[test]
fn probe_reports_evidence() {
    let out = run(&["probe", "--p", "1", "--q", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("supporting evidence"));

    let out = run(&["probe", "--p", "1", "--q", "4"]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn exit_status_contract() {
    // Usage error.
    let out = run(&["spec"]);
    assert_eq!(out.status.code(), Some(64));

    // Malformed graph6 input.
    let out = run_with_stdin(&["spec", "--matrix", "a"], "!!!\n");
    assert_eq!(out.status.code(), Some(65));

    // Cap exceeded.
    let out = run(&["search", "--target", "Ds_", "--matrix", "a", "--n", "11"]);
    assert_eq!(out.status.code(), Some(66));

    // Help is not an error.
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}
