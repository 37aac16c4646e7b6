use std::path::{Path, PathBuf};
use std::process::Command;

use homjmp::fixtures;
use homjmp::io;
use homjmp::linalg::{int, ratio};
use homjmp::Matrix;
use homjmp_cli::{run_cli, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};
use serde_json::Value;
use tempfile::TempDir;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn run(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("homjmp").chain(args.iter().copied());
    let code = run_cli(argv, &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn example(dir: &TempDir, name: &str, params: &[&str]) -> PathBuf {
    let path = dir.path().join(format!("{name}.json"));
    let mut args = vec!["example", name, "-o", path_str(&path)];
    for p in params {
        args.push("--param");
        args.push(p);
    }
    let r = run(&args);
    assert_eq!(r.code, EXIT_PASS, "{}", r.err);
    path
}

fn map_file(dir: &TempDir, name: &str, m: &Matrix) -> PathBuf {
    let path = dir.path().join(format!("{name}.map.json"));
    std::fs::write(&path, io::map_to_json(name, m)).unwrap();
    path
}

fn verdict(report: &str, property: &str) -> String {
    let v: Value = serde_json::from_str(report).unwrap();
    v["classification"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["property"] == property)
        .map(|c| c["verdict"].as_str().unwrap().to_string())
        .unwrap_or_else(|| panic!("no {property} in report"))
}

#[test]
fn check_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let ex3 = example(&dir, "ex3", &["lambda=2"]);
    let r = run(&["check", path_str(&ex3), "--suite", "admissible"]);
    assert_eq!(r.code, EXIT_PASS);
    let r = run(&["check", path_str(&ex3), "--suite", "alternative"]);
    assert_eq!(r.code, EXIT_FAIL);
    let v: Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v["report"]["verdict"], "fail");
    assert_eq!(v["suite"], "alternative");
    let sub = &v["report"]["sub_reports"][0];
    assert!(sub["witness"]["basis"].is_array());
    assert!(sub["witness"]["residual"].is_array());
    assert_eq!(run(&["check", path_str(&ex3)]).code, EXIT_FAIL);
}

#[test]
fn usage_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let ex3 = example(&dir, "ex3", &[]);
    assert_eq!(run(&["bogus"]).code, EXIT_USAGE);
    assert_eq!(run(&["check", "/nonexistent/file.json"]).code, EXIT_USAGE);
    assert_eq!(run(&["check", path_str(&ex3), "--suite", "nope"]).code, EXIT_USAGE);
    assert_eq!(run(&["example", "ex9"]).code, EXIT_USAGE);
    let r = run(&["example", "ex3", "--param", "lambda=0"]);
    assert_eq!(r.code, EXIT_USAGE);
    assert!(r.err.contains("invertible"));

    let bad = dir.path().join("bad.json");
    let text = std::fs::read_to_string(&ex3).unwrap().replace("\"1/2\"", "\"1/0\"");
    std::fs::write(&bad, text).unwrap();
    let r = run(&["check", path_str(&bad)]);
    assert_eq!(r.code, EXIT_USAGE);
    assert!(r.err.contains("twist[2][2]: denominator"), "{}", r.err);

    let r = run(&["--help"]);
    assert_eq!(r.code, EXIT_PASS);
    assert!(r.out.contains("textend"));
}

#[test]
fn report_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let ex5 = example(&dir, "ex5", &[]);
    let a = run(&["report", path_str(&ex5), "--seed", "9"]);
    let b = run(&["report", path_str(&ex5), "--seed", "9"]);
    assert_eq!(a.code, EXIT_PASS);
    assert_eq!(a.out, b.out);
    assert_eq!(verdict(&a.out, "hom-flexible"), "pass");
    let v: Value = serde_json::from_str(&a.out).unwrap();
    assert_eq!(v["seed"], 9);
}

#[test]
fn example_output_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    for name in io::EXAMPLES {
        let path = example(&dir, name, &[]);
        let text = std::fs::read_to_string(&path).unwrap();
        let doc = io::load_algebra(&path).unwrap();
        assert_eq!(io::to_canonical_json(&doc), text, "{name}");
        let r = run(&["example", name]);
        assert_eq!(r.out, text);
    }
}

#[test]
fn twist_by_the_twist() {
    let dir = tempfile::tempdir().unwrap();
    let ex3 = example(&dir, "ex3", &["lambda=3"]);
    let alpha = fixtures::ex3_twist(&int(3)).unwrap();
    let map = map_file(&dir, "alpha", &alpha);
    let out = dir.path().join("twisted.json");
    let r = run(&["twist", path_str(&ex3), "--map", path_str(&map), "-o", path_str(&out)]);
    assert_eq!(r.code, EXIT_PASS, "{}", r.err);
    let doc = io::load_algebra(&out).unwrap();
    assert_eq!(doc.meta["constructed-by"], "twist");
    assert_eq!(doc.object.twist_matrix(), &alpha.pow(2).unwrap());
    assert_eq!(run(&["check", path_str(&out), "--suite", "admissible"]).code, EXIT_PASS);

    let bad = map_file(&dir, "double", &Matrix::identity(3).scale(&int(2)));
    let r = run(&["twist", path_str(&ex3), "--map", path_str(&bad)]);
    assert_eq!(r.code, EXIT_USAGE);
}

#[test]
fn textend_with_and_without_involution() {
    let dir = tempfile::tempdir().unwrap();
    let flat = example(&dir, "ex3-flat", &[]);
    let out = dir.path().join("p.json");
    assert_eq!(run(&["textend", path_str(&flat), "-o", path_str(&out)]).code, EXIT_PASS);
    let r = run(&["report", path_str(&out)]);
    assert_eq!(verdict(&r.out, "pseudo-euclidean"), "pass");
    assert_eq!(verdict(&r.out, "hom-jmp"), "pass");

    let theta = map_file(&dir, "theta", &fixtures::ex3_theta());
    let out = dir.path().join("p-theta.json");
    let r = run(&["textend", path_str(&flat), "--auto", path_str(&theta), "-o", path_str(&out)]);
    assert_eq!(r.code, EXIT_PASS, "{}", r.err);
    let r = run(&["report", path_str(&out)]);
    assert_eq!(verdict(&r.out, "pseudo-euclidean"), "pass");

    let d = Matrix::diagonal(&[int(1), int(2), ratio(1, 2)]);
    let d = map_file(&dir, "d", &d);
    let r = run(&["textend", path_str(&flat), "--auto", path_str(&d)]);
    assert_eq!(r.code, EXIT_FAIL);
    let v: Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v["beta_is_automorphism"], false);
    assert_eq!(v["verdicts_agree"], true);

    let ex3 = example(&dir, "ex3", &[]);
    assert_eq!(run(&["textend", path_str(&ex3)]).code, EXIT_USAGE);
}

#[test]
fn anfamily_needs_a_form() {
    let dir = tempfile::tempdir().unwrap();
    let p6 = example(&dir, "p6", &["lambda=2"]);
    let out = dir.path().join("a3.json");
    let r = run(&["anfamily", path_str(&p6), "--n", "3", "-o", path_str(&out)]);
    assert_eq!(r.code, EXIT_PASS, "{}", r.err);
    let r = run(&["report", path_str(&out)]);
    assert_eq!(verdict(&r.out, "pseudo-euclidean"), "pass");
    let ex3 = example(&dir, "ex3", &[]);
    assert_eq!(run(&["anfamily", path_str(&ex3), "--n", "1"]).code, EXIT_USAGE);
}

#[test]
fn triple_construction() {
    let dir = tempfile::tempdir().unwrap();
    let ex3 = example(&dir, "ex3", &[]);
    let out = dir.path().join("t.json");
    assert_eq!(run(&["triple", path_str(&ex3), "-o", path_str(&out)]).code, EXIT_PASS);
    assert_eq!(run(&["check", path_str(&out), "--suite", "hljp"]).code, EXIT_PASS);
    assert_eq!(run(&["check", path_str(&out), "--suite", "hlts"]).code, EXIT_PASS);
    assert_eq!(run(&["check", path_str(&out), "--suite", "flexible"]).code, EXIT_USAGE);

    let ex5 = example(&dir, "ex5", &[]);
    let r = run(&["triple", path_str(&ex5)]);
    assert_eq!(r.code, EXIT_FAIL);
    let v: Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v["report"]["verdict"], "fail");
}

#[test]
fn binary_reads_seed_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let ex3 = example(&dir, "ex3", &[]);
    let bin = env!("CARGO_BIN_EXE_homjmp");
    let out = Command::new(bin)
        .args(["report", path_str(&ex3)])
        .env("HOMJMP_SEED", "42")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_PASS));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["seed"], 42);
    let out = Command::new(bin).args(["check", path_str(&ex3), "--suite", "alternative"]).output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_FAIL));
    let out = Command::new(bin).arg("nonsense").output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
    assert!(!out.stderr.is_empty());
}
