use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_distideal")).args(args).output().expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_distideal"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    assert!(o.status.success(), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    serde_json::from_str(&stdout(&run(&all))).unwrap()
}

#[test]
fn ideal_of_c3_from_file() {
    let dir = std::env::temp_dir().join(format!("distideal-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c3.txt");
    std::fs::write(&path, "n=3\n0->1, 1->2, 2->0\n").unwrap();
    let v = json(&["ideal", path.to_str().unwrap(), "--k", "2", "--groebner"]);
    assert_eq!(v["result"]["basis"], serde_json::json!(["x0 + 3", "x1 + 3", "x2 + 3", "7"]));
    assert_eq!(v["result"]["trivial"], false);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn univariate_and_evaluation() {
    let out = stdout(&run(&["ideal", "--family", "complete:3", "--k", "3", "--univariate"]));
    assert!(out.contains("t^3 - 3*t + 2"), "{out}");
    let v = json(&["ideal", "--family", "circuit:3", "--k", "2", "--evaluate-at", "0,0,0"]);
    assert_eq!(v["result"]["evaluation"], "1");
}

#[test]
fn snf_examples() {
    assert_eq!(stdout(&run(&["snf", "--family", "circuit:4"])), "1, 1, 4, 24\n");
    assert_eq!(stdout(&run(&["snf", "--family", "complete:3"])), "1, 1, 2\n");
    assert_eq!(stdout(&run(&["snf", "--family", "lambda:1,2,0,1", "--matrix", "D"])), "1, 1, 1, 12\n");
    let v = json(&["snf", "--family", "circuit:3", "--matrix", "DL"]);
    assert_eq!(v["result"]["matrix"], "DL");
}

#[test]
fn classify_examples() {
    let four_cycle_with_chord = "n=4\n0->1,1->2,2->3,3->0,1->3,3->1\n";
    let out = stdout(&run_stdin(&["classify", "-"], four_cycle_with_chord));
    assert!(out.contains("Λ(1,1,1,1)") && out.contains("Φ = 1"), "{out}");
    let v = json(&["classify", "--family", "circuit:5"]);
    assert_eq!(v["result"]["class"], "NotInGamma1");
    assert_eq!(v["result"]["phi"], 2);
    let v = json(&["classify", "--family", "bipartite:2,2"]);
    assert_eq!(v["result"]["class"]["Lambda"], serde_json::json!({ "a": 0, "b": 2, "c": 0, "d": 2 }));
    assert_eq!(v["result"]["phi"], 1);
}

#[test]
fn formula_checks() {
    let v = json(&["formula", "lambda-ab01:1,1", "--k", "2", "--check"]);
    assert_eq!(v["result"]["matches_minors"], true);
    let v = json(&["formula", "circuit-univariate:6", "--k", "4"]);
    assert_eq!(v["result"]["generators"], serde_json::json!(["t^2", "6*t", "36"]));
    let out = stdout(&run(&["formula", "snf-lambda-ab01:1,2", "--check"]));
    assert_eq!(out, "1, 1, 1, 12\nmatches elimination: true\n");
    assert_eq!(run(&["formula", "complete:3"]).status.code(), Some(2));
}

#[test]
fn verify_reports_and_exit_codes() {
    let v = json(&["verify", "circuit-snf", "--n-max", "12", "--quiet"]);
    assert_eq!(v["summary"]["pass"], 10);
    assert_eq!(v["summary"]["fail"], 0);
    let out = run(&["verify", "conjecture", "--n-max", "8", "--quiet"]);
    let text = stdout(&out);
    assert!(text.contains("evidence, not proof"), "{text}");
    assert!(!text.contains("FAIL"));
    let r = run(&["verify", "theorem-equi", "--n-max", "9"]);
    assert_eq!(r.status.code(), Some(2));
    assert!(run(&["verify", "no-such-suite"]).status.code() == Some(2));
}

#[test]
fn verify_is_deterministic_across_parallel() {
    let a = json(&["verify", "eval-consistency", "--n-max", "3", "--seed", "5", "--quiet"]);
    let b = json(&["verify", "eval-consistency", "--n-max", "3", "--seed", "5", "--quiet", "--parallel"]);
    assert_eq!(a["records"], b["records"]);
}

#[test]
fn input_errors() {
    assert_eq!(run(&["snf"]).status.code(), Some(2));
    assert_eq!(run_stdin(&["snf", "-"], "n=2\n0->1\n").status.code(), Some(2));
    assert_eq!(run(&["snf", "--family", "circuit:3", "--matrix", "X"]).status.code(), Some(2));
}
