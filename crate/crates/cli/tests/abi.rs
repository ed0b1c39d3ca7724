//! The compiled binary as a process: exit codes, streams and JSON on stdout.

use std::process::{Command, Output};

fn hurwitz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hurwitz")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn product_on_stdout() {
    let o = hurwitz(&["mul", "Z:[0,1]", "Z:[0,1]"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "Z:[0,0,2]\n");
    assert!(o.stderr.is_empty());
}

#[test]
fn errors_go_to_stderr_with_exit_2() {
    let o = hurwitz(&["mul", "Zloc(5):[1,1/5]", "Zloc(5):[1]"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("position 11"), "{err}");

    let o = hurwitz(&["--unknown-flag", "mul"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(hurwitz(&["--help"]).status.code(), Some(0));
}

#[test]
fn maximality_json() {
    let o = hurwitz(&["--json", "ideal", "maximal", "--ring", "Zloc(5)", "Zloc(5):[1,5]"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "ideal maximal");
    assert_eq!(v["status"], "MaximalCertified");
    assert_eq!(v["kind"], "Cor25Witness");
    assert_eq!(v["witness"], "[1,5]");
    assert_eq!(v["verified"], true);
}

#[test]
fn json_errors_are_objects() {
    let o = hurwitz(&["--json", "lemma21", "Z:[1,2,2]", "--L", "3"]);
    assert_eq!(o.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["error"]["kind"], "NotPrimeIdeal");
}

#[test]
fn verify_is_byte_identical_under_a_seed() {
    let args = ["--json", "verify", "--suite", "claims", "--cases", "10", "--seed", "3"];
    let (a, b) = (hurwitz(&args), hurwitz(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["suites"][0]["suite"], "claims");
    assert_eq!(v["passed"], true);
}

#[test]
fn failing_suite_exits_1() {
    let o = hurwitz(&["verify", "--suite", "irreducibility", "--cases", "5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL irreducibility"));
}
