//! End-to-end checks of the command-line interface: argument handling, exit
//! codes, and the machine output formats.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_legendre-det"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

#[test]
fn compute_prints_det_and_symbol() {
    let out = run(&["compute", "-p", "17", "-b", "2", "-c", "2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("D_17(2,2) = 13 (mod 17)"), "{text}");
    assert!(text.contains("symbol = 1"), "{text}");
}

#[test]
fn compute_accepts_negative_coefficients() {
    let out = run(&["compute", "-p", "13", "-b", "-1", "-c", "-3"]);
    assert!(out.status.success());
}

#[test]
fn compute_rejects_composite_modulus() {
    let out = run(&["compute", "-p", "9", "-b", "1", "-c", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn primes_lists_range() {
    let out = run(&["primes", "3", "20"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "3\n5\n7\n11\n13\n17\n19\n");
}

#[test]
fn primes_enforces_upper_bound() {
    let out = run(&["primes", "3", "1000001"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_emits_json_lines_with_stable_schema() {
    let out = run(&[
        "verify",
        "--claims",
        "thm1.1,lemma3.2",
        "--pmin",
        "3",
        "--pmax",
        "31",
        "--format",
        "json-lines",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = 0;
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).expect("each line is json");
        let mut keys: Vec<_> = v.as_object().unwrap().keys().map(|s| s.as_str()).collect();
        keys.sort_unstable();
        assert_eq!(
            keys,
            ["b", "c", "claim", "elapsed_ms", "expected", "observed", "p", "status"]
        );
        assert!(matches!(v["status"].as_str(), Some("pass" | "fail" | "na")));
        lines += 1;
    }
    assert_eq!(lines, 20); // 10 odd primes x 2 claims
    // Totals go to stderr so stdout stays machine-readable.
    assert!(String::from_utf8(out.stderr).unwrap().contains("records"));
}

#[test]
fn verify_emits_csv_with_header() {
    let out = run(&[
        "verify", "--claims", "lemma3.2", "--pmin", "3", "--pmax", "13", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("claim,p,b,c,expected,observed,status,elapsed_ms"));
    assert_eq!(lines.clone().count(), 5);
    for line in lines {
        assert_eq!(line.split(',').count(), 8, "{line}");
    }
}

#[test]
fn verify_rejects_unknown_claim() {
    let out = run(&["verify", "--claims", "nonsense", "--pmax", "20"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("unknown claim"));
}

#[test]
fn verify_rejects_bad_grid_and_empty_range() {
    let out = run(&["verify", "--pmax", "20", "--bc-grid", "1;2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["verify", "--pmin", "50", "--pmax", "20"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_workers_env_var_is_honored() {
    let out = bin()
        .args(["verify", "--claims", "eq2.13", "--pmax", "40", "--format", "csv"])
        .env("LEGENDRE_DET_WORKERS", "3")
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let with_env: Vec<String> = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .skip(1)
        .map(|l| l.rsplit_once(',').unwrap().0.to_string()) // drop elapsed_ms
        .collect();
    let out = run(&[
        "verify", "--claims", "eq2.13", "--pmax", "40", "--format", "csv", "--workers", "1",
    ]);
    let single: Vec<String> = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .skip(1)
        .map(|l| l.rsplit_once(',').unwrap().0.to_string())
        .collect();
    let mut a = with_env.clone();
    a.sort();
    let mut b = single.clone();
    b.sort();
    assert_eq!(a, b);
    // A bad env value is a usage error.
    let out = bin()
        .args(["verify", "--claims", "eq2.13", "--pmax", "10"])
        .env("LEGENDRE_DET_WORKERS", "zero")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_subcommand_is_usage_error() {
    let out = run(&[]);
    assert_eq!(out.status.code(), Some(2));
}
