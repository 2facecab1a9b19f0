//! End-to-end tests of the binary: tables, JSON reports, determinism and
//! the exit-code contract.

use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_modcurve"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

fn tmp(name: &str) -> PathBuf {
    let mut path = std::env::temp_dir();
    path.push(format!("modcurve-cli-test-{}-{name}", std::process::id()));
    path
}

#[test]
fn invariants_table_for_the_spot_levels() {
    let out = run(&["invariants", "--range", "7..9"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    let row7: Vec<&str> = lines[1].split_whitespace().collect();
    assert_eq!(&row7[..6], &["7", "168", "3", "168", "24", "2"]);
    let row8: Vec<&str> = lines[2].split_whitespace().collect();
    assert_eq!(&row8[..6], &["8", "192", "5", "192", "24", "2"]);
    let row9: Vec<&str> = lines[3].split_whitespace().collect();
    assert_eq!(&row9[..6], &["9", "324", "10", "324", "36", "2"]);
}

#[test]
fn degenerate_and_subcritical_levels_are_flagged() {
    let out = run(&["invariants", "--range", "1..6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let row1: Vec<&str> = text.lines().nth(1).unwrap().split_whitespace().collect();
    assert_eq!(&row1[..3], &["1", "1", "0"]);
    assert!(text.contains("genus 1 below 2"));
}

#[test]
fn exit_codes_follow_the_contract() {
    // 0: assertions hold
    assert_eq!(run(&["points", "--model", "klein", "--prime", "2"]).status.code(), Some(0));
    // 2: usage errors
    assert_eq!(run(&["aut-certify", "--range", "6"]).status.code(), Some(2));
    assert_eq!(run(&["points", "--model", "nonsense", "--prime", "2"]).status.code(), Some(2));
    assert_eq!(run(&["points", "--model", "klein"]).status.code(), Some(2));
    assert_eq!(run(&["points", "--model", "klein", "--prime", "7"]).status.code(), Some(2));
    assert_eq!(run(&["points", "--model", "wiman", "--twist", "12", "--height", "5"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "--range", "9..7"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn certify_range_reports_every_branch() {
    let out = run(&["aut-certify", "--range", "7..14"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("Prime"));
    assert!(text.contains("SmallN"));
    assert!(text.contains("Ramification"));
    assert!(!text.contains("NotCertified"));
}

#[test]
fn klein_points_over_f2_as_lines() {
    let out = run(&["points", "--model", "klein", "--prime", "2"]);
    let text = stdout(&out);
    for line in ["1:0:0", "0:1:0", "0:0:1"] {
        assert!(text.lines().any(|l| l == line), "missing {line}");
    }
}

#[test]
fn twist_without_points_reports_zero() {
    let out = run(&["points", "--model", "wiman", "--twist", "3", "--height", "100"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("100     0"));
}

#[test]
fn json_reports_are_deterministic_modulo_the_version_line() {
    let path_a = tmp("det-a.json");
    let path_b = tmp("det-b.json");
    for (path, _) in [(&path_a, 0), (&path_b, 1)] {
        let out = run(&[
            "twist-scan",
            "--dmax",
            "5",
            "--height",
            "30",
            "--json",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    let strip = |p: &PathBuf| -> String {
        std::fs::read_to_string(p)
            .unwrap()
            .lines()
            .filter(|l| !l.contains("tool_version"))
            .collect::<Vec<_>>()
            .join("\n")
    };
    let a = strip(&path_a);
    assert_eq!(a, strip(&path_b));
    assert!(!a.is_empty());
    let _ = std::fs::remove_file(&path_a);
    let _ = std::fs::remove_file(&path_b);
}

#[test]
fn certificate_json_uses_decimal_strings() {
    let path = tmp("cert.json");
    let out = run(&["aut-certify", "--range", "49", "--json", path.to_str().unwrap()]);
    assert!(out.status.success());
    let payload: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(payload["command"], "aut-certify");
    let cert = &payload["rows"][0]["certificate"];
    assert_eq!(cert["N"], "49");
    assert_eq!(cert["delta"], "57624");
    assert_eq!(cert["branch"], "PrimePower");
    assert_eq!(cert["verdict"], "Certified");
    assert!(cert["steps"].as_array().unwrap().iter().any(|s| s["kind"] == "KernelContainsH"));
    let _ = std::fs::remove_file(&path);
}

#[test]
fn classify_evidence_reaches_the_output() {
    let out = run(&["classify", "--range", "9"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("18 > 12"));
}

#[test]
fn x9_prime_scan_reports_without_genus_assertion() {
    let out = run(&["points", "--model", "x9", "--prime", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("without a genus assertion"));
}
