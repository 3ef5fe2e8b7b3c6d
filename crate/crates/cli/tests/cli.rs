use std::path::Path;
use std::process::{Command, Output};

use prym_core::catalog::rings::dab_printed;
use prym_core::presentation::parse_presentation;

fn verify(args: &[&str], out_dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verify"))
        .args(args)
        .env("PRYM_VERIFY_OUT", out_dir)
        .output()
        .expect("verify runs")
}

fn names(dir: &Path) -> Vec<String> {
    let mut v: Vec<String> = std::fs::read_dir(dir)
        .map(|rd| rd.map(|e| e.unwrap().file_name().to_string_lossy().into_owned()).collect())
        .unwrap_or_default();
    v.sort();
    v
}

#[test]
fn list_prints_every_scenario() {
    let dir = tempfile::tempdir().unwrap();
    let out = verify(&["--list"], dir.path());
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for id in ["thm-n1-even", "thm-Dab", "qpush", "basis"] {
        assert!(text.lines().any(|l| l.starts_with(id)), "{id} missing from\n{text}");
    }
}

#[test]
fn usage_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(verify(&["--scenario", "nosuch"], dir.path()).status.code(), Some(2));
    assert_eq!(verify(&[], dir.path()).status.code(), Some(2));
    assert_eq!(verify(&["--scenario", "thm-n1-odd", "--g", "4"], dir.path()).status.code(), Some(2));
    assert_eq!(verify(&["--scenario", "basis", "--oracle", "magic"], dir.path()).status.code(), Some(2));
    assert_eq!(verify(&["--dump", "ring.nosuch"], dir.path()).status.code(), Some(2));
    assert!(names(dir.path()).is_empty());
}

#[test]
fn passing_scenario_writes_both_reports() {
    let dir = tempfile::tempdir().unwrap();
    let out = verify(&["--scenario", "thm-n1-even", "--g", "4"], dir.path());
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(names(dir.path()), ["thm-n1-even.json", "thm-n1-even.txt"]);
    let json = std::fs::read_to_string(dir.path().join("thm-n1-even.json")).unwrap();
    let rep = prym_core::harness::Report::from_json(&json).unwrap();
    assert!(rep.passed());
    assert_eq!(rep.params.g, Some(4));
    assert!(rep.recheck().unwrap().is_empty());
}

#[test]
fn emit_path_and_several_scenarios() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("sub").join("run.json");
    let out = Command::new(env!("CARGO_BIN_EXE_verify"))
        .args(["--scenario", "basis", "--scenario", "w-classes", "--n", "3", "--m", "2", "--jobs", "2", "--emit"])
        .arg(&target)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(names(&dir.path().join("sub")), ["run.json", "run.txt"]);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&target).unwrap()).unwrap();
    let ids: Vec<&str> = v.as_array().unwrap().iter().map(|r| r["scenario"].as_str().unwrap()).collect();
    assert_eq!(ids, ["basis", "w-classes"]);
}

// The printed M5 carries ab c2^2 where the pushforward formulas give a^2 b^2 c2^2. For (2,3)
// the difference 30 c2^2 is not in the pushforward ideal, so this run fails on purpose.
#[test]
fn two_three_reports_the_m5_mismatch() {
    let dir = tempfile::tempdir().unwrap();
    let out = verify(&["--scenario", "thm-Dab", "--a", "2", "--b", "3"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    let rep = prym_core::harness::Report::from_json(&std::fs::read_to_string(dir.path().join("thm-Dab.json")).unwrap()).unwrap();
    let failed: Vec<&str> = rep.failed_steps().map(|s| s.anchor.as_str()).collect();
    assert!(failed.iter().any(|a| a.contains("(M5) lies in the pushforward ideal")), "{failed:?}");
}

#[test]
fn dump_parses_back() {
    let dir = tempfile::tempdir().unwrap();
    let out = verify(&["--dump", "ring.Dab", "--a", "2", "--b", "3"], dir.path());
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let ring = parse_presentation(&String::from_utf8(out.stdout).unwrap()).unwrap();
    let want = dab_printed(2, 3).unwrap();
    assert_eq!(ring.relations(), want.relations());
    assert!(names(dir.path()).is_empty());
}
