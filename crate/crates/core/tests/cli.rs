use std::process::{Command, Output};

fn cbip(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cbip")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn tableau_prints_the_compact_form() {
    let out = cbip(&["tableau", "--l1", "1", "--l2", "1", "--s1", "0", "--s2", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("(-1,0,2)/(-1,1)"));
}

#[test]
fn theta_json_has_the_image() {
    let out = cbip(&["--json", "theta", "--l1", "1", "--l2", "1", "-e", "2", "--s2", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v.to_string().contains("\"1,1\""), "{v}");
}

#[test]
fn negative_charges_parse() {
    let out = cbip(&["wallcross", "--l1", "2", "--s1", "-3", "--s2", "-1"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn verify_passes_and_respects_jobs() {
    let out = cbip(&["--jobs", "2", "verify", "--max-n", "6", "--audit-statements"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn certify_type_d_rejects_asymmetric_input() {
    let out = cbip(&["certify", "--l1", "1", "-e", "2", "--type-d"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not symmetric"));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(cbip(&["theta", "--l1", "1"]).status.code(), Some(2));
    assert_eq!(cbip(&["tableau", "--l1", "1,2"]).status.code(), Some(2));
    assert_eq!(cbip(&["enumerate"]).status.code(), Some(2));
}

#[test]
fn enumerate_lists_every_bipartition() {
    let out = cbip(&["enumerate", "-n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 10);
}
