use std::io::Write;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_dirac-verify"));
    c.env_remove(dirac_verify::CONFIG_ENV);
    c
}

fn run(cmd: &mut Command) -> Output {
    cmd.output().expect("binary runs")
}

#[test]
fn algebra_group_succeeds_with_machine_output() {
    let out = run(bin().args(["verify", "algebra"]));
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["summary"]["total"], 3);
}

#[test]
fn claim_filter_and_text_format() {
    let out = run(bin().args(["verify", "so8", "--claims", "CL-FWA-SO6,CL-FWB-SO6", "--format", "text"]));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert!(text.contains("CL-FWA-SO6") && text.contains("CL-FWB-SO6"));
    assert!(!text.contains("CL-SO8-19"));
}

#[test]
fn unknown_claim_exits_with_usage_error() {
    let out = run(bin().args(["verify", "all", "--claims", "CL-BOGUS"]));
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("CL-BOGUS"));
}

#[test]
fn claim_outside_the_group_is_rejected() {
    let out = run(bin().args(["verify", "algebra", "--claims", "CL-SO8-19"]));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invalid_grid_flag_is_rejected() {
    let out = run(bin().args(["verify", "algebra", "--grid", "20"]));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn config_from_environment_and_flag_override() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "seed = 99\ngrid = 16").unwrap();
    let out = run(bin().args(["verify", "algebra"]).env(dirac_verify::CONFIG_ENV, f.path()));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["config"]["seed"], 99);
    let out = run(bin().args(["verify", "algebra", "--seed", "5"]).env(dirac_verify::CONFIG_ENV, f.path()));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!((v["config"]["seed"].as_u64(), v["config"]["grid"].as_u64()), (Some(5), Some(16)));
}

#[test]
fn out_flag_writes_the_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run(bin().args(["spectrum", "--out"]).arg(&path));
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["claims"].as_array().unwrap().len(), 2);
    // the text summary goes to stdout
    assert!(String::from_utf8_lossy(&out.stdout).contains("CL-SPEC-SOMMERFELD"));
}

#[test]
fn failing_numeric_claim_sets_exit_one() {
    // the SO(4) block relations for R do not hold, see CL-SO4 notes
    let out = run(bin().args(["verify", "known", "--claims", "CL-SO4"]));
    assert_eq!(out.status.code(), Some(1));
}
