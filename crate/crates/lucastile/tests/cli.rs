//! CLI behavior beyond the acceptance gate: file output, formats, env
//! handling, and the usage-error paths.

use std::process::Command;

use lucastile::circulant::lagarias_shor_code;
use lucastile::report::{ReportData, RunReport};

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_lucastile"));
    cmd.env_remove("LUCASTILE_VOXEL_BUDGET");
    cmd
}

#[test]
fn output_flag_writes_the_report_to_a_file() {
    let dir = std::env::temp_dir().join("lucastile-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = bin()
        .args(["code", "gen", "-n", "3", "--set", "v", "--format", "json"])
        .arg("-o")
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty(), "report went to the file, not stdout");

    let report: RunReport = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let words = match report.data {
        Some(ReportData::Words { words }) => words,
        other => panic!("expected words, got {other:?}"),
    };
    let expect: Vec<String> = lagarias_shor_code(3)
        .unwrap()
        .iter()
        .map(|w| w.to_string())
        .collect();
    assert_eq!(words, expect);
}

#[test]
fn table_format_spaces_out_digits() {
    let out = bin()
        .args(["code", "gen", "-n", "3", "--set", "u"])
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("1 2 0"));
    assert!(text.contains("overall: ok"));
}

#[test]
fn identities_csv_is_one_row_per_report() {
    let out = bin()
        .args([
            "identities", "check", "--n-max", "6", "--id", "2", "--format", "csv",
        ])
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "id,n,lhs,rhs,path,ok");
    assert_eq!(lines.len(), 7);
    assert_eq!(lines[3], "2,3,5,5,closed_form,true");
}

#[test]
fn report_all_refuses_csv() {
    let out = bin()
        .args(["report", "all", "-n", "3", "--format", "csv"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unsupported"));
}

#[test]
fn voxel_budget_env_var_is_honored() {
    let out = bin()
        .args(["tiling", "verify", "-n", "5", "--oracle", "voxel"])
        .env("LUCASTILE_VOXEL_BUDGET", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));

    let out = bin()
        .args(["tiling", "verify", "-n", "5", "--oracle", "voxel"])
        .env("LUCASTILE_VOXEL_BUDGET", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn flag_overrides_env_budget() {
    let out = bin()
        .args([
            "tiling", "verify", "-n", "5", "--oracle", "voxel", "--voxel-budget", "2048",
        ])
        .env("LUCASTILE_VOXEL_BUDGET", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn drop_word_out_of_bounds_is_a_usage_error() {
    let out = bin()
        .args(["tiling", "verify", "-n", "3", "--drop-word", "99"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn identities_check_needs_a_range() {
    let out = bin().args(["identities", "check"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = bin()
        .args(["identities", "check", "-n", "3", "--n-max", "5"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2), "-n conflicts with --n-max");
}

#[test]
fn timings_flag_adds_timings() {
    let out = bin()
        .args(["selector", "verify", "-n", "5", "--format", "json", "--timings"])
        .output()
        .unwrap();
    let report: RunReport = serde_json::from_slice(&out.stdout).unwrap();
    assert!(report.timings.is_some());

    let out = bin()
        .args(["selector", "verify", "-n", "5", "--format", "json"])
        .output()
        .unwrap();
    let report: RunReport = serde_json::from_slice(&out.stdout).unwrap();
    assert!(report.timings.is_none(), "timings are opt-in");
}

#[test]
fn unknown_set_values_are_rejected_by_clap() {
    let out = bin()
        .args(["code", "gen", "-n", "3", "--set", "w"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oversized_dimensions_are_refused() {
    let out = bin().args(["code", "gen", "-n", "40", "--set", "u"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
