//! End-to-end checks of the command-line contract.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_linkconc"))
}

#[test]
fn dims_json_reports_expected_dimension() {
    let out = bin()
        .args(["dims", "--space", "bcl", "-k", "3", "-d", "2", "--json", "-"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["dim"], 6);
    assert_eq!(v["n_basis"], 22);
    assert_eq!(v["space"], "BCL");
}

#[test]
fn dims_zero_for_one_color() {
    let out = bin()
        .args(["dims", "--space", "bcl", "-k", "1", "-d", "4", "--json", "-"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["dim"], 0);
}

#[test]
fn verify_lemmas_passes() {
    let out = bin()
        .args(["verify", "--suite", "lemmas"])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn unknown_space_exits_two() {
    let out = bin()
        .args(["dims", "--space", "nope", "-k", "1", "-d", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown space"));
}

#[test]
fn missing_args_exit_two() {
    let out = bin().args(["dims"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_suite_exits_two() {
    let out = bin().args(["verify", "--suite", "nope"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_byte_identical_across_runs() {
    let run = || {
        bin()
            .args(["dims", "--space", "acl", "-k", "2", "-d", "2", "--json", "-"])
            .output()
            .unwrap()
    };
    let a: serde_json::Value = serde_json::from_slice(&run().stdout).unwrap();
    let b: serde_json::Value = serde_json::from_slice(&run().stdout).unwrap();
    // elapsed time may differ; everything else must match exactly
    let strip = |mut v: serde_json::Value| {
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    assert_eq!(strip(a), strip(b));
}

#[test]
fn export_writes_matrix_and_legend() {
    let dir = std::env::temp_dir().join(format!("linkconc-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bcl_2_1.mtx");
    let out = bin()
        .args([
            "export",
            "--space",
            "bcl",
            "-k",
            "2",
            "-d",
            "1",
            "--check-roundtrip",
            "--output",
        ])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let matrix = std::fs::read_to_string(&path).unwrap();
    let header = matrix.lines().next().unwrap();
    // 2 ideal rows over 3 columns
    assert_eq!(header, "2 3 2");
    let legend = std::fs::read_to_string(dir.join("bcl_2_1.mtx.legend")).unwrap();
    assert!(legend.contains("1:2"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn enumerate_lists_basis() {
    let out = bin()
        .args(["enumerate", "--space", "bcl", "-k", "2", "-d", "1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines, vec!["1:1", "1:2", "2:2"]);
}

#[test]
fn basis_lists_quotient_survivors() {
    let out = bin()
        .args(["basis", "--space", "bcl", "-k", "2", "-d", "1", "--json", "-"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v, serde_json::json!(["1:2"]));
}
