//! End-to-end checks of the binary: exit codes, JSON shape, file formats.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fronts")).args(args).output().unwrap()
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn validate_wavefront_preset_exits_zero() {
    let out = run(&["validate", "--preset", "remark_6_2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["scenario"], "wavefront");
}

#[test]
fn validate_oscillatory_preset_exits_three() {
    let out = run(&["validate", "--preset", "oscillatory_8_3", "--json"]);
    assert_eq!(out.status.code(), Some(3));
    let v = stdout_json(&out);
    assert_eq!(v["qdot_at_zero"]["exists"], false);
}

#[test]
fn validate_mismatched_model_file_exits_two() {
    // g(1) = 1 with D(0) = 0 needs the assumption pair that requires D(1) = 0
    let dir = std::env::temp_dir().join("fronts_cli_bad_model");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(
        &path,
        r#"{"f": {"poly": [0.0, 1.0]}, "D": {"poly": [0.0, 1.0]}, "g": {"poly": [0.0, 1.0]}}"#,
    )
    .unwrap();
    let out = run(&["validate", "--model", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn model_file_with_preset_components_round_trips() {
    let dir = std::env::temp_dir().join("fronts_cli_mixed_model");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("mixed.json");
    std::fs::write(
        &path,
        r#"{"f": {"preset": "remark_6_2"}, "D": {"preset": "remark_6_2"}, "g": {"preset": "remark_6_2"}}"#,
    )
    .unwrap();
    let out = run(&["cstar", "--model", path.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert!(v["c_star"].as_f64().unwrap().abs() < 1e-3);
}

#[test]
fn cstar_refuses_nonexistent_derivative_preset() {
    let out = run(&["cstar", "--preset", "oscillatory_8_3"]);
    assert_eq!(out.status.code(), Some(3));
    let msg = String::from_utf8_lossy(&out.stderr);
    assert!(msg.contains("does not exist"), "stderr: {msg}");
}

#[test]
fn zsolve_refuses_oscillatory_corner_at_one() {
    let out = run(&["zsolve", "--preset", "oscillatory_7_2", "--c", "0", "--b", "0"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn beta_reports_floor_above_f1_minus_c() {
    let out = run(&["beta", "--preset", "remark_6_2", "--c", "1", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let row = &v["rows"][0];
    let beta = row["beta"].as_f64().unwrap();
    let floor = row["floor_f1_minus_c"].as_f64().unwrap();
    assert_eq!(floor, -1.5);
    assert!(beta >= floor && beta < 0.0);
}

#[test]
fn beta_refuses_subcritical_speed() {
    let out = run(&["beta", "--preset", "fisher", "--c", "1"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn zsolve_writes_full_precision_csv() {
    let dir = std::env::temp_dir().join("fronts_cli_zsolve_out");
    let _ = std::fs::remove_dir_all(&dir);
    let out = run(&[
        "zsolve", "--preset", "remark_6_2", "--c", "0", "--b", "0", "--out",
        dir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(dir.join("zsolve.csv")).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "phi,z,dz");
    let first = lines.next().unwrap();
    // 17 significant digits per field
    for field in first.split(',') {
        let mantissa = field.trim_start_matches('-');
        let digits: usize = mantissa
            .chars()
            .take_while(|c| *c != 'e')
            .filter(|c| c.is_ascii_digit())
            .count();
        assert_eq!(digits, 17, "field {field}");
    }
}

#[test]
fn profile_emits_classification() {
    let out = run(&["profile", "--preset", "remark_9_3_model1", "--c", "0", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["kind_at_zero"], "sharp");
    let xi0 = v["xi0"].as_f64().unwrap();
    assert!((xi0 - std::f64::consts::LN_2).abs() < 1e-6);
}

#[test]
fn oracle_regression_suite_passes() {
    let out = run(&["oracle", "--suite", "regression", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert!(v["baselines"].as_array().unwrap().len() >= 7);
}

#[test]
fn unknown_preset_exits_two() {
    let out = run(&["validate", "--preset", "nonexistent"]);
    assert_eq!(out.status.code(), Some(2));
}
