use std::f64::consts::PI;
use std::process::Command;

use clap::Parser;
use quartic_cli::{run, Cli, Outcome};
use quartic_core::exact::{d_coeff, d_coeff_oracle};
use serde_json::Value;

fn invoke(args: &[&str]) -> Outcome {
    let mut full = vec!["quartic", "--no-timestamp"];
    full.extend_from_slice(args);
    run(&Cli::try_parse_from(full).expect("valid arguments"))
}

fn json(args: &[&str]) -> (Value, i32) {
    let out = invoke(args);
    let v: Value = serde_json::from_str(&out.stdout).unwrap_or(Value::Null);
    (v, out.exit_code)
}

fn float_value(v: &Value) -> f64 {
    v["value"].as_f64().expect("numeric value")
}

#[test]
fn quartic_closed_is_exact() {
    let (v, code) = json(&["quartic", "--a", "1", "--m", "0"]);
    assert_eq!(code, 0);
    assert_eq!(v["value"], "1/4·π");
    assert_eq!(v["schemaVersion"], 1);
}

#[test]
fn quartic_routes_agree() {
    for (a, m) in [("1", "0"), ("0.5", "3"), ("10", "6")] {
        let values: Vec<f64> = ["closed", "hyper", "landen", "quadrature"]
            .iter()
            .map(|method| {
                let (v, code) =
                    json(&["--float", "quartic", "--a", a, "--m", m, "--method", method]);
                assert_eq!(code, 0);
                float_value(&v)
            })
            .collect();
        for x in &values {
            assert!(((x - values[0]) / values[0]).abs() < 1e-10, "{values:?}");
        }
    }
    let (v, _) = json(&[
        "--float",
        "quartic",
        "--a",
        "1",
        "--m",
        "0",
        "--method",
        "quadrature",
    ]);
    assert!((float_value(&v) - PI / 4.0).abs() < 1e-12);
}

#[test]
fn quartic_m5_coefficients() {
    let (v, code) = json(&["quartic", "--a", "0.5", "--m", "5"]);
    assert_eq!(code, 0);
    let coeffs: Vec<&str> = v["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap())
        .collect();
    assert_eq!(
        coeffs,
        ["4389/256", "8589/128", "7161/64", "777/8", "693/16", "63/8"]
    );
    // 2(a + 1) = 3 is not a square, so the value is a float
    assert!(v["value"].is_f64());
}

#[test]
fn quartic_domain_error() {
    let out = invoke(&["quartic", "--a", "-1", "--m", "2"]);
    assert_eq!(out.exit_code, 2);
    assert!(out.stdout.is_empty());
    assert!(out.stderr.contains("domain"));
    assert_eq!(invoke(&["quartic", "--a", "x", "--m", "2"]).exit_code, 2);
}

#[test]
fn table_csv() {
    let out = invoke(&["--format", "csv", "table", "--m-max", "5"]);
    assert_eq!(out.exit_code, 0);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines[0], "m,d_0,d_1,d_2,d_3,d_4,d_5");
    assert_eq!(lines[6], "5,4389/256,8589/128,7161/64,777/8,693/16,63/8");
    let out = invoke(&["--format", "csv", "table", "--m-max", "0"]);
    assert_eq!(out.stdout, "m,d_0\n0,1\n");
}

#[test]
fn table_m12_matches_oracle() {
    let (v, code) = json(&["table", "--m-max", "12"]);
    assert_eq!(code, 0);
    for row in v["table"].as_array().unwrap() {
        let m = row["m"].as_u64().unwrap() as u32;
        for (l, d) in row["d"].as_array().unwrap().iter().enumerate() {
            let oracle = d_coeff_oracle(m, l as u32).unwrap();
            assert_eq!(d.as_str().unwrap(), oracle.to_string());
            assert_eq!(d_coeff(m, l as u32).unwrap(), oracle);
            assert!(!d.as_str().unwrap().starts_with('-'));
        }
    }
}

#[test]
fn landen_variants() {
    let (v, code) = json(&["landen", "quad2", "1", "1", "1"]);
    assert_eq!(code, 0);
    assert!((float_value(&v) - 2.0 * PI / 3f64.sqrt()).abs() < 1e-12);
    let order = v["trace"]["estimatedOrder"].as_f64().unwrap();
    assert!((2.7..=3.3).contains(&order));

    let (v, code) = json(&["landen", "agm", "1", "1"]);
    assert_eq!(code, 0);
    assert_eq!(float_value(&v), 1.0);
    assert_eq!(v["trace"]["iterations"], 0);

    let (v, code) = json(&["landen", "deg6", "3", "3", "1", "2", "1"]);
    assert_eq!(code, 0);
    assert!((float_value(&v) - PI / 2.0).abs() < 1e-15);

    let (v, code) = json(&["landen", "deg6", "4", "5", "1", "1", "1"]);
    assert_eq!(code, 0);
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["pass"] == true));
}

#[test]
fn printed_d_map_fails_checks() {
    let (v, code) = json(&["landen", "deg6", "3", "3", "1", "2", "1", "--printed-d-map"]);
    assert_eq!(code, 1);
    let fixed = &v["checks"][0];
    assert_eq!(fixed["pass"], false);
    assert_eq!(fixed["residual"].as_f64().unwrap(), 0.125);
    let (v, code) = json(&["landen", "deg6", "4", "5", "1", "1", "1", "--printed-d-map"]);
    assert_eq!(code, 1);
    assert_eq!(v["checks"][1]["pass"], false);
}

#[test]
fn landen_usage_and_divergence() {
    let out = invoke(&["landen", "quad2", "1", "1"]);
    assert_eq!(out.exit_code, 2);
    let out = invoke(&["landen", "quad2", "1", "3", "1"]);
    assert_eq!(out.exit_code, 2);
    // unreachable tolerance: the trace is reported and the exit status is 1
    let (v, code) = json(&["landen", "quad2", "2", "1", "3", "--tol", "1e-300"]);
    assert_eq!(code, 1);
    assert_eq!(v["trace"]["converged"], false);
    assert_eq!(v["trace"]["iterations"], 64);
}

#[test]
fn verify_suites_pass() {
    for suite in ["identities", "convergence", "landen-symbolic"] {
        let (v, code) = json(&["verify", suite]);
        assert_eq!(code, 0, "{suite}: {v}");
        let checks = v["checks"].as_array().unwrap();
        assert!(!checks.is_empty());
        assert!(checks.iter().all(|c| c["pass"] == true));
    }
}

#[test]
fn transform_outputs() {
    let (v, code) = json(&["transform", "--num", "1", "--den", "1,0,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["value"], "(1) / (y^2 + 1)");
    let (v, code) = json(&["transform", "--num", "1", "--den", "1,0,2,0,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["value"], "(1/2) / (y^2 + 1)");
    let out = invoke(&["transform", "--num", "1", "--den", "1,1,1"]);
    assert_eq!(out.exit_code, 2);
    let (v, code) = json(&["transform", "--num", "1", "--den", "1,1,1", "--whole-line"]);
    assert_eq!(code, 0, "{v}");
    let out = invoke(&["transform", "--num", "1", "--den", "-1,0,1"]);
    assert_eq!(out.exit_code, 2);
}

#[test]
fn csv_quotes_fields_with_commas() {
    let out = invoke(&["--format", "csv", "verify", "landen-symbolic"]);
    assert!(out
        .stdout
        .lines()
        .any(|l| l.starts_with("check,\"landen_transform(Q) = Q₁, m ≤ 8\",pass,")));
}

#[test]
fn binary_output_is_deterministic() {
    let bin = env!("CARGO_BIN_EXE_quartic");
    let args = ["--no-timestamp", "landen", "quad2", "2", "1", "3"];
    let first = Command::new(bin).args(args).output().unwrap();
    let second = Command::new(bin).args(args).output().unwrap();
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);

    let stamped = Command::new(bin)
        .args(["table", "--m-max", "1"])
        .output()
        .unwrap();
    assert!(String::from_utf8(stamped.stdout)
        .unwrap()
        .contains("\"timestamp\""));

    let bad = Command::new(bin)
        .args(["quartic", "--bogus"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let failing = Command::new(bin)
        .args(["landen", "deg6", "4", "5", "1", "1", "1", "--printed-d-map"])
        .output()
        .unwrap();
    assert_eq!(failing.status.code(), Some(1));
}
