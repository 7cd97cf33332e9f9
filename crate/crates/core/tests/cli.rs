use std::process::Command;

use serde_json::Value;

fn hopf(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hopf"))
        .args(args)
        .env_remove("HOPF_PRECISION")
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = hopf(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

fn x_values(v: &Value) -> Vec<f64> {
    v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["x"].as_str().unwrap().parse().unwrap())
        .collect()
}

#[test]
fn solve_a2_quarter_points() {
    let v = json(&["solve", "--type", "A2", "--n", "3", "--k", "1", "--r", "2"]);
    let xs = x_values(&v);
    assert_eq!(xs.len(), 2);
    assert!((xs[0] - 0.25).abs() < 1e-15 && (xs[1] - 0.75).abs() < 1e-15);
    assert_eq!(v["config"]["precision_digits"], 30);
    assert!(v["version"].as_str().unwrap().starts_with("0."));
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["passed"] == true));
}

#[test]
fn solve_d_four_rows() {
    let v = json(&["solve", "--type", "D", "--r", "89"]);
    let xs = x_values(&v);
    assert_eq!(xs.len(), 4);
    assert!(xs.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn solve_curve_case() {
    let v = json(&["solve", "--type", "A1", "--n", "1", "--r", "4"]);
    let rows = v["rows"].as_array().unwrap();
    assert!(!rows.is_empty());
    for row in rows {
        let t: f64 = row["t"].as_str().unwrap().parse().unwrap();
        assert!(((2.0 * t).sin().powi(2) - 0.25).abs() < 1e-12);
    }
}

#[test]
fn scan_a1_reaches_four() {
    let v = json(&["scan", "--type", "A1", "--n", "2", "--r-range", "2..30"]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 29);
    assert_eq!(rows[0]["count"], 2);
    for row in rows {
        if row["r"].as_i64().unwrap() >= 17 {
            assert_eq!(row["count"], 4);
            assert_eq!(row["at_least_r_four"], true);
        }
    }
}

#[test]
fn scan_e_thresholds() {
    let v = json(&["scan", "--type", "E", "--r-range", "27..120"]);
    for row in v["rows"].as_array().unwrap() {
        let (r, c) = (row["r"].as_i64().unwrap(), row["count"].as_i64().unwrap());
        assert!(c >= 2);
        if r >= 100 {
            assert_eq!(c, 4);
        }
    }
}

#[test]
fn scan_b_below_thresholds_has_no_flags() {
    let v = json(&["scan", "--type", "B", "--n", "2", "--r-range", "2..10"]);
    for row in v["rows"].as_array().unwrap() {
        assert_eq!(row["at_least_r_two"], false);
        assert_eq!(row["at_least_r_four"], false);
    }
}

#[test]
fn output_is_deterministic() {
    let args = [
        "scan",
        "--type",
        "A2",
        "--n",
        "7",
        "--k",
        "1",
        "--r-range",
        "2..40",
        "--format",
        "csv",
    ];
    let (_, a, _) = hopf(&args);
    let (_, b, _) = hopf(&args);
    assert_eq!(a, b);
    assert!(a.starts_with("r,count,"));
    let args = ["solve", "--type", "C", "--n", "5", "--r", "300"];
    assert_eq!(hopf(&args).1, hopf(&args).1);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("probes.txt");
    let (code, stdout, _) = hopf(&[
        "probes",
        "--type",
        "B",
        "--n",
        "3",
        "--r",
        "200",
        "--format",
        "text",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let text = std::fs::read_to_string(path).unwrap();
    assert!(text.contains("[PASS]"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(
        hopf(&["solve", "--type", "A2", "--n", "3", "--k", "5", "--r", "2"]).0,
        2
    );
    assert_eq!(
        hopf(&[
            "solve",
            "--type",
            "A1",
            "--n",
            "3",
            "--r",
            "2",
            "--precision",
            "10"
        ])
        .0,
        2
    );
    assert_eq!(
        hopf(&["solve", "--type", "A1", "--n", "3", "--r", "2", "--tol", "1e-3"]).0,
        2
    );
    assert_eq!(
        hopf(&["scan", "--type", "A1", "--n", "3", "--r-range", "9..2"]).0,
        2
    );
    assert_eq!(hopf(&["frobnicate"]).0, 2);
}

#[test]
fn precision_env_default() {
    let out = Command::new(env!("CARGO_BIN_EXE_hopf"))
        .args(["solve", "--type", "A1", "--n", "2", "--r", "5"])
        .env("HOPF_PRECISION", "45")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["config"]["precision_digits"], 45);
}

#[test]
fn biharmonic_tables() {
    let v = json(&["biharmonic", "--n", "2", "--p", "1"]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["passed"] == true));

    let v = json(&["biharmonic", "--n", "3", "--p", "2"]);
    let cs: Vec<f64> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["cos_sq_t"].as_str().unwrap().parse().unwrap())
        .collect();
    assert_eq!(cs, vec![0.75, 0.25]);

    let v = json(&[
        "biharmonic",
        "--scan-threshold",
        "--p",
        "1",
        "--n-max",
        "500",
    ]);
    assert_eq!(v["rows"][0]["threshold"], 7);
}

#[test]
fn verify_suites() {
    for suite in ["exact", "trig", "ch-nonexistence"] {
        let v = json(&["verify", "--suite", suite, "--n-max", "8", "--r-max", "6"]);
        let checks = v["checks"].as_array().unwrap();
        assert!(!checks.is_empty());
        assert!(checks.iter().all(|c| c["passed"] == true), "{suite}");
    }
}
