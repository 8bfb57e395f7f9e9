//! End-to-end contract tests for the `tripower` binary: worked examples,
//! exit codes, config-file precedence, and the fixed CSV/JSON schemas.

use std::path::PathBuf;
use std::process::{Command, Output};

fn tripower(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tripower")).args(args).output().expect("binary executes")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("terminated normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn json_line(out: &Output) -> serde_json::Value {
    let text = stdout(out);
    let line = text.lines().next().expect("at least one output line");
    serde_json::from_str(line).expect("valid JSON line")
}

fn temp_path(tag: &str) -> PathBuf {
    std::env::temp_dir().join(format!("tripower-cli-test-{}-{tag}", std::process::id()))
}

#[test]
fn classify_matches_the_worked_example() {
    let out = tripower(&[
        "--json", "classify", "-a", "0.125", "-b", "1", "-c", "1", "-p", "1", "-q", "2", "-r", "3",
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let v = json_line(&out);
    assert_eq!(v["kind"], "classification");
    assert_eq!(v["case"], "a");
    assert_eq!(v["threshold"], 0.25);
    assert_eq!(v["turning_point"], 0.5);
    let roots: Vec<f64> =
        v["roots"].as_array().expect("roots array").iter().map(|x| x.as_f64().unwrap()).collect();
    // Exact quadratic roots of -1/8 + u - u^2.
    let lo = (1.0 - 0.5_f64.sqrt()) / 2.0;
    let hi = (1.0 + 0.5_f64.sqrt()) / 2.0;
    assert_eq!(roots.len(), 2);
    assert!((roots[0] - lo).abs() <= 1e-9 * lo, "root {} vs {lo}", roots[0]);
    assert!((roots[1] - hi).abs() <= 1e-9 * hi, "root {} vs {hi}", roots[1]);
}

#[test]
fn classify_reports_the_boundary_double_root() {
    let out = tripower(&[
        "classify", "-a", "0.25", "-b", "1", "-c", "1", "-p", "1", "-q", "2", "-r", "3",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("case (b)"), "got: {text}");
    assert!(text.contains("double root at 0.5"), "got: {text}");
}

#[test]
fn invalid_exponent_order_is_a_usage_error() {
    let out =
        tripower(&["classify", "-a", "1", "-b", "1", "-c", "1", "-p", "3", "-q", "2", "-r", "1"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("p < q < r"), "got: {}", stderr(&out));
}

#[test]
fn tilde_matches_the_hand_mapped_instances() {
    let out = tripower(&[
        "--json", "tilde", "-a", "1", "-b", "1", "-c", "1", "-p", "1", "-q", "2", "-r", "3",
    ]);
    assert_eq!(code(&out), 0);
    let v = json_line(&out);
    assert_eq!(v["kind"], "tilde");
    for (key, want) in [
        ("tilde_a", 1.0),
        ("tilde_b", 4.0),
        ("tilde_c", 1.0),
        ("tilde_p", 2.0),
        ("tilde_q", 3.0),
        ("tilde_r", 4.0),
    ] {
        assert_eq!(v[key].as_f64().unwrap(), want, "{key}");
    }
    // a = 1 sits above the threshold 1/4, so f is case (c) and the image
    // flips to case (a).
    assert_eq!(v["case"], "c");
    assert_eq!(v["tilde_case"], "a");

    let out = tripower(&[
        "--json", "tilde", "-a", "2", "-b", "3", "-c", "5", "-p", "1", "-q", "2", "-r", "4",
    ]);
    let v = json_line(&out);
    for (key, want) in [
        ("tilde_a", 6.0),
        ("tilde_b", 90.0),
        ("tilde_c", 60.0),
        ("tilde_p", 2.0),
        ("tilde_q", 4.0),
        ("tilde_r", 5.0),
    ] {
        assert_eq!(v[key].as_f64().unwrap(), want, "{key}");
    }
}

#[test]
fn tilde_rejects_shallow_exponents() {
    // p + q <= 1 leaves the transform outside the triple-power family.
    let out =
        tripower(&["tilde", "-a", "1", "-b", "1", "-c", "1", "-p", "0.3", "-q", "0.5", "-r", "2"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("p + q"), "got: {}", stderr(&out));
}

#[test]
fn thresholds_match_the_closed_forms() {
    let out = tripower(&["--json", "thresholds", "-p", "3", "-q", "5"]);
    assert_eq!(code(&out), 0);
    let v = json_line(&out);
    assert_eq!(v["kind"], "thresholds");
    assert_eq!(v["omega"].as_f64().unwrap(), 0.1875);
    assert_eq!(v["eta"].as_f64().unwrap(), 0.25);

    let out = tripower(&["--json", "thresholds", "-p", "2", "-q", "3"]);
    let v = json_line(&out);
    let omega = v["omega"].as_f64().unwrap();
    assert!((omega - 2.0 / 9.0).abs() <= 1e-15 * omega);
    assert_eq!(v["eta"].as_f64().unwrap(), 0.25);

    let out = tripower(&["thresholds", "-p", "2", "-q", "2"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn missing_required_values_are_usage_errors() {
    let out = tripower(&["thresholds", "-p", "3"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("missing required value for `q`"), "got: {}", stderr(&out));
}

#[test]
fn verify_requires_at_least_one_trial() {
    let out = tripower(&["verify", "--trials", "0"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("trial"), "got: {}", stderr(&out));
}

#[test]
fn verify_writes_the_report_file() {
    let path = temp_path("report.json");
    let out = tripower(&["verify", "--trials", "20", "--report", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let report = std::fs::read_to_string(&path).expect("report written");
    let v: serde_json::Value = serde_json::from_str(report.trim()).expect("JSON report");
    assert_eq!(v["kind"], "verify-summary");
    assert_eq!(v["passed"], true);
    std::fs::remove_file(path).ok();
}

#[test]
fn csv_flag_is_rejected_for_scalar_commands() {
    for cmd in [
        vec!["classify", "-a", "1", "-b", "1", "-c", "1", "-p", "1", "-q", "2", "-r", "3"],
        vec!["thresholds", "-p", "3", "-q", "5"],
        vec!["verify", "--trials", "5"],
    ] {
        let mut args = vec!["--csv", "/tmp/rejected.csv"];
        args.extend(cmd.iter().copied());
        let out = tripower(&args);
        assert_eq!(code(&out), 2, "command {:?} accepted --csv", cmd[0]);
        assert!(stderr(&out).contains("--csv"), "got: {}", stderr(&out));
    }
}

#[test]
fn shoot_reports_not_found_above_the_existence_threshold() {
    let out = tripower(&["shoot", "-n", "3", "--omega", "0.21", "-p", "3", "-q", "5"]);
    assert_eq!(code(&out), 0, "not-found is data, not an error");
    assert!(stdout(&out).contains("NOT FOUND (F <= 0 on u > 0)"), "got: {}", stdout(&out));
}

#[test]
fn shoot_conservative_amplitude_matches_the_energy_zero() {
    let out = tripower(&["--json", "shoot", "-n", "1", "--omega", "0.1", "-p", "3", "-q", "5"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let v = json_line(&out);
    assert_eq!(v["kind"], "trajectory");
    assert_eq!(v["found"], true);
    let alpha = v["alpha_star"].as_f64().unwrap();
    // In one dimension the amplitude is the positive zero of
    // F(u) = -0.05 u^2 + u^4/4 - u^6/6: alpha^2 = (1.5 - sqrt(1.05)) / 2.
    let exact = ((1.5 - 1.05_f64.sqrt()) / 2.0).sqrt();
    assert!((alpha - exact).abs() <= 1e-6 * exact, "alpha {alpha} vs {exact}");
    assert_eq!(v["outcome"], "decay");
}

#[test]
fn trajectory_csv_has_the_fixed_schema() {
    let path = temp_path("trajectory.csv");
    let out = tripower(&[
        "shoot",
        "-n",
        "1",
        "--omega",
        "0.1",
        "-p",
        "3",
        "-q",
        "5",
        "--csv",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = std::fs::read_to_string(&path).expect("trajectory written");
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("r,u,u_r,energy"));
    let first: Vec<f64> =
        lines.next().expect("at least one sample").split(',').map(|s| s.parse().unwrap()).collect();
    assert_eq!(first[0], 0.0, "starts at r = 0");
    assert_eq!(first[2], 0.0, "radial derivative vanishes at the origin");
    assert!(first[1] > 0.0, "amplitude is positive");
    std::fs::remove_file(&path).ok();

    // A failed search still writes the header, so downstream parsers see a
    // well-formed (empty) table.
    let out = tripower(&[
        "shoot",
        "-n",
        "3",
        "--omega",
        "0.21",
        "-p",
        "3",
        "-q",
        "5",
        "--csv",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "r,u,u_r,energy\n");
    std::fs::remove_file(path).ok();
}

#[test]
fn sweep_csv_has_the_fixed_schema_and_row_order() {
    let path = temp_path("sweep.csv");
    let out = tripower(&[
        "sweep",
        "-n",
        "3",
        "-p",
        "2",
        "-q",
        "3",
        "--omegas",
        "0.1,0.3",
        "--csv",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = std::fs::read_to_string(&path).expect("sweep written");
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3, "header + one row per omega");
    assert_eq!(lines[0], "omega,omega_threshold,eta_threshold,predicted,found,alpha_star");
    assert!(lines[1].starts_with("0.1,0.2222222222222222,0.25,true,true,0."), "got: {}", lines[1]);
    assert_eq!(lines[2], "0.3,0.2222222222222222,0.25,false,false,");
    std::fs::remove_file(path).ok();
}

#[test]
fn sweep_rejects_omegas_near_the_existence_threshold() {
    let out = tripower(&["sweep", "-n", "3", "-p", "3", "-q", "5", "--omegas", "0.19"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("2%"), "got: {}", stderr(&out));
}

#[test]
fn unwritable_csv_path_is_a_computational_failure() {
    let out = tripower(&[
        "shoot",
        "-n",
        "3",
        "--omega",
        "0.21",
        "-p",
        "3",
        "-q",
        "5",
        "--csv",
        "/nonexistent-directory/out.csv",
    ]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("cannot write CSV file"), "got: {}", stderr(&out));
}

#[test]
fn config_file_supplies_defaults_and_flags_override() {
    let path = temp_path("thresholds.conf");
    std::fs::write(&path, "# experiment bundle\np = 3\nq = 5\njson = true\n").unwrap();
    let cfg = path.to_str().unwrap();

    // Both values and the json switch come from the file.
    let out = tripower(&["thresholds", "--config", cfg]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let v = json_line(&out);
    assert_eq!(v["omega"].as_f64().unwrap(), 0.1875);

    // A command-line flag overrides the file value.
    let out = tripower(&["thresholds", "--config", cfg, "-q", "4"]);
    let v = json_line(&out);
    assert_eq!(v["q"].as_f64().unwrap(), 4.0);
    assert_eq!(
        v["omega"].as_f64().unwrap(),
        tripower::omega_threshold(3.0, 4.0).unwrap(),
        "omega should follow the overridden q"
    );

    std::fs::remove_file(path).ok();
}

#[test]
fn malformed_config_lines_are_usage_errors() {
    let path = temp_path("broken.conf");
    std::fs::write(&path, "p: 3\n").unwrap();
    let out = tripower(&["thresholds", "--config", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("expected `key = value`"), "got: {}", stderr(&out));
    std::fs::remove_file(path).ok();
}

#[test]
fn json_lines_round_trip_at_full_precision() {
    let out = tripower(&[
        "--json", "classify", "-a", "0.125", "-b", "1", "-c", "1", "-p", "1", "-q", "2", "-r", "3",
    ]);
    let text = stdout(&out);
    let line = text.trim_end();
    // Parse -> format -> parse is the identity on every field, so no
    // printed number loses bits.
    let v: serde_json::Value = serde_json::from_str(line).unwrap();
    let reprinted = serde_json::to_string(&v).unwrap();
    let w: serde_json::Value = serde_json::from_str(&reprinted).unwrap();
    assert_eq!(v, w);
    // Spot-check that an irrational-looking value is printed with all the
    // digits its f64 needs (shortest round-trip form).
    let root = v["roots"][0].as_f64().unwrap();
    assert!(line.contains(&format!("{root}")), "roots printed at full precision: {line}");
}
