//! Output records and their three renderings: human text, JSON lines, and
//! CSV files. Every numeric field prints through Rust's shortest
//! round-trip float formatting (and serde_json's equivalent), so structured
//! output is byte-deterministic and parses back to the exact value.

use std::io::Write;
use std::path::Path;

use serde::Serialize;
use tripower::shooting::{NotFoundReason, ShootingConfig, SweepRow, Trajectory};
use tripower::verify::VerifyReport;

use crate::CliError;

/// One structured output record per command invocation (or per sweep row).
#[derive(Debug, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Record {
    Classification {
        a: f64,
        b: f64,
        c: f64,
        p: f64,
        q: f64,
        r: f64,
        rel_tol: f64,
        /// Case letter: "a" (positive part), "b" (one double zero),
        /// "c" (negative).
        case: String,
        label: String,
        /// `None` when the value overflows finite range; see `log_threshold`.
        threshold: Option<f64>,
        log_threshold: f64,
        turning_point: Option<f64>,
        roots: Vec<f64>,
    },
    Tilde {
        a: f64,
        b: f64,
        c: f64,
        p: f64,
        q: f64,
        r: f64,
        tilde_a: f64,
        tilde_b: f64,
        tilde_c: f64,
        tilde_p: f64,
        tilde_q: f64,
        tilde_r: f64,
        case: String,
        tilde_case: String,
    },
    Thresholds {
        p: f64,
        q: f64,
        omega: f64,
        eta: f64,
        /// `eta / omega` (> 1: existence is the stronger requirement).
        ratio: f64,
    },
    VerifySummary {
        seed: u64,
        trials: usize,
        passed: bool,
        suites: Vec<SuiteRecord>,
    },
    Trajectory {
        dim: usize,
        omega: f64,
        p: f64,
        q: f64,
        found: bool,
        alpha_star: Option<f64>,
        outcome: Option<String>,
        samples: Option<usize>,
        r_last: Option<f64>,
        energy_residual: Option<f64>,
        reason: Option<String>,
    },
    SweepRow {
        dim: usize,
        p: f64,
        q: f64,
        omega: f64,
        omega_threshold: f64,
        eta_threshold: f64,
        predicted: bool,
        found: bool,
        alpha_star: Option<f64>,
        failure: Option<String>,
    },
}

#[derive(Debug, Serialize)]
pub struct SuiteRecord {
    pub name: String,
    pub checks: usize,
    pub skipped: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl Record {
    pub fn from_verify(report: &VerifyReport) -> Record {
        Record::VerifySummary {
            seed: report.seed,
            trials: report.trials,
            passed: report.passed(),
            suites: report
                .suites
                .iter()
                .map(|s| SuiteRecord {
                    name: s.name.to_string(),
                    checks: s.checks,
                    skipped: s.skipped,
                    failures: s.failures,
                    first_failure: s.first_failure.clone(),
                })
                .collect(),
        }
    }

    pub fn from_sweep_row(dim: usize, p: f64, q: f64, row: &SweepRow<f64>) -> Record {
        Record::SweepRow {
            dim,
            p,
            q,
            omega: row.omega,
            omega_threshold: row.omega_threshold,
            eta_threshold: row.eta_threshold,
            predicted: row.predicted,
            found: row.found,
            alpha_star: row.alpha_star,
            failure: row.failure.clone(),
        }
    }

    /// Serialize as one JSON line.
    pub fn to_json_line(&self) -> Result<String, CliError> {
        serde_json::to_string(self)
            .map_err(|e| CliError::failure(format!("cannot serialize record: {e}")))
    }

    /// Render the human-readable text block (newline-terminated).
    pub fn render_human(&self) -> String {
        use std::fmt::Write;
        let mut s = String::new();
        match self {
            Record::Classification {
                case,
                label,
                threshold,
                log_threshold,
                turning_point,
                roots,
                ..
            } => {
                let _ = writeln!(s, "case ({case}): {label}");
                match threshold {
                    Some(t) => {
                        let _ = writeln!(s, "threshold      T  = {t}");
                    }
                    None => {
                        let _ = writeln!(s, "threshold      T  = exp({log_threshold}) (overflows)");
                    }
                }
                match turning_point {
                    Some(u) => {
                        let _ = writeln!(s, "turning point  u* = {u}");
                    }
                    None => {
                        let _ = writeln!(s, "turning point  u* = (overflows)");
                    }
                }
                match roots.len() {
                    0 => {
                        let _ = writeln!(s, "roots: none (f < 0 on u > 0)");
                    }
                    1 => {
                        let _ = writeln!(s, "double root at {}", roots[0]);
                    }
                    _ => {
                        let _ = writeln!(
                            s,
                            "roots: {}",
                            roots.iter().map(f64::to_string).collect::<Vec<_>>().join(", ")
                        );
                    }
                }
            }
            Record::Tilde {
                tilde_a,
                tilde_b,
                tilde_c,
                tilde_p,
                tilde_q,
                tilde_r,
                case,
                tilde_case,
                ..
            } => {
                let _ = writeln!(
                    s,
                    "tilde(f): coefficients ({tilde_a}, {tilde_b}, {tilde_c}), \
                     exponents ({tilde_p}, {tilde_q}, {tilde_r})"
                );
                let _ = writeln!(s, "f is case ({case}); tilde(f) is case ({tilde_case})");
            }
            Record::Thresholds { p, q, omega, eta, ratio } => {
                let _ = writeln!(s, "omega_({p},{q}) = {omega}   (existence: omega < omega_pq)");
                let _ = writeln!(s, "eta_({p},{q})   = {eta}   (uniqueness: omega < eta_pq)");
                let _ = writeln!(s, "eta/omega     = {ratio}");
            }
            Record::VerifySummary { seed, trials, passed, suites } => {
                for sr in suites {
                    let status = if sr.failures == 0 { "pass" } else { "FAIL" };
                    let _ = writeln!(
                        s,
                        "{status}  {:<26} {:>6} checks  {:>4} skipped  {:>3} failures",
                        sr.name, sr.checks, sr.skipped, sr.failures
                    );
                }
                let _ = writeln!(
                    s,
                    "verify: seed {seed}, trials {trials}: {}",
                    if *passed { "all suites passed" } else { "FAILED" }
                );
            }
            Record::Trajectory {
                found,
                alpha_star,
                outcome,
                samples,
                r_last,
                energy_residual,
                reason,
                ..
            } => {
                if *found {
                    let _ =
                        writeln!(s, "alpha_star = {}", alpha_star.expect("found implies alpha"));
                    if let (Some(o), Some(k), Some(r)) = (outcome, samples, r_last) {
                        let _ = writeln!(s, "trajectory: {o} after {k} samples, r_last = {r}");
                    }
                    if let Some(res) = energy_residual {
                        let _ = writeln!(s, "energy residual at r_last = {res}");
                    }
                } else {
                    let _ = writeln!(
                        s,
                        "NOT FOUND ({})",
                        reason.as_deref().unwrap_or("no ground state")
                    );
                }
            }
            Record::SweepRow {
                omega,
                omega_threshold,
                eta_threshold,
                predicted,
                found,
                alpha_star,
                failure,
                ..
            } => {
                let alpha = alpha_star.map(|a| a.to_string()).unwrap_or_default();
                let note = failure.as_deref().unwrap_or("");
                let _ = writeln!(
                    s,
                    "omega {omega:<22} omega_pq {omega_threshold:<22} eta_pq {eta_threshold:<22} \
                     predicted {predicted:<5} found {found:<5} alpha {alpha} {note}"
                );
            }
        }
        s
    }
}

/// Write a trajectory profile as `r,u,u_r,energy` rows. The energy column
/// uses the even extension `F(|u|)`, the Lyapunov function the integrator
/// dissipates, so the final sample of a crossing trajectory (u < 0) still
/// carries a meaningful value.
pub fn write_trajectory_csv(
    path: &Path,
    cfg: &ShootingConfig<f64>,
    trajectory: Option<&Trajectory<f64>>,
) -> Result<(), CliError> {
    let big_f = cfg.f.antiderivative();
    let mut out = csv_file(path)?;
    let mut emit = |line: &str| -> Result<(), CliError> {
        writeln!(out, "{line}").map_err(|e| csv_io_error(path, e))
    };
    emit("r,u,u_r,energy")?;
    if let Some(trajectory) = trajectory {
        for s in &trajectory.samples {
            let potential = big_f
                .eval(s.u.abs())
                .map_err(|e| CliError::failure(format!("energy evaluation failed: {e}")))?;
            let energy = s.u_r * s.u_r / 2.0 + potential;
            emit(&format!("{},{},{},{}", s.r, s.u, s.u_r, energy))?;
        }
    }
    Ok(())
}

/// Write sweep rows with the fixed column order
/// `omega,omega_threshold,eta_threshold,predicted,found,alpha_star`
/// (alpha_star empty when no ground state was found).
pub fn write_sweep_csv(path: &Path, rows: &[SweepRow<f64>]) -> Result<(), CliError> {
    let mut out = csv_file(path)?;
    let mut emit = |line: &str| -> Result<(), CliError> {
        writeln!(out, "{line}").map_err(|e| csv_io_error(path, e))
    };
    emit("omega,omega_threshold,eta_threshold,predicted,found,alpha_star")?;
    for row in rows {
        let alpha = row.alpha_star.map(|a| a.to_string()).unwrap_or_default();
        emit(&format!(
            "{},{},{},{},{},{}",
            row.omega, row.omega_threshold, row.eta_threshold, row.predicted, row.found, alpha
        ))?;
    }
    Ok(())
}

fn csv_file(path: &Path) -> Result<std::io::BufWriter<std::fs::File>, CliError> {
    std::fs::File::create(path).map(std::io::BufWriter::new).map_err(|e| csv_io_error(path, e))
}

fn csv_io_error(path: &Path, e: std::io::Error) -> CliError {
    CliError::failure(format!("cannot write CSV file {}: {e}", path.display()))
}

/// The `reason` string for a failed ground-state search.
pub fn not_found_reason(reason: &NotFoundReason) -> String {
    reason.describe().to_string()
}
