//! `tripower` — classify triple-power nonlinearities, apply the tilde
//! transform, evaluate double-power thresholds, run the cross-validation
//! suites, and shoot for radial ground states.
//!
//! Exit codes: `0` success (a NOT FOUND ground-state search is data, not an
//! error), `1` computational or verification failure, `2` usage or domain
//! error.

mod config;
mod records;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use tripower::oracle::{find_roots, ScanConfig};
use tripower::shooting::{
    find_ground_state, sweep_omega, GroundStateResult, ShootingConfig, SweepSettings,
};
use tripower::{eta_threshold, omega_threshold, DoublePower64, TriplePower64};

use config::FileConfig;
use records::Record;

const DEFAULT_REL_TOL: f64 = 1e-12;
const DEFAULT_SEED: u64 = 42;
const DEFAULT_TRIALS: usize = 1000;

/// Error carrying the process exit code: `1` for computational or
/// verification failures, `2` for usage and domain errors.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError { code: 2, message: message.into() }
    }

    pub fn failure(message: impl Into<String>) -> Self {
        CliError { code: 1, message: message.into() }
    }
}

impl From<tripower::Error> for CliError {
    fn from(e: tripower::Error) -> Self {
        match e {
            tripower::Error::Domain(_) => CliError::usage(e.to_string()),
            tripower::Error::Integration { .. } => CliError::failure(e.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "tripower",
    version,
    about = "Triple-power trichotomy, tilde transform, thresholds, and radial shooting"
)]
struct Cli {
    /// Emit one JSON object per result line instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,

    /// Write tabular output to a CSV file (shoot: trajectory profile;
    /// sweep: one row per omega).
    #[arg(long, global = true, value_name = "PATH")]
    csv: Option<PathBuf>,

    /// `key = value` file supplying defaults for flags left unset.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    /// Relative tolerance for deciding the boundary case [default: 1e-12].
    #[arg(long, global = true, value_name = "TOL")]
    rel_tol: Option<f64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify f(u) = -a*u^p + b*u^q - c*u^r on u > 0: positive part (a),
    /// one double zero (b), or negative (c).
    Classify(PowerArgs),
    /// Apply the tilde transform and classify the image (cases swap a <-> c).
    Tilde(PowerArgs),
    /// Existence and uniqueness thresholds for -omega*u + u^p - u^q.
    Thresholds {
        /// Lower exponent (requires 1 < p < q).
        #[arg(short, long)]
        p: Option<f64>,
        /// Upper exponent.
        #[arg(short, long)]
        q: Option<f64>,
    },
    /// Run the seeded cross-validation suites (closed forms vs oracles).
    Verify {
        /// Seed for the deterministic generator [default: 42].
        #[arg(long)]
        seed: Option<u64>,
        /// Instances per large suite; must be >= 1 [default: 1000].
        #[arg(long)]
        trials: Option<usize>,
        /// Also write the JSON summary record to this file.
        #[arg(long, value_name = "PATH")]
        report: Option<PathBuf>,
    },
    /// Locate a radial ground state of u'' + (n-1)/r u' - omega*u + u^p - u^q = 0.
    Shoot {
        /// Space dimension n >= 1.
        #[arg(short = 'n', long = "dim")]
        dim: Option<usize>,
        /// Frequency omega > 0.
        #[arg(long)]
        omega: Option<f64>,
        /// Lower exponent.
        #[arg(short, long)]
        p: Option<f64>,
        /// Upper exponent.
        #[arg(short, long)]
        q: Option<f64>,
        /// RK4 step size [default: 1e-3].
        #[arg(long)]
        step: Option<f64>,
        /// Integration horizon [default: 200/sqrt(omega)].
        #[arg(long)]
        r_max: Option<f64>,
    },
    /// Shoot across a list of omega values and compare against the
    /// closed-form existence threshold.
    Sweep {
        /// Space dimension n >= 1.
        #[arg(short = 'n', long = "dim")]
        dim: Option<usize>,
        /// Comma-separated omega list, e.g. 0.05,0.10,0.15.
        #[arg(long, value_delimiter = ',')]
        omegas: Option<Vec<f64>>,
        /// Lower exponent.
        #[arg(short, long)]
        p: Option<f64>,
        /// Upper exponent.
        #[arg(short, long)]
        q: Option<f64>,
        /// RK4 step size [default: 1e-3].
        #[arg(long)]
        step: Option<f64>,
        /// Integration horizon [default: 200/sqrt(omega) per row].
        #[arg(long)]
        r_max: Option<f64>,
    },
}

/// The six parameters of a triple-power function.
#[derive(Debug, Args)]
struct PowerArgs {
    #[arg(short, long)]
    a: Option<f64>,
    #[arg(short, long)]
    b: Option<f64>,
    #[arg(short, long)]
    c: Option<f64>,
    #[arg(short, long)]
    p: Option<f64>,
    #[arg(short, long)]
    q: Option<f64>,
    #[arg(short, long)]
    r: Option<f64>,
}

impl PowerArgs {
    fn build(&self, file: &FileConfig) -> Result<TriplePower64, CliError> {
        let a = config::require("a", self.a, file.get("a"))?;
        let b = config::require("b", self.b, file.get("b"))?;
        let c = config::require("c", self.c, file.get("c"))?;
        let p = config::require("p", self.p, file.get("p"))?;
        let q = config::require("q", self.q, file.get("q"))?;
        let r = config::require("r", self.r, file.get("r"))?;
        Ok(TriplePower64::new(a, b, c, p, q, r)?)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // clap prints its own message; usage errors exit 2, --help/--version 0.
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let file = match &cli.config {
        Some(path) => FileConfig::load(path)?,
        None => FileConfig::default(),
    };
    let json = cli.json || file.get_flag("json");
    let csv: Option<PathBuf> = match cli.csv {
        Some(path) => Some(path),
        None => file.get("csv")?,
    };
    let rel_tol = config::resolve(cli.rel_tol, file.get("rel-tol"), DEFAULT_REL_TOL)?;

    match cli.command {
        Command::Classify(args) => {
            reject_csv(csv.as_deref(), "classify")?;
            cmd_classify(&args, &file, rel_tol, json)
        }
        Command::Tilde(args) => {
            reject_csv(csv.as_deref(), "tilde")?;
            cmd_tilde(&args, &file, rel_tol, json)
        }
        Command::Thresholds { p, q } => {
            reject_csv(csv.as_deref(), "thresholds")?;
            cmd_thresholds(p, q, &file, json)
        }
        Command::Verify { seed, trials, report } => {
            reject_csv(csv.as_deref(), "verify")?;
            cmd_verify(seed, trials, report, &file, json)
        }
        Command::Shoot { dim, omega, p, q, step, r_max } => {
            let cfg = shooting_config(dim, omega, p, q, step, r_max, &file)?;
            cmd_shoot(&cfg, json, csv.as_deref())
        }
        Command::Sweep { dim, omegas, p, q, step, r_max } => {
            cmd_sweep(dim, omegas, p, q, step, r_max, &file, json, csv.as_deref())
        }
    }
}

fn reject_csv(csv: Option<&Path>, cmd: &str) -> Result<(), CliError> {
    match csv {
        Some(_) => Err(CliError::usage(format!(
            "--csv does not apply to `{cmd}`; it writes shoot trajectories and sweep tables"
        ))),
        None => Ok(()),
    }
}

fn emit(record: &Record, json: bool) -> Result<(), CliError> {
    let text = if json { format!("{}\n", record.to_json_line()?) } else { record.render_human() };
    write_stdout(&text)
}

/// Write to stdout, treating a closed pipe (`... | head`) as a clean exit.
fn write_stdout(text: &str) -> Result<(), CliError> {
    use std::io::Write;
    match std::io::stdout().lock().write_all(text.as_bytes()) {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => std::process::exit(0),
        Err(e) => Err(CliError::failure(format!("cannot write to stdout: {e}"))),
    }
}

fn finite(x: f64) -> Option<f64> {
    x.is_finite().then_some(x)
}

fn cmd_classify(
    args: &PowerArgs,
    file: &FileConfig,
    rel_tol: f64,
    json: bool,
) -> Result<(), CliError> {
    let f = args.build(file)?;
    let case = f.classify(rel_tol)?;
    let roots = find_roots(&f, &ScanConfig::default())?;
    let (p, q, r) = f.exponents();
    let record = Record::Classification {
        a: f.a(),
        b: f.b(),
        c: f.c(),
        p,
        q,
        r,
        rel_tol,
        case: case.letter().to_string(),
        label: case.describe().to_string(),
        threshold: finite(f.threshold()),
        log_threshold: f.log_threshold(),
        turning_point: finite(f.turning_point()),
        roots: roots.values(),
    };
    emit(&record, json)
}

fn cmd_tilde(
    args: &PowerArgs,
    file: &FileConfig,
    rel_tol: f64,
    json: bool,
) -> Result<(), CliError> {
    let f = args.build(file)?;
    let g = f.tilde()?;
    let case = f.classify(rel_tol)?;
    let tilde_case = g.classify(rel_tol)?;
    let (p, q, r) = f.exponents();
    let (ta, tb, tc) = g.coefficients();
    let (tp, tq, tr) = g.exponents();
    let record = Record::Tilde {
        a: f.a(),
        b: f.b(),
        c: f.c(),
        p,
        q,
        r,
        tilde_a: ta,
        tilde_b: tb,
        tilde_c: tc,
        tilde_p: tp,
        tilde_q: tq,
        tilde_r: tr,
        case: case.letter().to_string(),
        tilde_case: tilde_case.letter().to_string(),
    };
    emit(&record, json)
}

fn cmd_thresholds(
    p: Option<f64>,
    q: Option<f64>,
    file: &FileConfig,
    json: bool,
) -> Result<(), CliError> {
    let p = config::require("p", p, file.get("p"))?;
    let q = config::require("q", q, file.get("q"))?;
    let omega = omega_threshold(p, q)?;
    let eta = eta_threshold(p, q)?;
    let record = Record::Thresholds { p, q, omega, eta, ratio: eta / omega };
    emit(&record, json)
}

fn cmd_verify(
    seed: Option<u64>,
    trials: Option<usize>,
    report_path: Option<PathBuf>,
    file: &FileConfig,
    json: bool,
) -> Result<(), CliError> {
    let seed = config::resolve(seed, file.get("seed"), DEFAULT_SEED)?;
    let trials = config::resolve(trials, file.get("trials"), DEFAULT_TRIALS)?;
    let report_path: Option<PathBuf> = match report_path {
        Some(path) => Some(path),
        None => file.get("report")?,
    };

    let report = tripower::verify::run(seed, trials)?;
    let record = Record::from_verify(&report);
    emit(&record, json)?;
    if let Some(path) = &report_path {
        std::fs::write(path, format!("{}\n", record.to_json_line()?)).map_err(|e| {
            CliError::failure(format!("cannot write report file {}: {e}", path.display()))
        })?;
    }
    if let Some(suite) = report.suites.iter().find(|s| s.failures > 0) {
        return Err(CliError::failure(format!(
            "verify failed: suite `{}`: {}",
            suite.name,
            suite.first_failure.as_deref().unwrap_or("no counterexample recorded")
        )));
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn shooting_config(
    dim: Option<usize>,
    omega: Option<f64>,
    p: Option<f64>,
    q: Option<f64>,
    step: Option<f64>,
    r_max: Option<f64>,
    file: &FileConfig,
) -> Result<ShootingConfig<f64>, CliError> {
    let dim = config::require("dim", dim, file.get("dim"))?;
    let omega = config::require("omega", omega, file.get("omega"))?;
    let p = config::require("p", p, file.get("p"))?;
    let q = config::require("q", q, file.get("q"))?;
    let g = DoublePower64::new(omega, p, q)?;
    let defaults = ShootingConfig::for_double_power(dim, &g)?;
    let step = config::resolve(step, file.get("step"), defaults.step)?;
    let r_max = config::resolve(r_max, file.get("r-max"), defaults.r_max)?;
    // Rebuild through the validating constructor so overrides are checked.
    Ok(ShootingConfig::new(dim, defaults.f, r_max, step, defaults.decay_tol, defaults.alpha_tol)?)
}

fn cmd_shoot(cfg: &ShootingConfig<f64>, json: bool, csv: Option<&Path>) -> Result<(), CliError> {
    let g = double_power_of(cfg)?;
    let (dim, omega, p, q) = (cfg.dim, g.omega(), g.p(), g.q());
    let result = find_ground_state(cfg)?;
    let (record, trajectory) = match &result {
        GroundStateResult::Found(gs) => {
            let last = gs.trajectory.last();
            (
                Record::Trajectory {
                    dim,
                    omega,
                    p,
                    q,
                    found: true,
                    alpha_star: Some(gs.alpha_star),
                    outcome: Some(gs.trajectory.outcome.label().to_string()),
                    samples: Some(gs.trajectory.samples.len()),
                    r_last: Some(last.r),
                    energy_residual: finite(gs.energy_residual),
                    reason: None,
                },
                Some(&gs.trajectory),
            )
        }
        GroundStateResult::NotFound(reason) => (
            Record::Trajectory {
                dim,
                omega,
                p,
                q,
                found: false,
                alpha_star: None,
                outcome: None,
                samples: None,
                r_last: None,
                energy_residual: None,
                reason: Some(records::not_found_reason(reason)),
            },
            None,
        ),
    };
    emit(&record, json)?;
    if let Some(path) = csv {
        records::write_trajectory_csv(path, cfg, trajectory)?;
    }
    Ok(())
}

/// Recover the double-power view (ω, p, q) from the shooting configuration's
/// triple-power nonlinearity -ω·u + u^p - u^q.
fn double_power_of(cfg: &ShootingConfig<f64>) -> Result<DoublePower64, CliError> {
    let (_, q, r) = cfg.f.exponents();
    Ok(DoublePower64::new(cfg.f.a(), q, r)?)
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    dim: Option<usize>,
    omegas: Option<Vec<f64>>,
    p: Option<f64>,
    q: Option<f64>,
    step: Option<f64>,
    r_max: Option<f64>,
    file: &FileConfig,
    json: bool,
    csv: Option<&Path>,
) -> Result<(), CliError> {
    let dim = config::require("dim", dim, file.get("dim"))?;
    let p = config::require("p", p, file.get("p"))?;
    let q = config::require("q", q, file.get("q"))?;
    let omegas = match omegas {
        Some(list) => list,
        None => parse_omega_list(&config::require::<String>("omegas", None, file.get("omegas"))?)?,
    };
    if omegas.is_empty() {
        return Err(CliError::usage("`omegas` must list at least one value".to_string()));
    }

    let mut settings = SweepSettings::default();
    settings.step = config::resolve(step, file.get("step"), settings.step)?;
    settings.r_max = match r_max {
        Some(r) => Some(r),
        None => file.get("r-max")?,
    };

    let rows = sweep_omega(dim, p, q, &omegas, &settings)?;
    for row in &rows {
        emit(&Record::from_sweep_row(dim, p, q, row), json)?;
    }
    if let Some(path) = csv {
        records::write_sweep_csv(path, &rows)?;
    }
    if let Some(row) = rows.iter().find(|r| r.failure.is_some()) {
        return Err(CliError::failure(format!(
            "sweep row omega = {}: {}",
            row.omega,
            row.failure.as_deref().unwrap_or("unknown failure")
        )));
    }
    Ok(())
}

fn parse_omega_list(raw: &str) -> Result<Vec<f64>, CliError> {
    raw.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<f64>().map_err(|e| {
                CliError::usage(format!("config key `omegas`: cannot parse `{s}`: {e}"))
            })
        })
        .collect()
}
