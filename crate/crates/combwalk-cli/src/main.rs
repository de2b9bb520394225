//! Command-line front end: exact coefficient tables, the verification
//! suites, Monte Carlo estimation, exit times, power-law fits and
//! scaling-limit samples, all with machine-readable output.
//!
//! Exit codes: 0 success, 1 failed checks (or runtime errors), 2 usage
//! errors. Randomized commands default to a fixed seed; thread count
//! comes from `COMB_THREADS` (default: available parallelism).

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;

use combwalk_core::asymptotics::fit_power_law;
use combwalk_core::checks::{self, Suite};
use combwalk_core::genfun::{self, GfParams};
use combwalk_core::oracle::exit::{exit_time_expectation, exit_time_expectation_f64, Norm};
use combwalk_core::scaling::sample_snapshots;
use combwalk_core::simulate::{estimate_quantity, exit_time_estimate, Quantity, WalkConfig};
use combwalk_core::Rational;

use output::{Emitter, Format, Record, Value};

#[derive(Parser)]
#[command(
    name = "combwalk",
    version,
    about = "Exact and Monte Carlo analysis of the random walk on the 2-d comb"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format for records
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write records to this file instead of standard output; a
    /// `.manifest.json` with the full invocation lands next to it
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Master seed for randomized commands
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Exact coefficients of a named generating function
    #[command(after_help = format!("names: {}", genfun::CATALOG_NAMES.join(", ")))]
    Coeffs {
        /// Generating function name (see list below)
        name: String,
        /// Horizontal index (green, psi-two-sided)
        #[arg(long)]
        k: Option<i64>,
        /// Vertical index / endpoint (green, psi-hat, psi-two-sided)
        #[arg(long)]
        l: Option<i64>,
        /// Barrier height (deviation-h, psi-hat, psi-hat-sum, psi-two-sided)
        #[arg(long)]
        h: Option<i64>,
        /// Determinant index (a-det)
        #[arg(long)]
        i: Option<i64>,
        /// Ball radius (theta)
        #[arg(long)]
        radius: Option<i64>,
        /// Truncation order of the series
        #[arg(long, default_value_t = 64)]
        order: usize,
    },
    /// Run a verification suite and report one record per check
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
    },
    /// Run every verification tier (same as `verify all`)
    #[command(alias = "reproduce-paper")]
    Reproduce,
    /// Monte Carlo estimate of one walk statistic
    Simulate {
        /// Steps per walk
        #[arg(long)]
        n: u64,
        /// Number of independent walks
        #[arg(long)]
        walks: u64,
        /// One of: abs_x abs_y dev_x dev_y span_x span_y norm1 norm_inf loops
        #[arg(long)]
        quantity: String,
    },
    /// Expected exit time from a norm ball around the origin
    ExitTime {
        #[arg(long)]
        radius: i64,
        #[arg(long, value_enum)]
        norm: NormArg,
        #[arg(long, value_enum, default_value_t = ExitMode::Exact)]
        mode: ExitMode,
        /// Sample count for --mode simulate
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
    },
    /// Least-squares power-law fit of (n, value) records from a CSV file
    Fit {
        /// CSV file with a header row and columns n,value
        #[arg(long)]
        input: PathBuf,
    },
    /// Rescaled path snapshots (x/n^(1/4), y/n^(1/2), loops/n^(1/2))
    Scaling {
        /// Steps per walk
        #[arg(long)]
        n: u64,
        /// Number of independent walks
        #[arg(long)]
        walks: u64,
        /// Comma-separated snapshot times, each in (0, 1]
        #[arg(long, default_value = "1.0")]
        grid: String,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SuiteArg {
    Exact,
    Montecarlo,
    Scaling,
    All,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum NormArg {
    /// 1-norm (graph distance) ball
    #[value(name = "1")]
    One,
    /// infinity-norm (box) ball
    Inf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExitMode {
    /// exact rational linear solve
    Exact,
    /// float linear solve for large radii
    Float,
    /// Monte Carlo sampling
    Simulate,
}

/// A user-input problem that should exit with the usage code.
#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    anyhow::Error::new(UsageError(msg.into()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(all_passed) => {
            if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            if err.downcast_ref::<UsageError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    let seed = cli.seed.unwrap_or(checks::DEFAULT_SEED);
    match cli.command {
        Command::Coeffs {
            name,
            k,
            l,
            h,
            i,
            radius,
            order,
        } => {
            let params = GfParams { k, l, h, i, radius };
            let entry = genfun::by_name(&name.to_lowercase(), &params, order)
                .map_err(|e| usage(e.to_string()))?;
            let emitter = Emitter::new(cli.format, cli.out, "coeffs", cli.seed);
            let records: Vec<Record> = entry
                .series
                .coeffs()
                .iter()
                .enumerate()
                .map(|(n, c)| coeff_record(&entry.name, entry.variable, n, c))
                .collect();
            emitter.emit(&records)?;
            Ok(true)
        }
        Command::Verify { suite } => {
            let suite = match suite {
                SuiteArg::Exact => Suite::Exact,
                SuiteArg::Montecarlo => Suite::MonteCarlo,
                SuiteArg::Scaling => Suite::Scaling,
                SuiteArg::All => Suite::All,
            };
            run_verify(suite, seed, cli.format, cli.out)
        }
        Command::Reproduce => run_verify(Suite::All, seed, cli.format, cli.out),
        Command::Simulate { n, walks, quantity } => {
            if n == 0 || walks == 0 {
                return Err(usage("simulate needs --n >= 1 and --walks >= 1"));
            }
            let quantity = Quantity::parse(&quantity)
                .ok_or_else(|| usage(format!("unknown quantity '{quantity}'")))?;
            let estimate = estimate_quantity(&WalkConfig::new(n, walks, seed), quantity);
            let emitter = Emitter::new(cli.format, cli.out, "simulate", Some(seed));
            emitter.emit(&[vec![
                ("quantity", Value::Text(quantity.name().to_string())),
                ("n_steps", Value::UInt(n)),
                ("n_walks", Value::UInt(walks)),
                ("seed", Value::UInt(seed)),
                ("mean", Value::Float(estimate.mean)),
                ("stderr", Value::Float(estimate.stderr)),
                ("count", Value::UInt(estimate.count)),
            ]])?;
            Ok(true)
        }
        Command::ExitTime {
            radius,
            norm,
            mode,
            samples,
        } => {
            if radius < 1 {
                return Err(usage("exit-time needs --radius >= 1"));
            }
            let norm_core = match norm {
                NormArg::One => Norm::One,
                NormArg::Inf => Norm::Inf,
            };
            let norm_name = match norm {
                NormArg::One => "1",
                NormArg::Inf => "inf",
            };
            let (value, exact, stderr, count, capped) = match mode {
                ExitMode::Exact => {
                    let t = exit_time_expectation(radius, norm_core);
                    let dec = t.to_f64().context("exit time out of f64 range")?;
                    (dec, fraction(&t), 0.0, 0, 0)
                }
                ExitMode::Float => (
                    exit_time_expectation_f64(radius, norm_core),
                    String::new(),
                    0.0,
                    0,
                    0,
                ),
                ExitMode::Simulate => {
                    let (est, capped) = exit_time_estimate(radius, norm_core, samples, seed);
                    (est.mean, String::new(), est.stderr, est.count, capped)
                }
            };
            let emitter = Emitter::new(cli.format, cli.out, "exit-time", Some(seed));
            emitter.emit(&[vec![
                ("mode", Value::Text(format!("{mode:?}").to_lowercase())),
                ("radius", Value::Int(radius)),
                ("norm", Value::Text(norm_name.to_string())),
                ("value", Value::Float(value)),
                ("exact", Value::Text(exact)),
                ("stderr", Value::Float(stderr)),
                ("samples", Value::UInt(count)),
                ("capped", Value::UInt(capped)),
            ]])?;
            Ok(true)
        }
        Command::Fit { input } => {
            let points = read_points(&input)?;
            let fit = fit_power_law(&points).map_err(|e| usage(e.to_string()))?;
            let emitter = Emitter::new(cli.format, cli.out, "fit", cli.seed);
            emitter.emit(&[vec![
                ("c", Value::Float(fit.c)),
                ("alpha", Value::Float(fit.alpha)),
                ("residual", Value::Float(fit.residual)),
                ("n_min", Value::Float(fit.n_range.0)),
                ("n_max", Value::Float(fit.n_range.1)),
                ("points", Value::UInt(points.len() as u64)),
            ]])?;
            Ok(true)
        }
        Command::Scaling { n, walks, grid } => {
            if n == 0 || walks == 0 {
                return Err(usage("scaling needs --n >= 1 and --walks >= 1"));
            }
            let grid = parse_grid(&grid)?;
            let snapshots = sample_snapshots(n, walks, &grid, seed);
            let emitter = Emitter::new(cli.format, cli.out, "scaling", Some(seed));
            let mut records = Vec::new();
            for (walk, snaps) in snapshots.iter().enumerate() {
                for s in snaps {
                    records.push(vec![
                        ("walk", Value::UInt(walk as u64)),
                        ("t", Value::Float(s.t)),
                        ("x_scaled", Value::Float(s.x_scaled)),
                        ("y_scaled", Value::Float(s.y_scaled)),
                        ("loops_scaled", Value::Float(s.loops_scaled)),
                    ]);
                }
            }
            emitter.emit(&records)?;
            Ok(true)
        }
    }
}

fn run_verify(suite: Suite, seed: u64, format: Format, out: Option<PathBuf>) -> Result<bool> {
    let results = checks::run_suite(suite, seed);
    let emitter = Emitter::new(format, out, "verify", Some(seed));
    let records: Vec<Record> = results
        .iter()
        .map(|r| {
            vec![
                ("tier", Value::Text(r.tier.to_string())),
                ("check", Value::Text(r.name.clone())),
                ("passed", Value::Bool(r.passed)),
                ("measured", Value::Text(r.measured.clone())),
                ("requirement", Value::Text(r.requirement.clone())),
            ]
        })
        .collect();
    emitter.emit(&records)?;
    let failed = results.iter().filter(|r| !r.passed).count();
    eprintln!(
        "{} checks, {} failed (seed {})",
        results.len(),
        failed,
        seed
    );
    Ok(failed == 0)
}

fn coeff_record(name: &str, variable: genfun::Variable, n: usize, c: &Rational) -> Record {
    vec![
        ("name", Value::Text(name.to_string())),
        ("variable", Value::Text(variable.to_string())),
        ("n", Value::UInt(n as u64)),
        ("coefficient", Value::Text(fraction(c))),
        ("decimal", Value::Float(c.to_f64().unwrap_or(f64::NAN))),
    ]
}

/// Reduced fraction, always with an explicit denominator.
fn fraction(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn parse_grid(grid: &str) -> Result<Vec<f64>> {
    let times: Vec<f64> = grid
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| usage(format!("bad grid time '{s}'")))
        })
        .collect::<Result<_>>()?;
    if times.is_empty() || times.iter().any(|&t| !(t > 0.0 && t <= 1.0)) {
        return Err(usage("grid times must lie in (0, 1]"));
    }
    Ok(times)
}

fn read_points(path: &PathBuf) -> Result<Vec<(f64, f64)>> {
    let body =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut points = Vec::new();
    for (idx, line) in body.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split(',');
        let a = fields.next().map(str::trim).unwrap_or_default();
        let b = fields.next().map(str::trim);
        let Some(b) = b else {
            return Err(usage(format!("line {}: expected n,value", idx + 1)));
        };
        match (a.parse::<f64>(), b.parse::<f64>()) {
            (Ok(n), Ok(v)) => points.push((n, v)),
            _ if idx == 0 => continue, // header row
            _ => {
                return Err(usage(format!(
                    "line {}: expected numbers, got '{line}'",
                    idx + 1
                )))
            }
        }
    }
    if points.is_empty() {
        return Err(usage("input contained no data rows"));
    }
    Ok(points)
}
