//! The `hopf` command line: argument parsing, validation and the
//! `solve`, `scan`, `probes`, `biharmonic` and `verify` commands.
//!
//! Exit status is 0 when every check in the report passes, 1 when a check
//! fails and 2 on usage errors.

mod report;
pub mod verify;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Error;
use crate::existence::{count_solutions, guaranteed_thresholds, probe_values, proper_solutions};
use crate::family::trace_shape_squared;
use crate::family::{FamilyKind, HypersurfaceFamily};
use crate::precise::Precision;
use crate::stability::{biharmonic_radii, index_threshold_scan, stability_report, BiharmonicTube};

pub use report::{fmt_f64, fmt_real, Check, Report, Row, Value};
pub use verify::Suite;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "hopf",
    version,
    about = "Certified r-harmonic and biharmonic homogeneous Hopf hypersurfaces"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: CommandKind,
    /// Family type: A1, A2, B, C, D, E (projective) or CH_A0, CH_A1_geodesic,
    /// CH_A1_point, CH_A2, CH_B
    #[arg(long = "type", global = true)]
    pub family_type: Option<String>,
    #[arg(long, global = true)]
    pub n: Option<u32>,
    #[arg(long, global = true)]
    pub k: Option<u32>,
    /// Codimension parameter of the biharmonic tubes (tube over CP^{n-p})
    #[arg(long, global = true)]
    pub p: Option<u32>,
    #[arg(long, global = true)]
    pub r: Option<u64>,
    /// Inclusive order range, e.g. 2..30
    #[arg(long = "r-range", global = true)]
    pub r_range: Option<String>,
    /// Significant decimal digits of the working precision (at least 30)
    #[arg(long, global = true, env = "HOPF_PRECISION", default_value_t = 30)]
    pub precision: u32,
    #[arg(long, global = true, default_value_t = 1e-10)]
    pub tol: f64,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    /// Report the empirical stability threshold per p instead of tubes
    #[arg(long = "scan-threshold", global = true)]
    pub scan_threshold: bool,
    #[arg(long = "n-max", global = true)]
    pub n_max: Option<u32>,
    #[arg(long = "r-max", global = true)]
    pub r_max: Option<u64>,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CommandKind {
    /// Certified proper r-harmonic radii of one family
    Solve,
    /// Solution counts and guarantee flags over an order range
    Scan,
    /// Run the invariant suite
    Verify,
    /// Biharmonic tubes with their stability data
    Biharmonic,
    /// Exact quartic values at the probe points
    Probes,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

/// Validated invocation.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub command: CommandKind,
    #[serde(rename = "type")]
    pub family_type: Option<String>,
    pub n: Option<u32>,
    pub k: Option<u32>,
    pub p: Option<u32>,
    pub r: Option<u64>,
    pub r_range: Option<(u64, u64)>,
    pub precision_digits: u32,
    #[serde(serialize_with = "ser_f64")]
    pub tolerance: f64,
    pub output_format: OutputFormat,
    pub output_path: Option<PathBuf>,
    pub suite: Suite,
    pub scan_threshold: bool,
    pub n_max: Option<u32>,
    pub r_max: Option<u64>,
}

fn ser_f64<S: serde::Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_f64(*v))
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Compute(Error),
    Io(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Compute(e) => write!(f, "{e}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Compute(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(CliError::Usage(msg.into()))
}

pub fn parse_range(s: &str) -> CliResult<(u64, u64)> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| CliError::Usage(format!("range '{s}' is not of the form LO..HI")))?;
    let parse = |v: &str| {
        v.trim()
            .trim_start_matches('=')
            .parse::<u64>()
            .map_err(|_| CliError::Usage(format!("bad range bound '{v}'")))
    };
    let (lo, hi) = (parse(a)?, parse(b)?);
    if lo > hi {
        return usage(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> CliResult<Self> {
        if cli.precision < Precision::MIN_DIGITS {
            return usage(format!(
                "precision must be at least {} digits, got {}",
                Precision::MIN_DIGITS,
                cli.precision
            ));
        }
        if !(cli.tol > 0.0 && cli.tol <= 1e-6) {
            return usage(format!("tolerance must lie in (0, 1e-6], got {}", cli.tol));
        }
        let r_range = cli.r_range.as_deref().map(parse_range).transpose()?;
        Ok(Self {
            command: cli.command,
            family_type: cli.family_type,
            n: cli.n,
            k: cli.k,
            p: cli.p,
            r: cli.r,
            r_range,
            precision_digits: cli.precision,
            tolerance: cli.tol,
            output_format: cli.format,
            output_path: cli.out,
            suite: cli.suite,
            scan_threshold: cli.scan_threshold,
            n_max: cli.n_max,
            r_max: cli.r_max,
        })
    }

    pub fn precision(&self) -> Precision {
        Precision::digits(self.precision_digits)
    }

    /// The family named by `--type`, `--n` and `--k`.
    pub fn family(&self) -> CliResult<HypersurfaceFamily> {
        let Some(tag) = self.family_type.as_deref() else {
            return usage("--type is required");
        };
        let kind: FamilyKind = tag
            .parse()
            .map_err(|e: Error| CliError::Usage(e.to_string()))?;
        let n = match (kind, self.n) {
            (FamilyKind::CpD, None) => 9,
            (FamilyKind::CpE, None) => 15,
            (_, Some(n)) => n,
            (_, None) => return usage("--n is required"),
        };
        HypersurfaceFamily::new(kind, n, self.k).map_err(|e| CliError::Usage(e.to_string()))
    }

    fn order(&self) -> CliResult<u64> {
        match self.r {
            Some(r) if r >= 2 => Ok(r),
            Some(r) => usage(format!("--r must be at least 2, got {r}")),
            None => usage("--r is required"),
        }
    }

    fn orders(&self) -> CliResult<(u64, u64)> {
        let (lo, hi) = match (self.r_range, self.r) {
            (Some(range), _) => range,
            (None, Some(r)) => (r, r),
            (None, None) => return usage("--r-range or --r is required"),
        };
        if lo < 2 {
            return usage(format!("orders start at 2, got {lo}"));
        }
        Ok((lo, hi))
    }
}

fn projective(fam: HypersurfaceFamily) -> CliResult<HypersurfaceFamily> {
    if fam.is_projective() {
        Ok(fam)
    } else {
        usage(format!("{} has no characteristic quartic", fam.kind()))
    }
}

pub fn execute(config: &RunConfig) -> CliResult<Report<RunConfig>> {
    let (rows, checks) = match config.command {
        CommandKind::Solve => cmd_solve(config)?,
        CommandKind::Scan => cmd_scan(config)?,
        CommandKind::Probes => cmd_probes(config)?,
        CommandKind::Biharmonic => cmd_biharmonic(config)?,
        CommandKind::Verify => {
            let checks = verify::run(config)?;
            (checks.iter().map(Check::row).collect(), checks)
        }
    };
    let columns = match rows.first() {
        Some(r) => r.columns(),
        None => empty_columns(config),
    };
    Ok(Report {
        config: config.clone(),
        rows,
        checks,
        version: env!("CARGO_PKG_VERSION").to_string(),
        columns,
    })
}

fn empty_columns(config: &RunConfig) -> Vec<&'static str> {
    match config.command {
        CommandKind::Solve => SOLVE_COLUMNS.to_vec(),
        CommandKind::Verify => vec!["tag", "name", "passed", "detail"],
        _ => Vec::new(),
    }
}

const SOLVE_COLUMNS: [&str; 7] = ["x", "x_lo", "x_hi", "t", "residual", "trace", "trace_sq"];

type Output = (Vec<Row>, Vec<Check>);

pub fn cmd_solve(config: &RunConfig) -> CliResult<Output> {
    let fam = projective(config.family()?)?;
    let r = config.order()?;
    let prec = config.precision();
    let sols = proper_solutions(&fam, r, crate::crosscheck::refinement_width(prec), prec)?;
    let expected = count_solutions(&fam, r)?;
    let mut rows = Vec::with_capacity(sols.len());
    let mut worst = 0.0f64;
    for s in &sols {
        worst = worst.max(s.residual.abs().to_f64());
        let c = &s.certificate;
        rows.push(
            Row::new()
                .real("x", &c.root)
                .str("x_lo", c.interval.0.to_string())
                .str("x_hi", c.interval.1.to_string())
                .real("t", &s.radius)
                .real("residual", &s.residual)
                .real("trace", &s.trace)
                .real("trace_sq", &s.trace_sq),
        );
    }
    let checks = vec![
        Check::new(
            "solve/residual",
            "residual vanishes at every certified radius",
            worst <= config.tolerance,
            format!("max |residual| = {}", fmt_f64(worst)),
        ),
        Check::new(
            "solve/count",
            "rows match the Sturm count",
            sols.len() == expected,
            format!("{} rows, Sturm count {expected}", sols.len()),
        ),
    ];
    Ok((rows, checks))
}

pub fn cmd_scan(config: &RunConfig) -> CliResult<Output> {
    let fam = projective(config.family()?)?;
    let (lo, hi) = config.orders()?;
    let thresholds = guaranteed_thresholds(&fam);
    let rows: Vec<(Row, bool)> = (lo..=hi)
        .into_par_iter()
        .map(|r| -> CliResult<(Row, bool)> {
            let count = count_solutions(&fam, r)?;
            let probes = match probe_values(&fam, r) {
                Ok(rep) => Some(rep),
                Err(Error::ProbesCollide { .. }) => None,
                Err(e) => return Err(e.into()),
            };
            let (two, four) = match &thresholds {
                Ok(t) => (Some(r >= t.r_two), t.r_four.map(|f| r >= f)),
                Err(_) => (None, None),
            };
            let ok = (two != Some(true) || count >= 2) && (four != Some(true) || count == 4);
            let row = Row::new()
                .int("r", r as i64)
                .int("count", count as i64)
                .str(
                    "probe_pattern",
                    probes
                        .as_ref()
                        .map_or("collide".to_string(), |p| p.pattern()),
                )
                .opt_bool(
                    "probes_match",
                    probes.as_ref().map(|p| p.matches_expected()),
                )
                .opt_bool("at_least_r_two", two)
                .opt_bool("at_least_r_four", four)
                .bool("guarantee_ok", ok);
            Ok((row, ok))
        })
        .collect::<CliResult<_>>()?;
    let failures: Vec<i64> = rows
        .iter()
        .filter(|(_, ok)| !ok)
        .filter_map(|(r, _)| match r.get("r") {
            Some(Value::Int(v)) => Some(*v),
            _ => None,
        })
        .collect();
    let detail = match &thresholds {
        Ok(t) => format!(
            "r_two = {}, r_four = {}, failures at {failures:?}",
            t.r_two,
            t.r_four.map_or("none".to_string(), |v| v.to_string())
        ),
        Err(e) => format!("{e}"),
    };
    let checks = vec![Check::new(
        "scan/guarantees",
        "counts honour the guaranteed thresholds",
        failures.is_empty(),
        detail,
    )];
    Ok((rows.into_iter().map(|(r, _)| r).collect(), checks))
}

pub fn cmd_probes(config: &RunConfig) -> CliResult<Output> {
    let fam = projective(config.family()?)?;
    let r = config.order()?;
    let rep = probe_values(&fam, r)?;
    let labels: &[&str] = if rep.points.len() == 5 {
        &["x_at_0", "x0", "x1", "x2", "x_at_1"]
    } else {
        &["x_at_0", "x_star", "x_at_1"]
    };
    let rows = rep
        .points
        .iter()
        .zip(&rep.values)
        .zip(rep.signs.iter().zip(&rep.expected))
        .zip(labels)
        .map(|(((x, v), (s, e)), label)| {
            Row::new()
                .str("point", *label)
                .str("x", x.to_string())
                .str("value", v.to_string())
                .int("sign", *s)
                .int("expected", *e)
        })
        .collect();
    let checks = vec![Check::new(
        "existence/probe-pattern",
        "probe signs alternate",
        rep.matches_expected(),
        format!("observed {}", rep.pattern()),
    )];
    Ok((rows, checks))
}

fn tube_row(tube: &BiharmonicTube, tol: f64) -> CliResult<(Row, Vec<Check>)> {
    let rep = stability_report(tube)?;
    let tr2 = trace_shape_squared(&tube.spectrum()?);
    let target = 2.0 * f64::from(tube.n + 1);
    let dev = (tr2.to_f64() - target).abs();
    let row = Row::new()
        .int("n", tube.n)
        .int("p", tube.p)
        .str("branch", tube.branch.to_string())
        .str("status", "tube")
        .real("cos_sq_t", &rep.cos_sq_t)
        .real("t", &rep.t)
        .real("trace", &rep.trace)
        .real("trace_sq", &rep.trace_sq)
        .real("lambda_min_sq", &rep.lambda_min_sq)
        .real("lhs", &rep.lhs)
        .real("rhs", &rep.rhs)
        .real("mu1_lower_bound", &rep.mu1_lower_bound)
        .bool("condition_holds", rep.condition_holds)
        .str("index_claim", rep.index_claim.to_string());
    let label = format!("n={} p={} {}", tube.n, tube.p, tube.branch);
    let checks = vec![
        Check::new(
            "biharmonic/trace-identity",
            format!("tr S^2 = 2(n+1), {label}"),
            dev <= tol,
            format!("deviation {}", fmt_f64(dev)),
        ),
        Check::new(
            "biharmonic/unstable",
            format!("constant variation destabilizes, {label}"),
            rep.is_unstable(),
            format!("tr S (tr S + 3 alpha) = {}", fmt_real(&rep.witness)),
        ),
    ];
    Ok((row, checks))
}

pub fn cmd_biharmonic(config: &RunConfig) -> CliResult<Output> {
    let prec = config.precision();
    if config.scan_threshold {
        let n_max = config.n_max.unwrap_or(500);
        let ps: Vec<u32> = match config.p {
            Some(p) => vec![p],
            None => vec![1, 2, 3],
        };
        let mut rows = Vec::new();
        let mut checks = Vec::new();
        for p in ps {
            let scan =
                index_threshold_scan(p, n_max, prec).map_err(|e| CliError::Usage(e.to_string()))?;
            rows.push(
                Row::new()
                    .int("p", p)
                    .int("n_max", n_max)
                    .opt_int("threshold", scan.threshold())
                    .opt_int("first_hold", scan.first_hold)
                    .opt_int("last_failure", scan.last_failure)
                    .bool("holds_above", scan.holds_above),
            );
            checks.push(Check::new(
                "biharmonic/threshold",
                format!("stability condition eventually holds, p={p}"),
                scan.threshold().is_some(),
                format!(
                    "threshold {}",
                    scan.threshold()
                        .map_or("not found".to_string(), |v| v.to_string())
                ),
            ));
        }
        return Ok((rows, checks));
    }
    let Some(n) = config.n else {
        return usage("--n is required");
    };
    let ps: Vec<u32> = match config.p {
        Some(p) => vec![p],
        None => (1..n).collect(),
    };
    let mut rows = Vec::new();
    let mut checks = Vec::new();
    for p in ps {
        let radii = biharmonic_radii(n, p, prec).map_err(|e| CliError::Usage(e.to_string()))?;
        for tube in &radii.tubes {
            let (row, mut c) = tube_row(tube, config.tolerance)?;
            rows.push(row);
            checks.append(&mut c);
        }
        for (branch, c) in &radii.degenerate {
            rows.push(
                Row::new()
                    .int("n", n)
                    .int("p", p)
                    .str("branch", branch.to_string())
                    .str("status", "degenerate")
                    .real("cos_sq_t", c),
            );
        }
    }
    Ok((rows, checks))
}

/// Render `report` in the configured format.
pub fn render(report: &Report<RunConfig>) -> CliResult<String> {
    match report.config.output_format {
        OutputFormat::Json => report.to_json().map_err(|e| CliError::Io(e.to_string())),
        OutputFormat::Csv => report.to_csv().map_err(|e| CliError::Io(e.to_string())),
        OutputFormat::Text => Ok(report.to_text()),
    }
}

/// Full command-line run; returns the process exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    let outcome = RunConfig::from_cli(cli).and_then(|cfg| {
        let report = execute(&cfg)?;
        let text = render(&report)?;
        match &cfg.output_path {
            Some(path) => std::fs::write(path, text).map_err(|e| CliError::Io(e.to_string()))?,
            None => print!("{text}"),
        }
        Ok(report.all_passed())
    });
    match outcome {
        Ok(true) => EXIT_OK,
        Ok(false) => {
            eprintln!("one or more checks failed");
            EXIT_CHECK_FAILED
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(args: &[&str]) -> RunConfig {
        let cli = Cli::try_parse_from(std::iter::once("hopf").chain(args.iter().copied())).unwrap();
        RunConfig::from_cli(cli).unwrap()
    }

    #[test]
    fn ranges_parse() {
        assert_eq!(parse_range("2..30").unwrap(), (2, 30));
        assert_eq!(parse_range("5..=7").unwrap(), (5, 7));
        assert!(parse_range("9..3").is_err());
        assert!(parse_range("3").is_err());
    }

    #[test]
    fn solve_a2_rows() {
        let cfg = config(&["solve", "--type", "A2", "--n", "3", "--k", "1", "--r", "2"]);
        let (rows, checks) = cmd_solve(&cfg).unwrap();
        assert_eq!(rows.len(), 2);
        assert!(checks.iter().all(|c| c.passed));
        let x0 = match rows[0].get("x") {
            Some(Value::Str(s)) => s.parse::<f64>().unwrap(),
            _ => panic!(),
        };
        assert!((x0 - 0.25).abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_configs() {
        let cli = Cli::try_parse_from(["hopf", "solve", "--precision", "20"]).unwrap();
        assert!(matches!(RunConfig::from_cli(cli), Err(CliError::Usage(_))));
        let cli = Cli::try_parse_from(["hopf", "solve", "--tol", "0.1"]).unwrap();
        assert!(matches!(RunConfig::from_cli(cli), Err(CliError::Usage(_))));
        let cfg = config(&["solve", "--type", "A2", "--n", "3", "--k", "2", "--r", "2"]);
        assert!(matches!(cmd_solve(&cfg), Err(CliError::Usage(_))));
        let cfg = config(&["solve", "--type", "CH_B", "--n", "3", "--r", "2"]);
        assert!(matches!(cmd_solve(&cfg), Err(CliError::Usage(_))));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(
            run(["hopf", "solve", "--type", "Q", "--n", "2", "--r", "2"]),
            EXIT_USAGE
        );
        assert_eq!(run(["hopf", "bogus"]), EXIT_USAGE);
    }
}
