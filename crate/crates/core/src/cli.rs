//! The `fuzzdyn` command line.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Deserialize;

use crate::checks::{run_suite, Suite};
use crate::dynamics::{fuzzy_witness, hitting_trial, isometry_separation_certificate, HittingQuery, MetricKind, TrialOutcome};
use crate::error::Error;
use crate::fuzzy::StepFuzzySet;
use crate::ground::MapSpec;
use crate::io::read_fuzzy_set;
use crate::rational::Rational;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_NO_ORACLE: i32 = 2;
pub const EXIT_POST_CHECK: i32 = 3;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;

#[derive(Parser, Debug)]
#[command(name = "fuzzdyn", version, about = "Exact fuzzy-set dynamics: metrics, witnesses, hitting experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MetricArg {
    Infty,
    Skorokhod,
    Sendo,
}

impl From<MetricArg> for MetricKind {
    fn from(m: MetricArg) -> Self {
        match m {
            MetricArg::Infty => MetricKind::Infty,
            MetricArg::Skorokhod => MetricKind::Skorokhod,
            MetricArg::Sendo => MetricKind::Sendo,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Metrics,
    Zadeh,
    Entourage,
    Witness,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Metrics => Suite::Metrics,
            SuiteArg::Zadeh => Suite::Zadeh,
            SuiteArg::Entourage => Suite::Entourage,
            SuiteArg::Witness => Suite::Witness,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the exact distance between two fuzzy-set files.
    Metric {
        kind: MetricArg,
        lhs: PathBuf,
        rhs: PathBuf,
        /// Also print a decimal approximation.
        #[arg(long)]
        approx: bool,
    },
    /// Build a transitivity witness from U towards V and write it as JSON.
    Witness {
        #[arg(long, default_value = "tent")]
        map: String,
        #[arg(long, value_parser = positive_rational)]
        eps: Rational,
        #[arg(long)]
        out: PathBuf,
        u: PathBuf,
        v: PathBuf,
    },
    /// Run a hitting campaign described by a JSON config.
    Transit {
        config: PathBuf,
        /// Add a wall-clock column (makes the CSV non-reproducible).
        #[arg(long)]
        timings: bool,
        /// Add a decimal distance column.
        #[arg(long)]
        approx: bool,
    },
    /// Run a property suite.
    Check {
        suite: SuiteArg,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        cases: usize,
    },
}

fn positive_rational(s: &str) -> Result<Rational, String> {
    let r: Rational = s.parse().map_err(|e: crate::rational::ParseRationalError| e.to_string())?;
    if r.is_positive() {
        Ok(r)
    } else {
        Err(format!("{s} is not positive"))
    }
}

/// A failure with its exit code.
struct Failure {
    code: i32,
    kind: &'static str,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, kind: "usage", message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NoMixingOracle => EXIT_NO_ORACLE,
            Error::PostCheckFailed(_) => EXIT_POST_CHECK,
            Error::NonPositiveEpsilon | Error::InvalidArgument(_) => EXIT_USAGE,
            _ => EXIT_DATA,
        };
        Failure { code, kind: e.code(), message: e.to_string() }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure { code: EXIT_DATA, kind: "io", message: format!("{}: {e}", path.display()) }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(f) => {
            let line = serde_json::json!({ "error": f.kind, "message": f.message });
            let _ = writeln!(err, "{line}");
            f.code
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        Command::Metric { kind, lhs, rhs, approx } => cmd_metric(kind.into(), &lhs, &rhs, approx, out),
        Command::Witness { map, eps, out: path, u, v } => cmd_witness(&map, &u, &v, &eps, &path, out),
        Command::Transit { config, timings, approx } => cmd_transit(&config, timings, approx, out, err),
        Command::Check { suite, seed, cases } => cmd_check(suite.into(), seed, cases, out),
    }
}

fn write_line(out: &mut dyn Write, line: &str) -> Result<(), Failure> {
    writeln!(out, "{line}").map_err(|e| Failure { code: EXIT_FAILED, kind: "io", message: e.to_string() })
}

fn cmd_metric(kind: MetricKind, lhs: &Path, rhs: &Path, approx: bool, out: &mut dyn Write) -> Result<i32, Failure> {
    let (u, v) = (read_fuzzy_set(lhs)?, read_fuzzy_set(rhs)?);
    let d = kind.distance(&u, &v)?;
    let line = if approx { format!("{d}\t{}", d.to_f64()) } else { d.to_string() };
    write_line(out, &line)?;
    Ok(EXIT_OK)
}

fn cmd_witness(map: &str, u: &Path, v: &Path, eps: &Rational, path: &Path, out: &mut dyn Write) -> Result<i32, Failure> {
    let spec: MapSpec = map.parse().map_err(|e: Error| Failure::usage(e.to_string()))?;
    if !matches!(spec, MapSpec::Tent | MapSpec::Doubling) {
        return Err(Error::NoMixingOracle.into());
    }
    let (u, v) = (read_fuzzy_set(u)?, read_fuzzy_set(v)?);
    let f = spec.build(u.space())?;
    let cert = fuzzy_witness(&f, &u, &v, eps)?;
    let json = serde_json::to_string_pretty(&cert).expect("certificates serialize");
    std::fs::write(path, json + "\n").map_err(|e| io_failure(path, e))?;
    write_line(out, &format!("n={} d_source={} d_target={}", cert.n, cert.d_source, cert.d_target))?;
    Ok(EXIT_OK)
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct ExperimentConfig {
    experiment: String,
    map: String,
    metric: MetricKind,
    eps: Vec<Rational>,
    /// Source radius; defaults to each target `eps`.
    #[serde(default)]
    eps_u: Option<Rational>,
    trials: usize,
    max_iterate: usize,
    seed: u64,
    u: PathBuf,
    v: PathBuf,
    #[serde(default)]
    csv: Option<PathBuf>,
    #[serde(default)]
    plot: Option<PathBuf>,
}

struct Campaign {
    config: ExperimentConfig,
    spec: MapSpec,
    u: StepFuzzySet,
    v: StepFuzzySet,
}

fn load_campaign(path: &Path) -> Result<Campaign, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    let mut config: ExperimentConfig =
        serde_json::from_str(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    if let Ok(s) = std::env::var("FUZZDYN_SEED") {
        config.seed = s.trim().parse().map_err(|_| Failure::usage(format!("FUZZDYN_SEED={s:?} is not an integer")))?;
    }
    if config.eps.is_empty() || config.eps.iter().chain(&config.eps_u).any(|e| !e.is_positive()) {
        return Err(Failure::usage("eps values must be positive and non-empty"));
    }
    if config.trials == 0 || config.max_iterate == 0 {
        return Err(Failure::usage("trials and max_iterate must be at least 1"));
    }
    let base = path.parent().unwrap_or(Path::new("."));
    let resolve = |p: &mut PathBuf| {
        if p.is_relative() {
            *p = base.join(&*p);
        }
    };
    for p in [&mut config.u, &mut config.v].into_iter().chain(config.csv.as_mut()).chain(config.plot.as_mut()) {
        resolve(p);
    }
    let load = |p: &Path| read_fuzzy_set(p).map_err(|e| Failure::usage(format!("{}: {e}", p.display())));
    let (u, v) = (load(&config.u)?, load(&config.v)?);
    let spec: MapSpec = config.map.parse().map_err(|e: Error| Failure::usage(e.to_string()))?;
    spec.build(u.space()).map_err(|e| Failure::usage(format!("map {}: {e}", config.map)))?;
    if u.space() != v.space() {
        return Err(Failure::usage("u and v live in different spaces"));
    }
    Ok(Campaign { config, spec, u, v })
}

/// Median of sorted values; the mean of the middle pair when even.
fn median(sorted: &[usize]) -> Option<Rational> {
    let m = sorted.len();
    if m == 0 {
        return None;
    }
    let mid = |i: usize| Rational::from_integer(sorted[i] as i64);
    Some(if m % 2 == 1 { mid(m / 2) } else { (mid(m / 2 - 1) + mid(m / 2)) / Rational::from_integer(2) })
}

fn cmd_transit(path: &Path, timings: bool, approx: bool, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let Campaign { config, spec, u, v } = load_campaign(path)?;
    let f = spec.build(u.space())?;

    let mut header = vec!["experiment", "trial", "eps", "n", "distance", "metric_kind", "outcome"];
    if approx {
        header.push("distance_approx");
    }
    if timings {
        header.push("wall_us");
    }
    let mut buf = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| Failure { code: EXIT_FAILED, kind: "csv", message: e.to_string() };
    buf.write_record(&header).map_err(csv_err)?;

    let (mut rows, mut hits, mut certified, mut contradictions) = (0usize, 0usize, 0usize, 0usize);
    let mut all_n = Vec::new();
    let mut plot = String::from("# eps median_n\n");
    for eps in &config.eps {
        let eps_u = config.eps_u.clone().unwrap_or_else(|| eps.clone());
        let impossible = if f.is_isometry() {
            isometry_separation_certificate(&f, &u, &eps_u, &v, eps)?.is_impossible()
        } else {
            false
        };
        let q = HittingQuery {
            f: &f,
            u: &u,
            eps_u,
            v: &v,
            eps_v: eps.clone(),
            max_iterate: config.max_iterate,
            metric: config.metric,
        };
        let outcomes: Vec<(TrialOutcome, u128)> = (0..config.trials)
            .into_par_iter()
            .map(|t| {
                let start = Instant::now();
                hitting_trial(&q, config.seed, t).map(|o| (o, start.elapsed().as_micros()))
            })
            .collect::<Result<_, Error>>()?;

        let mut ns = Vec::new();
        for (o, micros) in &outcomes {
            let outcome = match (o.found(), impossible) {
                (true, true) => {
                    contradictions += 1;
                    "contradiction"
                }
                (true, false) => "hit",
                (false, true) => {
                    certified += 1;
                    "certified-impossible"
                }
                (false, false) => "miss",
            };
            if let Some(n) = o.n {
                hits += 1;
                ns.push(n);
            }
            rows += 1;
            let mut rec = vec![
                config.experiment.clone(),
                o.trial.to_string(),
                eps.to_string(),
                o.n.map(|n| n.to_string()).unwrap_or_default(),
                o.distance.to_string(),
                config.metric.to_string(),
                outcome.to_string(),
            ];
            if approx {
                rec.push(o.distance.to_f64().to_string());
            }
            if timings {
                rec.push(micros.to_string());
            }
            buf.write_record(&rec).map_err(csv_err)?;
        }
        ns.sort_unstable();
        let med = median(&ns).map(|m| m.to_string()).unwrap_or_else(|| "NaN".into());
        plot.push_str(&format!("{eps} {med}\n"));
        all_n.extend(ns);
    }
    let bytes = buf.into_inner().map_err(|e| Failure { code: EXIT_FAILED, kind: "csv", message: e.to_string() })?;

    match &config.csv {
        Some(p) => std::fs::write(p, &bytes).map_err(|e| io_failure(p, e))?,
        None => out.write_all(&bytes).map_err(|e| Failure { code: EXIT_FAILED, kind: "io", message: e.to_string() })?,
    }
    if let Some(p) = &config.plot {
        std::fs::write(p, plot).map_err(|e| io_failure(p, e))?;
    }
    all_n.sort_unstable();
    let summary = format!(
        "experiment={} rows={} hits={} hit_rate={:.3} median_n={} certified_impossible={} contradictions={}",
        config.experiment,
        rows,
        hits,
        hits as f64 / rows as f64,
        median(&all_n).map(|m| m.to_string()).unwrap_or_else(|| "NaN".into()),
        certified,
        contradictions
    );
    // keep stdout clean when it carries the CSV
    if config.csv.is_some() {
        write_line(out, &summary)?;
    } else {
        write_line(err, &summary)?;
    }
    Ok(if contradictions == 0 { EXIT_OK } else { EXIT_FAILED })
}

fn cmd_check(suite: Suite, seed: u64, cases: usize, out: &mut dyn Write) -> Result<i32, Failure> {
    let reports = run_suite(suite, seed, cases)?;
    let mut ok = true;
    for r in &reports {
        ok &= r.passed();
        let status = if r.passed() { "pass" } else { "FAIL" };
        write_line(out, &format!("{status} {suite}/{}: {} checked, {} failed", r.name, r.checked, r.failed))?;
        if let Some(detail) = &r.first_failure {
            write_line(out, &format!("  first failure: {detail}"))?;
        }
    }
    write_line(out, &format!("{suite}: {}", if ok { "pass" } else { "FAIL" }))?;
    Ok(if ok { EXIT_OK } else { EXIT_FAILED })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(args.iter().copied(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors_exit_64() {
        assert_eq!(run_str(&["fuzzdyn"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["fuzzdyn", "check", "bogus"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["fuzzdyn", "witness", "--eps", "0", "--out", "x", "a", "b"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["fuzzdyn", "--help"]).0, EXIT_OK);
    }

    #[test]
    fn medians() {
        assert_eq!(median(&[]), None);
        assert_eq!(median(&[3]), Some(Rational::from_integer(3)));
        assert_eq!(median(&[1, 2]), Some(Rational::new(3, 2)));
    }
}
