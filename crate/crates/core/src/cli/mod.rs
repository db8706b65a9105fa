//! The `hyperharmonic` command-line front end.
//!
//! Exit codes: 0 every check passed, 2 some identity failed, 3 some check
//! could not be evaluated (non-convergence, domain or pole errors),
//! 64 usage error, 74 the report could not be written.

pub mod config;
pub mod json;
pub mod pool;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

pub use config::{Format, Range, RunConfig, Selection};
pub use report::{Row, RunInfo, Status, Tally};

use crate::catalog::{Catalog, Point, VerifyOptions, DEFAULT_SEED};
use crate::error::{Error, Result};
use crate::series::DEFAULT_MAX_TERMS;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 2;
pub const EXIT_ERROR: i32 = 3;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_IO: i32 = 74;

/// Environment variable that overrides `--seed`.
pub const SEED_ENV: &str = "HYPERHARMONIC_SEED";

#[derive(Debug, Parser)]
#[command(
    name = "hyperharmonic",
    version,
    about = "Verify harmonic-number series identities numerically"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the registry of identities and transformation checks.
    List(ListArgs),
    /// Evaluate both sides of the selected entries at their sample points.
    Verify(VerifyArgs),
    /// Verify one entry along a range of one parameter.
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
struct Selector {
    /// Select every registry entry.
    #[arg(long, conflicts_with = "id")]
    all: bool,
    /// Comma-separated registry ids.
    #[arg(long, value_delimiter = ',', value_name = "ID")]
    id: Vec<String>,
}

impl Selector {
    fn selection(&self) -> Option<Selection> {
        match (self.all, self.id.is_empty()) {
            (true, _) => Some(Selection::All),
            (false, false) => Some(Selection::Ids(self.id.clone())),
            (false, true) => None,
        }
    }
}

#[derive(Debug, Args)]
struct Output {
    /// Report encoding.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write the report here instead of standard output.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ListArgs {
    #[command(flatten)]
    select: Selector,
    #[command(flatten)]
    output: Output,
    /// Seed for sampled default points (counts only).
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    select: Selector,
    /// Parameter overrides applied to every sample point, e.g. a=0.25,b=0.3+0.1i.
    #[arg(long, value_name = "K=V,...")]
    params: Option<String>,
    /// Tolerance replacing each entry's own.
    #[arg(long)]
    tol: Option<f64>,
    /// Term budget per series.
    #[arg(long, value_name = "N")]
    max_terms: Option<usize>,
    #[command(flatten)]
    output: Output,
    /// Worker threads (default: available parallelism).
    #[arg(long, value_name = "N")]
    jobs: Option<usize>,
    /// Seed for sampled default points.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Record the wall-clock time in the report (off for reproducible output).
    #[arg(long)]
    timestamp: bool,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[command(flatten)]
    run: VerifyArgs,
    /// Swept parameter, e.g. a=0.1:0.9:9.
    #[arg(long, value_name = "P=LO:HI:N")]
    range: String,
}

/// Run the binary: process arguments, environment and standard streams.
pub fn main_exit() -> i32 {
    let env_seed = std::env::var(SEED_ENV).ok();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(
        std::env::args_os(),
        crate::catalog::standard(),
        env_seed.as_deref(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    )
}

/// Run one invocation against `catalog`; returns the exit code.
pub fn run<I, T>(
    args: I,
    catalog: &Catalog,
    env_seed: Option<&str>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = write!(stdout, "{}", e.render());
            return EXIT_OK;
        }
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return EXIT_USAGE;
        }
    };
    let outcome = match cli.command {
        Command::List(args) => cmd_list(catalog, &args, env_seed),
        Command::Verify(args) => {
            config_from(&args, env_seed, Format::Json).and_then(|config| cmd_verify(catalog, &config, stderr))
        }
        Command::Sweep(args) => config_from(&args.run, env_seed, Format::Csv)
            .and_then(|config| Ok((config, args.range.parse::<Range>()?)))
            .and_then(|(config, range)| cmd_sweep(catalog, &config, &range, stderr)),
    };
    match outcome {
        Ok((report, out, code)) => match emit(&report, out.as_ref(), stdout) {
            Ok(()) => code,
            Err(e) => {
                let _ = writeln!(stderr, "hyperharmonic: cannot write report: {e}");
                EXIT_IO
            }
        },
        Err(e) => {
            let _ = writeln!(stderr, "hyperharmonic: {e}");
            EXIT_USAGE
        }
    }
}

fn emit(report: &str, out: Option<&PathBuf>, stdout: &mut dyn Write) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, report),
        None => stdout.write_all(report.as_bytes()),
    }
}

/// A rendered report, its destination and the exit code.
type Outcome = (String, Option<PathBuf>, i32);

fn config_from(args: &VerifyArgs, env_seed: Option<&str>, default_format: Format) -> Result<RunConfig> {
    let selection = args
        .select
        .selection()
        .ok_or_else(|| Error::Usage("select entries with --all or --id".into()))?;
    let jobs = match args.jobs {
        Some(0) => return Err(Error::Usage("--jobs must be at least 1".into())),
        Some(n) => n,
        None => std::thread::available_parallelism().map_or(1, usize::from),
    };
    if args.max_terms == Some(0) {
        return Err(Error::Usage("--max-terms must be at least 1".into()));
    }
    Ok(RunConfig {
        selection,
        tol: args.tol.map(config::validate_tol).transpose()?,
        max_terms: args.max_terms,
        params: args.params.as_deref().map(config::parse_params).transpose()?,
        format: args.output.format.unwrap_or(default_format),
        out: args.output.out.clone(),
        jobs,
        seed: config::effective_seed(args.seed, env_seed)?,
        timestamp: args.timestamp,
    })
}

fn cmd_list(catalog: &Catalog, args: &ListArgs, env_seed: Option<&str>) -> Result<Outcome> {
    let seed = config::effective_seed(args.seed, env_seed)?;
    let config = RunConfig {
        selection: args.select.selection().unwrap_or(Selection::All),
        tol: None,
        max_terms: None,
        params: None,
        format: Format::Text,
        out: None,
        jobs: 1,
        seed,
        timestamp: false,
    };
    let ids = config.resolve_ids(catalog)?;
    let listing: Vec<_> = catalog.list(seed).into_iter().filter(|l| ids.contains(&l.id)).collect();
    let report = match args.output.format.unwrap_or(Format::Text) {
        Format::Json => report::list_json(&listing),
        Format::Csv => report::list_csv(&listing)?,
        Format::Text => report::list_text(&listing),
    };
    Ok((report, args.output.out.clone(), EXIT_OK))
}

/// Every override must name a parameter of at least one selected entry;
/// each entry takes the overrides it declares.
fn check_override_names(catalog: &Catalog, ids: &[&str], params: &Point) -> Result<()> {
    for (name, _) in params.iter() {
        let used = ids
            .iter()
            .any(|id| catalog.entry(id).is_ok_and(|e| e.parameters().contains(&name)));
        if !used {
            return Err(Error::Usage(format!("no selected entry has a parameter '{name}'")));
        }
    }
    Ok(())
}

fn apply_overrides(parameters: &[&str], point: &Point, params: &Point) -> Point {
    params
        .iter()
        .filter(|(name, _)| parameters.contains(name))
        .fold(point.clone(), |point, (name, value)| point.with(name, value))
}

/// The (id, point) tasks of a verify run, in registry order.
pub fn plan(catalog: &Catalog, config: &RunConfig) -> Result<Vec<(&'static str, Point)>> {
    let ids = config.resolve_ids(catalog)?;
    if let Some(params) = &config.params {
        check_override_names(catalog, &ids, params)?;
    }
    let mut tasks = Vec::new();
    for id in ids {
        let entry = catalog.entry(id)?;
        let mut points: Vec<Point> = Vec::new();
        let defaults = entry.default_points(config.seed).unwrap_or_default();
        let defaults = if defaults.is_empty() {
            vec![Point::new()]
        } else {
            defaults
        };
        for point in defaults {
            let point = match &config.params {
                Some(params) => apply_overrides(entry.parameters(), &point, params),
                None => point,
            };
            if !points.contains(&point) {
                points.push(point);
            }
        }
        tasks.extend(points.into_iter().map(|p| (id, p)));
    }
    Ok(tasks)
}

fn options(config: &RunConfig) -> VerifyOptions {
    VerifyOptions {
        tol: config.tol,
        max_terms: config.max_terms.unwrap_or(DEFAULT_MAX_TERMS),
        accel: true,
    }
}

/// Verify every task on the worker pool; rows come back in task order.
pub fn execute(catalog: &Catalog, tasks: &[(&'static str, Point)], config: &RunConfig) -> Vec<Row> {
    let options = options(config);
    pool::run_ordered(tasks, config.jobs, |(id, point)| Row {
        id,
        point: point.clone(),
        outcome: catalog.verify(id, point, &options),
    })
}

fn render_rows(rows: &[Row], config: &RunConfig) -> Result<String> {
    Ok(match config.format {
        Format::Json => {
            let timestamp = config
                .timestamp
                .then(|| SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs()));
            report::json_report(
                rows,
                &RunInfo {
                    seed: config.seed,
                    timestamp,
                    tol_default: config.tol,
                },
            )
        }
        Format::Csv => report::csv_report(rows)?,
        Format::Text => report::text_report(rows),
    })
}

fn cmd_verify(catalog: &Catalog, config: &RunConfig, stderr: &mut dyn Write) -> Result<Outcome> {
    let tasks = plan(catalog, config)?;
    let rows = execute(catalog, &tasks, config);
    if config.format != Format::Text {
        let _ = writeln!(stderr, "{}", report::summary(&rows));
    }
    Ok((
        render_rows(&rows, config)?,
        config.out.clone(),
        Tally::of(&rows).exit_code(),
    ))
}

fn cmd_sweep(catalog: &Catalog, config: &RunConfig, range: &Range, stderr: &mut dyn Write) -> Result<Outcome> {
    let ids = config.resolve_ids(catalog)?;
    let [id] = ids[..] else {
        return Err(Error::Usage("sweep takes exactly one --id".into()));
    };
    let entry = catalog.entry(id)?;
    if !entry.parameters().contains(&range.name.as_str()) {
        return Err(Error::Usage(format!("{id} has no parameter '{}'", range.name)));
    }
    if let Some(params) = &config.params {
        check_override_names(catalog, &ids, params)?;
    }
    let base = entry
        .default_points(config.seed)
        .ok()
        .and_then(|p| p.into_iter().next())
        .unwrap_or_default();
    let base = match &config.params {
        Some(params) => apply_overrides(entry.parameters(), &base, params),
        None => base,
    };
    let values = range.values();
    let tasks: Vec<_> = values
        .iter()
        .map(|&v| (id, base.clone().with(&range.name, v)))
        .collect();
    let rows = execute(catalog, &tasks, config);
    let _ = writeln!(stderr, "{}", report::summary(&rows));
    let report = match config.format {
        Format::Csv => report::sweep_csv(&range.name, &values, &rows)?,
        _ => render_rows(&rows, config)?,
    };
    Ok((report, config.out.clone(), Tally::of(&rows).exit_code()))
}
