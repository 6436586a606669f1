//! Command-line front end for `rootvec`.
//!
//! Exit codes: 0 success, 1 a `check` property failed, 2 argument or
//! expression parse error, 3 undefined context or prior boundary, 4 file or
//! validation error, 5 atom lists of two files differ.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{ArgAction, Parser, Subcommand, ValueEnum};
use rootvec::{
    bhattacharyya, bival, classical_conditional, fisher_rao_distance, hellinger, prior_log_density,
    prior_normalized_log_density, prior_normalizer, volume, Error,
};
use thiserror::Error as ThisError;

pub mod check;
pub mod expr;
pub mod file;
pub mod format;

pub use check::{run_check, CheckReport, PropertyResult};
pub use expr::parse_statement;
pub use file::DistributionFile;
pub use format::sig12;

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error("parse error in {expression:?} at column {column}: {message}")]
    Parse {
        expression: String,
        column: usize,
        message: String,
    },

    #[error("undefined context: {0}")]
    UndefinedContext(String),

    #[error("{0}")]
    Boundary(String),

    #[error("{0}")]
    File(String),

    #[error("{0}")]
    Mismatch(String),

    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse { .. } => 2,
            CliError::UndefinedContext(_) | CliError::Boundary(_) => 3,
            CliError::File(_) | CliError::Io(_) => 4,
            CliError::Mismatch(_) => 5,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "rootvec",
    version,
    about = "Square-root vector bi-valuations, distances and priors"
)]
pub struct Cli {
    /// Emit one JSON record per result instead of aligned text.
    #[arg(long, global = true)]
    pub machine: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Conditional probability P(x | given), by inner product and by direct summation.
    Cond {
        #[arg(long)]
        file: PathBuf,
        /// Statement expression, e.g. "a1|a2".
        #[arg(long)]
        x: String,
        /// Context expression.
        #[arg(long)]
        given: String,
    },
    /// Distance between two distributions over the same atoms.
    Distance {
        /// Pass twice: `--file p.toml --file q.toml`.
        #[arg(long, action = ArgAction::Append, required = true)]
        file: Vec<PathBuf>,
        #[arg(long, value_enum)]
        kind: DistanceKind,
    },
    /// Volume and inverse-volume prior at a distribution.
    Prior {
        #[arg(long)]
        file: PathBuf,
    },
    /// Verify the library's invariants on the file's space.
    Check {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DistanceKind {
    Hellinger,
    Bhattacharyya,
    FisherRao,
}

impl DistanceKind {
    fn name(self) -> &'static str {
        match self {
            DistanceKind::Hellinger => "hellinger",
            DistanceKind::Bhattacharyya => "bhattacharyya",
            DistanceKind::FisherRao => "fisher-rao",
        }
    }
}

fn json_str(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

/// A flat result record, printed as aligned `key value` lines or one JSON object.
struct Record {
    command: &'static str,
    fields: Vec<(&'static str, Field)>,
}

enum Field {
    Text(String),
    Number(f64),
    Integer(u64),
    Bool(bool),
}

impl Record {
    fn new(command: &'static str) -> Self {
        Self {
            command,
            fields: Vec::new(),
        }
    }

    fn text(mut self, key: &'static str, value: impl Into<String>) -> Self {
        self.fields.push((key, Field::Text(value.into())));
        self
    }

    fn number(mut self, key: &'static str, value: f64) -> Self {
        self.fields.push((key, Field::Number(value)));
        self
    }

    fn integer(mut self, key: &'static str, value: u64) -> Self {
        self.fields.push((key, Field::Integer(value)));
        self
    }

    fn flag(mut self, key: &'static str, value: bool) -> Self {
        self.fields.push((key, Field::Bool(value)));
        self
    }

    fn json(&self) -> String {
        let mut parts = vec![format!("\"command\":{}", json_str(self.command))];
        for (key, value) in &self.fields {
            let rendered = match value {
                Field::Text(s) => json_str(s),
                Field::Number(x) if x.is_finite() => sig12(*x),
                Field::Number(x) => json_str(&sig12(*x)),
                Field::Integer(i) => i.to_string(),
                Field::Bool(b) => b.to_string(),
            };
            parts.push(format!("{}:{rendered}", json_str(key)));
        }
        format!("{{{}}}", parts.join(","))
    }

    fn text_lines(&self) -> String {
        let width = self.fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (key, value) in &self.fields {
            let rendered = match value {
                Field::Text(s) => s.clone(),
                Field::Number(x) => sig12(*x),
                Field::Integer(i) => i.to_string(),
                Field::Bool(b) => b.to_string(),
            };
            out.push_str(&format!("{key:<width$}  {rendered}\n"));
        }
        out
    }

    fn emit(&self, machine: bool, out: &mut dyn Write) -> std::io::Result<()> {
        if machine {
            writeln!(out, "{}", self.json())
        } else {
            write!(out, "{}", self.text_lines())
        }
    }
}

fn load(path: &Path) -> Result<(DistributionFile, rootvec::Measure), CliError> {
    let file = DistributionFile::load(path)?;
    let measure = file.measure()?;
    Ok((file, measure))
}

fn undefined(e: Error, what: &str) -> CliError {
    match e {
        Error::UndefinedContext => CliError::UndefinedContext(format!("{what} has zero measure")),
        other => CliError::File(other.to_string()),
    }
}

fn cmd_cond(
    path: &Path,
    x: &str,
    given: &str,
    machine: bool,
    out: &mut dyn Write,
) -> Result<u8, CliError> {
    let (_, measure) = load(path)?;
    let space = measure.space().clone();
    let xs = parse_statement(x, &space)?;
    let ys = parse_statement(given, &space)?;
    let inner = bival(&measure, &xs, &ys).map_err(|e| undefined(e, given))?;
    let classical = classical_conditional(&measure, &xs, &ys).map_err(|e| undefined(e, given))?;
    Record::new("cond")
        .text("x", x)
        .text("given", given)
        .number("inner_product", inner)
        .number("classical", classical)
        .number("abs_diff", (inner - classical).abs())
        .emit(machine, out)?;
    Ok(0)
}

fn cmd_distance(
    files: &[PathBuf],
    kind: DistanceKind,
    machine: bool,
    out: &mut dyn Write,
) -> Result<u8, CliError> {
    let (pf, p) = load(&files[0])?;
    let qf = DistributionFile::load(&files[1])?;
    if pf.atoms != qf.atoms {
        return Err(CliError::Mismatch(format!(
            "atom lists differ: {:?} vs {:?}",
            pf.atoms, qf.atoms
        )));
    }
    let q = qf.measure_on(p.space())?;
    let value = match kind {
        DistanceKind::Hellinger => hellinger(&p, &q),
        DistanceKind::Bhattacharyya => bhattacharyya(&p, &q),
        DistanceKind::FisherRao => fisher_rao_distance(&p, &q),
    }
    .map_err(|e| CliError::Mismatch(e.to_string()))?;
    if machine {
        Record::new("distance")
            .text("kind", kind.name())
            .number("value", value)
            .emit(true, out)?;
    } else {
        writeln!(out, "{}", sig12(value))?;
    }
    Ok(0)
}

fn cmd_prior(path: &Path, machine: bool, out: &mut dyn Write) -> Result<u8, CliError> {
    let (_, measure) = load(path)?;
    let boundary = |e: Error| match e {
        Error::Boundary { index } => CliError::Boundary(format!(
            "atom {:?} has zero probability; the prior density diverges",
            measure.space().atom_names()[index]
        )),
        Error::TooFewAtoms { n, min } => CliError::Boundary(format!(
            "the prior needs at least {min} atoms, the file has {n}"
        )),
        other => CliError::File(other.to_string()),
    };
    let log_density = prior_log_density(&measure).map_err(boundary)?;
    let normalizer = prior_normalizer(measure.space().len()).map_err(boundary)?;
    let normalized = prior_normalized_log_density(&measure).map_err(boundary)?;
    Record::new("prior")
        .number("volume", volume(&measure))
        .number("log_density", log_density)
        .number("normalizer", normalizer)
        .number("normalized_log_density", normalized)
        .emit(machine, out)?;
    Ok(0)
}

fn cmd_check(
    path: &Path,
    trials: usize,
    seed: u64,
    machine: bool,
    out: &mut dyn Write,
) -> Result<u8, CliError> {
    let (file, measure) = load(path)?;
    let report = run_check(&measure, trials, seed);
    let label = file.name.unwrap_or_else(|| path.display().to_string());
    if machine {
        Record::new("check")
            .text("space", label)
            .integer("atoms", report.atoms as u64)
            .integer("measures", report.measures as u64)
            .integer("seed", report.seed)
            .flag("exhaustive", report.exhaustive)
            .integer("statements", report.pool_size as u64)
            .emit(true, out)?;
        for p in &report.properties {
            Record::new("check-property")
                .text("property", p.name)
                .flag("pass", p.passed())
                .number("worst_deviation", p.worst)
                .number("tolerance", p.tolerance)
                .integer("comparisons", p.comparisons)
                .integer("failures", p.failures)
                .emit(true, out)?;
        }
        Record::new("check-summary")
            .flag("pass", report.passed())
            .emit(true, out)?;
    } else {
        writeln!(
            out,
            "space {label}: {} atoms, {} measures (seed {}), {} statements {}",
            report.atoms,
            report.measures,
            report.seed,
            report.pool_size,
            if report.exhaustive {
                "(exhaustive pairs)"
            } else {
                "(sampled pool)"
            }
        )?;
        for p in &report.properties {
            writeln!(
                out,
                "{}  {:<22}  worst {:<18}  tolerance {}  comparisons {}  failures {}",
                if p.passed() { "PASS" } else { "FAIL" },
                p.name,
                sig12(p.worst),
                sig12(p.tolerance),
                p.comparisons,
                p.failures
            )?;
        }
        writeln!(
            out,
            "{}",
            if report.passed() {
                "all properties pass"
            } else {
                "some properties FAILED"
            }
        )?;
    }
    Ok(if report.passed() { 0 } else { 1 })
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let machine = cli.machine;
    let result = match &cli.command {
        Command::Cond { file, x, given } => cmd_cond(file, x, given, machine, out),
        Command::Distance { file, kind } => {
            if file.len() != 2 {
                let _ = writeln!(
                    err,
                    "error: distance takes exactly two --file arguments, got {}",
                    file.len()
                );
                return 2;
            }
            cmd_distance(file, *kind, machine, out)
        }
        Command::Prior { file } => cmd_prior(file, machine, out),
        Command::Check { file, trials, seed } => cmd_check(file, *trials, *seed, machine, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
