//! Command-line front end: read a JSON configuration, run one command,
//! write a JSON (or CSV) result document.
//!
//! Exit status is 0 on success, 1 for schema or domain errors and 2 when a
//! verification suite fails. `FREEBOSON_THREADS` sets the worker count.

pub mod config;
pub mod report;

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::amplitude::{amplitude_entry_with_stats, hs_truncated_with_limit, DEFAULT_TUPLE_LIMIT};
use crate::correlator::{cross_matching_count, expect_wick};
use crate::error::{Error, Result};
use crate::hilbert::{gram, psd_check, StateExpression};
use crate::scalar::Backend;
use crate::verify::{run_all, VerifyOptions};
use config::ConfigDocument;

pub const THREADS_ENV: &str = "FREEBOSON_THREADS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Float,
}

impl From<Mode> for Backend {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Exact => Backend::Exact,
            Mode::Float => Backend::Float,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Vacuum expectations of the configured words.
    Correlator,
    /// Gram matrix of the configured states and its positivity verdict.
    Gram,
    /// Transition amplitudes for the configured index tuples.
    Amplitude,
    /// Truncated Hilbert-Schmidt partial sums against the closed-form bound.
    Hsnorm,
    /// Cross-module identity suites.
    Verify,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Correlator => "correlator",
            Command::Gram => "gram",
            Command::Amplitude => "amplitude",
            Command::Hsnorm => "hsnorm",
            Command::Verify => "verify",
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "freeboson", version, about = "Free boson correlators, Gram matrices and amplitudes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// JSON configuration file. Optional for `verify`.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Overrides the mode in the configuration (default exact).
    #[arg(long, global = true, value_enum)]
    pub mode: Option<Mode>,
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Emit the hsnorm partial-sum table as CSV.
    #[arg(long, global = true)]
    pub csv: bool,
    /// Include wall-clock timings (makes output nondeterministic).
    #[arg(long, global = true)]
    pub timing: bool,
}

/// What a command produced: the document and whether it counts as success.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub document: Value,
    /// CSV rendering, when requested and supported.
    pub csv: Option<String>,
    pub suites_passed: bool,
}

fn missing(field: &str, command: Command) -> Error {
    Error::Schema(format!("`{}` requires a non-empty `{field}` field", command.name()))
}

/// Run `command` on a parsed configuration.
pub fn run(command: Command, doc: &ConfigDocument, mode: Backend, csv: bool) -> Result<Outcome> {
    if csv && command != Command::Hsnorm {
        return Err(Error::Schema(format!("--csv is only supported by hsnorm, not {}", command.name())));
    }
    let mut suites_passed = true;
    let mut csv_out = None;
    let result = match command {
        Command::Correlator => correlator(doc, mode)?,
        Command::Gram => gram_command(doc, mode)?,
        Command::Amplitude => amplitude(doc, mode)?,
        Command::Hsnorm => {
            let (value, table) = hsnorm(doc, mode)?;
            if csv {
                csv_out = Some(report::hs_csv(&table));
            }
            value
        }
        Command::Verify => {
            let (value, passed) = verify(doc, mode);
            suites_passed = passed;
            value
        }
    };
    let mode_name = match mode {
        Backend::Exact => "exact",
        Backend::Float => "float",
    };
    Ok(Outcome {
        document: json!({"command": command.name(), "mode": mode_name, "result": result}),
        csv: csv_out,
        suites_passed,
    })
}

fn correlator(doc: &ConfigDocument, mode: Backend) -> Result<Value> {
    if doc.words.is_empty() {
        return Err(missing("words", Command::Correlator));
    }
    let rows = doc
        .words
        .iter()
        .enumerate()
        .map(|(k, w)| {
            let word = config::word_of(w, mode, &format!("word {k}"))?;
            let sizes: Vec<usize> = word.groups().iter().map(|g| g.len()).collect();
            let value = expect_wick(&word)?;
            Ok(json!({
                "word": report::word(&word),
                "insertions": report::insertions(&word),
                "groups": sizes.len(),
                "pairings": cross_matching_count(&sizes).to_string(),
                "value": report::scalar(&value),
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(json!({"values": rows}))
}

fn states_of(doc: &ConfigDocument, mode: Backend) -> Result<Vec<StateExpression>> {
    let mut states = doc
        .words
        .iter()
        .enumerate()
        .map(|(k, w)| Ok(StateExpression::word(config::word_of(w, mode, &format!("word {k}"))?)))
        .collect::<Result<Vec<_>>>()?;
    for (k, terms) in doc.combinations.iter().enumerate() {
        states.push(config::combination_of(terms, mode, &format!("combination {k}"))?);
    }
    Ok(states)
}

fn gram_command(doc: &ConfigDocument, mode: Backend) -> Result<Value> {
    let states = states_of(doc, mode)?;
    if states.is_empty() {
        return Err(missing("words` or `combinations", Command::Gram));
    }
    let report = gram(&states)?;
    let verdict = psd_check(&report, doc.tolerances.psd)?;
    let matrix: Vec<Value> = report
        .matrix
        .iter()
        .map(|row| Value::Array(row.iter().map(report::scalar).collect()))
        .collect();
    Ok(json!({
        "size": report.size(),
        "matrix": matrix,
        "eigenvalues": report.eigenvalues.iter().map(|&x| report::finite(x)).collect::<Vec<_>>(),
        "hermiticity_defect": report::finite(report.hermiticity_defect),
        "psd": {
            "positive": verdict.positive,
            "tolerance": doc.tolerances.psd,
            "threshold": report::finite(verdict.threshold),
            "min_eigenvalue": verdict.min_eigenvalue.map(report::finite),
            "witness": verdict
                .witness
                .map(|v| v.into_iter().map(report::complex).collect::<Vec<_>>()),
        },
    }))
}

fn amplitude(doc: &ConfigDocument, mode: Backend) -> Result<Value> {
    if doc.discs.is_empty() {
        return Err(missing("discs", Command::Amplitude));
    }
    if doc.states.is_empty() {
        return Err(missing("states", Command::Amplitude));
    }
    let discs = config::discs_of(&doc.discs, mode)?;
    let tuples = doc
        .states
        .iter()
        .enumerate()
        .map(|(k, maps)| {
            if maps.len() != discs.len() {
                return Err(Error::Schema(format!(
                    "state {k} has {} occupation maps for {} discs",
                    maps.len(),
                    discs.len()
                )));
            }
            maps.iter()
                .enumerate()
                .map(|(j, m)| config::index_of(m, &format!("state {k}, disc {j}")))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let rows = tuples
        .par_iter()
        .map(|t| {
            let (value, stats) = amplitude_entry_with_stats(&discs, t)?;
            let exact = value.to_exact();
            Ok(json!({
                "indices": t.iter().map(report::index).collect::<Vec<_>>(),
                "value": report::scalar(&value.to_scalar()),
                "value_exact": exact.is_some(),
                "numerator": report::scalar(&value.numerator),
                "norm_sq": value.norm_sq.to_string(),
                "abs_sq": report::scalar(&value.abs_sq()),
                "insertions": stats.insertions,
                "memo_states": stats.memo_states,
                "memo_hits": stats.memo_hits,
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(json!({
        "discs": discs.len(),
        "separation_ratio": report::finite(discs.separation_ratio()),
        "regime": discs.hs_regime(),
        "entries": rows,
    }))
}

fn hsnorm(doc: &ConfigDocument, mode: Backend) -> Result<(Value, crate::amplitude::HsTable)> {
    if doc.discs.is_empty() {
        return Err(missing("discs", Command::Hsnorm));
    }
    let trunc = doc.truncation.ok_or_else(|| missing("truncation", Command::Hsnorm))?;
    let discs = config::discs_of(&doc.discs, mode)?;
    let limit = doc.limit.unwrap_or(DEFAULT_TUPLE_LIMIT);
    let table = hs_truncated_with_limit(&discs, trunc.max_mode, trunc.max_particles, limit)?;
    let rows: Vec<Value> = table
        .rows
        .iter()
        .map(|r| {
            json!({
                "total_insertions": r.total_insertions,
                "tuple_count": r.tuple_count.to_string(),
                "partial_sum": report::scalar(&r.partial_sum),
            })
        })
        .collect();
    let value = json!({
        "M": table.max_mode,
        "N": table.max_particles,
        "separation_ratio": report::finite(discs.separation_ratio()),
        "regime": table.regime,
        "bound": table.bound.as_ref().map(report::scalar),
        "monotone": table.is_monotone(),
        "within_bound": table.within_bound(),
        "memo_states": table.memo_states,
        "memo_hits": table.memo_hits,
        "rows": rows,
    });
    Ok((value, table))
}

fn verify(doc: &ConfigDocument, mode: Backend) -> (Value, bool) {
    let mut options = VerifyOptions {
        backend: mode,
        ..VerifyOptions::default()
    };
    if let Some(v) = doc.verify {
        options.seed = v.seed.unwrap_or(options.seed);
        options.samples = v.samples.unwrap_or(options.samples);
    }
    let suites = run_all(&options);
    let passed = suites.iter().all(|s| s.passed);
    let value = json!({
        "seed": options.seed,
        "samples": options.samples,
        "passed": passed,
        "suites": serde_json::to_value(&suites).expect("suite results serialize"),
    });
    (value, passed)
}

fn read_config(cli: &Cli) -> Result<ConfigDocument> {
    match &cli.config {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::Schema(format!("cannot read {}: {e}", path.display())))?
            .parse(),
        None if cli.command == Command::Verify => Ok(ConfigDocument::default()),
        None => Err(Error::Schema(format!("`{}` requires --config", cli.command.name()))),
    }
}

fn configure_threads() -> Result<()> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Error::Schema(format!("{THREADS_ENV}={raw:?} is not a positive integer")))?;
    // a second initialisation in the same process keeps the first pool
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, text).map_err(|e| Error::Schema(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn execute(cli: &Cli) -> Result<bool> {
    configure_threads()?;
    let start = Instant::now();
    let doc = read_config(cli)?;
    let mode = cli.mode.map(Backend::from).or(doc.mode).unwrap_or(Backend::Exact);
    let mut outcome = run(cli.command, &doc, mode, cli.csv)?;
    if let Some(csv) = outcome.csv.take() {
        emit(cli, &csv)?;
        return Ok(outcome.suites_passed);
    }
    if cli.timing {
        outcome.document["timing"] = json!({"total_ms": start.elapsed().as_millis().to_string()});
    }
    let mut text = serde_json::to_string_pretty(&outcome.document).expect("documents serialize");
    text.push('\n');
    emit(cli, &text)?;
    Ok(outcome.suites_passed)
}

/// Parse arguments, run, print, and return the process exit code.
pub fn main_entry<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(true) => 0,
        Ok(false) => 2,
        Err(e) => {
            let mut text = serde_json::to_string_pretty(&report::error(&e)).expect("documents serialize");
            text.push('\n');
            if emit(&cli, &text).is_err() || cli.out.is_some() {
                eprint!("{text}");
            }
            1
        }
    }
}
