//! Commands behind the `ivtrnn` binary.
//!
//! Each command takes file contents rather than paths and returns the text
//! destined for standard output and standard error, so the binary is a thin
//! shell around these functions.

pub mod problem;

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::Error;
use crate::madm::{rank_alternatives, CellWarning, RankingReport};
use crate::number::{Channel, Ivtrnn, Level};
use crate::ranking::{accuracy, ivtrnwaa, score, WeightVector};
use crate::reference::{reconcile_aggregation, reconcile_scores, reference_dataset, Regime};
use crate::round_half_even;

pub use problem::{DecisionProblem, IvtrnnLiteral, NumbersFile, ProblemFile, WeightOverrides};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation error: {0}")]
    Validation(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Validation(_) => 3,
            CliError::Internal(_) => 4,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Parse(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Table,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct DisplayOptions {
    pub format: Format,
    /// Decimal places for table output; JSON always carries full precision.
    pub precision: Option<usize>,
}

impl DisplayOptions {
    fn places(&self, fallback: usize) -> usize {
        self.precision.unwrap_or(fallback)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
}

pub type CmdResult = std::result::Result<Output, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReproduceTable {
    Combined,
    Scores,
}

impl ReproduceTable {
    pub fn from_number(n: u8) -> Option<Self> {
        match n {
            4 => Some(Self::Combined),
            5 => Some(Self::Scores),
            _ => None,
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> std::result::Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| CliError::Internal(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn fmt_f(x: f64, p: usize) -> String {
    format!("{:.p$}", round_half_even(x, p as u32))
}

fn warning_text(warnings: &[CellWarning]) -> String {
    let mut s = String::new();
    for w in warnings {
        for v in &w.violations {
            let _ = writeln!(s, "warning: {}/{}: lower not contained in upper: {v}", w.alternative, w.criterion);
        }
    }
    s
}

pub fn render_ranking(report: &RankingReport, places: usize) -> String {
    let name_w = report.results.iter().map(|r| r.name.len()).max().unwrap_or(0).max("alternative".len());
    let num_w = places + 3;
    let mut s = String::new();
    let _ = writeln!(s, "{:<4}  {:<name_w$}  {:>num_w$}  {:>num_w$}", "rank", "alternative", "score", "accuracy");
    for name in &report.ordering {
        let r = report.get(name).expect("ordering names a result");
        let tie = if report.is_tied(name) { "  (tie)" } else { "" };
        let _ = writeln!(
            s,
            "{:<4}  {:<name_w$}  {:>num_w$}  {:>num_w$}{tie}",
            r.rank,
            r.name,
            fmt_f(r.score, places),
            fmt_f(r.accuracy, places)
        );
    }
    let _ = writeln!(s, "ordering: {}", report.ordering.join(" > "));
    let _ = writeln!(s, "best: {}", report.best().name);
    s
}

fn load_problem(text: &str, overrides: &WeightOverrides) -> std::result::Result<DecisionProblem, CliError> {
    Ok(ProblemFile::parse(text)?.validate(overrides)?)
}

pub fn cmd_rank(text: &str, overrides: &WeightOverrides, display: DisplayOptions) -> CmdResult {
    let problem = load_problem(text, overrides)?;
    let report = rank_alternatives(&problem.matrix, &problem.weights)?;
    let warnings = problem.matrix.inclusion_warnings();
    let stderr = if warnings.is_empty() {
        String::new()
    } else {
        format!("warning: {} cell(s) violate lower-within-upper inclusion; run `validate` for details\n", warnings.len())
    };
    let stdout = match display.format {
        Format::Json => to_json(&report)?,
        Format::Table => render_ranking(&report, display.places(problem.precision)),
    };
    Ok(Output { stdout, stderr })
}

pub fn cmd_validate(text: &str, overrides: &WeightOverrides, display: DisplayOptions) -> CmdResult {
    let problem = load_problem(text, overrides)?;
    let warnings = problem.matrix.inclusion_warnings();
    let stdout = match display.format {
        Format::Json => to_json(&serde_json::json!({
            "valid": true,
            "alternatives": problem.matrix.alternatives().len(),
            "criteria": problem.matrix.criteria().len(),
            "weight_mode": problem.weights.mode(),
            "warnings": warnings,
        }))?,
        Format::Table => format!(
            "ok: {} alternatives, {} criteria, {} weights, {} warning(s)\n",
            problem.matrix.alternatives().len(),
            problem.matrix.criteria().len(),
            serde_json::to_value(problem.weights.mode()).ok().and_then(|v| v.as_str().map(str::to_owned)).unwrap_or_default(),
            warnings.len()
        ),
    };
    Ok(Output { stdout, stderr: warning_text(&warnings) })
}

#[derive(Debug, Serialize)]
struct ScoreOut {
    score: f64,
    accuracy: f64,
}

pub fn cmd_score(text: &str, display: DisplayOptions) -> CmdResult {
    let literal: IvtrnnLiteral = serde_json::from_str(text)?;
    let n = literal.validate()?;
    let out = ScoreOut { score: score(&n), accuracy: accuracy(&n) };
    let stdout = match display.format {
        Format::Json => to_json(&out)?,
        Format::Table => {
            let p = display.places(problem::DEFAULT_PRECISION);
            format!("S = {}\nH = {}\n", fmt_f(out.score, p), fmt_f(out.accuracy, p))
        }
    };
    Ok(Output { stdout, stderr: String::new() })
}

#[derive(Debug, Serialize)]
struct AggOut {
    aggregated: Ivtrnn,
    weights: WeightVector,
    score: f64,
    accuracy: f64,
}

pub fn cmd_agg(text: &str, overrides: &WeightOverrides, display: DisplayOptions) -> CmdResult {
    let file: NumbersFile = serde_json::from_str(text)?;
    let (literals, file_weights, mode) = file.into_parts();
    let numbers = literals.into_iter().map(IvtrnnLiteral::validate).collect::<Result<Vec<_>, _>>()?;
    let weights = overrides.resolve(file_weights, mode)?;
    let aggregated = ivtrnwaa(&numbers, &weights)?;
    let out = AggOut { aggregated, score: score(&aggregated), accuracy: accuracy(&aggregated), weights };
    let stdout = match display.format {
        Format::Json => to_json(&out)?,
        Format::Table => {
            let p = display.places(problem::DEFAULT_PRECISION);
            let mut s = String::new();
            let _ = writeln!(s, "lower: {:.p$}", out.aggregated.lower);
            let _ = writeln!(s, "upper: {:.p$}", out.aggregated.upper);
            let _ = writeln!(s, "S = {}\nH = {}", fmt_f(out.score, p), fmt_f(out.accuracy, p));
            s
        }
    };
    Ok(Output { stdout, stderr: String::new() })
}

fn block_line(level: Level, channel: Channel) -> String {
    format!("{} {}", level.name(), channel.name())
}

pub fn cmd_reproduce(table: ReproduceTable, regime: Regime, display: DisplayOptions) -> CmdResult {
    let data = reference_dataset();
    let p = display.places(problem::DEFAULT_PRECISION);
    match table {
        ReproduceTable::Combined => {
            let rec = reconcile_aggregation(&data, regime);
            if display.format == Format::Json {
                return Ok(Output { stdout: to_json(&rec)?, stderr: String::new() });
            }
            let mut s = String::new();
            let weights: Vec<String> = rec.weights.iter().map(|w| w.to_string()).collect();
            let _ = writeln!(s, "combined numbers, regime {} (weights {})", regime.name(), weights.join(", "));
            for row in &rec.rows {
                let _ = writeln!(s, "{} {}", row.alternative, row.verdict.as_str());
                for b in &row.blocks {
                    let computed = b.computed.map(|v| fmt_f(v, p)).join(", ");
                    let published = b.published.map(|v| fmt_f(v, p)).join(", ");
                    let _ = writeln!(
                        s,
                        "  {:<19} computed ({computed})  published ({published})  max delta {:.2e}{}",
                        block_line(b.level, b.channel),
                        b.max_delta,
                        if b.matches { "" } else { "  *" }
                    );
                }
            }
            let matching = rec.matching();
            let mismatching: Vec<&str> =
                rec.rows.iter().filter(|r| !matching.contains(&r.alternative.as_str())).map(|r| r.alternative.as_str()).collect();
            let _ = writeln!(s, "MATCH: {}", if matching.is_empty() { "none".into() } else { matching.join(" ") });
            let _ = writeln!(s, "MISMATCH: {}", if mismatching.is_empty() { "none".into() } else { mismatching.join(" ") });
            for e in &data.errata {
                let _ = writeln!(
                    s,
                    "note: {} {} {} printed as {:?}, read as {:?}",
                    e.alternative,
                    e.level.name(),
                    e.channel.name(),
                    e.verbatim,
                    e.canonical
                );
            }
            Ok(Output { stdout: s, stderr: String::new() })
        }
        ReproduceTable::Scores => {
            let rec = reconcile_scores(&data);
            if display.format == Format::Json {
                return Ok(Output { stdout: to_json(&rec)?, stderr: String::new() });
            }
            let mut s = String::new();
            let _ = writeln!(s, "{:<11}  {:>9}  {:>9}  {:>9}  verdict   consistent", "alternative", "computed", "published", "delta");
            for r in &rec.rows {
                let _ = writeln!(
                    s,
                    "{:<11}  {:>9}  {:>9}  {:>+9.5}  {:<8}  {}",
                    r.alternative,
                    fmt_f(r.recomputed, p),
                    fmt_f(r.published, p),
                    r.delta,
                    r.verdict.as_str(),
                    if r.consistent { "yes" } else { "no" }
                );
            }
            let _ = writeln!(s, "computed ordering:  {}", rec.recomputed_ordering.join(" > "));
            let _ = writeln!(s, "published ordering: {}", rec.published_ordering.join(" > "));
            let _ = writeln!(s, "ordering {}", if rec.ordering_agrees { "MATCH" } else { "MISMATCH" });
            Ok(Output { stdout: s, stderr: String::new() })
        }
    }
}

/// Parses a `w1,w2,...` list.
pub fn parse_weight_list(s: &str) -> std::result::Result<Vec<f64>, CliError> {
    s.split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|e| CliError::Parse(format!("weight {t:?}: {e}"))))
        .collect()
}
