//! Command-line interface: `build` exports a graph, `analyze` prints one
//! q's invariants, `verify` runs claim checkers over a range, `report`
//! renders the aggregate table.
//!
//! Exit codes: 0 all confirmed/informational/skipped, 1 at least one
//! unacknowledged REFUTED verdict, 2 usage error, 3 internal error.

use crate::claims::{
    analyze, render_csv, render_json, render_markdown, render_verdicts_csv, Cache, ClaimId,
    ClaimStatus, Lab, LabConfig, ReportFormat, SuiteOptions,
};
use crate::combinat::Budget;
use crate::ffield::PrimePower;
use crate::qgraph::{ExportFormat, QuadranceGraph};
use clap::{Args, Parser, Subcommand};
use std::io::Write as _;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "qlab",
    about = "Exact invariants, spectra, and certified colourings of unit-quadrance graphs D_q",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build D_q and export it (DIMACS .col, edge list, or JSON).
    Build(BuildArgs),
    /// Compute the invariants of one D_q and print them.
    Analyze(AnalyzeArgs),
    /// Run claim checkers and print their verdicts.
    Verify(VerifyArgs),
    /// Render the aggregate per-q report.
    Report(ReportArgs),
}

#[derive(Args, Debug)]
pub struct BuildArgs {
    /// Field order (odd prime power, 3..=49).
    #[arg(long)]
    pub q: u64,
    /// Output format.
    #[arg(long, value_enum, default_value = "dimacs")]
    pub format: BuildFormat,
    /// Output path (stdout when omitted).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(clap::ValueEnum, Clone, Copy, Debug)]
pub enum BuildFormat {
    Dimacs,
    Edgelist,
    Json,
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    /// Field order (odd prime power, 3..=49).
    #[arg(long)]
    pub q: u64,
    #[arg(long, default_value = "markdown")]
    pub format: String,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Single field order to check.
    #[arg(long, conflicts_with = "q_range")]
    pub q: Option<u64>,
    /// Inclusive range "A..B" of field orders (default 3..9).
    #[arg(long)]
    pub q_range: Option<String>,
    /// Comma-separated claim filter, e.g. "C1,C3".
    #[arg(long)]
    pub claims: Option<String>,
    #[arg(long, default_value = "markdown")]
    pub format: String,
    /// File of acknowledged discrepancies (lines "C3@3", "C9@*").
    #[arg(long)]
    pub expect: Option<PathBuf>,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Args, Debug)]
pub struct ReportArgs {
    /// Inclusive range "A..B" of field orders (default 3..9).
    #[arg(long)]
    pub q_range: Option<String>,
    #[arg(long, default_value = "markdown")]
    pub format: String,
    #[command(flatten)]
    pub run: RunArgs,
}

/// Flags shared by everything that runs solvers.
#[derive(Args, Debug)]
pub struct RunArgs {
    /// Node-count cap for branch-and-bound searches.
    #[arg(long, default_value_t = Budget::default().node_cap)]
    pub budget_nodes: u64,
    /// Seed for the deterministic tie-breaking heuristics.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Cache directory.
    #[arg(long, default_value = "./.qcache")]
    pub cache_dir: PathBuf,
    /// Disable the on-disk cache.
    #[arg(long)]
    pub no_cache: bool,
}

impl RunArgs {
    fn lab_config(&self) -> LabConfig {
        LabConfig {
            budget: Budget {
                node_cap: self.budget_nodes,
            },
            seed: self.seed,
        }
    }

    fn cache(&self) -> Cache {
        if self.no_cache {
            Cache::disabled()
        } else {
            Cache::new(&self.cache_dir)
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Internal(_) => EXIT_INTERNAL,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Internal(m) => m,
        }
    }
}

fn parse_q(q: u64) -> Result<PrimePower, CliError> {
    PrimePower::from_order(q).map_err(|e| CliError::Usage(e.to_string()))
}

/// "A..B", inclusive on both ends.
fn parse_range(text: &str) -> Result<(u64, u64), CliError> {
    let parts: Vec<&str> = text.split("..").collect();
    let err = || {
        CliError::Usage(format!(
            "expected an inclusive range like 3..9, got {text:?}"
        ))
    };
    if parts.len() != 2 {
        return Err(err());
    }
    let lo: u64 = parts[0].trim().parse().map_err(|_| err())?;
    let hi: u64 = parts[1].trim().parse().map_err(|_| err())?;
    if lo > hi {
        return Err(err());
    }
    Ok((lo, hi))
}

fn parse_claims(text: &str) -> Result<Vec<ClaimId>, CliError> {
    text.split(',')
        .map(|tok| {
            ClaimId::parse(tok)
                .ok_or_else(|| CliError::Usage(format!("unknown claim id {tok:?} (C1..C14)")))
        })
        .collect()
}

fn parse_format(text: &str) -> Result<ReportFormat, CliError> {
    text.parse().map_err(CliError::Usage)
}

/// Acknowledged discrepancies: "C3@3" (claim at one q) or "C9@*" (all q).
fn load_expectations(path: &PathBuf) -> Result<Vec<(ClaimId, Option<u64>)>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read expect file {path:?}: {e}")))?;
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = || {
            CliError::Usage(format!(
                "expect file line {}: expected CLAIM@Q or CLAIM@*, got {line:?}",
                lineno + 1
            ))
        };
        let (claim_str, q_str) = line.split_once('@').ok_or_else(bad)?;
        let claim = ClaimId::parse(claim_str).ok_or_else(bad)?;
        let q = if q_str.trim() == "*" {
            None
        } else {
            Some(q_str.trim().parse().map_err(|_| bad())?)
        };
        out.push((claim, q));
    }
    Ok(out)
}

fn write_output(out: Option<&PathBuf>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| CliError::Internal(format!("writing {path:?}: {e}"))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(content.as_bytes())
                .map_err(|e| CliError::Internal(e.to_string()))
        }
    }
}

/// Runs one parsed command; returns the process exit code.
pub fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Build(args) => {
            let pp = parse_q(args.q)?;
            let graph = QuadranceGraph::build(pp).map_err(|e| CliError::Usage(e.to_string()))?;
            let format = match args.format {
                BuildFormat::Dimacs => ExportFormat::Dimacs,
                BuildFormat::Edgelist => ExportFormat::EdgeList,
                BuildFormat::Json => ExportFormat::Json,
            };
            write_output(args.out.as_ref(), &graph.export(format))?;
            Ok(EXIT_OK)
        }
        Command::Analyze(args) => {
            let pp = parse_q(args.q)?;
            let format = parse_format(&args.format)?;
            if pp.q() > crate::qgraph::MAX_GRAPH_Q {
                return Err(CliError::Usage(format!(
                    "q = {} exceeds the graph cap",
                    pp.q()
                )));
            }
            let lab = Lab::new(pp, args.run.lab_config());
            let row = analyze(&lab);
            let key = crate::claims::CacheKey {
                q: pp.q(),
                seed: args.run.seed,
                budget_nodes: args.run.budget_nodes,
            };
            let cache = args.run.cache();
            cache.store(key, "analysis", &row);
            let spectrum_json: serde_json::Value =
                serde_json::from_str(&lab.spectrum().to_json()).expect("spectrum serializes");
            cache.store(key, "spectrum", &spectrum_json);
            let rows = [row];
            let text = match format {
                ReportFormat::Markdown => render_markdown(&rows, &[]),
                ReportFormat::Json => render_json(&rows, &[]),
                ReportFormat::Csv => render_csv(&rows, &[]),
            };
            write_output(None, &text)?;
            Ok(EXIT_OK)
        }
        Command::Verify(args) => {
            let (lo, hi) = match (&args.q, &args.q_range) {
                (Some(q), _) => (*q, *q),
                (None, Some(range)) => parse_range(range)?,
                (None, None) => (3, 9),
            };
            let format = parse_format(&args.format)?;
            let claims = args.claims.as_deref().map(parse_claims).transpose()?;
            let expectations = args
                .expect
                .as_ref()
                .map(load_expectations)
                .transpose()?
                .unwrap_or_default();
            let opts = SuiteOptions {
                config: args.run.lab_config(),
                claims,
                cache: args.run.cache(),
            };
            let result = crate::claims::run_suite(lo, hi, &opts);
            let text = match format {
                ReportFormat::Markdown => render_markdown(&[], &result.verdicts),
                ReportFormat::Json => render_json(&[], &result.verdicts),
                ReportFormat::Csv => render_verdicts_csv(&result.verdicts),
            };
            write_output(None, &text)?;
            let unexpected_refutation = result.verdicts.iter().any(|v| {
                v.status == ClaimStatus::Refuted
                    && !expectations
                        .iter()
                        .any(|(c, q)| *c == v.claim && (q.is_none() || *q == Some(v.q)))
            });
            Ok(if unexpected_refutation {
                EXIT_REFUTED
            } else {
                EXIT_OK
            })
        }
        Command::Report(args) => {
            let (lo, hi) = match &args.q_range {
                Some(range) => parse_range(range)?,
                None => (3, 9),
            };
            let format = parse_format(&args.format)?;
            let opts = SuiteOptions {
                config: args.run.lab_config(),
                claims: None,
                cache: args.run.cache(),
            };
            let result = crate::claims::run_suite(lo, hi, &opts);
            let text = match format {
                ReportFormat::Markdown => render_markdown(&result.rows, &result.verdicts),
                ReportFormat::Json => render_json(&result.rows, &result.verdicts),
                ReportFormat::Csv => render_csv(&result.rows, &result.verdicts),
            };
            write_output(None, &text)?;
            Ok(EXIT_OK)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_parsing() {
        assert_eq!(parse_range("3..9").unwrap(), (3, 9));
        assert_eq!(parse_range(" 5 .. 7 ").unwrap(), (5, 7));
        assert!(parse_range("9..3").is_err());
        assert!(parse_range("3-9").is_err());
        assert!(parse_range("3..x").is_err());
    }

    #[test]
    fn claim_list_parsing() {
        assert_eq!(
            parse_claims("C1,c3").unwrap(),
            vec![ClaimId::C1, ClaimId::C3]
        );
        assert!(parse_claims("C1,C99").is_err());
    }

    #[test]
    fn cli_parses_verify() {
        let cli = Cli::try_parse_from([
            "qlab",
            "verify",
            "--q-range",
            "3..9",
            "--seed",
            "0",
            "--claims",
            "C1,C2",
        ])
        .unwrap();
        match cli.command {
            Command::Verify(args) => {
                assert_eq!(args.q_range.as_deref(), Some("3..9"));
                assert_eq!(args.run.seed, 0);
            }
            other => panic!("wrong command {other:?}"),
        }
    }
}
