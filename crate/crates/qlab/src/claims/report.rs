//! Per-q analysis rows and the three report renderers. Column order and
//! float formatting are frozen so that identical inputs produce
//! byte-identical output.

use crate::claims::lab::Lab;
use crate::claims::registry::{r6, ClaimStatus, ClaimVerdict};
use crate::combinat::{
    achromatic_upper_bound, complete_coloring_heuristic, splitmix64, ObstructionConclusion,
};
use crate::spectra::{hoffman_lower, ratio_theta};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

/// One graph's invariants, ready for rendering. Option fields are empty
/// when out of exactness scope; floats are pre-rounded to 6 decimals.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisRow {
    pub q: u64,
    pub p: u64,
    pub n: u32,
    pub order: usize,
    pub delta: usize,
    pub edges: usize,
    pub triangles: Option<u64>,
    pub omega: Option<usize>,
    pub omega_exact: bool,
    pub alpha: Option<usize>,
    pub alpha_exact: bool,
    pub chi_lo: Option<usize>,
    pub chi_hi: Option<usize>,
    pub chi_exact: Option<usize>,
    pub chi_edge: Option<usize>,
    pub lambda_min: f64,
    pub lambda_max_nontrivial: f64,
    pub ratio_theta: f64,
    pub hoffman_lower: f64,
    pub psi_upper: u64,
    pub psi_witness: Option<usize>,
}

/// Builds the row from a lab context (reusing its memoized solvers).
pub fn analyze(lab: &Lab) -> AnalysisRow {
    let g = lab.graph();
    let stats = g.stats();
    let spectrum = lab.spectrum();
    let chromatic = lab.chromatic();
    let (edge_cert, obstruction) = lab.edge_coloring();
    let chi_edge = match obstruction.conclusion {
        ObstructionConclusion::ChiPrimeIsDeltaPlusOne { delta } => Some(delta + 1),
        ObstructionConclusion::Inapplicable => Some(edge_cert.num_colors),
    };
    let psi_witness = (0..8u64)
        .filter_map(|round| {
            let seed = splitmix64(lab.config.seed ^ (0xC10 + round));
            complete_coloring_heuristic(g.graph(), seed, 2).map(|c| c.num_colors)
        })
        .max();
    AnalysisRow {
        q: stats.q,
        p: stats.p,
        n: stats.n,
        order: stats.order,
        delta: stats.degree,
        edges: stats.edges,
        triangles: lab.triangles().map(|(count, _)| count),
        omega: lab.clique().map(|o| o.size()),
        omega_exact: lab.omega_exact().is_some(),
        alpha: {
            let (size, _) = lab.alpha_witness();
            Some(size)
        },
        alpha_exact: lab.alpha_exact().is_some(),
        chi_lo: chromatic.map(|c| c.lower),
        chi_hi: chromatic.map(|c| c.upper),
        chi_exact: lab.chi_exact(),
        chi_edge,
        lambda_min: r6(spectrum.lambda_min()),
        lambda_max_nontrivial: r6(spectrum.max_abs_nontrivial()),
        ratio_theta: r6(ratio_theta(spectrum).expect("D_q has edges")),
        hoffman_lower: r6(hoffman_lower(spectrum).expect("D_q has edges")),
        psi_upper: achromatic_upper_bound(stats.q, stats.degree as u64),
        psi_witness,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportFormat {
    Markdown,
    Json,
    Csv,
}

impl std::str::FromStr for ReportFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "markdown" | "md" => Ok(ReportFormat::Markdown),
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            other => Err(format!("unknown format {other:?} (markdown|json|csv)")),
        }
    }
}

/// Frozen CSV schema; the leading columns are stable API.
pub const CSV_HEADER: &str = "q,p,n,delta,triangles,omega,alpha,chi_lo,chi_hi,chi_exact,chi_edge,lambda_min,ratio_theta,hoffman_lower,lambda_max_nontrivial,omega_exact,alpha_exact,psi_upper,psi_witness,claims_confirmed,claims_refuted,claims_skipped,claims_informational";

fn opt<T: std::fmt::Display>(v: &Option<T>) -> String {
    v.as_ref().map(|x| x.to_string()).unwrap_or_default()
}

fn f6(x: f64) -> String {
    format!("{x:.6}")
}

/// Status counts for one q.
fn tally(q: u64, verdicts: &[ClaimVerdict]) -> (usize, usize, usize, usize) {
    let mut t = (0, 0, 0, 0);
    for v in verdicts.iter().filter(|v| v.q == q) {
        match v.status {
            ClaimStatus::Confirmed => t.0 += 1,
            ClaimStatus::Refuted => t.1 += 1,
            ClaimStatus::Skipped(_) => t.2 += 1,
            ClaimStatus::Informational => t.3 += 1,
        }
    }
    t
}

pub fn render_csv(rows: &[AnalysisRow], verdicts: &[ClaimVerdict]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let (c, rf, s, i) = tally(r.q, verdicts);
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            r.q,
            r.p,
            r.n,
            r.delta,
            opt(&r.triangles),
            opt(&r.omega),
            opt(&r.alpha),
            opt(&r.chi_lo),
            opt(&r.chi_hi),
            opt(&r.chi_exact),
            opt(&r.chi_edge),
            f6(r.lambda_min),
            f6(r.ratio_theta),
            f6(r.hoffman_lower),
            f6(r.lambda_max_nontrivial),
            r.omega_exact,
            r.alpha_exact,
            r.psi_upper,
            opt(&r.psi_witness),
            c,
            rf,
            s,
            i
        );
    }
    out
}

/// CSV of the verdicts themselves (claim, q, status, summary).
pub fn render_verdicts_csv(verdicts: &[ClaimVerdict]) -> String {
    let mut out = String::from("claim,q,status,summary\n");
    for v in verdicts {
        let summary = v.summary.replace('"', "\"\"");
        let _ = writeln!(out, "{},{},{},\"{}\"", v.claim, v.q, v.status, summary);
    }
    out
}

#[derive(Serialize)]
struct JsonReport<'a> {
    schema_version: u32,
    rows: &'a [AnalysisRow],
    verdicts: &'a [ClaimVerdict],
}

pub fn render_json(rows: &[AnalysisRow], verdicts: &[ClaimVerdict]) -> String {
    serde_json::to_string_pretty(&JsonReport {
        schema_version: 1,
        rows,
        verdicts,
    })
    .expect("report serializes")
}

pub fn render_markdown(rows: &[AnalysisRow], verdicts: &[ClaimVerdict]) -> String {
    let mut out = String::new();
    out.push_str("# Unit-quadrance graph verification report\n\n");
    if !rows.is_empty() {
        out.push_str("## Invariants\n\n");
        out.push_str(
            "| q | Δ | edges | triangles | ω | α | χ | χ′ | ψ≤ | λ_min | ratio θ | Hoffman |\n",
        );
        out.push_str(
            "|---|---|-------|-----------|---|---|---|----|----|-------|---------|--------|\n",
        );
        for r in rows {
            let chi = match (r.chi_exact, r.chi_lo, r.chi_hi) {
                (Some(x), _, _) => x.to_string(),
                (None, Some(lo), Some(hi)) => format!("[{lo},{hi}]"),
                _ => String::new(),
            };
            let fmt_exact = |v: &Option<usize>, exact: bool| match v {
                Some(x) if exact => x.to_string(),
                Some(x) => format!(">={x}"),
                None => String::new(),
            };
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} |",
                r.q,
                r.delta,
                r.edges,
                opt(&r.triangles),
                fmt_exact(&r.omega, r.omega_exact),
                fmt_exact(&r.alpha, r.alpha_exact),
                chi,
                opt(&r.chi_edge),
                r.psi_upper,
                f6(r.lambda_min),
                f6(r.ratio_theta),
                f6(r.hoffman_lower),
            );
        }
        out.push('\n');
    }
    if !verdicts.is_empty() {
        out.push_str("## Claim verdicts\n\n");
        out.push_str("| claim | q | status | summary |\n");
        out.push_str("|-------|---|--------|---------|\n");
        for v in verdicts {
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} |",
                v.claim, v.q, v.status, v.summary
            );
        }
        out.push('\n');
        out.push_str("## Claim registry\n\n");
        let mut listed: Vec<_> = verdicts.iter().map(|v| v.claim).collect();
        listed.sort_unstable();
        listed.dedup();
        for claim in listed {
            let _ = writeln!(
                out,
                "- **{}** — {} ({})",
                claim,
                claim.description(),
                claim.exactness_scope()
            );
        }
    }
    out
}
