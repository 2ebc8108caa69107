//! The claims ledger: one checker per documented statement, executed per
//! q with caching, plus report rendering. `run_suite` fans (q → all
//! requested claims) jobs out over a small worker pool; results are
//! sorted afterwards so output never depends on scheduling.

pub mod cache;
pub mod lab;
pub mod registry;
pub mod report;

pub use cache::{Cache, CacheKey};
pub use lab::{Lab, LabConfig, CIRCLE_SWEEP_MAX_Q, EXACT_ALPHA_CHI_MAX_Q, EXACT_OMEGA_MAX_Q};
pub use registry::{run_claim, ClaimId, ClaimStatus, ClaimVerdict, BOUND_TOLERANCE};
pub use report::{
    analyze, render_csv, render_json, render_markdown, render_verdicts_csv, AnalysisRow,
    ReportFormat, CSV_HEADER,
};

use crate::ffield::PrimePower;
use crate::qgraph::MAX_GRAPH_Q;
use std::collections::BTreeMap;
use std::sync::Mutex;

#[derive(Debug, Clone)]
pub struct SuiteOptions {
    pub config: LabConfig,
    /// None means all claims.
    pub claims: Option<Vec<ClaimId>>,
    pub cache: Cache,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            config: LabConfig::default(),
            claims: None,
            cache: Cache::disabled(),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct SuiteResult {
    pub verdicts: Vec<ClaimVerdict>,
    pub rows: Vec<AnalysisRow>,
}

/// All claims for one q, reusing cached verdicts where the (seed, budget)
/// identity matches and computing (then caching) the rest.
pub fn run_q(pp: PrimePower, opts: &SuiteOptions) -> (Vec<ClaimVerdict>, AnalysisRow) {
    let key = CacheKey {
        q: pp.q(),
        seed: opts.config.seed,
        budget_nodes: opts.config.budget.node_cap,
    };
    let wanted: Vec<ClaimId> = match &opts.claims {
        Some(filter) => filter.clone(),
        None => ClaimId::all().to_vec(),
    };
    let mut stored: BTreeMap<ClaimId, ClaimVerdict> = opts
        .cache
        .load::<Vec<ClaimVerdict>>(key, "verdicts")
        .map(|list| list.into_iter().map(|v| (v.claim, v)).collect())
        .unwrap_or_default();
    let cached_row = opts.cache.load::<AnalysisRow>(key, "analysis");

    let missing: Vec<ClaimId> = wanted
        .iter()
        .copied()
        .filter(|c| !stored.contains_key(c))
        .collect();
    let row = match (missing.is_empty(), cached_row) {
        (true, Some(row)) => row,
        (_, cached_row) => {
            let lab = Lab::new(pp, opts.config);
            for claim in missing {
                stored.insert(claim, run_claim(claim, &lab));
            }
            let row = cached_row.unwrap_or_else(|| analyze(&lab));
            opts.cache
                .store(key, "verdicts", &stored.values().collect::<Vec<_>>());
            opts.cache.store(key, "analysis", &row);
            let spectrum_json: serde_json::Value =
                serde_json::from_str(&lab.spectrum().to_json()).expect("spectrum serializes");
            opts.cache.store(key, "spectrum", &spectrum_json);
            row
        }
    };
    let verdicts = wanted
        .iter()
        .filter_map(|c| stored.get(c).cloned())
        .collect();
    (verdicts, row)
}

/// Runs the requested claims over every odd prime power in `lo..=hi`
/// (inclusive), concurrently across q up to the machine's parallelism.
pub fn run_suite(lo: u64, hi: u64, opts: &SuiteOptions) -> SuiteResult {
    let params: Vec<PrimePower> = PrimePower::range(lo, hi.min(MAX_GRAPH_Q - 1));
    let jobs = Mutex::new(params.clone().into_iter());
    let results: Mutex<Vec<(Vec<ClaimVerdict>, AnalysisRow)>> = Mutex::new(Vec::new());
    let workers = std::thread::available_parallelism()
        .map(|p| p.get())
        .unwrap_or(1)
        .min(params.len().max(1));
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let job = jobs.lock().expect("job queue").next();
                match job {
                    Some(pp) => {
                        let out = run_q(pp, opts);
                        results.lock().expect("results").push(out);
                    }
                    None => break,
                }
            });
        }
    });
    let mut collected = results.into_inner().expect("results");
    collected.sort_by_key(|(_, row)| row.q);
    let mut verdicts = Vec::new();
    let mut rows = Vec::new();
    for (mut v, row) in collected {
        v.sort_by_key(|verdict| (verdict.q, verdict.claim));
        verdicts.extend(v);
        rows.push(row);
    }
    SuiteResult { verdicts, rows }
}
