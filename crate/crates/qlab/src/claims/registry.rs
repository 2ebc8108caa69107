//! The claim ledger: fourteen checkers, one per documented statement
//! about D_q, each declaring its own applicability gate and exactness
//! scope. A checker only returns CONFIRMED or REFUTED on exhaustive or
//! certificate-backed evidence; heuristic-only evidence yields
//! INFORMATIONAL, and out-of-scope or out-of-hypothesis cases yield
//! SKIPPED with the reason.

use crate::claims::lab::{Lab, CIRCLE_SWEEP_MAX_Q, EXACT_OMEGA_MAX_Q};
use crate::combinat::{
    achromatic_bounds, achromatic_upper_bound, choice_bound_eval, complete_coloring_heuristic,
    exact_achromatic, ramsey_witness, splitmix64, verify_coloring, verify_edge_coloring,
    ObstructionConclusion, PerfectionStatus,
};
use crate::geometry::{point_at, predicted_intersections, quadrance, Point};
use crate::qgraph::{ExportFormat, QuadranceGraph};
use crate::spectra::{eigenvalue_bound_check, ratio_theta, theorem1_bounds};
use serde::{Deserialize, Serialize};
use serde_json::json;
use std::fmt;
use std::time::Instant;

/// Comparison tolerance for real-valued bound checks.
pub const BOUND_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ClaimId {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    C8,
    C9,
    C10,
    C11,
    C12,
    C13,
    C14,
}

impl ClaimId {
    pub fn all() -> [ClaimId; 14] {
        use ClaimId::*;
        [C1, C2, C3, C4, C5, C6, C7, C8, C9, C10, C11, C12, C13, C14]
    }

    pub fn description(self) -> &'static str {
        match self {
            ClaimId::C1 => "degree formula: D_q is regular of degree q - (-1)^((q-1)/2)",
            ClaimId::C2 => "triangle-freeness for prime q = 12k +- 7",
            ClaimId::C3 => "every eigenvalue other than the degree has |lambda| <= sqrt(q)",
            ClaimId::C4 => "circle-intersection law: counts follow the square class of f(i,j,k)",
            ClaimId::C5 => "ratio bound: theta(D_q) <= q^(3/2), and alpha <= ratio bound",
            ClaimId::C6 => "chromatic sandwich: 1 + degree/sqrt(q) <= chi <= (p^n + p^(n-1))/2",
            ClaimId::C7 => "D_q is not perfect except D_3",
            ClaimId::C8 => "clique number omega(D_q) <= 4",
            ClaimId::C9 => "edge-chromatic number: displayed value q - (-1)^((q-1)/2)",
            ClaimId::C10 => "achromatic bounds: q + 1 <= psi(D_q), and m(m-1) <= q^2 * degree",
            ClaimId::C11 => "D_q contains an odd cycle (stated with length q)",
            ClaimId::C12 => "triangle-free family with chromatic number >= 1 + (q-1)/sqrt(q)",
            ClaimId::C13 => "Ramsey witness: R(floor(U)+1, 3) > q^2",
            ClaimId::C14 => "choice number: ch(D_q) <= (1+gamma) q^2 / log2(q) asymptotically",
        }
    }

    /// Where the checker's evidence is exact, as opposed to skipped or
    /// heuristic-only.
    pub fn exactness_scope(self) -> &'static str {
        match self {
            ClaimId::C1 | ClaimId::C3 | ClaimId::C9 | ClaimId::C11 => {
                "exact for every buildable q (<= 49)"
            }
            ClaimId::C2 | ClaimId::C7 | ClaimId::C8 => "exact for q <= 27",
            ClaimId::C4 => "exhaustive sweep for q <= 13",
            ClaimId::C5 => "ratio bound exact everywhere; alpha cross-check exact for q <= 9",
            ClaimId::C6 | ClaimId::C12 => "adjudicated where chi is certified (q <= 9)",
            ClaimId::C10 => "exact psi at q = 3; witness-certified lower bounds elsewhere",
            ClaimId::C13 => "certificate-backed wherever the hypothesis holds",
            ClaimId::C14 => "informational at every fixed q (the threshold is unquantified)",
        }
    }

    pub fn parse(s: &str) -> Option<ClaimId> {
        ClaimId::all()
            .into_iter()
            .find(|c| c.to_string().eq_ignore_ascii_case(s.trim()))
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "reason")]
pub enum ClaimStatus {
    #[serde(rename = "CONFIRMED")]
    Confirmed,
    #[serde(rename = "REFUTED")]
    Refuted,
    #[serde(rename = "SKIPPED")]
    Skipped(String),
    #[serde(rename = "INFORMATIONAL")]
    Informational,
}

impl fmt::Display for ClaimStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClaimStatus::Confirmed => write!(f, "CONFIRMED"),
            ClaimStatus::Refuted => write!(f, "REFUTED"),
            ClaimStatus::Skipped(reason) => write!(f, "SKIPPED({reason})"),
            ClaimStatus::Informational => write!(f, "INFORMATIONAL"),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClaimVerdict {
    pub claim: ClaimId,
    pub q: u64,
    pub status: ClaimStatus,
    pub summary: String,
    pub evidence: serde_json::Value,
    /// Measured, not part of any serialized report (reports must be
    /// byte-identical across runs) nor of equality.
    #[serde(skip)]
    pub wall_time_ms: f64,
}

impl PartialEq for ClaimVerdict {
    fn eq(&self, other: &Self) -> bool {
        self.claim == other.claim
            && self.q == other.q
            && self.status == other.status
            && self.summary == other.summary
            && self.evidence == other.evidence
    }
}

/// Rounds for stable report output.
pub fn r6(x: f64) -> f64 {
    (x * 1e6).round() / 1e6
}

pub fn run_claim(claim: ClaimId, lab: &Lab) -> ClaimVerdict {
    let start = Instant::now();
    let (status, summary, evidence) = dispatch(claim, lab);
    ClaimVerdict {
        claim,
        q: lab.q(),
        status,
        summary,
        evidence,
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

fn dispatch(claim: ClaimId, lab: &Lab) -> (ClaimStatus, String, serde_json::Value) {
    match claim {
        ClaimId::C1 => c1_degree(lab),
        ClaimId::C2 => c2_triangle_free(lab),
        ClaimId::C3 => c3_eigenvalue_bound(lab),
        ClaimId::C4 => c4_circle_law(lab),
        ClaimId::C5 => c5_ratio_theta(lab),
        ClaimId::C6 => c6_chromatic_sandwich(lab),
        ClaimId::C7 => c7_perfection(lab),
        ClaimId::C8 => c8_omega_at_most_4(lab),
        ClaimId::C9 => c9_edge_chromatic(lab),
        ClaimId::C10 => c10_achromatic(lab),
        ClaimId::C11 => c11_odd_cycle(lab),
        ClaimId::C12 => c12_triangle_free_family(lab),
        ClaimId::C13 => c13_ramsey(lab),
        ClaimId::C14 => c14_choice_number(lab),
    }
}

fn is_pm7_mod_12_prime(lab: &Lab) -> bool {
    let q = lab.q();
    lab.params().n() == 1 && (q % 12 == 5 || q % 12 == 7)
}

fn c1_degree(lab: &Lab) -> (ClaimStatus, String, serde_json::Value) {
    let check = lab.graph().degree_check();
    let status = if check.ok {
        ClaimStatus::Confirmed
    } else {
        ClaimStatus::Refuted
    };
    let summary = format!(
        "expected degree {}, observed {}..{}",
        check.expected, check.observed_min, check.observed_max
    );
    (status, summary, json!(check))
}

fn c2_triangle_free(lab: &Lab) -> (ClaimStatus, String, serde_json::Value) {
    let q = lab.q();
    if !is_pm7_mod_12_prime(lab) {
        return (
            ClaimStatus::Skipped(format!("q = {q} is not a prime congruent to +-7 mod 12")),
            "hypothesis not met".into(),
            json!({"q_mod_12": q % 12, "prime": lab.params().n() == 1}),
        );
    }
    let Some((count, witness)) = lab.triangles() else {
        return (
            ClaimStatus::Skipped(format!(
                "triangle counting scoped to q <= {EXACT_OMEGA_MAX_Q}"
            )),
            "out of exact scope".into(),
            json!(null),
        );
    };
    let status = if count == 0 {
        ClaimStatus::Confirmed
    } else {
        ClaimStatus::Refuted
    };
    (
        status,
        format!("exhaustive count: {count} triangles"),
        json!({"triangles": count, "witness": witness}),
    )
}

fn c3_eigenvalue_bound(lab: &Lab) -> (ClaimStatus, String, serde_json::Value) {
    let check = eigenvalue_bound_check(lab.spectrum(), lab.q());
    let status = if check.holds_sqrt_q {
        ClaimStatus::Confirmed
    } else {
        ClaimStatus::Refuted
    };
    let summary = format!(
        "max |lambda| (nontrivial) = {:.6}; sqrt(q) = {:.6} ({}); 2*sqrt(q) holds: {}",
        check.max_abs_nontrivial,
        check.sqrt_q,
        if check.holds_sqrt_q {
            "holds"
        } else {
            "violated"
        },
        check.holds_2sqrt_q
    );
    (
        status,
        summary,
        json!({
            "max_abs_nontrivial": r6(check.max_abs_nontrivial),
            "sqrt_q": r6(check.sqrt_q),
            "two_sqrt_q": r6(check.two_sqrt_q),
            "holds_sqrt_q": check.holds_sqrt_q,
            "holds_2sqrt_q": check.holds_2sqrt_q,
        }),
    )
}

fn c4_circle_law(lab: &Lab) -> (ClaimStatus, String, serde_json::Value) {
    let q = lab.q();
    if q > CIRCLE_SWEEP_MAX_Q {
        return (
            ClaimStatus::Skipped(format!(
                "exhaustive sweep scoped to q <= {CIRCLE_SWEEP_MAX_Q}"
            )),
            "out of sweep scope".into(),
            json!(null),
        );
    }
    let g = lab.graph();
    let f = g.field();
    let origin = Point::new(f.zero(), f.zero());
    let mut checked: u64 = 0;
    let mut mismatches: u64 = 0;
    let mut first_mismatch = None;
    // For each Y (so each realizable k != 0), histogram all q^2 points by
    // (Q(origin, Z), Q(Y, Z)); the (i, j) cell is exactly the size of the
    // intersection of the two circles.
    for yi in 1..q * q {
        let y = point_at(f, yi as usize);
        let k = quadrance(f, origin, y);
        if f.is_zero(k) {
            continue;
        }
        let mut hist = vec![0u32; (q * q) as usize];
        for zi in 0..q * q {
            let z = point_at(f, zi as usize);
            let i = f.index_of(quadrance(f, origin, z));
            let j = f.index_of(quadrance(f, y, z));
            hist[(i * q + j) as usize] += 1;
        }
        for ii in 1..q {
            for jj in 1..q {
                let predicted = predicted_intersections(f, f.element(ii), f.element(jj), k)
                    .expect("nonzero arguments")
                    .count();
                let counted = hist[(ii * q + jj) as usize] as usize;
                checked += 1;
                if counted != predicted && first_mismatch.is_none() {
                    first_mismatch = Some(json!({
                        "i": ii, "j": jj, "k": f.index_of(k), "y": yi,
                        "counted": counted, "predicted": predicted,
                    }));
                }
                if counted != predicted {
                    mismatches += 1;
                }
            }
        }
    }
    let status = if mismatches == 0 {
        ClaimStatus::Confirmed
    } else {
        ClaimStatus::Refuted
    };
    (
        status,
        format!("{checked} (i, j, Y) cases checked, {mismatches} mismatches"),
        json!({"checked": checked, "mismatches": mismatches, "first_mismatch": first_mismatch}),
    )
}

fn c5_ratio_theta(lab: &Lab) -> (ClaimStatus, String, serde_json::Value) {
    let spectrum = lab.spectrum();
    let ratio = ratio_theta(spectrum).expect("D_q has edges");
    let ceiling = (lab.q() as f64).powf(1.5);
    let alpha = lab.alpha_exact();
    let ratio_ok = ratio <= ceiling + BOUND_TOLERANCE;
    let alpha_ok = alpha.map(|a| a as f64 <= ratio + BOUND_TOLERANCE);
    let status = if ratio_ok && alpha_ok != Some(false) {
        ClaimStatus::Confirmed
    } else {
        ClaimStatus::Refuted
    };
    let alpha_note = match alpha {
        Some(a) => format!("exact alpha = {a} <= ratio"),
        None => "alpha beyond exact scope (alpha <= ratio holds unconditionally)".to_string(),
    };
    let summary = if ratio_ok {
        format!("ratio bound {ratio:.6} <= q^(3/2) = {ceiling:.6}; {alpha_note}")
    } else {
        format!(
            "ratio bound {ratio:.6} computed from the true lambda_min exceeds q^(3/2) = \
             {ceiling:.6}, so the stated chain does not go through; {alpha_note}"
        )
    };
    (
        status,
        summary,
        json!({
            "ratio_theta": r6(ratio),
            "q_three_halves": r6(ceiling),
            "ratio_within_ceiling": ratio_ok,
            "alpha_exact": alpha,
            "alpha_within_ratio": alpha_ok,
        }),
    )
}

fn c6_chromatic_sandwich(lab: &Lab) -> (ClaimStatus, String, serde_json::Value) {
    let q = lab.q();
    if q <= 3 {
        return (
            ClaimStatus::Skipped("the sandwich is stated for q > 3".into()),
            "hypothesis not met".into(),
            json!(null),
        );
    }
    let bounds = theorem1_bounds(lab.params()).expect("q > 3");
    let Some(chromatic) = lab.chromatic() else {
        return (
            ClaimStatus::Skipped("chi beyond exact scope (q > 9)".into()),
            format!(
                "closed forms only: lower {:.6}, variant {:.6}, upper {:.6}",
                bounds.lower_as_stated, bounds.lower_variant, bounds.upper
            ),
            json!({
                "lower_as_stated": r6(bounds.lower_as_stated),
                "lower_variant": r6(bounds.lower_variant),
                "upper": r6(bounds.upper),
            }),
        );
    };
    let lo = chromatic.lower as f64;
    let hi = chromatic.upper as f64;
    // chi_true lies in [lo, hi] with both ends certificate-backed.
    let lower_part = if bounds.lower_as_stated <= lo + BOUND_TOLERANCE {
        Some(true)
    } else if bounds.lower_as_stated > hi + BOUND_TOLERANCE {
        Some(false)
    } else {
        None
    };
    let upper_part = if hi <= bounds.upper + BOUND_TOLERANCE {
        Some(true)
    } else if lo > bounds.upper + BOUND_TOLERANCE {
        Some(false)
    } else {
        None
    };
    let status = match (lower_part, upper_part) {
        (Some(true), Some(true)) => ClaimStatus::Confirmed,
        (Some(false), _) | (_, Some(false)) => ClaimStatus::Refuted,
        _ => ClaimStatus::Skipped("chromatic interval too wide to adjudicate".into()),
    };
    let chi_str = match chromatic.exact_value() {
        Some(v) => format!("chi = {v}"),
        None => format!("chi in [{}, {}]", chromatic.lower, chromatic.upper),
    };
    let summary = format!(
        "stated lower {:.6}, upper {:.6}; {chi_str}",
        bounds.lower_as_stated, bounds.upper
    );
    (
        status,
        summary,
        json!({
            "lower_as_stated": r6(bounds.lower_as_stated),
            "lower_variant": r6(bounds.lower_variant),
            "upper": r6(bounds.upper),
            "chi_lower_certified": chromatic.lower,
            "chi_upper_certified": chromatic.upper,
            "chi_exact": chromatic.exact_value(),
            "lower_bound_holds": lower_part,
            "upper_bound_holds": upper_part,
        }),
    )
}

fn c7_perfection(lab: &Lab) -> (ClaimStatus, String, serde_json::Value) {
    let q = lab.q();
    if q > EXACT_OMEGA_MAX_Q {
        return (
            ClaimStatus::Skipped(format!("perfection scoped to q <= {EXACT_OMEGA_MAX_Q}")),
            "out of exact scope".into(),
            json!(null),
        );
    }
    let verdict = lab.perfection();
    let expectation_perfect = q == 3;
    let (status, summary) = match (&verdict.status, expectation_perfect) {
        (PerfectionStatus::Perfect, true) => {
            let iso_ok = verdict.line_graph_isomorphism.as_ref().is_some_and(|map| {
                crate::combinat::verify_isomorphism(
                    &crate::combinat::line_graph_k33(),
                    lab.graph().graph(),
                    map,
                )
            });
            if !iso_ok {
                return (
                    ClaimStatus::Skipped(
                        "internal: isomorphism evidence failed its verifier".into(),
                    ),
                    "evidence rejected".into(),
                    json!(verdict),
                );
            }
            (
                ClaimStatus::Confirmed,
                "perfect: explicit isomorphism onto the line graph of K_{3,3}".to_string(),
            )
        }
        (PerfectionStatus::NotPerfect, false) => {
            let how = match &verdict.odd_hole {
                Some(hole) => {
                    if !crate::combinat::verify_odd_hole(lab.graph().graph(), hole) {
                        return (
                            ClaimStatus::Skipped(
                                "internal: odd-hole evidence failed its verifier".into(),
                            ),
                            "evidence rejected".into(),
                            json!(verdict),
                        );
                    }
                    format!("induced odd hole of length {}", hole.len())
                }
                None => format!(
                    "omega = {} < chi lower bound {}",
                    verdict.omega.unwrap_or(0),
                    verdict.chi_lower.unwrap_or(0)
                ),
            };
            (ClaimStatus::Confirmed, format!("not perfect: {how}"))
        }
        (PerfectionStatus::Undecided, _) => (
            ClaimStatus::Skipped("imperfection witnesses exhausted within budget".into()),
            "undecided".to_string(),
        ),
        (got, _) => (
            ClaimStatus::Refuted,
            format!(
                "expected {}, got {:?}",
                if expectation_perfect {
                    "PERFECT"
                } else {
                    "NOT_PERFECT"
                },
                got
            ),
        ),
    };
    (status, summary, json!(verdict))
}

fn c8_omega_at_most_4(lab: &Lab) -> (ClaimStatus, String, serde_json::Value) {
    if lab.q() > EXACT_OMEGA_MAX_Q {
        return (
            ClaimStatus::Skipped(format!("clique search scoped to q <= {EXACT_OMEGA_MAX_Q}")),
            "out of exact scope".into(),
            json!(null),
        );
    }
    let outcome = lab.clique().expect("within scope");
    match lab.omega_exact() {
        Some(omega) => {
            if crate::combinat::verify_clique(lab.graph().graph(), &outcome.cert).is_err() {
                return (
                    ClaimStatus::Skipped("internal: clique witness failed its verifier".into()),
                    "evidence rejected".into(),
                    json!(null),
                );
            }
            let status = if omega <= 4 {
                ClaimStatus::Confirmed
            } else {
                ClaimStatus::Refuted
            };
            (
                status,
                format!("exact omega = {omega}"),
                json!({"omega": omega, "witness": outcome.cert.vertices, "nodes": outcome.nodes}),
            )
        }
        None => (
            ClaimStatus::Skipped("clique search budget exhausted".into()),
            format!("best clique found: {}", outcome.size()),
            json!({"best_found": outcome.size()}),
        ),
    }
}

fn c9_edge_chromatic(lab: &Lab) -> (ClaimStatus, String, serde_json::Value) {
    let (cert, obstruction) = lab.edge_coloring();
    let verified = verify_edge_coloring(lab.graph().graph(), cert).is_ok();
    let displayed_value = QuadranceGraph::expected_degree(lab.q());
    match obstruction.conclusion {
        ObstructionConclusion::ChiPrimeIsDeltaPlusOne { delta } => {
            let chi_prime = delta + 1;
            debug_assert!(verified && cert.num_colors <= chi_prime);
            // The displayed closed form equals delta, one below the true
            // value pinned by the parity obstruction.
            let status = if displayed_value == chi_prime {
                ClaimStatus::Confirmed
            } else {
                ClaimStatus::Refuted
            };
            (
                status,
                format!(
                    "chi' = {chi_prime} exactly (certificate with {} colours + parity obstruction); displayed value {displayed_value} is off by one",
                    cert.num_colors
                ),
                json!({
                    "chi_prime": chi_prime,
                    "displayed_value": displayed_value,
                    "off_by_one": displayed_value + 1 == chi_prime,
                    "certificate_colors": cert.num_colors,
                    "certificate_verified": verified,
                    "obstruction": obstruction,
                }),
            )
        }
        ObstructionConclusion::Inapplicable => (
            ClaimStatus::Informational,
            format!(
                "no parity obstruction; certificate uses {} colours",
                cert.num_colors
            ),
            json!({"certificate_colors": cert.num_colors, "certificate_verified": verified}),
        ),
    }
}

fn c10_achromatic(lab: &Lab) -> (ClaimStatus, String, serde_json::Value) {
    let q = lab.q();
    let g = lab.graph();
    let bounds = achromatic_bounds(q, g.degree() as u64);
    let upper = achromatic_upper_bound(q, g.degree() as u64);
    let target = (q + 1) as usize;
    // deterministic seed fan-out for the merge heuristic
    let mut witness: Option<usize> = None;
    for round in 0..8u64 {
        let seed = splitmix64(lab.config.seed ^ (0xC10 + round));
        if let Some(cert) = complete_coloring_heuristic(g.graph(), seed, target) {
            if verify_coloring(g.graph(), &cert).is_ok() {
                witness = Some(cert.num_colors);
                break;
            }
        }
    }
    if q == 3 {
        let (psi, cert) = exact_achromatic(g.graph());
        if verify_coloring(g.graph(), &cert).is_err() {
            return (
                ClaimStatus::Skipped("internal: psi witness failed its verifier".into()),
                "evidence rejected".into(),
                json!(null),
            );
        }
        let status = if psi >= target && (psi as u64) <= upper {
            ClaimStatus::Confirmed
        } else {
            ClaimStatus::Refuted
        };
        return (
            status,
            format!("exact psi = {psi} (exhaustive partitions); bounds [{target}, {upper}]"),
            json!({
                "psi_exact": psi,
                "lower_claim": target,
                "upper_bound": upper,
                "witness_colors": cert.num_colors,
                "bounds": bounds,
            }),
        );
    }
    match witness {
        Some(colors) => (
            ClaimStatus::Confirmed,
            format!("complete colouring with {colors} >= q + 1 = {target} colours; upper bound {upper}"),
            json!({"witness_colors": colors, "lower_claim": target, "upper_bound": upper, "bounds": bounds}),
        ),
        None => (
            ClaimStatus::Informational,
            format!("heuristic found no complete colouring with >= {target} colours; upper bound {upper}"),
            json!({"witness_colors": null, "lower_claim": target, "upper_bound": upper, "bounds": bounds}),
        ),
    }
}

fn c11_odd_cycle(lab: &Lab) -> (ClaimStatus, String, serde_json::Value) {
    let g = lab.graph();
    let cycle = g.odd_cycle_witness();
    let verified = cycle.verify(g.graph()).is_ok();
    let p = lab.params().p();
    let stated = lab.q();
    let status = if verified {
        ClaimStatus::Confirmed
    } else {
        ClaimStatus::Refuted
    };
    let summary = if p == stated {
        format!("odd {p}-cycle witness verified")
    } else {
        format!("odd cycle witness has length {p} (additive order), not the stated {stated}")
    };
    (
        status,
        summary,
        json!({
            "witness": cycle.vertices,
            "length": cycle.len(),
            "stated_length": stated,
            "verified": verified,
        }),
    )
}

fn c12_triangle_free_family(lab: &Lab) -> (ClaimStatus, String, serde_json::Value) {
    let q = lab.q();
    if !is_pm7_mod_12_prime(lab) {
        return (
            ClaimStatus::Skipped(format!("q = {q} is not a prime congruent to +-7 mod 12")),
            "hypothesis not met".into(),
            json!(null),
        );
    }
    let triangles = lab.triangles().map(|(count, _)| count);
    let target = (1.0 + (q as f64 - 1.0) / (q as f64).sqrt()).ceil() as usize;
    let chi_lower = lab.chromatic().map(|c| c.lower);
    let instance_confirmed = triangles == Some(0) && chi_lower.is_some_and(|lo| lo >= target);
    let status = if instance_confirmed {
        ClaimStatus::Confirmed
    } else {
        // The chromatic growth statement is asymptotic; a finite q where
        // the certified lower bound has not reached the target is
        // evidence, not refutation.
        ClaimStatus::Informational
    };
    let fmt_opt = |v: Option<u64>| v.map_or("n/a".to_string(), |x| x.to_string());
    let summary = format!(
        "triangles: {}; certified chi lower {} vs instance target {target}",
        fmt_opt(triangles),
        fmt_opt(chi_lower.map(|c| c as u64)),
    );
    (
        status,
        summary,
        json!({
            "triangles": triangles,
            "chi_lower_certified": chi_lower,
            "instance_target": target,
        }),
    )
}

fn c13_ramsey(lab: &Lab) -> (ClaimStatus, String, serde_json::Value) {
    let q = lab.q();
    if !is_pm7_mod_12_prime(lab) {
        return (
            ClaimStatus::Skipped(format!("q = {q} is not a prime congruent to +-7 mod 12")),
            "hypothesis not met".into(),
            json!(null),
        );
    }
    let theta = ratio_theta(lab.spectrum()).ok();
    let alpha = lab.independence().filter(|outcome| {
        crate::combinat::verify_independent_set(lab.graph().graph(), &outcome.cert).is_ok()
    });
    match ramsey_witness(lab.graph(), alpha, theta) {
        Ok(witness) => {
            let ok = witness.triangle_count == 0;
            let status = if ok {
                ClaimStatus::Confirmed
            } else {
                ClaimStatus::Refuted
            };
            let dimacs =
                (q <= CIRCLE_SWEEP_MAX_Q).then(|| lab.graph().export(ExportFormat::Dimacs));
            let summary = format!(
                "triangle-free, independence <= {:.6}: R({}, 3) > {}",
                witness.independence_upper, witness.ramsey_m, witness.ramsey_exceeds
            );
            (
                status,
                summary,
                json!({
                    "witness": witness,
                    "alpha_certificate": alpha.map(|o| &o.cert.vertices),
                    "dimacs": dimacs,
                }),
            )
        }
        Err(e) => (
            ClaimStatus::Skipped(e.to_string()),
            "bundle not assembled".into(),
            json!(null),
        ),
    }
}

fn c14_choice_number(lab: &Lab) -> (ClaimStatus, String, serde_json::Value) {
    let report = choice_bound_eval(lab.q(), 0.1, lab.alpha_exact(), lab.chi_exact())
        .expect("gamma fixed positive");
    let fmt_opt = |v: Option<u64>| v.map_or("n/a".to_string(), |x| x.to_string());
    let summary = format!(
        "(1+0.1) q^2 / log2(q) = {:.6}; unconditional chain: ceil(n/alpha) = {} <= chi = {}",
        report.asymptotic_ceiling,
        fmt_opt(report.chain_lower),
        fmt_opt(report.chi),
    );
    // The q0(gamma) threshold is never quantified, so this is always
    // informational at fixed q.
    (ClaimStatus::Informational, summary, json!(report))
}
