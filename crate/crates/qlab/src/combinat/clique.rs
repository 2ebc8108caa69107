//! Maximum clique / maximum independent set by branch-and-bound with
//! greedy-colouring upper bounds (Tomita-style) over bitset candidate
//! sets. Budgets are node-count caps with honest three-valued outcomes:
//! an exhausted budget degrades the answer, never falsifies it.

use crate::bitset::BitSet;
use crate::combinat::cert::{CliqueCertificate, IndependentSetCertificate};
use crate::combinat::{Budget, SearchStatus};
use crate::qgraph::DenseGraph;

#[derive(Debug, Clone)]
pub struct CliqueOutcome {
    pub cert: CliqueCertificate,
    pub status: SearchStatus,
    pub nodes: u64,
}

impl CliqueOutcome {
    pub fn size(&self) -> usize {
        self.cert.vertices.len()
    }

    pub fn is_exact(&self) -> bool {
        self.status == SearchStatus::Exact
    }
}

#[derive(Debug, Clone)]
pub struct IndependenceOutcome {
    pub cert: IndependentSetCertificate,
    pub status: SearchStatus,
    pub nodes: u64,
}

impl IndependenceOutcome {
    pub fn size(&self) -> usize {
        self.cert.vertices.len()
    }

    pub fn is_exact(&self) -> bool {
        self.status == SearchStatus::Exact
    }
}

struct Search<'g> {
    g: &'g DenseGraph,
    best: Vec<usize>,
    current: Vec<usize>,
    nodes: u64,
    cap: u64,
    exhausted: bool,
}

impl<'g> Search<'g> {
    /// Greedy colouring of the candidate set; returns (vertex, colour
    /// bound) pairs in the branching order (ascending colour bound, so the
    /// caller pops from the back).
    fn color_sort(&self, candidates: &BitSet) -> Vec<(usize, usize)> {
        let mut order: Vec<(usize, usize)> = Vec::with_capacity(candidates.len());
        let mut uncolored = candidates.clone();
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut class_candidates = uncolored.clone();
            while let Some(v) = class_candidates.first() {
                order.push((v, color));
                uncolored.remove(v);
                class_candidates.remove(v);
                class_candidates.subtract_words(self.g.row(v));
            }
        }
        order
    }

    fn expand(&mut self, candidates: &BitSet) {
        self.nodes += 1;
        if self.nodes > self.cap {
            self.exhausted = true;
            return;
        }
        let order = self.color_sort(candidates);
        let mut candidates = candidates.clone();
        for &(v, bound) in order.iter().rev() {
            if self.exhausted {
                return;
            }
            if self.current.len() + bound <= self.best.len() {
                return;
            }
            self.current.push(v);
            let mut next = candidates.clone();
            next.intersect_with_words(self.g.row(v));
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(&next);
            }
            self.current.pop();
            candidates.remove(v);
        }
    }
}

/// Maximum clique. Exact unless the node budget runs out, in which case
/// the best clique found so far is returned flagged as a lower bound.
pub fn max_clique(g: &DenseGraph, budget: Budget) -> CliqueOutcome {
    let n = g.order();
    let mut search = Search {
        g,
        best: Vec::new(),
        current: Vec::new(),
        nodes: 0,
        cap: budget.node_cap,
        exhausted: false,
    };
    if n > 0 {
        search.expand(&BitSet::full(n));
    }
    let mut vertices = search.best;
    vertices.sort_unstable();
    CliqueOutcome {
        cert: CliqueCertificate { vertices },
        status: if search.exhausted {
            SearchStatus::BudgetExhausted
        } else {
            SearchStatus::Exact
        },
        nodes: search.nodes,
    }
}

/// Maximum independent set = maximum clique of the complement.
pub fn max_independent_set(g: &DenseGraph, budget: Budget) -> IndependenceOutcome {
    let complement = g.complement();
    let outcome = max_clique(&complement, budget);
    IndependenceOutcome {
        cert: IndependentSetCertificate {
            vertices: outcome.cert.vertices,
        },
        status: outcome.status,
        nodes: outcome.nodes,
    }
}

/// Greedy lower-bound witness for graphs beyond the exact scope:
/// repeatedly take a minimum-degree vertex of the remaining graph and
/// discard its closed neighborhood. Deterministic (ties by index).
pub fn greedy_independent_set(g: &DenseGraph) -> IndependentSetCertificate {
    let n = g.order();
    let mut remaining = BitSet::full(n);
    let mut chosen = Vec::new();
    while let Some(first) = remaining.first() {
        let mut pick = first;
        let mut best_degree = usize::MAX;
        for v in remaining.iter() {
            let degree = remaining.intersection_count(g.row(v));
            if degree < best_degree {
                best_degree = degree;
                pick = v;
            }
        }
        chosen.push(pick);
        remaining.remove(pick);
        remaining.subtract_words(g.row(pick));
    }
    chosen.sort_unstable();
    IndependentSetCertificate { vertices: chosen }
}
