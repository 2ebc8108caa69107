//! Per-q lazy computation context. Each claim checker pulls what it needs
//! and shares results with the others through memoized cells, honoring
//! the exactness scopes (alpha/chi at q <= 9, omega/triangles at q <= 27).

use crate::combinat::{
    chromatic_number, class_one_obstruction, max_clique, max_independent_set, misra_gries,
    q3_verdict, triangle_count, Budget, ChromaticOutcome, ClassOneObstruction, CliqueOutcome,
    EdgeColoringCertificate, IndependenceOutcome, PerfectionVerdict,
};
use crate::ffield::PrimePower;
use crate::qgraph::QuadranceGraph;
use crate::spectra::{character_spectrum, Spectrum};
use std::cell::OnceCell;

/// Exact alpha and chi run only up to this q (81 vertices).
pub const EXACT_ALPHA_CHI_MAX_Q: u64 = 9;
/// Exact omega and triangle counts run up to this q (729 vertices).
pub const EXACT_OMEGA_MAX_Q: u64 = 27;
/// The circle-law sweep is exhaustive up to this q.
pub const CIRCLE_SWEEP_MAX_Q: u64 = 13;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct LabConfig {
    pub budget: Budget,
    pub seed: u64,
}

pub struct Lab {
    pp: PrimePower,
    pub config: LabConfig,
    graph: OnceCell<QuadranceGraph>,
    spectrum: OnceCell<Spectrum>,
    clique: OnceCell<Option<CliqueOutcome>>,
    independence: OnceCell<Option<IndependenceOutcome>>,
    chromatic: OnceCell<Option<ChromaticOutcome>>,
    triangles: OnceCell<Option<(u64, Option<[usize; 3]>)>>,
    edge_coloring: OnceCell<(EdgeColoringCertificate, ClassOneObstruction)>,
    perfection: OnceCell<PerfectionVerdict>,
}

impl Lab {
    pub fn new(pp: PrimePower, config: LabConfig) -> Self {
        Lab {
            pp,
            config,
            graph: OnceCell::new(),
            spectrum: OnceCell::new(),
            clique: OnceCell::new(),
            independence: OnceCell::new(),
            chromatic: OnceCell::new(),
            triangles: OnceCell::new(),
            edge_coloring: OnceCell::new(),
            perfection: OnceCell::new(),
        }
    }

    pub fn params(&self) -> PrimePower {
        self.pp
    }

    pub fn q(&self) -> u64 {
        self.pp.q()
    }

    pub fn graph(&self) -> &QuadranceGraph {
        self.graph
            .get_or_init(|| QuadranceGraph::build(self.pp).expect("q within graph cap"))
    }

    /// Character-sum spectrum (the exact-structure route).
    pub fn spectrum(&self) -> &Spectrum {
        self.spectrum
            .get_or_init(|| character_spectrum(self.graph()))
    }

    pub fn clique(&self) -> Option<&CliqueOutcome> {
        self.clique
            .get_or_init(|| {
                (self.q() <= EXACT_OMEGA_MAX_Q)
                    .then(|| max_clique(self.graph().graph(), self.config.budget))
            })
            .as_ref()
    }

    pub fn independence(&self) -> Option<&IndependenceOutcome> {
        self.independence
            .get_or_init(|| {
                (self.q() <= EXACT_ALPHA_CHI_MAX_Q)
                    .then(|| max_independent_set(self.graph().graph(), self.config.budget))
            })
            .as_ref()
    }

    pub fn chromatic(&self) -> Option<&ChromaticOutcome> {
        self.chromatic
            .get_or_init(|| {
                (self.q() <= EXACT_ALPHA_CHI_MAX_Q).then(|| {
                    chromatic_number(self.graph().graph(), self.config.budget, self.config.seed)
                })
            })
            .as_ref()
    }

    pub fn triangles(&self) -> Option<(u64, Option<[usize; 3]>)> {
        *self.triangles.get_or_init(|| {
            (self.q() <= EXACT_OMEGA_MAX_Q).then(|| triangle_count(self.graph().graph()))
        })
    }

    pub fn edge_coloring(&self) -> &(EdgeColoringCertificate, ClassOneObstruction) {
        self.edge_coloring.get_or_init(|| {
            let cert = misra_gries(self.graph().graph())
                .expect("degree fits the colour mask at desk scale");
            let obstruction = class_one_obstruction(self.graph().graph());
            (cert, obstruction)
        })
    }

    pub fn perfection(&self) -> &PerfectionVerdict {
        self.perfection.get_or_init(|| {
            if self.q() == 3 {
                q3_verdict(self.graph())
            } else {
                match self.clique() {
                    Some(clique) => crate::combinat::imperfection_from_parts(
                        self.graph().graph(),
                        clique,
                        self.chromatic(),
                    ),
                    // beyond the omega scope: no certified route attempted
                    None => PerfectionVerdict {
                        status: crate::combinat::PerfectionStatus::Undecided,
                        omega: None,
                        chi_lower: None,
                        chi_lower_evidence: None,
                        line_graph_isomorphism: None,
                        odd_hole: None,
                    },
                }
            }
        })
    }

    /// Exact alpha if the search completed.
    pub fn alpha_exact(&self) -> Option<usize> {
        self.independence()
            .and_then(|o| o.is_exact().then(|| o.size()))
    }

    /// Best independence witness: the exact search result within scope, a
    /// greedy lower-bound set beyond it.
    pub fn alpha_witness(&self) -> (usize, bool) {
        match self.independence() {
            Some(outcome) => (outcome.size(), outcome.is_exact()),
            None => (
                crate::combinat::greedy_independent_set(self.graph().graph())
                    .vertices
                    .len(),
                false,
            ),
        }
    }

    /// Exact chi if the interval closed.
    pub fn chi_exact(&self) -> Option<usize> {
        self.chromatic().and_then(|o| o.exact_value())
    }

    pub fn omega_exact(&self) -> Option<usize> {
        self.clique().and_then(|o| o.is_exact().then(|| o.size()))
    }
}
