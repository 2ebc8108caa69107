//! Ramsey witness bundles: a triangle-free D_q together with a certified
//! independence upper bound U yields R(floor(U)+1, 3) > q^2.

use crate::combinat::clique::IndependenceOutcome;
use crate::combinat::triangles::triangle_count;
use crate::qgraph::QuadranceGraph;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RamseyError {
    #[error("q = {0} is not prime, the construction needs a prime field")]
    NotPrime(u64),
    #[error("q = {0} is not congruent to +-7 mod 12")]
    WrongResidue(u64),
    #[error("no independence upper bound available")]
    NoUpperBound,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RamseyWitness {
    pub q: u64,
    pub order: usize,
    pub triangle_count: u64,
    /// Certified upper bound on the independence number: the exact value
    /// when available, otherwise the spectral ratio bound.
    pub independence_upper: f64,
    pub independence_exact: Option<usize>,
    pub ratio_theta: Option<f64>,
    /// m = floor(U) + 1: the witness shows R(m, 3) > q^2.
    pub ramsey_m: u64,
    pub ramsey_exceeds: u64,
}

/// Assembles the bundle. `alpha` should be the independence search
/// outcome when one ran; `theta` the spectral ratio bound when computed.
/// At least one certified upper bound must be present.
pub fn ramsey_witness(
    g: &QuadranceGraph,
    alpha: Option<&IndependenceOutcome>,
    theta: Option<f64>,
) -> Result<RamseyWitness, RamseyError> {
    let q = g.q();
    if g.field().n() != 1 {
        return Err(RamseyError::NotPrime(q));
    }
    if q % 12 != 5 && q % 12 != 7 {
        return Err(RamseyError::WrongResidue(q));
    }
    let (triangles, _) = triangle_count(g.graph());
    let alpha_exact = alpha.and_then(|a| a.is_exact().then(|| a.size()));
    let upper = match (alpha_exact, theta) {
        (Some(a), Some(t)) => (a as f64).min(t),
        (Some(a), None) => a as f64,
        (None, Some(t)) => t,
        (None, None) => return Err(RamseyError::NoUpperBound),
    };
    let m = upper.floor() as u64 + 1;
    Ok(RamseyWitness {
        q,
        order: g.order(),
        triangle_count: triangles,
        independence_upper: upper,
        independence_exact: alpha_exact,
        ratio_theta: theta,
        ramsey_m: m,
        ramsey_exceeds: q * q,
    })
}
