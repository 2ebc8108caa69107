//! Adjacency spectra of D_q, computed two independent ways, and the
//! spectral bounds derived from them.
//!
//! D_q is a Cayley graph of the additive group (F_q^2, +), so its
//! eigenvalues are indexed by the additive characters: for (a, b) in F_q^2,
//!
//! ```text
//! lambda_(a,b) = sum over unit-circle points (x, y) of cos(2*pi*tr(ax+by)/p)
//! ```
//!
//! (real because the unit circle is closed under negation). The second
//! route diagonalizes the dense adjacency matrix numerically; the two must
//! agree to 1e-6, which is the module's core cross-validation.

use crate::ffield::PrimePower;
use crate::qgraph::QuadranceGraph;
use nalgebra::{DMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;
use thiserror::Error;

/// Eigenvalues closer than this merge into one entry with multiplicity.
pub const MERGE_TOLERANCE: f64 = 1e-9;

/// Cross-checks between the two spectrum routes compare at this tolerance.
pub const COMPARE_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Error, PartialEq)]
pub enum SpectraError {
    #[error("graph order {0} exceeds the dense eigensolver cap {1}")]
    TooLarge(usize, usize),
    #[error("graph has no edges, so lambda_min is not negative")]
    Edgeless,
    #[error("the closed-form bounds require q > 3 (got q = {0})")]
    SmallQ(u64),
}

/// Eigenvalues with multiplicities, sorted descending; multiplicities sum
/// to the graph order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub q: u64,
    pub order: usize,
    /// (eigenvalue, multiplicity), eigenvalues strictly descending.
    pub eigenvalues: Vec<(f64, usize)>,
}

impl Spectrum {
    fn from_values(q: u64, mut values: Vec<f64>) -> Self {
        let order = values.len();
        values.sort_by(|a, b| b.partial_cmp(a).expect("finite eigenvalues"));
        let mut eigenvalues: Vec<(f64, usize)> = Vec::new();
        for v in values {
            match eigenvalues.last_mut() {
                Some((rep, mult)) if (*rep - v).abs() <= MERGE_TOLERANCE => *mult += 1,
                _ => eigenvalues.push((v, 1)),
            }
        }
        Spectrum {
            q,
            order,
            eigenvalues,
        }
    }

    pub fn lambda_1(&self) -> f64 {
        self.eigenvalues[0].0
    }

    pub fn lambda_min(&self) -> f64 {
        self.eigenvalues.last().expect("nonempty spectrum").0
    }

    /// Largest |lambda| over eigenvalues other than lambda_1 (one copy of
    /// the trivial eigenvalue is excluded; D_q is connected so it is
    /// simple).
    pub fn max_abs_nontrivial(&self) -> f64 {
        let mut best: f64 = 0.0;
        for (i, &(v, m)) in self.eigenvalues.iter().enumerate() {
            let copies = if i == 0 { m - 1 } else { m };
            if copies > 0 {
                best = best.max(v.abs());
            }
        }
        best
    }

    /// Multiset expansion, descending.
    pub fn expand(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.order);
        for &(v, m) in &self.eigenvalues {
            out.extend(std::iter::repeat_n(v, m));
        }
        out
    }

    pub fn multiplicity_sum(&self) -> usize {
        self.eigenvalues.iter().map(|&(_, m)| m).sum()
    }

    pub fn sum(&self) -> f64 {
        self.eigenvalues.iter().map(|&(v, m)| v * m as f64).sum()
    }

    pub fn sum_of_squares(&self) -> f64 {
        self.eigenvalues
            .iter()
            .map(|&(v, m)| v * v * m as f64)
            .sum()
    }

    /// Elementwise agreement of the sorted multisets.
    pub fn agrees_with(&self, other: &Spectrum, tolerance: f64) -> bool {
        let a = self.expand();
        let b = other.expand();
        a.len() == b.len() && a.iter().zip(&b).all(|(x, y)| (x - y).abs() <= tolerance)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&SpectrumJson {
            q: self.q,
            eigenvalues: self.eigenvalues.iter().map(|&(v, m)| (v, m)).collect(),
        })
        .expect("spectrum serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        let raw: SpectrumJson = serde_json::from_str(text)?;
        let order = raw.eigenvalues.iter().map(|&(_, m)| m).sum();
        Ok(Spectrum {
            q: raw.q,
            order,
            eigenvalues: raw.eigenvalues,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct SpectrumJson {
    q: u64,
    eigenvalues: Vec<(f64, usize)>,
}

/// Exact-structure route: one character sum per vertex of F_q^2.
pub fn character_spectrum(g: &QuadranceGraph) -> Spectrum {
    let f = g.field();
    let q = f.q();
    let p = f.p() as f64;
    // tr values per element index, reused across all q^2 characters.
    let traces: Vec<f64> = f.elements().map(|e| f.trace(e) as f64).collect();
    let mut values = Vec::with_capacity((q * q) as usize);
    for a in f.elements() {
        for b in f.elements() {
            let mut sum = 0.0;
            for s in g.unit_circle() {
                let arg = f.add(f.mul(a, s.x), f.mul(b, s.y));
                sum += (TAU * traces[f.index_of(arg) as usize] / p).cos();
            }
            values.push(sum);
        }
    }
    Spectrum::from_values(q, values)
}

/// Numeric route: dense symmetric eigendecomposition of the adjacency
/// matrix. Kept independent of the character route so each validates the
/// other.
pub fn numeric_spectrum(g: &QuadranceGraph) -> Result<Spectrum, SpectraError> {
    const CAP: usize = 2500;
    let n = g.order();
    if n > CAP {
        return Err(SpectraError::TooLarge(n, CAP));
    }
    let m = DMatrix::<f64>::from_fn(
        n,
        n,
        |r, c| {
            if g.graph().has_edge(r, c) {
                1.0
            } else {
                0.0
            }
        },
    );
    let eigen = SymmetricEigen::new(m);
    let values: Vec<f64> = eigen.eigenvalues.iter().copied().collect();
    Ok(Spectrum::from_values(g.q(), values))
}

/// Verdict data for the nontrivial-eigenvalue magnitude claims.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EigenvalueBoundCheck {
    pub max_abs_nontrivial: f64,
    pub sqrt_q: f64,
    pub two_sqrt_q: f64,
    pub holds_sqrt_q: bool,
    pub holds_2sqrt_q: bool,
}

pub fn eigenvalue_bound_check(s: &Spectrum, q: u64) -> EigenvalueBoundCheck {
    let max_abs = s.max_abs_nontrivial();
    let sqrt_q = (q as f64).sqrt();
    EigenvalueBoundCheck {
        max_abs_nontrivial: max_abs,
        sqrt_q,
        two_sqrt_q: 2.0 * sqrt_q,
        holds_sqrt_q: max_abs <= sqrt_q + COMPARE_TOLERANCE,
        holds_2sqrt_q: max_abs <= 2.0 * sqrt_q + COMPARE_TOLERANCE,
    }
}

/// The ratio bound -n*lambda_n / (lambda_1 - lambda_n): an upper bound on
/// the independence number of a connected regular graph.
pub fn ratio_theta(s: &Spectrum) -> Result<f64, SpectraError> {
    let lambda_n = s.lambda_min();
    if lambda_n >= 0.0 {
        return Err(SpectraError::Edgeless);
    }
    Ok(-(s.order as f64) * lambda_n / (s.lambda_1() - lambda_n))
}

/// Chromatic lower bound 1 + lambda_1 / (-lambda_n), with the measured
/// lambda_n (unconditionally valid, unlike closed forms that assume an
/// eigenvalue bound).
pub fn hoffman_lower(s: &Spectrum) -> Result<f64, SpectraError> {
    let lambda_n = s.lambda_min();
    if lambda_n >= 0.0 {
        return Err(SpectraError::Edgeless);
    }
    Ok(1.0 + s.lambda_1() / -lambda_n)
}

/// The derived bounds bundle for one spectrum.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpectralBounds {
    pub lambda_max_nontrivial: f64,
    pub lambda_min: f64,
    pub ratio_theta: f64,
    pub hoffman_chromatic_lower: f64,
    /// q^(3/2), the claimed independence ceiling.
    pub alpha_upper_claim: f64,
}

pub fn spectral_bounds(s: &Spectrum, q: u64) -> Result<SpectralBounds, SpectraError> {
    Ok(SpectralBounds {
        lambda_max_nontrivial: s.max_abs_nontrivial(),
        lambda_min: s.lambda_min(),
        ratio_theta: ratio_theta(s)?,
        hoffman_chromatic_lower: hoffman_lower(s)?,
        alpha_upper_claim: (q as f64).powf(1.5),
    })
}

/// The three closed forms of the chromatic sandwich: the stated lower
/// bound 1 + degree/sqrt(q), the proof-used variant 1 + (q-1)/sqrt(q), and
/// the upper bound (p^n + p^(n-1))/2. Only defined for q > 3.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoremBounds {
    pub lower_as_stated: f64,
    pub lower_variant: f64,
    pub upper: f64,
}

pub fn theorem1_bounds(pp: PrimePower) -> Result<TheoremBounds, SpectraError> {
    let q = pp.q();
    if q <= 3 {
        return Err(SpectraError::SmallQ(q));
    }
    let sqrt_q = (q as f64).sqrt();
    let degree = QuadranceGraph::expected_degree(q) as f64;
    Ok(TheoremBounds {
        lower_as_stated: 1.0 + degree / sqrt_q,
        lower_variant: 1.0 + (q as f64 - 1.0) / sqrt_q,
        upper: (q as f64 + q as f64 / pp.p() as f64) / 2.0,
    })
}
