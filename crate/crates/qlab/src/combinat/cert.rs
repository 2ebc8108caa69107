//! Self-verifying certificates. Every verifier here is a plain full scan
//! over the graph, sharing no code with the solver that produced the
//! certificate.

use crate::qgraph::DenseGraph;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ColoringKind {
    Proper,
    Complete,
}

/// A vertex colouring: `colors[v]` in `0..num_colors` for every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringCertificate {
    pub colors: Vec<usize>,
    pub num_colors: usize,
    pub kind: ColoringKind,
    pub seed: u64,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringDefect {
    #[error("assignment covers {got} vertices, graph has {want}")]
    WrongLength { got: usize, want: usize },
    #[error("vertex {0} has colour {1} >= colour count {2}")]
    ColorOutOfRange(usize, usize, usize),
    #[error("edge ({0}, {1}) is monochromatic")]
    MonochromaticEdge(usize, usize),
    #[error("colour pair ({0}, {1}) appears on no edge")]
    MissingPair(usize, usize),
    #[error("colour {0} is unused")]
    UnusedColor(usize),
}

/// Checks PROPER (and COMPLETE when claimed) by a full edge scan.
pub fn verify_coloring(g: &DenseGraph, cert: &ColoringCertificate) -> Result<(), ColoringDefect> {
    let n = g.order();
    if cert.colors.len() != n {
        return Err(ColoringDefect::WrongLength {
            got: cert.colors.len(),
            want: n,
        });
    }
    let m = cert.num_colors;
    let mut used = vec![false; m];
    for (v, &c) in cert.colors.iter().enumerate() {
        if c >= m {
            return Err(ColoringDefect::ColorOutOfRange(v, c, m));
        }
        used[c] = true;
    }
    if let Some(c) = used.iter().position(|&u| !u) {
        return Err(ColoringDefect::UnusedColor(c));
    }
    for (u, v) in g.edges() {
        if cert.colors[u] == cert.colors[v] {
            return Err(ColoringDefect::MonochromaticEdge(u, v));
        }
    }
    if cert.kind == ColoringKind::Complete {
        let mut pair_seen = vec![false; m * m];
        for (u, v) in g.edges() {
            let (a, b) = (cert.colors[u], cert.colors[v]);
            pair_seen[a * m + b] = true;
            pair_seen[b * m + a] = true;
        }
        for a in 0..m {
            for b in (a + 1)..m {
                if !pair_seen[a * m + b] {
                    return Err(ColoringDefect::MissingPair(a, b));
                }
            }
        }
    }
    Ok(())
}

/// A pairwise-adjacent vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueCertificate {
    pub vertices: Vec<usize>,
}

/// A pairwise-nonadjacent vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndependentSetCertificate {
    pub vertices: Vec<usize>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SetDefect {
    #[error("vertex {0} out of range")]
    BadVertex(usize),
    #[error("repeated vertex {0}")]
    Repeated(usize),
    #[error("pair ({0}, {1}) violates the certificate kind")]
    BadPair(usize, usize),
}

fn check_distinct(g: &DenseGraph, vertices: &[usize]) -> Result<(), SetDefect> {
    let mut seen = vec![false; g.order()];
    for &v in vertices {
        if v >= g.order() {
            return Err(SetDefect::BadVertex(v));
        }
        if seen[v] {
            return Err(SetDefect::Repeated(v));
        }
        seen[v] = true;
    }
    Ok(())
}

pub fn verify_clique(g: &DenseGraph, cert: &CliqueCertificate) -> Result<(), SetDefect> {
    check_distinct(g, &cert.vertices)?;
    for (i, &u) in cert.vertices.iter().enumerate() {
        for &v in &cert.vertices[i + 1..] {
            if !g.has_edge(u, v) {
                return Err(SetDefect::BadPair(u, v));
            }
        }
    }
    Ok(())
}

pub fn verify_independent_set(
    g: &DenseGraph,
    cert: &IndependentSetCertificate,
) -> Result<(), SetDefect> {
    check_distinct(g, &cert.vertices)?;
    for (i, &u) in cert.vertices.iter().enumerate() {
        for &v in &cert.vertices[i + 1..] {
            if g.has_edge(u, v) {
                return Err(SetDefect::BadPair(u, v));
            }
        }
    }
    Ok(())
}

/// An edge colouring: one colour per edge of the graph's canonical
/// ascending edge list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeColoringCertificate {
    /// (u, v, colour) with u < v, in ascending edge order.
    pub edges: Vec<(usize, usize, usize)>,
    pub num_colors: usize,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EdgeColoringDefect {
    #[error("certificate covers {got} edges, graph has {want}")]
    WrongEdgeCount { got: usize, want: usize },
    #[error("({0}, {1}) is not an edge of the graph")]
    NotAnEdge(usize, usize),
    #[error("edges ({0}, {1}) and ({0}, {2}) share colour {3}")]
    IncidentSameColor(usize, usize, usize, usize),
    #[error("colour {0} out of range")]
    ColorOutOfRange(usize),
}

/// Checks that incident edges never share a colour, against the graph's
/// own edge list.
pub fn verify_edge_coloring(
    g: &DenseGraph,
    cert: &EdgeColoringCertificate,
) -> Result<(), EdgeColoringDefect> {
    let edges = g.edges();
    if cert.edges.len() != edges.len() {
        return Err(EdgeColoringDefect::WrongEdgeCount {
            got: cert.edges.len(),
            want: edges.len(),
        });
    }
    // (colour, other endpoint) per vertex; a colour repeating at a vertex
    // means two incident edges share it.
    let mut seen: Vec<Vec<(usize, usize)>> = vec![Vec::new(); g.order()];
    for &(u, v, c) in &cert.edges {
        if u >= g.order() || v >= g.order() || !g.has_edge(u, v) {
            return Err(EdgeColoringDefect::NotAnEdge(u, v));
        }
        if c >= cert.num_colors {
            return Err(EdgeColoringDefect::ColorOutOfRange(c));
        }
        for (end, other) in [(u, v), (v, u)] {
            if let Some(&(_, prev_other)) = seen[end].iter().find(|&&(pc, _)| pc == c) {
                return Err(EdgeColoringDefect::IncidentSameColor(
                    end, prev_other, other, c,
                ));
            }
            seen[end].push((c, other));
        }
    }
    Ok(())
}
