//! Constructive (Delta+1)-edge-colouring by fan rotation and alternating
//! cd-path inversion, plus the parity obstruction that pins the
//! edge-chromatic number of regular graphs of odd order to Delta+1.

use crate::combinat::cert::EdgeColoringCertificate;
use crate::qgraph::DenseGraph;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EdgeColorError {
    #[error("maximum degree {0} exceeds the colour-mask width")]
    DegreeTooLarge(usize),
    #[error("fan rotation found no valid pivot (internal invariant broken)")]
    NoPivot,
}

struct EdgeColorer {
    edges: Vec<(usize, usize)>,
    incident: Vec<Vec<usize>>,
    color: Vec<Option<usize>>,
    /// Bitmask of colours present at each vertex.
    used: Vec<u64>,
    /// at[v][c]: edge id coloured c at v, if any.
    at: Vec<Vec<Option<usize>>>,
    num_colors: usize,
}

impl EdgeColorer {
    fn new(g: &DenseGraph) -> Result<Self, EdgeColorError> {
        let n = g.order();
        let delta = (0..n).map(|v| g.degree(v)).max().unwrap_or(0);
        if delta + 1 > 63 {
            return Err(EdgeColorError::DegreeTooLarge(delta));
        }
        let edges = g.edges();
        let mut incident = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            incident[u].push(id);
            incident[v].push(id);
        }
        let num_colors = delta + 1;
        Ok(EdgeColorer {
            color: vec![None; edges.len()],
            used: vec![0; n],
            at: vec![vec![None; num_colors]; n],
            edges,
            incident,
            num_colors,
        })
    }

    fn other(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    fn is_free(&self, v: usize, c: usize) -> bool {
        self.used[v] >> c & 1 == 0
    }

    fn smallest_free(&self, v: usize) -> usize {
        let mask = !self.used[v] & ((1u64 << self.num_colors) - 1);
        debug_assert!(
            mask != 0,
            "a vertex of degree <= Delta always has a free colour"
        );
        mask.trailing_zeros() as usize
    }

    fn set(&mut self, e: usize, c: usize) {
        debug_assert!(self.color[e].is_none());
        let (u, v) = self.edges[e];
        self.color[e] = Some(c);
        for end in [u, v] {
            debug_assert!(self.is_free(end, c));
            self.used[end] |= 1 << c;
            self.at[end][c] = Some(e);
        }
    }

    fn clear(&mut self, e: usize) -> usize {
        let c = self.color[e].take().expect("clearing a coloured edge");
        let (u, v) = self.edges[e];
        for end in [u, v] {
            self.used[end] &= !(1 << c);
            self.at[end][c] = None;
        }
        c
    }

    /// Maximal fan at u starting from the uncoloured edge e0 = (u, v0):
    /// each later fan edge is coloured, and its colour is free at the
    /// previous fan tip.
    fn maximal_fan(&self, u: usize, e0: usize) -> (Vec<usize>, Vec<usize>) {
        let mut fan_edges = vec![e0];
        let mut tips = vec![self.other(e0, u)];
        let mut available: Vec<usize> = self.incident[u]
            .iter()
            .copied()
            .filter(|&e| e != e0 && self.color[e].is_some())
            .collect();
        loop {
            let last_tip = *tips.last().unwrap();
            let next = available
                .iter()
                .position(|&e| self.is_free(last_tip, self.color[e].unwrap()));
            match next {
                Some(pos) => {
                    let e = available.remove(pos);
                    fan_edges.push(e);
                    tips.push(self.other(e, u));
                }
                None => return (fan_edges, tips),
            }
        }
    }

    /// Inverts the maximal path from u whose edges alternate d, c, d, ...
    /// Alternating paths are simple (at most one c-edge and one d-edge per
    /// vertex), so the walk terminates.
    fn invert_cd_path(&mut self, u: usize, c: usize, d: usize) {
        if c == d {
            return;
        }
        let mut path = Vec::new();
        let mut cur = u;
        let mut want = d;
        while let Some(e) = self.at[cur][want] {
            path.push(e);
            cur = self.other(e, cur);
            want = if want == d { c } else { d };
        }
        let flipped: Vec<usize> = path
            .iter()
            .map(|&e| if self.color[e] == Some(d) { c } else { d })
            .collect();
        for &e in &path {
            self.clear(e);
        }
        for (&e, &nc) in path.iter().zip(&flipped) {
            self.set(e, nc);
        }
    }

    fn color_edge(&mut self, e0: usize) -> Result<(), EdgeColorError> {
        let (u, _) = self.edges[e0];
        let (fan_edges, tips) = self.maximal_fan(u, e0);
        let c = self.smallest_free(u);
        let d = self.smallest_free(*tips.last().unwrap());
        self.invert_cd_path(u, c, d);
        // Find the first fan prefix that is still a fan after the
        // inversion and whose tip has d free; rotate it.
        let mut w = None;
        for idx in 0..fan_edges.len() {
            if idx > 0 {
                let col = self.color[fan_edges[idx]].ok_or(EdgeColorError::NoPivot)?;
                if !self.is_free(tips[idx - 1], col) {
                    break; // prefix stops being a fan here
                }
            }
            if self.is_free(tips[idx], d) {
                w = Some(idx);
                break;
            }
        }
        let w = w.ok_or(EdgeColorError::NoPivot)?;
        // Rotate: edge i inherits the colour of edge i+1, the pivot gets d.
        // fan_edges[0] = e0 is uncoloured, so only 1..=w need clearing.
        let shifted: Vec<usize> = (0..w)
            .map(|i| self.color[fan_edges[i + 1]].expect("fan edges are coloured"))
            .collect();
        for i in 1..=w {
            self.clear(fan_edges[i]);
        }
        for (i, &col) in shifted.iter().enumerate() {
            self.set(fan_edges[i], col);
        }
        self.set(fan_edges[w], d);
        Ok(())
    }

    fn run(mut self) -> Result<EdgeColoringCertificate, EdgeColorError> {
        for e in 0..self.edges.len() {
            self.color_edge(e)?;
        }
        let mut max_color = 0;
        let colored: Vec<(usize, usize, usize)> = self
            .edges
            .iter()
            .zip(&self.color)
            .map(|(&(u, v), c)| {
                let c = c.expect("all edges coloured");
                max_color = max_color.max(c);
                (u, v, c)
            })
            .collect();
        let num_colors = if colored.is_empty() { 0 } else { max_color + 1 };
        Ok(EdgeColoringCertificate {
            edges: colored,
            num_colors,
        })
    }
}

/// Proper edge colouring with at most Delta+1 colours, deterministic in
/// the graph's canonical edge order.
pub fn misra_gries(g: &DenseGraph) -> Result<EdgeColoringCertificate, EdgeColorError> {
    EdgeColorer::new(g)?.run()
}

/// Why chi' = Delta + 1 for a Delta-regular graph of odd order: a proper
/// Delta-edge-colouring would split the edges into Delta perfect
/// matchings, and odd-order graphs have none.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassOneObstruction {
    pub regular: Option<usize>,
    pub order: usize,
    pub odd_order: bool,
    pub conclusion: ObstructionConclusion,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ObstructionConclusion {
    /// chi' is exactly degree + 1.
    ChiPrimeIsDeltaPlusOne { delta: usize },
    /// The counting argument does not apply to this graph.
    Inapplicable,
}

pub fn class_one_obstruction(g: &DenseGraph) -> ClassOneObstruction {
    let regular = g.is_regular();
    let order = g.order();
    let odd_order = order % 2 == 1;
    let conclusion = match regular {
        Some(delta) if delta > 0 && odd_order => {
            ObstructionConclusion::ChiPrimeIsDeltaPlusOne { delta }
        }
        _ => ObstructionConclusion::Inapplicable,
    };
    ClassOneObstruction {
        regular,
        order,
        odd_order,
        conclusion,
    }
}
