//! The unit-quadrance graph D_q as an immutable, canonically indexed
//! adjacency structure, plus structural witnesses and exports.
//!
//! Vertex (x, y) gets index `idx(x) * q + idx(y)` under the field's element
//! order. Adjacency is built by translating the cached unit circle (the
//! graph is a Cayley graph of (F_q^2, +)), which costs O(q^2 * degree)
//! instead of O(q^4); tests re-derive adjacency from raw quadrance
//! evaluations to check the two constructions agree.

use crate::bitset::and_count;
use crate::ffield::{Field, PrimePower};
use crate::geometry::{circle_points, point_at, point_index, Circle, Point};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use thiserror::Error;

/// Build cap: dense bitset storage stays under ~1 MB per graph.
pub const MAX_GRAPH_Q: u64 = 50;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("q = {0} exceeds the graph construction cap {MAX_GRAPH_Q}")]
    TooLarge(u64),
    #[error("vertex {0} out of range")]
    BadVertex(usize),
    #[error("malformed {format} input at line {line}: {message}")]
    Parse {
        format: &'static str,
        line: usize,
        message: String,
    },
}

/// A simple undirected graph over vertices 0..n with bitset adjacency rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DenseGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl DenseGraph {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        DenseGraph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn words_per_row(&self) -> usize {
        self.words
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u < self.n && v < self.n && u != v);
        self.rows[u * self.words + (v >> 6)] |= 1 << (v & 63);
        self.rows[v * self.words + (u >> 6)] |= 1 << (u & 63);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + (v >> 6)] >> (v & 63) & 1 == 1
    }

    #[inline]
    pub fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.row(u);
        (0..self.n).filter(move |&v| row[v >> 6] >> (v & 63) & 1 == 1)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).sum::<usize>() / 2
    }

    /// Edges as (u, v) with u < v, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> DenseGraph {
        let mut g = DenseGraph::new(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Induced subgraph on `vertices`, plus the mapping from new indices
    /// back to the originals.
    pub fn induced(&self, vertices: &[usize]) -> (DenseGraph, Vec<usize>) {
        let mut g = DenseGraph::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        (g, vertices.to_vec())
    }

    pub fn is_regular(&self) -> Option<usize> {
        if self.n == 0 {
            return Some(0);
        }
        let d = self.degree(0);
        (1..self.n).all(|u| self.degree(u) == d).then_some(d)
    }

    /// Common-neighbor count of u and v.
    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        and_count(self.row(u), self.row(v))
    }
}

/// Summary row for one graph.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphStats {
    pub q: u64,
    pub p: u64,
    pub n: u32,
    pub order: usize,
    pub degree: usize,
    pub edges: usize,
    pub triangles: Option<u64>,
}

/// Outcome of checking every vertex degree against the closed form
/// q - (-1)^((q-1)/2).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DegreeCheck {
    pub ok: bool,
    pub expected: usize,
    pub observed_min: usize,
    pub observed_max: usize,
}

/// An odd closed walk with distinct vertices; verifies against the graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleCertificate {
    pub vertices: Vec<usize>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycleDefect {
    #[error("cycle length {0} is even or degenerate")]
    NotOdd(usize),
    #[error("repeated vertex {0}")]
    Repeated(usize),
    #[error("consecutive vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
}

impl CycleCertificate {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn verify(&self, g: &DenseGraph) -> Result<(), CycleDefect> {
        let m = self.vertices.len();
        if m < 3 || m.is_multiple_of(2) {
            return Err(CycleDefect::NotOdd(m));
        }
        let mut seen = vec![false; g.order()];
        for &v in &self.vertices {
            if seen[v] {
                return Err(CycleDefect::Repeated(v));
            }
            seen[v] = true;
        }
        for i in 0..m {
            let u = self.vertices[i];
            let v = self.vertices[(i + 1) % m];
            if !g.has_edge(u, v) {
                return Err(CycleDefect::NotAdjacent(u, v));
            }
        }
        Ok(())
    }
}

/// D_q: the field, the adjacency structure, and the cached unit circle.
#[derive(Debug, Clone)]
pub struct QuadranceGraph {
    field: Field,
    graph: DenseGraph,
    unit_circle: Vec<Point>,
    degree: usize,
}

impl QuadranceGraph {
    pub fn build(params: PrimePower) -> Result<Self, GraphError> {
        if params.q() > MAX_GRAPH_Q {
            return Err(GraphError::TooLarge(params.q()));
        }
        let field = Field::new(params);
        let q = params.q();
        let origin = Point::new(field.zero(), field.zero());
        let unit_circle = circle_points(
            &field,
            &Circle {
                center: origin,
                quadrance: field.one(),
            },
        );
        let order = (q * q) as usize;
        let mut graph = DenseGraph::new(order);
        for u in 0..order {
            let pu = point_at(&field, u);
            for s in &unit_circle {
                let v = point_index(
                    &field,
                    Point::new(field.add(pu.x, s.x), field.add(pu.y, s.y)),
                );
                if v > u {
                    graph.add_edge(u, v);
                }
            }
        }
        let degree = unit_circle.len();
        Ok(QuadranceGraph {
            field,
            graph,
            unit_circle,
            degree,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn graph(&self) -> &DenseGraph {
        &self.graph
    }

    pub fn q(&self) -> u64 {
        self.field.q()
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn unit_circle(&self) -> &[Point] {
        &self.unit_circle
    }

    pub fn vertex_point(&self, v: usize) -> Point {
        point_at(&self.field, v)
    }

    pub fn vertex_index(&self, p: Point) -> usize {
        point_index(&self.field, p)
    }

    /// The closed-form degree q - (-1)^((q-1)/2).
    pub fn expected_degree(q: u64) -> usize {
        let sign: i64 = if ((q - 1) / 2).is_multiple_of(2) {
            1
        } else {
            -1
        };
        (q as i64 - sign) as usize
    }

    pub fn degree_check(&self) -> DegreeCheck {
        let expected = Self::expected_degree(self.q());
        let mut min = usize::MAX;
        let mut max = 0;
        for v in 0..self.order() {
            let d = self.graph.degree(v);
            min = min.min(d);
            max = max.max(d);
        }
        DegreeCheck {
            ok: min == expected && max == expected,
            expected,
            observed_min: min,
            observed_max: max,
        }
    }

    /// The cycle 0, s, 2s, ..., (p-1)s for the first unit vector s: length
    /// p (odd), consecutive quadrance 1, wraparound quadrance (p-1)^2 = 1.
    pub fn odd_cycle_witness(&self) -> CycleCertificate {
        let s = self.unit_circle[0];
        let p = self.field.p();
        let mut cur = Point::new(self.field.zero(), self.field.zero());
        let mut vertices = Vec::with_capacity(p as usize);
        for _ in 0..p {
            vertices.push(self.vertex_index(cur));
            cur = Point::new(self.field.add(cur.x, s.x), self.field.add(cur.y, s.y));
        }
        CycleCertificate { vertices }
    }

    pub fn induced_subgraph(&self, vertices: &[usize]) -> (DenseGraph, Vec<usize>) {
        self.graph.induced(vertices)
    }

    pub fn stats(&self) -> GraphStats {
        GraphStats {
            q: self.q(),
            p: self.field.p(),
            n: self.field.n(),
            order: self.order(),
            degree: self.degree,
            edges: self.graph.edge_count(),
            triangles: None,
        }
    }

    pub fn export(&self, format: ExportFormat) -> String {
        match format {
            ExportFormat::Dimacs => export_dimacs(&self.graph),
            ExportFormat::EdgeList => export_edgelist(&self.graph),
            ExportFormat::Json => self.export_json(),
        }
    }

    fn export_json(&self) -> String {
        let f = &self.field;
        let dump = JsonGraph {
            q: f.q(),
            p: f.p(),
            n: f.n(),
            modulus: f.modulus().iter().map(|&c| c as u64).collect(),
            vertices: (0..self.order())
                .map(|v| {
                    let pt = self.vertex_point(v);
                    [f.index_of(pt.x), f.index_of(pt.y)]
                })
                .collect(),
            edges: self
                .graph
                .edges()
                .into_iter()
                .map(|(u, v)| [u, v])
                .collect(),
        };
        serde_json::to_string_pretty(&dump).expect("graph dump serializes")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExportFormat {
    Dimacs,
    EdgeList,
    Json,
}

/// On-disk JSON schema for a graph dump.
#[derive(Debug, Serialize, Deserialize)]
pub struct JsonGraph {
    pub q: u64,
    pub p: u64,
    pub n: u32,
    pub modulus: Vec<u64>,
    pub vertices: Vec<[u64; 2]>,
    pub edges: Vec<[usize; 2]>,
}

/// DIMACS .col: "p edge N M" then one 1-based "e u v" line per edge,
/// ascending.
pub fn export_dimacs(g: &DenseGraph) -> String {
    let edges = g.edges();
    let mut out = String::new();
    let _ = writeln!(out, "p edge {} {}", g.order(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

/// Plain 0-based "u v" lines, ascending.
pub fn export_edgelist(g: &DenseGraph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Parses the output of [`export_edgelist`] given the vertex count.
pub fn parse_edgelist(n: usize, text: &str) -> Result<DenseGraph, GraphError> {
    let mut g = DenseGraph::new(n);
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        let parse = |tok: Option<&str>| -> Result<usize, GraphError> {
            tok.and_then(|t| t.parse().ok()).ok_or(GraphError::Parse {
                format: "edgelist",
                line: lineno + 1,
                message: format!("expected two vertex indices, got {line:?}"),
            })
        };
        let u = parse(it.next())?;
        let v = parse(it.next())?;
        if u >= n || v >= n || u == v {
            return Err(GraphError::Parse {
                format: "edgelist",
                line: lineno + 1,
                message: format!("bad edge ({u}, {v}) for order {n}"),
            });
        }
        g.add_edge(u, v);
    }
    Ok(g)
}

/// Parses a DIMACS .col body produced by [`export_dimacs`].
pub fn parse_dimacs(text: &str) -> Result<DenseGraph, GraphError> {
    let mut g: Option<DenseGraph> = None;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let err = |message: String| GraphError::Parse {
            format: "dimacs",
            line: lineno + 1,
            message,
        };
        if let Some(rest) = line.strip_prefix("p edge ") {
            let mut it = rest.split_whitespace();
            let n: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| err("bad p line".into()))?;
            g = Some(DenseGraph::new(n));
        } else if let Some(rest) = line.strip_prefix("e ") {
            let g = g.as_mut().ok_or_else(|| err("edge before p line".into()))?;
            let mut it = rest.split_whitespace();
            let mut next = || -> Result<usize, GraphError> {
                it.next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| GraphError::Parse {
                        format: "dimacs",
                        line: lineno + 1,
                        message: "bad e line".into(),
                    })
            };
            let u = next()?;
            let v = next()?;
            if u == 0 || v == 0 || u > g.order() || v > g.order() || u == v {
                return Err(err(format!("bad edge ({u}, {v})")));
            }
            g.add_edge(u - 1, v - 1);
        } else {
            return Err(err(format!("unrecognized line {line:?}")));
        }
    }
    g.ok_or(GraphError::Parse {
        format: "dimacs",
        line: 0,
        message: "missing p line".into(),
    })
}
