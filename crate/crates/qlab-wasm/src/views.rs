//! JSON payload builders behind the wasm exports. Pure string-in /
//! string-out so they test natively without a browser.

use qlab::combinat::{dsatur, triangle_count};
use qlab::ffield::{PrimePower, SquareClass};
use qlab::geometry::{
    circle_points, f_invariant, point_at, point_index, predicted_intersections, quadrance, Circle,
    Point,
};
use qlab::qgraph::QuadranceGraph;
use qlab::spectra::{character_spectrum, eigenvalue_bound_check, hoffman_lower, ratio_theta};
use serde::Serialize;

/// Demo cap: 729 vertices draw comfortably on a canvas.
const MAX_DEMO_Q: u64 = 27;

fn build(q: u64) -> Result<QuadranceGraph, String> {
    let pp = PrimePower::from_order(q).map_err(|e| e.to_string())?;
    if pp.q() > MAX_DEMO_Q {
        return Err(format!("demo supports q <= {MAX_DEMO_Q}, got {q}"));
    }
    QuadranceGraph::build(pp).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct GraphView {
    q: u64,
    p: u64,
    n: u32,
    order: usize,
    degree: usize,
    edge_count: usize,
    triangles: u64,
    vertices: Vec<[u64; 2]>,
    edges: Vec<[usize; 2]>,
    unit_circle: Vec<usize>,
    coloring: Vec<usize>,
    num_colors: usize,
    seed: u64,
}

/// The graph with a seeded greedy colouring (an upper-bound witness, not
/// necessarily optimal).
pub fn graph_view(q: u64, seed: u64) -> Result<String, String> {
    let g = build(q)?;
    let f = g.field();
    let cert = dsatur(g.graph(), seed);
    let (triangles, _) = triangle_count(g.graph());
    let view = GraphView {
        q: g.q(),
        p: f.p(),
        n: f.n(),
        order: g.order(),
        degree: g.degree(),
        edge_count: g.graph().edge_count(),
        triangles,
        vertices: (0..g.order())
            .map(|v| {
                let pt = g.vertex_point(v);
                [f.index_of(pt.x), f.index_of(pt.y)]
            })
            .collect(),
        edges: g.graph().edges().into_iter().map(|(u, v)| [u, v]).collect(),
        unit_circle: g.unit_circle().iter().map(|&p| point_index(f, p)).collect(),
        coloring: cert.colors,
        num_colors: cert.num_colors,
        seed,
    };
    serde_json::to_string(&view).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct SpectrumView {
    q: u64,
    order: usize,
    degree: usize,
    eigenvalues: Vec<(f64, usize)>,
    sqrt_q: f64,
    two_sqrt_q: f64,
    max_abs_nontrivial: f64,
    holds_sqrt_q: bool,
    holds_2sqrt_q: bool,
    lambda_min: f64,
    ratio_theta: f64,
    hoffman_lower: f64,
}

/// Exact-structure spectrum with the derived bounds.
pub fn spectrum_view(q: u64) -> Result<String, String> {
    let g = build(q)?;
    let s = character_spectrum(&g);
    let check = eigenvalue_bound_check(&s, q);
    let view = SpectrumView {
        q: g.q(),
        order: g.order(),
        degree: g.degree(),
        eigenvalues: s.eigenvalues.clone(),
        sqrt_q: check.sqrt_q,
        two_sqrt_q: check.two_sqrt_q,
        max_abs_nontrivial: check.max_abs_nontrivial,
        holds_sqrt_q: check.holds_sqrt_q,
        holds_2sqrt_q: check.holds_2sqrt_q,
        lambda_min: s.lambda_min(),
        ratio_theta: ratio_theta(&s).map_err(|e| e.to_string())?,
        hoffman_lower: hoffman_lower(&s).map_err(|e| e.to_string())?,
    };
    serde_json::to_string(&view).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct CircleView {
    q: u64,
    i: u64,
    j: u64,
    k: u64,
    center_a: usize,
    center_b: usize,
    circle_a: Vec<usize>,
    circle_b: Vec<usize>,
    intersection: Vec<usize>,
    counted: usize,
    predicted: usize,
    f_invariant: u64,
    square_class: String,
    agree: bool,
}

/// Two circles at quadrances i and j whose centers sit at quadrance k
/// apart (the first such pair in canonical order), with both the
/// predicted and the brute-force intersection count.
pub fn circle_view(q: u64, i: u64, j: u64, k: u64) -> Result<String, String> {
    let g = build(q)?;
    let f = g.field();
    if i == 0 || j == 0 || k == 0 || i >= q || j >= q || k >= q {
        return Err(format!(
            "i, j, k must be nonzero element indices below q = {q}"
        ));
    }
    let (ie, je, ke) = (f.element(i), f.element(j), f.element(k));
    let origin = Point::new(f.zero(), f.zero());
    let other = (1..q * q)
        .map(|vi| point_at(f, vi as usize))
        .find(|&p| quadrance(f, origin, p) == ke)
        .ok_or_else(|| format!("no point at quadrance {k} from the origin in F_{q}^2"))?;
    let circle_a: Vec<usize> = circle_points(
        f,
        &Circle {
            center: origin,
            quadrance: ie,
        },
    )
    .into_iter()
    .map(|p| point_index(f, p))
    .collect();
    let circle_b: Vec<usize> = circle_points(
        f,
        &Circle {
            center: other,
            quadrance: je,
        },
    )
    .into_iter()
    .map(|p| point_index(f, p))
    .collect();
    let intersection: Vec<usize> = circle_a
        .iter()
        .copied()
        .filter(|v| circle_b.contains(v))
        .collect();
    let predicted = predicted_intersections(f, ie, je, ke)
        .map_err(|e| e.to_string())?
        .count();
    let disc = f_invariant(f, ie, je, ke);
    let square_class = match f.square_class(disc) {
        SquareClass::Zero => "ZERO",
        SquareClass::Square => "SQUARE",
        SquareClass::NonSquare => "NONSQUARE",
    };
    let view = CircleView {
        q,
        i,
        j,
        k,
        center_a: point_index(f, origin),
        center_b: point_index(f, other),
        counted: intersection.len(),
        predicted,
        agree: intersection.len() == predicted,
        circle_a,
        circle_b,
        intersection,
        f_invariant: f.index_of(disc),
        square_class: square_class.to_string(),
    };
    serde_json::to_string(&view).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_view_q3() {
        let text = graph_view(3, 0).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["order"], 9);
        assert_eq!(v["degree"], 4);
        assert_eq!(v["edge_count"], 18);
        assert_eq!(v["num_colors"], 3);
        assert_eq!(v["unit_circle"].as_array().unwrap().len(), 4);
    }

    #[test]
    fn spectrum_view_q3() {
        let text = spectrum_view(3).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["eigenvalues"].as_array().unwrap().len(), 3);
        assert_eq!(v["holds_sqrt_q"], false);
        assert_eq!(v["holds_2sqrt_q"], true);
    }

    #[test]
    fn circle_view_counts_match() {
        for (q, i, j, k) in [(5u64, 1u64, 1u64, 1u64), (13, 1, 1, 1), (9, 2, 3, 4)] {
            let text = circle_view(q, i, j, k).unwrap();
            let v: serde_json::Value = serde_json::from_str(&text).unwrap();
            assert_eq!(v["agree"], true, "q={q} i={i} j={j} k={k}: {text}");
        }
    }

    #[test]
    fn bad_inputs_are_rejected() {
        assert!(graph_view(15, 0).is_err());
        assert!(graph_view(49, 0).is_err());
        assert!(circle_view(5, 0, 1, 1).is_err());
        assert!(circle_view(5, 1, 1, 9).is_err());
    }
}
