//! Exhaustive triangle counting by neighborhood intersection over every
//! edge. No symmetry shortcut: vertex-transitivity is something the tests
//! check against this count, not something the count assumes.

use crate::qgraph::DenseGraph;

/// (number of triangles, one witness if any). Each triangle contributes
/// one common neighbor to each of its three edges.
pub fn triangle_count(g: &DenseGraph) -> (u64, Option<[usize; 3]>) {
    let mut total: u64 = 0;
    let mut witness = None;
    for (u, v) in g.edges() {
        let common = g.common_neighbors(u, v);
        total += common as u64;
        if witness.is_none() && common > 0 {
            let w = g
                .neighbors(u)
                .find(|&w| g.has_edge(v, w))
                .expect("common neighbor exists");
            let mut tri = [u, v, w];
            tri.sort_unstable();
            witness = Some(tri);
        }
    }
    debug_assert_eq!(total % 3, 0);
    (total / 3, witness)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Naive triple enumeration, the independent reference.
    fn brute_triangles(g: &DenseGraph) -> u64 {
        let n = g.order();
        let mut count = 0;
        for a in 0..n {
            for b in (a + 1)..n {
                for c in (b + 1)..n {
                    if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                        count += 1;
                    }
                }
            }
        }
        count
    }

    #[test]
    fn counts_match_brute_force() {
        let mut state = 7u64;
        let mut next = move || {
            state = state
                .wrapping_mul(2862933555777941757)
                .wrapping_add(3037000493);
            state >> 33
        };
        for n in [6usize, 10, 13] {
            let mut g = DenseGraph::new(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    if next() % 100 < 40 {
                        g.add_edge(u, v);
                    }
                }
            }
            let (fast, witness) = triangle_count(&g);
            assert_eq!(fast, brute_triangles(&g), "n={n}");
            if fast > 0 {
                let t = witness.unwrap();
                assert!(g.has_edge(t[0], t[1]) && g.has_edge(t[1], t[2]) && g.has_edge(t[0], t[2]));
            } else {
                assert!(witness.is_none());
            }
        }
    }

    #[test]
    fn triangle_free_graph() {
        let mut c5 = DenseGraph::new(5);
        for i in 0..5 {
            c5.add_edge(i, (i + 1) % 5);
        }
        assert_eq!(triangle_count(&c5), (0, None));
    }
}
