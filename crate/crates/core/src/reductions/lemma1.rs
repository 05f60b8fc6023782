//! The 2-edge-coloring of K_{(k+1)²} that is rainbow k-connected.
//!
//! Vertices are `v_{i,l}` for `1 ≤ i, l ≤ k+1`, i.e. a `(k+1) × (k+1)` grid
//! of cliques `V_i = {v_{i,1}, …, v_{i,k+1}}`. An edge is colored 0 when its
//! ends share a clique (same `i`) or a position (same `l`), and 1 otherwise.
//! Each vertex then sees `2k` edges of color 0 and `k²` of color 1.

use crate::coloring::{Color, TotalColoring};
use crate::graph::{Element, Graph, GraphBuilder, VertexId};

use super::ReductionError;

/// Color of the edge between grid vertices `a` and `b`, numbered
/// `0..(k+1)²` row by row.
pub fn lemma1_edge_color(k: usize, a: usize, b: usize) -> Color {
    let m = k + 1;
    let (ra, ca) = (a / m, a % m);
    let (rb, cb) = (b / m, b % m);
    if ra == rb || ca == cb {
        0
    } else {
        1
    }
}

/// Label of grid vertex `v_{i,l}` (1-based).
pub fn lemma1_label(i: usize, l: usize) -> String {
    format!("v({i},{l})")
}

/// The complete graph K_{(k+1)²} with its 2-edge-coloring. Vertex colors are
/// all 0 and carry no meaning (use edge mode when verifying).
pub fn lemma1_clique_coloring(k: usize) -> Result<(Graph, TotalColoring), ReductionError> {
    if k == 0 {
        return Err(ReductionError::Precondition("k must be at least 1".into()));
    }
    let m = k + 1;
    let n = m * m;
    let mut b = GraphBuilder::with_capacity(n, n * (n - 1) / 2);
    for i in 1..=m {
        for l in 1..=m {
            b.add_vertex(lemma1_label(i, l))?;
        }
    }
    for a in 0..n {
        for c in a + 1..n {
            b.add_edge(VertexId(a), VertexId(c))?;
        }
    }
    let g = b.build()?;
    let coloring = TotalColoring::from_fn(&g, 2, |el| match el {
        Element::Vertex(_) => 0,
        Element::Edge(e) => {
            let (x, y) = g.endpoints(e);
            lemma1_edge_color(k, x.0, y.0)
        }
    })?;
    Ok((g, coloring))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::ColoringMode;
    use crate::graph::PairScope;
    use crate::verify::{is_rainbow_k_connected, VerifyOptions};

    fn color_degrees(g: &Graph, c: &TotalColoring, v: VertexId) -> (usize, usize) {
        let zero = g.neighbors(v).filter(|&(_, e)| c.edge(e) == 0).count();
        (zero, g.degree(v) - zero)
    }

    #[test]
    fn k1_is_k4_with_two_zero_edges_per_vertex() {
        let (g, c) = lemma1_clique_coloring(1).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert!(g.is_complete());
        for v in g.vertices() {
            assert_eq!(color_degrees(&g, &c, v), (2, 1));
        }
    }

    #[test]
    fn degree_split_up_to_k4() {
        for k in 1..=4 {
            let (g, c) = lemma1_clique_coloring(k).unwrap();
            assert_eq!(g.vertex_count(), (k + 1) * (k + 1));
            for v in g.vertices() {
                assert_eq!(color_degrees(&g, &c, v), (2 * k, k * k), "k={k}");
            }
        }
    }

    #[test]
    fn k2_is_rainbow_2_connected() {
        let (g, c) = lemma1_clique_coloring(2).unwrap();
        let r = is_rainbow_k_connected(&g, &c, 2, ColoringMode::Edge, &PairScope::All, VerifyOptions::default())
            .unwrap();
        assert!(r.holds());
    }

    #[test]
    fn zero_k_rejected() {
        assert!(lemma1_clique_coloring(0).is_err());
    }
}
