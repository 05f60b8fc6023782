//! Problem 2 → Problem 1.
//!
//! Every vertex `v` gets a gadget `x(v,1..M)` of `M = (k+1)²` new vertices
//! joined to `v`, and every pair `{u, v}` outside `P` (adjacent pairs
//! included) gets a gadget `x(u,v,1..M)` joined to both `u` and `v`. All new
//! vertices together form one clique. Pairs of `P` gain no common neighbour
//! outside the source graph, so their short rainbow paths stay inside it.

use crate::coloring::{Color, ColoringMode, TotalColoring};
use crate::graph::{Graph, GraphBuilder, PairScope, VertexId};
use crate::verify::{is_rainbow_k_connected, KConnectivity, VerifyOptions};

use super::lemma1::lemma1_edge_color;
use super::{ensure_three_colors, oriented_pair, ReducedInstance, ReductionError, Role, Source, Stage};

fn vertex_gadget_label(v: &str, i: usize) -> String {
    format!("x({v},{i})")
}

fn pair_gadget_label(u: &str, v: &str, i: usize) -> String {
    format!("x({u},{v},{i})")
}

/// Unordered pairs not in `P`, oriented by label, in vertex-id order.
fn non_pairs(inst: &ReducedInstance) -> Result<Vec<(VertexId, VertexId)>, ReductionError> {
    let g = &inst.graph;
    let p = inst.pair_set().ok_or(ReductionError::MissingSource("pair set"))?;
    let n = g.vertex_count();
    let mut out = Vec::with_capacity(n * (n - 1) / 2 - p.len().min(n * (n - 1) / 2));
    for a in 0..n {
        for b in a + 1..n {
            let (u, v) = (VertexId(a), VertexId(b));
            if !p.contains(u, v) {
                out.push(oriented_pair(g, u, v));
            }
        }
    }
    Ok(out)
}

fn check_source(inst: &ReducedInstance) -> Result<(), ReductionError> {
    inst.expect_stage(Stage::P2)?;
    if inst.graph.vertex_count() < 2 {
        return Err(ReductionError::Precondition(
            "Problem 2 needs at least two vertices".into(),
        ));
    }
    let p = inst.pair_set().ok_or(ReductionError::MissingSource("pair set"))?;
    p.ensure_nonadjacent(&inst.graph)?;
    Ok(())
}

/// Builds the Problem 1 instance for a Problem 2 instance.
pub fn reduce_p2_to_p1(inst: &ReducedInstance) -> Result<ReducedInstance, ReductionError> {
    check_source(inst)?;
    let g = &inst.graph;
    let k = inst.k;
    let m = (k + 1) * (k + 1);
    let n = g.vertex_count();
    let pairs = non_pairs(inst)?;
    let fresh = m * (n + pairs.len());
    let mut b = GraphBuilder::with_capacity(
        n + fresh,
        g.edge_count() + m * (n + 2 * pairs.len()) + fresh * (fresh - 1) / 2,
    );
    let mut roles = inst.roles.clone();
    let mut provenance = inst.provenance.clone();
    roles.reserve(fresh);
    provenance.reserve(fresh);
    for v in g.vertices() {
        b.add_vertex(g.label(v))?;
    }
    for e in g.edge_ids() {
        let (x, y) = g.endpoints(e);
        b.add_edge(x, y)?;
    }
    for v in g.vertices() {
        for i in 1..=m {
            let x = b.add_vertex(vertex_gadget_label(g.label(v), i))?;
            b.add_edge(v, x)?;
            roles.push(Role::VertexGadget {
                vertex: g.label(v).to_string(),
                i,
            });
            provenance.push(inst.provenance[v.0]);
        }
    }
    for &(u, v) in &pairs {
        let (lu, lv) = (g.label(u), g.label(v));
        for i in 1..=m {
            let x = b.add_vertex(pair_gadget_label(lu, lv, i))?;
            b.add_edge(u, x)?;
            b.add_edge(v, x)?;
            roles.push(Role::PairGadget {
                pair: [lu.to_string(), lv.to_string()],
                i,
            });
            provenance.push(inst.provenance[u.0]);
        }
    }
    for a in n..n + fresh {
        for c in a + 1..n + fresh {
            b.add_edge(VertexId(a), VertexId(c))?;
        }
    }
    Ok(ReducedInstance {
        stage: Stage::P1,
        k,
        graph: b.build()?,
        pairs: PairScope::All,
        partial: None,
        roles,
        provenance,
        source: Source::Instance(Box::new(inst.clone())),
    })
}

fn check_pairs(inst: &ReducedInstance, chi: &TotalColoring, what: &str) -> Result<(), String> {
    let g = &inst.graph;
    match is_rainbow_k_connected(g, chi, inst.k, ColoringMode::Total, &inst.pairs, VerifyOptions::default()) {
        Ok(KConnectivity::Holds) => Ok(()),
        Ok(KConnectivity::FailsAt(u, v)) => Err(format!(
            "{what}: pair {{{}, {}}} lacks {} disjoint rainbow paths",
            g.label(u),
            g.label(v),
            inst.k
        )),
        Err(e) => Err(format!("{what}: {e}")),
    }
}

/// Lifts a Problem 2 coloring to the whole of `G′`: new vertices 2, stars 1,
/// pair gadgets 0 from the first end and 1 from the second, gadget cliques
/// as in the clique lemma, every other new edge 0.
pub fn lift_coloring_p2_to_p1(inst: &ReducedInstance, chi: &TotalColoring) -> Result<TotalColoring, ReductionError> {
    inst.expect_stage(Stage::P1)?;
    let src = inst.source_instance()?;
    check_source(src)?;
    let g = &src.graph;
    chi.check_fits(g)?;
    ensure_three_colors(chi, "coloring")?;
    check_pairs(src, chi, "source coloring").map_err(ReductionError::Precondition)?;

    let g1 = &inst.graph;
    let k = inst.k;
    let m = (k + 1) * (k + 1);
    let n = g.vertex_count();
    let pairs = non_pairs(src)?;
    if g1.vertex_count() != n + m * (n + pairs.len()) {
        return Err(ReductionError::Precondition(
            "instance graph does not match its source".into(),
        ));
    }
    let mut vc = chi.vertex_colors().to_vec();
    vc.resize(g1.vertex_count(), 2);
    let ec: Vec<Color> = g1
        .edge_ids()
        .map(|e| {
            if e.0 < g.edge_count() {
                return chi.edge(e);
            }
            let (a, b) = g1.endpoints(e);
            let (a, b) = if a < b { (a.0, b.0) } else { (b.0, a.0) };
            let gb = (b - n) / m;
            if a < n {
                if gb < n {
                    1
                } else if VertexId(a) == pairs[gb - n].0 {
                    0
                } else {
                    1
                }
            } else if (a - n) / m == gb {
                lemma1_edge_color(k, (a - n) % m, (b - n) % m)
            } else {
                0
            }
        })
        .collect();
    let lifted = TotalColoring::new(3, vc, ec)?;
    check_pairs(inst, &lifted, "lifted coloring").map_err(ReductionError::Falsified)?;
    Ok(lifted)
}

/// Restricts a rainbow k-connected 3-coloring of `G′` to the source graph.
pub fn restrict_coloring_p1_to_p2(inst: &ReducedInstance, chi1: &TotalColoring) -> Result<TotalColoring, ReductionError> {
    inst.expect_stage(Stage::P1)?;
    let src = inst.source_instance()?;
    check_source(src)?;
    chi1.check_fits(&inst.graph)?;
    ensure_three_colors(chi1, "coloring")?;
    check_pairs(inst, chi1, "coloring").map_err(ReductionError::Precondition)?;
    let g: &Graph = &src.graph;
    let chi = chi1.prefix(g.vertex_count(), g.edge_count());
    check_pairs(src, &chi, "restricted coloring").map_err(ReductionError::Falsified)?;
    Ok(chi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Element, PairSet};

    fn path_instance(k: usize) -> ReducedInstance {
        let g = Graph::from_labels(["a", "b", "c"], [("a", "b"), ("b", "c")]).unwrap();
        let p = PairSet::from_labels(&g, [("a", "c")]).unwrap();
        ReducedInstance::problem2(g, p, k).unwrap()
    }

    fn path_coloring() -> TotalColoring {
        TotalColoring::new(3, vec![0, 2, 0], vec![0, 1]).unwrap()
    }

    #[test]
    fn path_counts() {
        let p1 = reduce_p2_to_p1(&path_instance(1)).unwrap();
        assert_eq!(p1.graph.vertex_count(), 23);
        assert_eq!(p1.graph.edge_count(), 220);
    }

    #[test]
    fn pair_has_no_outside_common_neighbour() {
        let p1 = reduce_p2_to_p1(&path_instance(1)).unwrap();
        let (a, c) = (p1.graph.vertex("a").unwrap(), p1.graph.vertex("c").unwrap());
        assert_eq!(p1.graph.common_neighbors(a, c), vec![p1.graph.vertex("b").unwrap()]);
    }

    #[test]
    fn lift_verifies_and_restricts_back() {
        for k in 1..=2 {
            let inst = path_instance(k);
            if k == 2 {
                // a path has only one route between a and c
                assert!(lift_coloring_p2_to_p1(&reduce_p2_to_p1(&inst).unwrap(), &path_coloring()).is_err());
                continue;
            }
            let p1 = reduce_p2_to_p1(&inst).unwrap();
            let lifted = lift_coloring_p2_to_p1(&p1, &path_coloring()).unwrap();
            assert!(lifted.vertex_colors()[3..].iter().all(|&c| c == 2));
            let g = &p1.graph;
            let (a, b) = (g.vertex("a").unwrap(), g.vertex("b").unwrap());
            let x = g.vertex("x(a,b,1)").unwrap();
            assert_eq!(lifted.edge(g.edge_between(a, x).unwrap()), 0);
            assert_eq!(lifted.edge(g.edge_between(b, x).unwrap()), 1);
            assert_eq!(restrict_coloring_p1_to_p2(&p1, &lifted).unwrap(), path_coloring());
        }
    }

    #[test]
    fn k2_on_a_cycle_lifts() {
        let g = Graph::from_labels(
            ["a", "b", "c", "d"],
            [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")],
        )
        .unwrap();
        let p = PairSet::from_labels(&g, [("a", "c")]).unwrap();
        let inst = ReducedInstance::problem2(g, p, 2).unwrap();
        // a–b–c and a–d–c with colors 0,2,1 / 1,2,0 on edge, vertex, edge
        let chi = TotalColoring::new(3, vec![0, 2, 0, 2], vec![0, 1, 0, 1]).unwrap();
        let p1 = reduce_p2_to_p1(&inst).unwrap();
        assert_eq!(p1.graph.vertex_count(), 4 + 9 * (4 + 5));
        let lifted = lift_coloring_p2_to_p1(&p1, &chi).unwrap();
        assert_eq!(restrict_coloring_p1_to_p2(&p1, &lifted).unwrap(), chi);
    }

    #[test]
    fn invalid_colorings_rejected() {
        let p1 = reduce_p2_to_p1(&path_instance(1)).unwrap();
        let bad = TotalColoring::new(3, vec![0, 0, 0], vec![0, 1]).unwrap();
        assert!(matches!(
            lift_coloring_p2_to_p1(&p1, &bad),
            Err(ReductionError::Precondition(_))
        ));
        let mut lifted = lift_coloring_p2_to_p1(&p1, &path_coloring()).unwrap();
        lifted.set(Element::Vertex(p1.graph.vertex("b").unwrap()), 0);
        assert!(matches!(
            restrict_coloring_p1_to_p2(&p1, &lifted),
            Err(ReductionError::Precondition(_))
        ));
    }

    #[test]
    fn single_vertex_rejected() {
        let g = Graph::from_labels(["a"], std::iter::empty::<(&str, &str)>()).unwrap();
        assert!(ReducedInstance::problem2(g, PairSet::new(), 1).is_err());
    }
}
