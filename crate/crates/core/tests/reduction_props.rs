mod common;

use proptest::prelude::*;
use rainbow_core::reductions::{
    assignment_to_coloring, coloring_to_assignment, lift_coloring_p2_to_p1, lift_coloring_p3_to_p2,
    reduce_p2_to_p1, reduce_p3_to_p2, reduce_sat_to_p3, restrict_coloring_p1_to_p2, restrict_coloring_p2_to_p3,
};
use rainbow_core::{
    decide_extension, decide_subset_trc3, is_rainbow_k_connected, satisfies_problem3, CnfFormula, ColoringMode,
    Graph, OrientedEdge, Outcome, PairScope, PairSet, PartialEdgeColoring, ReducedInstance, SolveOptions,
    VerifyOptions, VertexId,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn formula() -> impl Strategy<Value = CnfFormula> {
    any::<u64>().prop_map(|seed| common::random_small_cnf(&mut StdRng::seed_from_u64(seed), 3, 2))
}

fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let labels: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((labels[a].clone(), labels[b].clone()));
            }
        }
    }
    Graph::from_labels(labels.iter().cloned(), edges).unwrap()
}

fn nonadjacent_pairs(rng: &mut StdRng, g: &Graph, p: f64) -> PairSet {
    let mut set = PairSet::new();
    let n = g.vertex_count();
    for a in 0..n {
        for b in a + 1..n {
            let (u, v) = (VertexId(a), VertexId(b));
            if !g.adjacent(u, v) && rng.gen_bool(p) {
                set.insert(g, u, v).unwrap();
            }
        }
    }
    set
}

fn problem3(seed: u64) -> ReducedInstance {
    let mut rng = StdRng::seed_from_u64(seed);
    let n = rng.gen_range(3..=5);
    let g = random_graph(&mut rng, n, 0.6);
    let q = nonadjacent_pairs(&mut rng, &g, 0.7);
    let mut partial = PartialEdgeColoring::default();
    for e in g.edge_ids() {
        let (a, b) = g.endpoints(e);
        let oe = if rng.gen_bool(0.5) { OrientedEdge::new(a, b) } else { OrientedEdge::new(b, a) };
        match rng.gen_range(0..4) {
            0 => partial.class1.push(oe),
            1 => partial.class2.push(oe),
            _ => {}
        }
    }
    ReducedInstance::problem3(g, q, partial, 1).unwrap()
}

fn opts() -> SolveOptions {
    SolveOptions::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn extension_exists_iff_satisfiable(phi in formula(), k in 1usize..=2) {
        let inst = reduce_sat_to_p3(&phi, k).unwrap();
        let q = inst.pair_set().unwrap();
        let partial = inst.partial.as_ref().unwrap();
        let report = decide_extension(&inst.graph, q, partial, k, &opts()).unwrap();
        prop_assert_eq!(matches!(report.outcome, Outcome::Found(_)), phi.is_satisfiable());
        if let Outcome::Found(chi) = report.outcome {
            let a = coloring_to_assignment(&inst, &chi).unwrap();
            prop_assert!(phi.evaluate(&a));
            // swapping the two class colors is still a valid extension
            let swapped = chi.permuted(&[1, 0, 2]);
            prop_assert!(satisfies_problem3(&inst.graph, q, partial, &swapped, k).unwrap().is_satisfied());
            prop_assert_eq!(coloring_to_assignment(&inst, &swapped).unwrap(), a);
        }
    }

    #[test]
    fn assignment_survives_the_forward_coloring(phi in formula(), k in 1usize..=2) {
        let Some(a) = phi.brute_force() else { return Ok(()) };
        let inst = reduce_sat_to_p3(&phi, k).unwrap();
        let chi = assignment_to_coloring(&inst, &a).unwrap();
        let back = coloring_to_assignment(&inst, &chi).unwrap();
        for var in 1..=phi.vars() {
            if !back.is_unconstrained(var) {
                prop_assert_eq!(back.value(var), a.value(var));
            }
        }
    }

    #[test]
    fn p3_solutions_lift_to_p2_and_back(seed in any::<u64>()) {
        let p3 = problem3(seed);
        let q = p3.pair_set().unwrap();
        let partial = p3.partial.as_ref().unwrap();
        let report = decide_extension(&p3.graph, q, partial, 1, &opts()).unwrap();
        let p2 = reduce_p3_to_p2(&p3).unwrap();
        match report.outcome {
            Outcome::Found(chi) => {
                let lifted = lift_coloring_p3_to_p2(&p2, &chi).unwrap();
                let scope = p2.pairs.clone();
                prop_assert!(is_rainbow_k_connected(&p2.graph, &lifted, 1, ColoringMode::Total, &scope, VerifyOptions::default())
                    .unwrap()
                    .holds());
                let (back, roles) = restrict_coloring_p2_to_p3(&p2, &lifted).unwrap();
                prop_assert_eq!(roles.normalize(&back), chi);
            }
            Outcome::Impossible => {
                let direct = decide_subset_trc3(&p2.graph, p2.pair_set().unwrap(), 1, &opts()).unwrap();
                prop_assert_eq!(direct.outcome, Outcome::Impossible);
            }
            Outcome::Exhausted => prop_assert!(false, "no budget was set"),
        }
    }

    #[test]
    fn p2_solutions_lift_to_p1_and_back(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let n = rng.gen_range(2..=4);
        let g = random_graph(&mut rng, n, 0.5);
        let p = nonadjacent_pairs(&mut rng, &g, 0.7);
        let report = decide_subset_trc3(&g, &p, 1, &opts()).unwrap();
        let p2 = ReducedInstance::problem2(g, p, 1).unwrap();
        let p1 = reduce_p2_to_p1(&p2).unwrap();
        prop_assert_eq!(&p1.pairs, &PairScope::All);
        if let Outcome::Found(chi) = report.outcome {
            let lifted = lift_coloring_p2_to_p1(&p1, &chi).unwrap();
            prop_assert_eq!(restrict_coloring_p1_to_p2(&p1, &lifted).unwrap(), chi);
        }
    }

    #[test]
    fn provenance_anchors_are_fixpoints(phi in formula(), k in 1usize..=2) {
        let p3 = reduce_sat_to_p3(&phi, k).unwrap();
        let p2 = reduce_p3_to_p2(&p3).unwrap();
        for inst in [&p3, &p2] {
            prop_assert_eq!(inst.roles.len(), inst.graph.vertex_count());
            for v in inst.graph.vertices() {
                let o = inst.origin(v);
                prop_assert_eq!(inst.origin(o), o);
            }
        }
        // source graphs are laid out as a prefix
        for v in p3.graph.vertices() {
            prop_assert_eq!(p2.graph.label(v), p3.graph.label(v));
        }
        for e in p3.graph.edge_ids() {
            prop_assert_eq!(p2.graph.endpoints(e), p3.graph.endpoints(e));
        }
    }
}

#[test]
fn unsatisfying_assignment_is_rejected() {
    let phi = CnfFormula::from_ints(1, &[[1, 1, 1]]).unwrap();
    let inst = reduce_sat_to_p3(&phi, 1).unwrap();
    let a = rainbow_core::Assignment::new(vec![false]);
    assert!(assignment_to_coloring(&inst, &a).is_err());
}
