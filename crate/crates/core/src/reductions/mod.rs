//! The 3-SAT → Problem 3 → Problem 2 → Problem 1 reduction chain.
//!
//! * Problem 3: extend a partial 2-edge-coloring `(Ê₁, Ê₂)` to a
//!   3-total-coloring in which every pair of `Q` is total-rainbow
//!   k-connected and no pre-colored edge shares a color with an endpoint.
//! * Problem 2: a 3-total-coloring making every pair of `P` total-rainbow
//!   k-connected.
//! * Problem 1: a 3-total-coloring making the whole graph total-rainbow
//!   k-connected.
//!
//! Each reduction lays the source graph out as a prefix of the target: source
//! vertex ids and edge ids are preserved, so restricting a coloring is taking
//! a prefix. Each target vertex carries a [`Role`] and a provenance anchor.
//!
//! Forward witnesses (`assignment_to_coloring`, `lift_*`) and backward
//! extractions (`restrict_*`, `coloring_to_assignment`) check their own
//! output with the verifier. A failing check is reported as
//! [`ReductionError::Falsified`].

mod lemma1;
mod p2_to_p1;
mod p3_to_p2;
mod sat;

pub use lemma1::{lemma1_clique_coloring, lemma1_edge_color, lemma1_label};
pub use p2_to_p1::{lift_coloring_p2_to_p1, reduce_p2_to_p1, restrict_coloring_p1_to_p2};
pub use p3_to_p2::{lift_coloring_p3_to_p2, reduce_p3_to_p2, restrict_coloring_p2_to_p3, ColorRoles};
pub use sat::{assignment_to_coloring, coloring_to_assignment, reduce_sat_to_p3};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cnf::{CnfError, CnfFormula};
use crate::coloring::{ColoringError, PartialEdgeColoring, TotalColoring};
use crate::graph::{Graph, GraphError, PairScope, PairSet, VertexId};
use crate::verify::VerifyError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error(transparent)]
    Cnf(#[from] CnfError),
    #[error("clause {clause} contains x{var} with both signs")]
    ConflictingLiteral { clause: usize, var: usize },
    #[error("expected a {expected} instance, got {found}")]
    WrongStage { expected: Stage, found: Stage },
    #[error("instance does not record the {0} it was reduced from")]
    MissingSource(&'static str),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("assignment does not satisfy the formula")]
    Unsatisfying,
    #[error("REDUCTION FALSIFIED: {0}")]
    Falsified(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Stage {
    P3,
    P2,
    P1,
}

impl std::fmt::Display for Stage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Stage::P3 => "p3",
            Stage::P2 => "p2",
            Stage::P1 => "p1",
        })
    }
}

/// What a vertex is for. Gadget roles name the source vertices they hang off.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "role", rename_all = "kebab-case")]
pub enum Role {
    /// A vertex of a user-supplied input graph.
    Original,
    S,
    Clause { t: usize },
    ClauseHelper { t: usize, j: usize },
    Variable { i: usize },
    /// The hub `c` of the Problem 3 → Problem 2 gadget.
    Hub,
    B1,
    B2,
    EdgeC { j: usize, edge: [String; 2] },
    EdgeD { j: usize, edge: [String; 2] },
    EdgeF { j: usize, edge: [String; 2] },
    PairHelper { pair: [String; 2], t: usize },
    VertexGadget { vertex: String, i: usize },
    PairGadget { pair: [String; 2], i: usize },
}

/// Where an instance came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    /// Supplied directly.
    Given,
    Formula(CnfFormula),
    Instance(Box<ReducedInstance>),
}

/// A problem instance produced by (or fed into) the reduction chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedInstance {
    pub stage: Stage,
    pub k: usize,
    pub graph: Graph,
    /// `Q` for Problem 3, `P` for Problem 2, all pairs for Problem 1.
    pub pairs: PairScope,
    /// Present for Problem 3 only.
    pub partial: Option<PartialEdgeColoring>,
    /// Indexed by vertex id.
    pub roles: Vec<Role>,
    /// Earliest vertex each vertex was built for; a fixpoint on anchors.
    pub provenance: Vec<VertexId>,
    pub source: Source,
}

impl ReducedInstance {
    /// A user-supplied Problem 3 instance.
    pub fn problem3(
        graph: Graph,
        q: PairSet,
        partial: PartialEdgeColoring,
        k: usize,
    ) -> Result<Self, ReductionError> {
        check_k(k)?;
        partial.resolve(&graph)?;
        q.ensure_nonadjacent(&graph)?;
        Ok(Self::given(Stage::P3, graph, PairScope::Subset(q), Some(partial), k))
    }

    /// A user-supplied Problem 2 instance.
    pub fn problem2(graph: Graph, p: PairSet, k: usize) -> Result<Self, ReductionError> {
        check_k(k)?;
        if graph.vertex_count() < 2 {
            return Err(ReductionError::Precondition(
                "Problem 2 needs at least two vertices".into(),
            ));
        }
        p.ensure_nonadjacent(&graph)?;
        Ok(Self::given(Stage::P2, graph, PairScope::Subset(p), None, k))
    }

    fn given(stage: Stage, graph: Graph, pairs: PairScope, partial: Option<PartialEdgeColoring>, k: usize) -> Self {
        let n = graph.vertex_count();
        Self {
            stage,
            k,
            roles: vec![Role::Original; n],
            provenance: (0..n).map(VertexId).collect(),
            graph,
            pairs,
            partial,
            source: Source::Given,
        }
    }

    pub fn expect_stage(&self, stage: Stage) -> Result<(), ReductionError> {
        if self.stage != stage {
            return Err(ReductionError::WrongStage {
                expected: stage,
                found: self.stage,
            });
        }
        Ok(())
    }

    pub fn source_instance(&self) -> Result<&ReducedInstance, ReductionError> {
        match &self.source {
            Source::Instance(inst) => Ok(inst),
            _ => Err(ReductionError::MissingSource("source instance")),
        }
    }

    pub fn formula(&self) -> Result<&CnfFormula, ReductionError> {
        match &self.source {
            Source::Formula(f) => Ok(f),
            _ => Err(ReductionError::MissingSource("formula")),
        }
    }

    /// The required pairs as a set (empty scope for Problem 1 is "all").
    pub fn pair_set(&self) -> Option<&PairSet> {
        match &self.pairs {
            PairScope::Subset(s) => Some(s),
            PairScope::All => None,
        }
    }

    pub fn role(&self, v: VertexId) -> &Role {
        &self.roles[v.0]
    }

    pub fn origin(&self, v: VertexId) -> VertexId {
        self.provenance[v.0]
    }
}

fn check_k(k: usize) -> Result<(), ReductionError> {
    if k == 0 {
        return Err(ReductionError::Precondition("k must be at least 1".into()));
    }
    Ok(())
}

/// `(first, second)` with the lexicographically smaller label first. This is
/// the orientation used for asymmetric 0/1 colors on pair gadgets.
pub(crate) fn oriented_pair(g: &Graph, u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    if g.label(u) <= g.label(v) {
        (u, v)
    } else {
        (v, u)
    }
}

/// Checks `c` uses only colors 0, 1, 2.
pub(crate) fn ensure_three_colors(c: &TotalColoring, what: &str) -> Result<(), ReductionError> {
    if c.vertex_colors().iter().chain(c.edge_colors()).any(|&x| x >= 3) {
        return Err(ReductionError::Precondition(format!("{what} must use colors 0, 1, 2 only")));
    }
    Ok(())
}

/// Sat → P3 → P2 → P1 in one go.
pub fn reduce_sat_to_trc3(phi: &CnfFormula, k: usize) -> Result<ReducedInstance, ReductionError> {
    let p3 = reduce_sat_to_p3(phi, k)?;
    let p2 = reduce_p3_to_p2(&p3)?;
    reduce_p2_to_p1(&p2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn provenance_is_a_fixpoint_through_the_chain() {
        let phi = CnfFormula::from_ints(3, &[[1, -2, 3]]).unwrap();
        let p1 = reduce_sat_to_trc3(&phi, 1).unwrap();
        for v in p1.graph.vertices() {
            let o = p1.origin(v);
            assert_eq!(p1.origin(o), o, "anchor of {} is not terminal", p1.graph.label(v));
            assert!(matches!(
                p1.role(o),
                Role::S | Role::Clause { .. } | Role::Variable { .. } | Role::Hub | Role::B1 | Role::B2
            ));
        }
        // every stage-0 vertex keeps its label and role
        let p3 = p1.source_instance().unwrap().source_instance().unwrap();
        for v in p3.graph.vertices() {
            assert_eq!(p1.graph.label(v), p3.graph.label(v));
            assert_eq!(p1.role(v), p3.role(v));
        }
    }

    #[test]
    fn composed_vertex_count() {
        let phi = CnfFormula::from_ints(3, &[[1, 2, 3]]).unwrap();
        let p1 = reduce_sat_to_trc3(&phi, 1).unwrap();
        // 26 + 4·26 + 4·(C(26,2) − 32)
        assert_eq!(p1.graph.vertex_count(), 26 + 4 * 26 + 4 * (325 - 32));
    }

    #[test]
    fn wrong_stage_is_rejected() {
        let phi = CnfFormula::from_ints(3, &[[1, 2, 3]]).unwrap();
        let p3 = reduce_sat_to_p3(&phi, 1).unwrap();
        assert!(matches!(
            reduce_p2_to_p1(&p3),
            Err(ReductionError::WrongStage { .. })
        ));
    }
}
