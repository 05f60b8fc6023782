//! Total rainbow k-connection: verifiers, exact solvers, the clique lemma
//! coloring and the 3-SAT → trc_k = 3 reduction chain.

pub mod cnf;
pub mod coloring;
pub mod format;
pub mod graph;
pub mod reductions;
pub mod solve;
pub mod verify;

pub use cnf::{parse_dimacs, Assignment, CnfError, CnfFormula, Literal};
pub use coloring::{Color, ColoringError, ColoringMode, OrientedEdge, PartialEdgeColoring, TotalColoring, MAX_PALETTE};
pub use graph::{Diameter, EdgeId, Element, Graph, GraphBuilder, GraphError, PairScope, PairSet, Path, VertexId};
pub use reductions::{ReducedInstance, ReductionError, Role, Source, Stage};
pub use solve::{
    bounds_report, decide_colorable, decide_extension, decide_subset_trc3, min_colors, rc_k, rvc_k, trc_k,
    BoundsReport, ColoringProblem, MinimumReport, Outcome, SearchBudget, SolveError, SolveOptions, SolveReport,
};
pub use verify::{
    has_k_disjoint_rainbow_paths, is_rainbow_k_connected, is_rainbow_path, satisfies_problem3, ExtensionVerdict,
    KConnectivity, VerifyError, VerifyOptions,
};
