//! 3-SAT → Problem 3.
//!
//! One vertex `s`, one vertex `x_i` per variable joined to `s`, and one vertex
//! `c_t` per clause joined to the variables it mentions. For k ≥ 2 each clause
//! also gets helpers `c^j_t` (2 ≤ j ≤ k) forming paths `s – c^j_t – c_t`.
//! The pairs are `{s, c_t}`; clause edges are pre-colored by literal sign
//! (positive in `Ê₁`, negative in `Ê₂`) and oriented `(x_i, c_t)`.
//!
//! Under a 3-coloring every pair `{s, c_t}` needs one total-rainbow path
//! `s – x_i – c_t` beyond its helpers, and such a path exists exactly when
//! the literal of `x_i` in `c_t` is made true by reading `χ(s x_i)` as the
//! truth value.

use crate::cnf::{Assignment, CnfFormula};
use crate::coloring::{Color, ColoringMode, OrientedEdge, PartialEdgeColoring, TotalColoring};
use crate::graph::{Element, GraphBuilder, PairScope, PairSet, Path, VertexId};
use crate::verify::{is_rainbow_path, satisfies_problem3, ExtensionVerdict};

use super::{ReducedInstance, ReductionError, Role, Source, Stage};

pub(crate) fn s_label() -> String {
    "s".to_string()
}

pub(crate) fn clause_label(t: usize) -> String {
    format!("c_{t}")
}

pub(crate) fn clause_helper_label(t: usize, j: usize) -> String {
    format!("c^{j}_{t}")
}

pub(crate) fn variable_label(i: usize) -> String {
    format!("x_{i}")
}

/// Builds the Problem 3 instance for `phi`.
pub fn reduce_sat_to_p3(phi: &CnfFormula, k: usize) -> Result<ReducedInstance, ReductionError> {
    if k == 0 {
        return Err(ReductionError::Precondition("k must be at least 1".into()));
    }
    let n = phi.vars();
    let m = phi.clauses().len();

    // Distinct variables per clause with their sign, in order of appearance.
    let mut clause_vars: Vec<Vec<(usize, bool)>> = Vec::with_capacity(m);
    for (t, clause) in phi.clauses().iter().enumerate() {
        let mut vars: Vec<(usize, bool)> = Vec::new();
        for lit in clause {
            match vars.iter().find(|(v, _)| *v == lit.var) {
                Some(&(_, sign)) if sign != lit.positive => {
                    return Err(ReductionError::ConflictingLiteral {
                        clause: t + 1,
                        var: lit.var,
                    })
                }
                Some(_) => {}
                None => vars.push((lit.var, lit.positive)),
            }
        }
        clause_vars.push(vars);
    }

    let mut b = GraphBuilder::new();
    let mut roles = Vec::new();
    let clause_ids: Vec<VertexId> = (1..=m)
        .map(|t| {
            roles.push(Role::Clause { t });
            b.add_vertex(clause_label(t))
        })
        .collect::<Result<_, _>>()?;
    let mut helpers: Vec<Vec<VertexId>> = Vec::with_capacity(m);
    for t in 1..=m {
        let mut hs = Vec::new();
        for j in 2..=k {
            roles.push(Role::ClauseHelper { t, j });
            hs.push(b.add_vertex(clause_helper_label(t, j))?);
        }
        helpers.push(hs);
    }
    let var_ids: Vec<VertexId> = (1..=n)
        .map(|i| {
            roles.push(Role::Variable { i });
            b.add_vertex(variable_label(i))
        })
        .collect::<Result<_, _>>()?;
    roles.push(Role::S);
    let s = b.add_vertex(s_label())?;

    let mut class1 = Vec::new();
    let mut class2 = Vec::new();
    for (t, vars) in clause_vars.iter().enumerate() {
        for &(var, positive) in vars {
            let x = var_ids[var - 1];
            b.add_edge(clause_ids[t], x)?;
            let oe = OrientedEdge::new(x, clause_ids[t]);
            if positive {
                class1.push(oe);
            } else {
                class2.push(oe);
            }
        }
    }
    for &x in &var_ids {
        b.add_edge(s, x)?;
    }
    for (t, hs) in helpers.iter().enumerate() {
        for &h in hs {
            b.add_edge(s, h)?;
            b.add_edge(h, clause_ids[t])?;
        }
    }
    let graph = b.build()?;
    let mut q = PairSet::new();
    for &c in &clause_ids {
        q.insert(&graph, s, c)?;
    }
    let nv = graph.vertex_count();
    Ok(ReducedInstance {
        stage: Stage::P3,
        k,
        graph,
        pairs: PairScope::Subset(q),
        partial: Some(PartialEdgeColoring::new(class1, class2)),
        roles,
        provenance: (0..nv).map(VertexId).collect(),
        source: Source::Formula(phi.clone()),
    })
}

struct SatLayout {
    s: VertexId,
    clauses: Vec<VertexId>,
    vars: Vec<VertexId>,
}

fn layout(inst: &ReducedInstance) -> Result<(SatLayout, &CnfFormula), ReductionError> {
    inst.expect_stage(Stage::P3)?;
    let phi = inst.formula()?;
    let g = &inst.graph;
    let s = g.vertex_or_err(&s_label())?;
    let clauses = (1..=phi.clauses().len())
        .map(|t| g.vertex_or_err(&clause_label(t)))
        .collect::<Result<_, _>>()?;
    let vars = (1..=phi.vars())
        .map(|i| g.vertex_or_err(&variable_label(i)))
        .collect::<Result<_, _>>()?;
    Ok((SatLayout { s, clauses, vars }, phi))
}

fn check_extension(inst: &ReducedInstance, chi: &TotalColoring) -> Result<ExtensionVerdict, ReductionError> {
    let q = inst.pair_set().ok_or(ReductionError::MissingSource("pair set"))?;
    let partial = inst
        .partial
        .as_ref()
        .ok_or(ReductionError::MissingSource("partial coloring"))?;
    Ok(satisfies_problem3(&inst.graph, q, partial, chi, inst.k)?)
}

/// The extension coloring for a satisfying assignment: every vertex 2,
/// helper paths `s –0– c^j_t –1– c_t`, `χ(s x_i)` = truth value of `x_i`,
/// clause edges at their pre-colors.
pub fn assignment_to_coloring(inst: &ReducedInstance, a: &Assignment) -> Result<TotalColoring, ReductionError> {
    let (lay, phi) = layout(inst)?;
    if a.len() != phi.vars() {
        return Err(crate::cnf::CnfError::AssignmentSize {
            got: a.len(),
            expected: phi.vars(),
        }
        .into());
    }
    if !phi.evaluate(a) {
        return Err(ReductionError::Unsatisfying);
    }
    let g = &inst.graph;
    let partial = inst
        .partial
        .as_ref()
        .ok_or(ReductionError::MissingSource("partial coloring"))?;
    let mut chi = TotalColoring::uniform(g, 3, 2)?;
    for (class, e, _) in partial.resolve(g)? {
        chi.set(Element::Edge(e), (class - 1) as Color);
    }
    for (i, &x) in lay.vars.iter().enumerate() {
        let e = g.edge_between(lay.s, x).expect("s – x_i edge");
        chi.set(Element::Edge(e), Color::from(a.value(i + 1)));
    }
    for v in g.vertices() {
        if let Role::ClauseHelper { t, .. } = inst.role(v) {
            let to_s = g.edge_between(lay.s, v).expect("s – c^j_t edge");
            let to_c = g.edge_between(v, lay.clauses[t - 1]).expect("c^j_t – c_t edge");
            chi.set(Element::Edge(to_s), 0);
            chi.set(Element::Edge(to_c), 1);
        }
    }
    let verdict = check_extension(inst, &chi)?;
    if !verdict.is_satisfied() {
        return Err(ReductionError::Falsified(format!(
            "forward coloring of a satisfying assignment fails the extension check: {verdict:?}"
        )));
    }
    Ok(chi)
}

/// Reads a satisfying assignment off an extension coloring. A variable is
/// set by the sign of its literal on a total-rainbow path `s – x_i – c_t`;
/// variables on no such path default to false and are flagged.
pub fn coloring_to_assignment(inst: &ReducedInstance, chi: &TotalColoring) -> Result<Assignment, ReductionError> {
    let (lay, phi) = layout(inst)?;
    let verdict = check_extension(inst, chi)?;
    if !verdict.is_satisfied() {
        return Err(ReductionError::Precondition(format!(
            "coloring is not a valid extension: {verdict:?}"
        )));
    }
    let g = &inst.graph;
    let mut value: Vec<Option<bool>> = vec![None; phi.vars()];
    for (t, clause) in phi.clauses().iter().enumerate() {
        for lit in clause {
            let path = Path::new(g, vec![lay.s, lay.vars[lit.var - 1], lay.clauses[t]])?;
            if !is_rainbow_path(g, chi, &path, ColoringMode::Total)? {
                continue;
            }
            match value[lit.var - 1] {
                Some(v) if v != lit.positive => {
                    return Err(ReductionError::Falsified(format!(
                        "x{} lies on rainbow clause paths with both signs",
                        lit.var
                    )))
                }
                _ => value[lit.var - 1] = Some(lit.positive),
            }
        }
    }
    let flags = value.iter().map(Option::is_none).collect();
    let a = Assignment::with_flags(value.iter().map(|v| v.unwrap_or(false)).collect(), flags);
    if !phi.evaluate(&a) {
        return Err(ReductionError::Falsified(
            "extracted assignment does not satisfy the formula".into(),
        ));
    }
    Ok(a)
}
