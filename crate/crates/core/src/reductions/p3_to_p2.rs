//! Problem 3 → Problem 2.
//!
//! Adds a hub `c` with two pendant vertices `b_1`, `b_2`, and for every
//! pre-colored edge `e = e¹e²` and `j ∈ {1, 2}` a path
//! `f^j_e – c^j_e – e^j` plus the spokes `c – c^j_e` and `d^j_e – e^j`.
//! The pairs `{b_i, c^j_e}` (for `e ∈ Ê_i`) force `c – c^j_e` to take the
//! color opposite to `b_i c`, and the `f`/`d` pairs force `c^j_e e^j` and
//! `e` to agree with it. For k ≥ 2 every new pair `{u, v}` gets helpers
//! `g(u,v,t)` giving extra routes `u – g – v`.

use crate::coloring::{Color, ColoringMode, TotalColoring};
use crate::graph::{EdgeId, GraphBuilder, PairScope, VertexId};
use crate::verify::{is_rainbow_k_connected, satisfies_problem3, ExtensionVerdict, KConnectivity, VerifyOptions};

use super::{ensure_three_colors, ReducedInstance, ReductionError, Role, Source, Stage};

pub(crate) const HUB: &str = "c";
pub(crate) const B1: &str = "b_1";
pub(crate) const B2: &str = "b_2";

fn gadget_label(kind: char, j: usize, edge: &[String; 2]) -> String {
    format!("{kind}^{j}_e[{},{}]", edge[0], edge[1])
}

fn helper_label(pair: &[String; 2], t: usize) -> String {
    format!("g({},{},{t})", pair[0], pair[1])
}

/// Per pre-colored edge and end: the three gadget vertices and their edges.
#[derive(Debug, Clone, Copy)]
struct EndGadget {
    class: usize,
    edge: EdgeId,
    end: VertexId,
    c: VertexId,
    hub_edge: EdgeId,
    f_edge: EdgeId,
    end_edge: EdgeId,
    d_edge: EdgeId,
}

/// Builds the Problem 2 instance for a Problem 3 instance.
pub fn reduce_p3_to_p2(inst: &ReducedInstance) -> Result<ReducedInstance, ReductionError> {
    inst.expect_stage(Stage::P3)?;
    let (out, _) = build(inst)?;
    Ok(out)
}

fn build(inst: &ReducedInstance) -> Result<(ReducedInstance, Vec<EndGadget>), ReductionError> {
    let g = &inst.graph;
    let k = inst.k;
    let q = inst.pair_set().ok_or(ReductionError::MissingSource("pair set"))?;
    let partial = inst
        .partial
        .as_ref()
        .ok_or(ReductionError::MissingSource("partial coloring"))?;
    let resolved = partial.resolve(g)?;
    q.ensure_nonadjacent(g)?;

    let mut b = GraphBuilder::with_capacity(
        g.vertex_count() + 3 + 6 * resolved.len(),
        g.edge_count() + 2 + 8 * resolved.len(),
    );
    let mut roles = inst.roles.clone();
    let mut provenance = inst.provenance.clone();
    for v in g.vertices() {
        b.add_vertex(g.label(v))?;
    }
    for e in g.edge_ids() {
        let (x, y) = g.endpoints(e);
        b.add_edge(x, y)?;
    }
    let fresh = |b: &mut GraphBuilder,
                 roles: &mut Vec<Role>,
                 provenance: &mut Vec<VertexId>,
                 label: String,
                 role: Role,
                 anchor: Option<VertexId>| {
        let v = b.add_vertex(label)?;
        roles.push(role);
        provenance.push(anchor.unwrap_or(v));
        Ok::<_, ReductionError>(v)
    };
    let hub = fresh(&mut b, &mut roles, &mut provenance, HUB.into(), Role::Hub, None)?;
    let b1 = fresh(&mut b, &mut roles, &mut provenance, B1.into(), Role::B1, None)?;
    let b2 = fresh(&mut b, &mut roles, &mut provenance, B2.into(), Role::B2, None)?;
    b.add_edge(b1, hub)?;
    b.add_edge(b2, hub)?;

    let mut gadgets = Vec::with_capacity(2 * resolved.len());
    let mut ds = Vec::with_capacity(2 * resolved.len());
    let mut fs = Vec::with_capacity(2 * resolved.len());
    for &(class, e, oe) in &resolved {
        let names = [g.label(oe.first).to_string(), g.label(oe.second).to_string()];
        for j in 1..=2 {
            let end = oe.end(j);
            let anchor = Some(inst.provenance[end.0]);
            let c = fresh(&mut b, &mut roles, &mut provenance, gadget_label('c', j, &names), Role::EdgeC { j, edge: names.clone() }, anchor)?;
            let d = fresh(&mut b, &mut roles, &mut provenance, gadget_label('d', j, &names), Role::EdgeD { j, edge: names.clone() }, anchor)?;
            let f = fresh(&mut b, &mut roles, &mut provenance, gadget_label('f', j, &names), Role::EdgeF { j, edge: names.clone() }, anchor)?;
            let hub_edge = b.add_edge(hub, c)?;
            let f_edge = b.add_edge(c, f)?;
            let end_edge = b.add_edge(c, end)?;
            let d_edge = b.add_edge(d, end)?;
            gadgets.push(EndGadget {
                class,
                edge: e,
                end,
                c,
                hub_edge,
                f_edge,
                end_edge,
                d_edge,
            });
            ds.push((d, oe.end(3 - j)));
            fs.push(f);
        }
    }

    // Pairs are inserted once the graph exists; collect them as ids first.
    let mut new_pairs: Vec<(VertexId, VertexId)> = vec![(b1, b2)];
    for (i, gd) in gadgets.iter().enumerate() {
        let bi = if gd.class == 1 { b1 } else { b2 };
        new_pairs.push((bi, gd.c));
        new_pairs.push((fs[i], hub));
        new_pairs.push((fs[i], gd.end));
        new_pairs.push((ds[i].0, gd.c));
        new_pairs.push(ds[i]);
    }

    let mut helper_specs = Vec::new();
    if k >= 2 {
        for &(u, v) in &new_pairs {
            let (lu, lv) = (b.label(u).to_string(), b.label(v).to_string());
            let (first, second, pair) = if lu <= lv { (u, v, [lu, lv]) } else { (v, u, [lv, lu]) };
            helper_specs.push((first, second, pair));
        }
    }
    for (first, second, pair) in helper_specs {
        for t in 2..=k {
            let anchor = Some(provenance[first.0]);
            let h = fresh(
                &mut b,
                &mut roles,
                &mut provenance,
                helper_label(&pair, t),
                Role::PairHelper { pair: pair.clone(), t },
                anchor,
            )?;
            b.add_edge(first, h)?;
            b.add_edge(h, second)?;
        }
    }

    let graph = b.build()?;
    let mut p = q.clone();
    for &(u, v) in &new_pairs {
        p.insert(&graph, u, v)?;
    }
    p.ensure_nonadjacent(&graph)?;
    let out = ReducedInstance {
        stage: Stage::P2,
        k,
        graph,
        pairs: PairScope::Subset(p),
        partial: None,
        roles,
        provenance,
        source: Source::Instance(Box::new(inst.clone())),
    };
    Ok((out, gadgets))
}

/// Lifts an extension coloring (class one colored 0, class two colored 1) to
/// a Problem 2 coloring. New vertices get color 2.
pub fn lift_coloring_p3_to_p2(inst: &ReducedInstance, chi: &TotalColoring) -> Result<TotalColoring, ReductionError> {
    let src = inst.source_instance()?;
    inst.expect_stage(Stage::P2)?;
    src.expect_stage(Stage::P3)?;
    let q = src.pair_set().ok_or(ReductionError::MissingSource("pair set"))?;
    let partial = src
        .partial
        .as_ref()
        .ok_or(ReductionError::MissingSource("partial coloring"))?;
    chi.check_fits(&src.graph)?;
    let verdict = satisfies_problem3(&src.graph, q, partial, chi, src.k)?;
    if verdict != ExtensionVerdict::Satisfied {
        return Err(ReductionError::Precondition(format!(
            "coloring is not a valid extension: {verdict:?}"
        )));
    }
    for (class, e, _) in partial.resolve(&src.graph)? {
        if chi.edge(e) as usize != class - 1 {
            return Err(ReductionError::Precondition(
                "class one must be colored 0 and class two 1".into(),
            ));
        }
    }

    let (rebuilt, gadgets) = build(src)?;
    let g2 = &inst.graph;
    if rebuilt.graph != *g2 {
        return Err(ReductionError::Precondition(
            "instance graph does not match its source".into(),
        ));
    }
    let n0 = src.graph.vertex_count();
    let mut vc = chi.vertex_colors().to_vec();
    vc.resize(g2.vertex_count(), 2);
    let mut ec = chi.edge_colors().to_vec();
    ec.resize(g2.edge_count(), 0);
    let set = |ec: &mut Vec<Color>, u: VertexId, v: VertexId, col: Color| {
        let e = g2.edge_between(u, v).expect("gadget edge");
        ec[e.0] = col;
    };
    let hub = g2.vertex_or_err(HUB)?;
    set(&mut ec, g2.vertex_or_err(B1)?, hub, 1);
    set(&mut ec, g2.vertex_or_err(B2)?, hub, 0);
    for gd in &gadgets {
        let r = (gd.class - 1) as Color;
        ec[gd.hub_edge.0] = r;
        ec[gd.end_edge.0] = r;
        ec[gd.f_edge.0] = 1 - r;
        let ve = chi.vertex(gd.end);
        debug_assert_eq!(chi.edge(gd.edge), r);
        ec[gd.d_edge.0] = (0..3).find(|&x| x != ve && x != r).expect("three colors");
    }
    for v in g2.vertices().skip(n0) {
        if let Role::PairHelper { pair, .. } = &inst.roles[v.0] {
            set(&mut ec, g2.vertex_or_err(&pair[0])?, v, 0);
            set(&mut ec, v, g2.vertex_or_err(&pair[1])?, 1);
        }
    }
    let lifted = TotalColoring::new(3, vc, ec)?;
    match is_rainbow_k_connected(g2, &lifted, inst.k, ColoringMode::Total, &inst.pairs, VerifyOptions::default())? {
        KConnectivity::Holds => Ok(lifted),
        KConnectivity::FailsAt(u, v) => Err(ReductionError::Falsified(format!(
            "lifted coloring leaves pair {{{}, {}}} without {} disjoint rainbow paths",
            g2.label(u),
            g2.label(v),
            inst.k
        ))),
    }
}

/// Which colors a Problem 2 coloring gives the two pre-colored classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColorRoles {
    pub class1: Color,
    pub class2: Color,
}

impl ColorRoles {
    /// The permutation sending `class1 → 0`, `class2 → 1` and the third color to 2.
    pub fn normalizing_permutation(&self) -> [Color; 3] {
        let third = 3 - self.class1 - self.class2;
        let mut perm = [0; 3];
        perm[self.class1 as usize] = 0;
        perm[self.class2 as usize] = 1;
        perm[third as usize] = 2;
        perm
    }

    pub fn normalize(&self, chi: &TotalColoring) -> TotalColoring {
        chi.permuted(&self.normalizing_permutation())
    }
}

/// Restricts a Problem 2 coloring to the source graph and reads the class
/// colors off `b_2 c` (class one) and `b_1 c` (class two).
pub fn restrict_coloring_p2_to_p3(
    inst: &ReducedInstance,
    chi2: &TotalColoring,
) -> Result<(TotalColoring, ColorRoles), ReductionError> {
    inst.expect_stage(Stage::P2)?;
    let src = inst.source_instance()?;
    src.expect_stage(Stage::P3)?;
    let g2 = &inst.graph;
    chi2.check_fits(g2)?;
    ensure_three_colors(chi2, "coloring")?;
    if let KConnectivity::FailsAt(u, v) =
        is_rainbow_k_connected(g2, chi2, inst.k, ColoringMode::Total, &inst.pairs, VerifyOptions::default())?
    {
        return Err(ReductionError::Precondition(format!(
            "pair {{{}, {}}} is not rainbow {}-connected",
            g2.label(u),
            g2.label(v),
            inst.k
        )));
    }
    let hub = g2.vertex_or_err(HUB)?;
    let edge_color = |label: &str| -> Result<Color, ReductionError> {
        let b = g2.vertex_or_err(label)?;
        Ok(chi2.edge(g2.edge_between(b, hub).expect("b – c edge")))
    };
    let roles = ColorRoles {
        class1: edge_color(B2)?,
        class2: edge_color(B1)?,
    };
    if roles.class1 == roles.class2 {
        return Err(ReductionError::Falsified(
            "b_1 c and b_2 c share a color under a valid coloring".into(),
        ));
    }
    let g = &src.graph;
    let chi = chi2.prefix(g.vertex_count(), g.edge_count());
    let partial = src.partial.as_ref().ok_or(ReductionError::MissingSource("partial coloring"))?;
    for (class, e, _) in partial.resolve(g)? {
        let want = if class == 1 { roles.class1 } else { roles.class2 };
        if chi.edge(e) != want {
            return Err(ReductionError::Falsified(format!(
                "pre-colored edge {}–{} does not carry its class color",
                g.edge_labels(e).0,
                g.edge_labels(e).1
            )));
        }
    }
    let q = src.pair_set().ok_or(ReductionError::MissingSource("pair set"))?;
    let verdict = satisfies_problem3(g, q, partial, &roles.normalize(&chi), src.k)?;
    if !verdict.is_satisfied() {
        return Err(ReductionError::Falsified(format!(
            "restricted coloring fails the extension check: {verdict:?}"
        )));
    }
    Ok((chi, roles))
}
