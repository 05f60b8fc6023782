//! Exact backtracking search for rainbow colorings.
//!
//! Every required pair gets its color-blind candidate paths up front (simple
//! paths no longer than the palette allows, with at most `t` constrained
//! elements). Assigning a color kills candidates that now repeat a color; a
//! branch is cut as soon as some pair can no longer pack `k` internally
//! disjoint live candidates. At a leaf the live candidates are exactly the
//! rainbow paths, so every surviving pair is satisfied.
//!
//! Only elements that lie on a candidate path or in a distinctness
//! constraint are branched on. The rest are colored 0.
//!
//! Colors not pinned by frozen elements are interchangeable, so a fresh one
//! may only be opened in increasing order.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{check_palette, Color, ColoringError, ColoringMode, PartialEdgeColoring, TotalColoring};
use crate::graph::{Diameter, Element, Graph, GraphError, PairScope, PairSet, VertexId};
use crate::verify::{
    is_rainbow_k_connected, pack_disjoint, path_length_cap, satisfies_problem3, VerifyError,
    VerifyOptions,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error("k must be at least 1")]
    ZeroK,
    #[error("degenerate input: at least two vertices are required")]
    Degenerate,
    #[error("frozen element `{0}` is not in the graph")]
    FrozenUnknown(String),
    #[error("element `{0}` is frozen to two different colors")]
    FrozenConflict(String),
    #[error("frozen color {color} is outside the palette of {palette}")]
    FrozenColor { color: Color, palette: usize },
    #[error("k = {k} exceeds the vertex connectivity {connectivity}")]
    KExceedsConnectivity { k: usize, connectivity: usize },
    #[error("search budget exhausted; value lies in [{lower}, {upper}]")]
    BudgetExhausted { lower: usize, upper: usize },
}

/// Limits on a search. Hitting one yields [`Outcome::Exhausted`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_time: Option<Duration>,
    pub max_nodes: Option<u64>,
}

impl SearchBudget {
    pub fn unlimited() -> Self {
        Self::default()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    pub budget: SearchBudget,
    /// Worker threads for the top-level split. The decision does not depend
    /// on this; the witness is reproducible only with one worker.
    pub workers: usize,
    pub symmetry_breaking: bool,
    /// Overrides the palette-derived cap on candidate path length.
    pub max_len: Option<usize>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            budget: SearchBudget::unlimited(),
            workers: 1,
            symmetry_breaking: true,
            max_len: None,
        }
    }
}

/// A coloring question: palette, mode, `k`, required pairs, frozen elements
/// and extra pairwise-distinct constraints.
#[derive(Debug, Clone)]
pub struct ColoringProblem<'g> {
    pub graph: &'g Graph,
    pub k: usize,
    pub palette: usize,
    pub mode: ColoringMode,
    pub pairs: PairScope,
    pub frozen: Vec<(Element, Color)>,
    pub distinct: Vec<(Element, Element)>,
}

impl<'g> ColoringProblem<'g> {
    pub fn new(graph: &'g Graph, k: usize, palette: usize, mode: ColoringMode, pairs: PairScope) -> Self {
        Self {
            graph,
            k,
            palette,
            mode,
            pairs,
            frozen: Vec::new(),
            distinct: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Found(TotalColoring),
    Impossible,
    Exhausted,
}

impl Outcome {
    pub fn status(&self) -> &'static str {
        match self {
            Outcome::Found(_) => "found",
            Outcome::Impossible => "impossible",
            Outcome::Exhausted => "exhausted",
        }
    }

    pub fn coloring(&self) -> Option<&TotalColoring> {
        match self {
            Outcome::Found(c) => Some(c),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    pub outcome: Outcome,
    pub nodes: u64,
    pub elapsed: Duration,
}

struct Meter {
    start: Instant,
    budget: SearchBudget,
    nodes: AtomicU64,
    stop: AtomicBool,
}

impl Meter {
    fn new(budget: SearchBudget) -> Self {
        Self {
            start: Instant::now(),
            budget,
            nodes: AtomicU64::new(0),
            stop: AtomicBool::new(false),
        }
    }

    /// Counts one node; false once the budget is spent or a peer stopped.
    fn tick(&self) -> bool {
        if self.stop.load(Ordering::Relaxed) {
            return false;
        }
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if self.budget.max_nodes.is_some_and(|m| n > m) {
            return false;
        }
        if n.is_multiple_of(512) {
            if let Some(limit) = self.budget.max_time {
                if self.start.elapsed() > limit {
                    self.stop.store(true, Ordering::Relaxed);
                    return false;
                }
            }
        }
        true
    }

    fn nodes(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed)
    }
}

const UNSET: Color = Color::MAX;

struct Candidate {
    pair: usize,
    elements: Vec<u32>,
    internal: Vec<VertexId>,
}

struct Model {
    vertex_count: usize,
    k: usize,
    candidates: Vec<Candidate>,
    pair_candidates: Vec<Vec<u32>>,
    element_candidates: Vec<Vec<u32>>,
    distinct: Vec<Vec<u32>>,
    frozen: Vec<(u32, Color)>,
    order: Vec<u32>,
    fixed_colors: Vec<Color>,
    free_colors: Vec<Color>,
    symmetry_breaking: bool,
}

#[derive(Clone)]
struct State {
    color: Vec<Color>,
    alive: Vec<bool>,
    alive_count: Vec<u32>,
    trail: Vec<u32>,
}

enum Step {
    Found,
    Impossible,
    Exhausted,
}

impl Model {
    fn build(problem: &ColoringProblem<'_>, opts: &SolveOptions) -> Result<Option<Self>, SolveError> {
        let g = problem.graph;
        let t = problem.palette;
        let opts_v = VerifyOptions {
            max_len: opts.max_len,
        };
        let cap = path_length_cap(g, t, problem.mode, opts_v);
        let n_el = g.element_count();

        let mut candidates = Vec::new();
        let mut pair_candidates = Vec::new();
        for (pi, (u, v)) in problem.pairs.pairs(g).enumerate() {
            let mut ids = Vec::new();
            for p in g.simple_paths(u, v, cap) {
                let mut elements = Vec::new();
                if problem.mode != ColoringMode::Vertex {
                    for w in p.windows(2) {
                        let e = g.edge_between(w[0], w[1]).expect("path edge");
                        elements.push(g.element_index(Element::Edge(e)) as u32);
                    }
                }
                let internal = p[1..p.len() - 1].to_vec();
                if problem.mode != ColoringMode::Edge {
                    elements.extend(internal.iter().map(|x| x.0 as u32));
                }
                if elements.len() > t {
                    continue;
                }
                ids.push(candidates.len() as u32);
                candidates.push(Candidate {
                    pair: pi,
                    elements,
                    internal,
                });
            }
            pair_candidates.push(ids);
        }

        let mut element_candidates = vec![Vec::new(); n_el];
        for (ci, cand) in candidates.iter().enumerate() {
            for &e in &cand.elements {
                element_candidates[e as usize].push(ci as u32);
            }
        }

        let mut distinct = vec![Vec::new(); n_el];
        for &(a, b) in &problem.distinct {
            for el in [a, b] {
                if !g.contains_element(el) {
                    return Err(SolveError::FrozenUnknown(format!("{el:?}")));
                }
            }
            let (a, b) = (g.element_index(a) as u32, g.element_index(b) as u32);
            if a == b {
                return Ok(None);
            }
            distinct[a as usize].push(b);
            distinct[b as usize].push(a);
        }

        let mut frozen_color = vec![UNSET; n_el];
        for &(el, c) in &problem.frozen {
            if !g.contains_element(el) {
                return Err(SolveError::FrozenUnknown(format!("{el:?}")));
            }
            if c as usize >= t {
                return Err(SolveError::FrozenColor { color: c, palette: t });
            }
            let i = g.element_index(el);
            if frozen_color[i] != UNSET && frozen_color[i] != c {
                return Err(SolveError::FrozenConflict(g.describe_element(el)));
            }
            frozen_color[i] = c;
        }
        let frozen: Vec<(u32, Color)> = frozen_color
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c != UNSET)
            .map(|(i, &c)| (i as u32, c))
            .collect();

        let mut order: Vec<u32> = (0..n_el as u32)
            .filter(|&e| {
                frozen_color[e as usize] == UNSET
                    && (!element_candidates[e as usize].is_empty() || !distinct[e as usize].is_empty())
            })
            .collect();
        order.sort_by_key(|&e| {
            let weight = element_candidates[e as usize].len() + distinct[e as usize].len();
            (std::cmp::Reverse(weight), e)
        });

        let mut fixed_colors: Vec<Color> = frozen.iter().map(|&(_, c)| c).collect();
        fixed_colors.sort_unstable();
        fixed_colors.dedup();
        let free_colors = (0..t as Color).filter(|c| !fixed_colors.contains(c)).collect();

        Ok(Some(Model {
            vertex_count: g.vertex_count(),
            k: problem.k,
            candidates,
            pair_candidates,
            element_candidates,
            distinct,
            frozen,
            order,
            fixed_colors,
            free_colors,
            symmetry_breaking: opts.symmetry_breaking,
        }))
    }

    fn initial_state(&self) -> Option<State> {
        let mut st = State {
            color: vec![UNSET; self.element_candidates.len()],
            alive: vec![true; self.candidates.len()],
            alive_count: self.pair_candidates.iter().map(|c| c.len() as u32).collect(),
            trail: Vec::new(),
        };
        if !(0..self.pair_candidates.len()).all(|p| self.pair_feasible(&st, p)) {
            return None;
        }
        for &(e, c) in &self.frozen {
            if !self.assign(&mut st, e, c) {
                return None;
            }
        }
        st.trail.clear();
        Some(st)
    }

    fn pair_feasible(&self, st: &State, pair: usize) -> bool {
        if (st.alive_count[pair] as usize) < self.k {
            return false;
        }
        if self.k == 1 {
            return true;
        }
        let live: Vec<&[VertexId]> = self.pair_candidates[pair]
            .iter()
            .filter(|&&c| st.alive[c as usize])
            .map(|&c| self.candidates[c as usize].internal.as_slice())
            .collect();
        pack_disjoint(&live, self.k, self.vertex_count).is_some()
    }

    /// Colors `e` and propagates. The caller must [`Model::undo`] either way.
    fn assign(&self, st: &mut State, e: u32, c: Color) -> bool {
        st.color[e as usize] = c;
        if self.distinct[e as usize].iter().any(|&d| st.color[d as usize] == c) {
            return false;
        }
        let mut touched: Vec<usize> = Vec::new();
        for &ci in &self.element_candidates[e as usize] {
            if !st.alive[ci as usize] {
                continue;
            }
            let cand = &self.candidates[ci as usize];
            let clash = cand
                .elements
                .iter()
                .any(|&f| f != e && st.color[f as usize] == c);
            if clash {
                st.alive[ci as usize] = false;
                st.alive_count[cand.pair] -= 1;
                st.trail.push(ci);
                if !touched.contains(&cand.pair) {
                    touched.push(cand.pair);
                }
            }
        }
        touched.into_iter().all(|p| self.pair_feasible(st, p))
    }

    fn undo(&self, st: &mut State, e: u32, mark: usize) {
        while st.trail.len() > mark {
            let ci = st.trail.pop().expect("trail entry") as usize;
            st.alive[ci] = true;
            st.alive_count[self.candidates[ci].pair] += 1;
        }
        st.color[e as usize] = UNSET;
    }

    fn choices(&self, opened: usize) -> Vec<Color> {
        let mut out = self.fixed_colors.clone();
        if self.symmetry_breaking {
            let upto = (opened + 1).min(self.free_colors.len());
            out.extend_from_slice(&self.free_colors[..upto]);
        } else {
            out.extend_from_slice(&self.free_colors);
        }
        out.sort_unstable();
        out
    }

    fn opened_after(&self, opened: usize, c: Color) -> usize {
        if self.free_colors.get(opened) == Some(&c) {
            opened + 1
        } else {
            opened
        }
    }

    fn dfs(&self, st: &mut State, depth: usize, opened: usize, meter: &Meter) -> Step {
        if depth == self.order.len() {
            return Step::Found;
        }
        let e = self.order[depth];
        for c in self.choices(opened) {
            if !meter.tick() {
                return Step::Exhausted;
            }
            let mark = st.trail.len();
            if self.assign(st, e, c) {
                match self.dfs(st, depth + 1, self.opened_after(opened, c), meter) {
                    Step::Found => return Step::Found,
                    Step::Exhausted => {
                        self.undo(st, e, mark);
                        return Step::Exhausted;
                    }
                    Step::Impossible => {}
                }
            }
            self.undo(st, e, mark);
        }
        Step::Impossible
    }

    /// Feasible color prefixes for the first `depth` branching elements.
    fn prefixes(&self, base: &State, depth: usize) -> Vec<(Vec<Color>, usize)> {
        fn go(
            m: &Model,
            st: &mut State,
            depth: usize,
            limit: usize,
            opened: usize,
            prefix: &mut Vec<Color>,
            out: &mut Vec<(Vec<Color>, usize)>,
        ) {
            if depth == limit {
                out.push((prefix.clone(), opened));
                return;
            }
            let e = m.order[depth];
            for c in m.choices(opened) {
                let mark = st.trail.len();
                if m.assign(st, e, c) {
                    prefix.push(c);
                    go(m, st, depth + 1, limit, m.opened_after(opened, c), prefix, out);
                    prefix.pop();
                }
                m.undo(st, e, mark);
            }
        }
        let mut st = base.clone();
        let mut out = Vec::new();
        go(self, &mut st, 0, depth, 0, &mut Vec::new(), &mut out);
        out
    }

    fn coloring(&self, st: &State, palette: usize) -> TotalColoring {
        let colors: Vec<Color> = st
            .color
            .iter()
            .map(|&c| if c == UNSET { 0 } else { c })
            .collect();
        let (v, e) = colors.split_at(self.vertex_count);
        TotalColoring::new(palette, v.to_vec(), e.to_vec()).expect("palette respected")
    }

    fn solve(&self, palette: usize, workers: usize, meter: &Meter) -> Outcome {
        let Some(base) = self.initial_state() else {
            return Outcome::Impossible;
        };
        if workers <= 1 || self.order.len() < 2 {
            let mut st = base;
            return match self.dfs(&mut st, 0, 0, meter) {
                Step::Found => Outcome::Found(self.coloring(&st, palette)),
                Step::Impossible => Outcome::Impossible,
                Step::Exhausted => Outcome::Exhausted,
            };
        }
        let mut depth = 1;
        let mut prefixes = self.prefixes(&base, depth);
        while prefixes.len() < 4 * workers && depth < self.order.len().min(12) {
            depth += 1;
            prefixes = self.prefixes(&base, depth);
        }
        let next = AtomicUsize::new(0);
        let found: Mutex<Option<(usize, TotalColoring)>> = Mutex::new(None);
        let exhausted = AtomicBool::new(false);
        std::thread::scope(|scope| {
            for _ in 0..workers {
                scope.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= prefixes.len() || meter.stop.load(Ordering::Relaxed) {
                        break;
                    }
                    let (prefix, opened) = &prefixes[i];
                    let mut st = base.clone();
                    for (d, &c) in prefix.iter().enumerate() {
                        let ok = self.assign(&mut st, self.order[d], c);
                        debug_assert!(ok, "prefixes are feasible");
                    }
                    match self.dfs(&mut st, depth, *opened, meter) {
                        Step::Found => {
                            let mut slot = found.lock().expect("no poisoned lock");
                            if slot.as_ref().is_none_or(|(j, _)| i < *j) {
                                *slot = Some((i, self.coloring(&st, palette)));
                            }
                            meter.stop.store(true, Ordering::Relaxed);
                        }
                        Step::Exhausted => exhausted.store(true, Ordering::Relaxed),
                        Step::Impossible => {}
                    }
                });
            }
        });
        if let Some((_, c)) = found.into_inner().expect("no poisoned lock") {
            return Outcome::Found(c);
        }
        if exhausted.load(Ordering::Relaxed) || meter.stop.load(Ordering::Relaxed) {
            Outcome::Exhausted
        } else {
            Outcome::Impossible
        }
    }
}

fn validate(problem: &ColoringProblem<'_>) -> Result<(), SolveError> {
    if problem.graph.vertex_count() < 2 {
        return Err(SolveError::Degenerate);
    }
    if problem.k == 0 {
        return Err(SolveError::ZeroK);
    }
    check_palette(problem.palette)?;
    if let PairScope::Subset(set) = &problem.pairs {
        for (u, v) in set.iter() {
            if !problem.graph.contains_vertex(u) || !problem.graph.contains_vertex(v) {
                return Err(GraphError::UnknownVertex(format!("{u}/{v}")).into());
            }
        }
    }
    Ok(())
}

fn decide_with_meter(
    problem: &ColoringProblem<'_>,
    opts: &SolveOptions,
    meter: &Meter,
) -> Result<Outcome, SolveError> {
    validate(problem)?;
    let Some(model) = Model::build(problem, opts)? else {
        return Ok(Outcome::Impossible);
    };
    let outcome = model.solve(problem.palette, opts.workers, meter);
    if let Outcome::Found(c) = &outcome {
        debug_assert!(
            found_is_sound(problem, c, opts),
            "solver returned a coloring the verifier rejects"
        );
    }
    Ok(outcome)
}

fn found_is_sound(problem: &ColoringProblem<'_>, c: &TotalColoring, opts: &SolveOptions) -> bool {
    let g = problem.graph;
    let frozen_ok = problem.frozen.iter().all(|&(el, col)| c.get(el) == col);
    let distinct_ok = problem.distinct.iter().all(|&(a, b)| c.get(a) != c.get(b));
    let vopts = VerifyOptions {
        max_len: opts.max_len,
    };
    frozen_ok
        && distinct_ok
        && is_rainbow_k_connected(g, c, problem.k, problem.mode, &problem.pairs, vopts)
            .map(|r| r.holds())
            .unwrap_or(false)
}

/// Is there a coloring of `problem` with its palette?
pub fn decide_colorable(problem: &ColoringProblem<'_>, opts: &SolveOptions) -> Result<SolveReport, SolveError> {
    let meter = Meter::new(opts.budget);
    let outcome = decide_with_meter(problem, opts, &meter)?;
    Ok(SolveReport {
        outcome,
        nodes: meter.nodes(),
        elapsed: meter.start.elapsed(),
    })
}

/// Problem 2: a 3-total-coloring making every pair of `pairs` total-rainbow
/// k-connected. Pairs must be nonadjacent.
pub fn decide_subset_trc3(
    g: &Graph,
    pairs: &PairSet,
    k: usize,
    opts: &SolveOptions,
) -> Result<SolveReport, SolveError> {
    pairs.ensure_nonadjacent(g)?;
    let problem = ColoringProblem::new(g, k, 3, ColoringMode::Total, PairScope::Subset(pairs.clone()));
    decide_colorable(&problem, opts)
}

/// Problem 3: extend the partition `(Ê₁, Ê₂)` to a 3-total-coloring. Class one
/// is frozen to color 0 and class two to color 1; every pre-colored edge must
/// avoid both endpoint colors and every pair of `q` must be total-rainbow
/// k-connected.
pub fn decide_extension(
    g: &Graph,
    q: &PairSet,
    partial: &PartialEdgeColoring,
    k: usize,
    opts: &SolveOptions,
) -> Result<SolveReport, SolveError> {
    let resolved = partial.resolve(g)?;
    q.ensure_nonadjacent(g)?;
    let mut problem = ColoringProblem::new(g, k, 3, ColoringMode::Total, PairScope::Subset(q.clone()));
    for &(class, e, oe) in &resolved {
        let edge = Element::Edge(e);
        problem.frozen.push((edge, (class - 1) as Color));
        problem.distinct.push((edge, Element::Vertex(oe.first)));
        problem.distinct.push((edge, Element::Vertex(oe.second)));
    }
    let report = decide_colorable(&problem, opts)?;
    if let Outcome::Found(c) = &report.outcome {
        debug_assert!(satisfies_problem3(g, q, partial, c, k)
            .map(|v| v.is_satisfied())
            .unwrap_or(false));
    }
    Ok(report)
}

/// Exact minimum palette and a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimumReport {
    pub value: usize,
    pub witness: TotalColoring,
    pub nodes: u64,
    pub elapsed: Duration,
}

fn finite_diameter(g: &Graph) -> Result<usize, SolveError> {
    match g.diameter() {
        Diameter::Finite(d) => Ok(d),
        Diameter::Disconnected => Err(GraphError::Disconnected.into()),
    }
}

/// Lower bound the incremental search starts from.
fn search_floor(g: &Graph, k: usize, mode: ColoringMode) -> Result<usize, SolveError> {
    let d = finite_diameter(g)?;
    Ok(match mode {
        ColoringMode::Total => {
            let noncomplete = if k == 1 && !g.is_complete() { 3 } else { 1 };
            (2 * d).saturating_sub(1).max(noncomplete).max(1)
        }
        ColoringMode::Edge => d.max(1),
        ColoringMode::Vertex => d.saturating_sub(1).max(1),
    })
}

/// With every element distinct, every path is rainbow, so these palettes
/// always suffice once `k` is within the connectivity.
fn search_ceiling(g: &Graph, mode: ColoringMode) -> usize {
    match mode {
        ColoringMode::Total => g.element_count(),
        ColoringMode::Edge => g.edge_count().max(1),
        ColoringMode::Vertex => g.vertex_count().max(1),
    }
}

/// Minimum palette for rainbow k-connection under `mode`: trc_k for `Total`,
/// rc_k for `Edge`, rvc_k for `Vertex`. Palettes start at 1.
pub fn min_colors(g: &Graph, k: usize, mode: ColoringMode, opts: &SolveOptions) -> Result<MinimumReport, SolveError> {
    if g.vertex_count() < 2 {
        return Err(SolveError::Degenerate);
    }
    if k == 0 {
        return Err(SolveError::ZeroK);
    }
    let connectivity = g.vertex_connectivity()?;
    if k > connectivity {
        return Err(SolveError::KExceedsConnectivity { k, connectivity });
    }
    let meter = Meter::new(opts.budget);
    let floor = search_floor(g, k, mode)?;
    let ceiling = search_ceiling(g, mode);
    for t in floor..=ceiling {
        let problem = ColoringProblem::new(g, k, t, mode, PairScope::All);
        match decide_with_meter(&problem, opts, &meter)? {
            Outcome::Found(witness) => {
                return Ok(MinimumReport {
                    value: t,
                    witness,
                    nodes: meter.nodes(),
                    elapsed: meter.start.elapsed(),
                })
            }
            Outcome::Impossible => {}
            Outcome::Exhausted => {
                return Err(SolveError::BudgetExhausted {
                    lower: t,
                    upper: ceiling,
                })
            }
        }
    }
    unreachable!("an all-distinct coloring with {ceiling} colors always works when k ≤ connectivity")
}

pub fn trc_k(g: &Graph, k: usize, opts: &SolveOptions) -> Result<MinimumReport, SolveError> {
    min_colors(g, k, ColoringMode::Total, opts)
}

pub fn rc_k(g: &Graph, k: usize, opts: &SolveOptions) -> Result<MinimumReport, SolveError> {
    min_colors(g, k, ColoringMode::Edge, opts)
}

pub fn rvc_k(g: &Graph, k: usize, opts: &SolveOptions) -> Result<MinimumReport, SolveError> {
    min_colors(g, k, ColoringMode::Vertex, opts)
}

/// Known lower bounds on trc_k and what they imply.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub k: usize,
    pub diameter: usize,
    pub complete: bool,
    /// 2·diam − 1 (at least 1).
    pub lb_diameter: usize,
    /// 3 for non-complete graphs when k = 1.
    pub lb_noncomplete: Option<usize>,
    /// 3 for k ≥ 2. Reported for checking, not folded into the combined bound.
    pub lb_multipath_claim: Option<usize>,
    pub rc_k: Option<usize>,
    pub rvc_k: Option<usize>,
    /// 5 when rvc_k ≥ 2.
    pub lb_rvc: Option<usize>,
    /// Exact trc_k = 3 when rc_k = 2.
    pub pinned: Option<usize>,
    pub rc_rvc_exhausted: bool,
    pub combined_lower_bound: usize,
}

/// Collects the lower bounds for trc_k. With `compute_rc_rvc` the exact rc_k
/// and rvc_k are searched for as well (skipped when `k` exceeds the
/// connectivity or the budget runs out).
pub fn bounds_report(
    g: &Graph,
    k: usize,
    compute_rc_rvc: bool,
    opts: &SolveOptions,
) -> Result<BoundsReport, SolveError> {
    if k == 0 {
        return Err(SolveError::ZeroK);
    }
    let diameter = finite_diameter(g)?;
    let complete = g.is_complete();
    let lb_diameter = (2 * diameter).saturating_sub(1).max(1);
    let lb_noncomplete = (k == 1 && !complete).then_some(3);
    let lb_multipath_claim = (k >= 2).then_some(3);
    let mut report = BoundsReport {
        k,
        diameter,
        complete,
        lb_diameter,
        lb_noncomplete,
        lb_multipath_claim,
        rc_k: None,
        rvc_k: None,
        lb_rvc: None,
        pinned: None,
        rc_rvc_exhausted: false,
        combined_lower_bound: 0,
    };
    if compute_rc_rvc && g.vertex_count() >= 2 {
        for mode in [ColoringMode::Edge, ColoringMode::Vertex] {
            match min_colors(g, k, mode, opts) {
                Ok(m) if mode == ColoringMode::Edge => report.rc_k = Some(m.value),
                Ok(m) => report.rvc_k = Some(m.value),
                Err(SolveError::BudgetExhausted { .. }) => report.rc_rvc_exhausted = true,
                Err(SolveError::KExceedsConnectivity { .. }) => {}
                Err(e) => return Err(e),
            }
        }
        report.lb_rvc = report.rvc_k.filter(|&r| r >= 2).map(|_| 5);
        report.pinned = report.rc_k.filter(|&r| r == 2).map(|_| 3);
    }
    report.combined_lower_bound = [
        Some(lb_diameter),
        report.lb_noncomplete,
        report.rc_k,
        report.rvc_k,
        report.lb_rvc,
    ]
    .into_iter()
    .flatten()
    .max()
    .unwrap_or(1);
    Ok(report)
}
