//! Rainbow path checks and k-connectivity verification.
//!
//! A path is rainbow under a [`ColoringMode`] when the elements that mode
//! looks at are pairwise distinct: edges for `Edge`, internal vertices for
//! `Vertex`, and edges together with internal vertices for `Total`. The
//! colors of the two endpoints never participate.
//!
//! k-connectivity asks for `k` internally vertex-disjoint rainbow paths per
//! pair. The search is exact: candidate rainbow paths are enumerated up to the
//! longest length a palette admits and then packed by depth-first search.
//! When that length is at most two, every candidate is either the direct edge
//! or a single middle vertex, so candidates are automatically disjoint and the
//! packing degenerates to counting.

use rayon::prelude::*;
use thiserror::Error;

use crate::coloring::{Color, ColoringError, ColoringMode, PartialEdgeColoring, TotalColoring};
use crate::graph::{EdgeId, Graph, GraphError, PairScope, PairSet, Path, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error("k must be at least 1")]
    ZeroK,
    #[error("path length cap must be at least 1")]
    ZeroLength,
}

/// Longest rainbow path a palette allows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LengthBound {
    Edges(usize),
    /// Vertex mode: internal vertices are bounded by the palette but the
    /// number of edges is not bounded by it beyond `t + 1`.
    Unbounded,
}

/// A total-rainbow path with ℓ edges colors 2ℓ−1 elements, so ℓ ≤ ⌊(t+1)/2⌋.
pub fn max_rainbow_path_length(palette: usize, mode: ColoringMode) -> LengthBound {
    match mode {
        ColoringMode::Total => LengthBound::Edges(palette.div_ceil(2)),
        ColoringMode::Edge => LengthBound::Edges(palette),
        ColoringMode::Vertex => LengthBound::Unbounded,
    }
}

/// Verification knobs.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Overrides the palette-derived cap on candidate path length.
    pub max_len: Option<usize>,
}

/// Effective cap on candidate path length for `g` under palette `t`.
pub fn path_length_cap(g: &Graph, palette: usize, mode: ColoringMode, opts: VerifyOptions) -> usize {
    let natural = match max_rainbow_path_length(palette, mode) {
        LengthBound::Edges(l) => l,
        LengthBound::Unbounded => palette + 1,
    };
    opts.max_len
        .unwrap_or(natural)
        .min(g.vertex_count().saturating_sub(1))
}

#[inline]
fn bit(c: Color) -> u64 {
    1u64 << c
}

fn uses_edges(mode: ColoringMode) -> bool {
    mode != ColoringMode::Vertex
}

fn uses_vertices(mode: ColoringMode) -> bool {
    mode != ColoringMode::Edge
}

fn rainbow_sequence(g: &Graph, c: &TotalColoring, vertices: &[VertexId], mode: ColoringMode) -> bool {
    let mut mask = 0u64;
    let mut take = |col: Color| {
        let b = bit(col);
        if mask & b != 0 {
            return false;
        }
        mask |= b;
        true
    };
    if uses_edges(mode) {
        for w in vertices.windows(2) {
            let e = g.edge_between(w[0], w[1]).expect("validated path");
            if !take(c.edge(e)) {
                return false;
            }
        }
    }
    if uses_vertices(mode) {
        for &x in &vertices[1..vertices.len() - 1] {
            if !take(c.vertex(x)) {
                return false;
            }
        }
    }
    true
}

/// Whether `p` is rainbow in `g` under `c` and `mode`.
pub fn is_rainbow_path(
    g: &Graph,
    c: &TotalColoring,
    p: &Path,
    mode: ColoringMode,
) -> Result<bool, VerifyError> {
    c.check_fits(g)?;
    let p = Path::new(g, p.vertices().to_vec())?;
    Ok(rainbow_sequence(g, c, p.vertices(), mode))
}

fn check_pair(g: &Graph, u: VertexId, v: VertexId) -> Result<(), VerifyError> {
    for x in [u, v] {
        if !g.contains_vertex(x) {
            return Err(GraphError::UnknownVertex(x.to_string()).into());
        }
    }
    if u == v {
        return Err(GraphError::DiagonalPair(g.label(u).to_string()).into());
    }
    Ok(())
}

/// All simple rainbow `u`–`v` paths with at most `max_len` edges, in
/// lexicographic order of vertex ids.
pub fn enumerate_rainbow_paths(
    g: &Graph,
    c: &TotalColoring,
    u: VertexId,
    v: VertexId,
    mode: ColoringMode,
    max_len: usize,
) -> Result<Vec<Path>, VerifyError> {
    c.check_fits(g)?;
    check_pair(g, u, v)?;
    if max_len == 0 {
        return Err(VerifyError::ZeroLength);
    }
    let mut walker = RainbowWalker {
        g,
        c,
        mode,
        target: v,
        max_len,
        on_path: vec![false; g.vertex_count()],
        stack: vec![u],
        out: Vec::new(),
    };
    walker.on_path[u.0] = true;
    walker.walk(0);
    Ok(walker.out)
}

struct RainbowWalker<'a> {
    g: &'a Graph,
    c: &'a TotalColoring,
    mode: ColoringMode,
    target: VertexId,
    max_len: usize,
    on_path: Vec<bool>,
    stack: Vec<VertexId>,
    out: Vec<Path>,
}

impl RainbowWalker<'_> {
    fn walk(&mut self, mask: u64) {
        let last = *self.stack.last().expect("non-empty");
        for (w, e) in self.g.neighbors(last) {
            if self.on_path[w.0] {
                continue;
            }
            let mut m = mask;
            if uses_edges(self.mode) {
                let b = bit(self.c.edge(e));
                if m & b != 0 {
                    continue;
                }
                m |= b;
            }
            if w == self.target {
                let mut p = self.stack.clone();
                p.push(w);
                self.out.push(Path::trusted(p));
                continue;
            }
            if self.stack.len() >= self.max_len {
                continue;
            }
            if uses_vertices(self.mode) {
                let b = bit(self.c.vertex(w));
                if m & b != 0 {
                    continue;
                }
                m |= b;
            }
            self.on_path[w.0] = true;
            self.stack.push(w);
            self.walk(m);
            self.stack.pop();
            self.on_path[w.0] = false;
        }
    }
}

/// Picks `k` pairwise internally disjoint sets among `internals`, returning
/// their indices. Exact depth-first set packing.
pub(crate) fn pack_disjoint<I: AsRef<[VertexId]>>(
    internals: &[I],
    k: usize,
    vertex_count: usize,
) -> Option<Vec<usize>> {
    let mut used = vec![false; vertex_count];
    let mut chosen = Vec::with_capacity(k);
    if pack_from(internals, 0, k, &mut used, &mut chosen) {
        Some(chosen)
    } else {
        None
    }
}

fn pack_from<I: AsRef<[VertexId]>>(
    internals: &[I],
    start: usize,
    k: usize,
    used: &mut [bool],
    chosen: &mut Vec<usize>,
) -> bool {
    if chosen.len() == k {
        return true;
    }
    if internals.len() - start < k - chosen.len() {
        return false;
    }
    for i in start..internals.len() {
        if internals.len() - i < k - chosen.len() {
            return false;
        }
        let set = internals[i].as_ref();
        if set.iter().any(|x| used[x.0]) {
            continue;
        }
        set.iter().for_each(|x| used[x.0] = true);
        chosen.push(i);
        if pack_from(internals, i + 1, k, used, chosen) {
            return true;
        }
        chosen.pop();
        set.iter().for_each(|x| used[x.0] = false);
    }
    false
}

/// Rainbow paths of at most two edges, in increasing middle-vertex order with
/// the direct edge first, stopping once `want` have been found.
fn short_rainbow_paths(
    g: &Graph,
    c: &TotalColoring,
    u: VertexId,
    v: VertexId,
    mode: ColoringMode,
    allow_two: bool,
    want: usize,
) -> Vec<Path> {
    let mut out = Vec::new();
    if g.adjacent(u, v) {
        out.push(Path::trusted(vec![u, v]));
    }
    if !allow_two || out.len() >= want {
        return out;
    }
    let (small, other) = if g.degree(u) <= g.degree(v) { (u, v) } else { (v, u) };
    for (w, e_small) in g.neighbors(small) {
        if w == other {
            continue;
        }
        let Some(e_other) = g.edge_between(w, other) else {
            continue;
        };
        if two_step_rainbow(c, e_small, w, e_other, mode) {
            out.push(Path::trusted(vec![u, w, v]));
            if out.len() >= want {
                break;
            }
        }
    }
    out
}

#[inline]
fn two_step_rainbow(c: &TotalColoring, e1: EdgeId, mid: VertexId, e2: EdgeId, mode: ColoringMode) -> bool {
    let (a, b, x) = (c.edge(e1), c.edge(e2), c.vertex(mid));
    match mode {
        ColoringMode::Edge => a != b,
        ColoringMode::Vertex => true,
        ColoringMode::Total => a != b && a != x && b != x,
    }
}

/// Per-color neighbour bitsets for counting two-edge rainbow paths with a
/// few word operations per pair.
struct ShortIndex {
    words: usize,
    palette: usize,
    /// Row `v * palette + color` holds the neighbours of `v` joined by an
    /// edge of that color.
    nbr: Vec<u64>,
    /// Row `color` holds the vertices of that color.
    vcol: Vec<u64>,
}

const SHORT_INDEX_BYTES: usize = 1 << 28;

impl ShortIndex {
    fn build(g: &Graph, c: &TotalColoring) -> Option<Self> {
        let n = g.vertex_count();
        let palette = c.palette().max(1);
        let words = n.div_ceil(64);
        let cells = n.checked_mul(palette)?.checked_mul(words)?;
        if cells.checked_mul(8)? > SHORT_INDEX_BYTES {
            return None;
        }
        let mut nbr = vec![0u64; cells];
        let mut vcol = vec![0u64; palette * words];
        for u in 0..n {
            let x = c.vertex(VertexId(u)) as usize;
            vcol[x * words + u / 64] |= 1 << (u % 64);
            for (w, e) in g.neighbors(VertexId(u)) {
                let row = (u * palette + c.edge(e) as usize) * words;
                nbr[row + w.0 / 64] |= 1 << (w.0 % 64);
            }
        }
        Some(ShortIndex { words, palette, nbr, vcol })
    }

    fn row(&self, v: usize, color: usize) -> &[u64] {
        let start = (v * self.palette + color) * self.words;
        &self.nbr[start..start + self.words]
    }

    fn vertices(&self, color: usize) -> &[u64] {
        &self.vcol[color * self.words..(color + 1) * self.words]
    }

    /// Counts rainbow middles between `u` and `v`, stopping at `want`.
    fn count_middles(&self, u: usize, v: usize, mode: ColoringMode, want: usize) -> usize {
        let mut count = 0;
        for a in 0..self.palette {
            let ru = self.row(u, a);
            if ru.iter().all(|&x| x == 0) {
                continue;
            }
            for b in 0..self.palette {
                if a == b && mode != ColoringMode::Vertex {
                    continue;
                }
                let rv = self.row(v, b);
                count += match mode {
                    ColoringMode::Total => {
                        let (va, vb) = (self.vertices(a), self.vertices(b));
                        (0..self.words)
                            .map(|i| (ru[i] & rv[i] & !(va[i] | vb[i])).count_ones() as usize)
                            .sum::<usize>()
                    }
                    _ => (0..self.words).map(|i| (ru[i] & rv[i]).count_ones() as usize).sum(),
                };
                if count >= want {
                    return count;
                }
            }
        }
        count
    }
}

fn disjoint_paths_unchecked(
    g: &Graph,
    c: &TotalColoring,
    u: VertexId,
    v: VertexId,
    k: usize,
    mode: ColoringMode,
    cap: usize,
) -> Option<Vec<Path>> {
    if cap <= 2 {
        let paths = short_rainbow_paths(g, c, u, v, mode, cap == 2, k);
        return (paths.len() >= k).then_some(paths);
    }
    let mut walker = RainbowWalker {
        g,
        c,
        mode,
        target: v,
        max_len: cap,
        on_path: vec![false; g.vertex_count()],
        stack: vec![u],
        out: Vec::new(),
    };
    walker.on_path[u.0] = true;
    walker.walk(0);
    let candidates = walker.out;
    let internals: Vec<&[VertexId]> = candidates.iter().map(Path::internal).collect();
    let chosen = pack_disjoint(&internals, k, g.vertex_count())?;
    Some(chosen.into_iter().map(|i| candidates[i].clone()).collect())
}

/// `k` internally vertex-disjoint rainbow `u`–`v` paths, if they exist.
pub fn has_k_disjoint_rainbow_paths(
    g: &Graph,
    c: &TotalColoring,
    u: VertexId,
    v: VertexId,
    k: usize,
    mode: ColoringMode,
    opts: VerifyOptions,
) -> Result<Option<Vec<Path>>, VerifyError> {
    c.check_fits(g)?;
    check_pair(g, u, v)?;
    if k == 0 {
        return Err(VerifyError::ZeroK);
    }
    let cap = path_length_cap(g, c.palette(), mode, opts);
    if cap == 0 {
        return Err(VerifyError::ZeroLength);
    }
    Ok(disjoint_paths_unchecked(g, c, u, v, k, mode, cap))
}

/// Outcome of a k-connectivity check over a pair scope.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KConnectivity {
    Holds,
    /// The first failing pair in `(lo, hi)` id order.
    FailsAt(VertexId, VertexId),
}

impl KConnectivity {
    pub fn holds(&self) -> bool {
        matches!(self, KConnectivity::Holds)
    }
}

/// Checks every pair in `scope` for `k` disjoint rainbow paths. Pairs are
/// checked in parallel; the reported failure is the first in pair order.
pub fn is_rainbow_k_connected(
    g: &Graph,
    c: &TotalColoring,
    k: usize,
    mode: ColoringMode,
    scope: &PairScope,
    opts: VerifyOptions,
) -> Result<KConnectivity, VerifyError> {
    c.check_fits(g)?;
    if k == 0 {
        return Err(VerifyError::ZeroK);
    }
    let cap = path_length_cap(g, c.palette(), mode, opts);
    let index = if cap == 2 { ShortIndex::build(g, c) } else { None };
    let fails = |u: VertexId, v: VertexId| match &index {
        Some(ix) => {
            let direct = usize::from(g.adjacent(u, v));
            direct < k && direct + ix.count_middles(u.0, v.0, mode, k - direct) < k
        }
        None => cap == 0 || disjoint_paths_unchecked(g, c, u, v, k, mode, cap).is_none(),
    };
    let first = match scope {
        PairScope::All => {
            let n = g.vertex_count();
            (0..n).into_par_iter().find_map_first(|u| {
                (u + 1..n)
                    .map(|v| (VertexId(u), VertexId(v)))
                    .find(|&(a, b)| fails(a, b))
            })
        }
        PairScope::Subset(set) => {
            let pairs: Vec<_> = set.iter().collect();
            for &(u, v) in &pairs {
                check_pair(g, u, v)?;
            }
            pairs.into_par_iter().find_first(|&(a, b)| fails(a, b))
        }
    };
    Ok(match first {
        None => KConnectivity::Holds,
        Some((u, v)) => KConnectivity::FailsAt(u, v),
    })
}

/// Verdict of the Problem-3 side conditions for a candidate extension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtensionVerdict {
    Satisfied,
    /// Some element uses a color outside `{0, 1, 2}`.
    NotThreeColors,
    /// The pre-colored classes are not two distinct monochromatic classes.
    ClassesBroken,
    /// A pre-colored edge shares its color with one of its endpoints.
    EndpointClash(EdgeId),
    /// A required pair lacks `k` disjoint total-rainbow paths.
    PairFails(VertexId, VertexId),
}

impl ExtensionVerdict {
    pub fn is_satisfied(&self) -> bool {
        matches!(self, ExtensionVerdict::Satisfied)
    }
}

/// Checks that `chi` extends the partition `(Ê₁, Ê₂)` (up to swapping its two
/// colors), keeps every pre-colored edge's color off both endpoints, and makes
/// every pair of `q` total-rainbow k-connected.
pub fn satisfies_problem3(
    g: &Graph,
    q: &PairSet,
    partial: &PartialEdgeColoring,
    chi: &TotalColoring,
    k: usize,
) -> Result<ExtensionVerdict, VerifyError> {
    chi.check_fits(g)?;
    let resolved = partial.resolve(g)?;
    q.ensure_nonadjacent(g)?;
    if chi
        .vertex_colors()
        .iter()
        .chain(chi.edge_colors())
        .any(|&col| col >= 3)
    {
        return Ok(ExtensionVerdict::NotThreeColors);
    }
    let mut class_color: [Option<Color>; 2] = [None, None];
    for &(class, e, _) in &resolved {
        let col = chi.edge(e);
        match class_color[class - 1] {
            None => class_color[class - 1] = Some(col),
            Some(prev) if prev != col => return Ok(ExtensionVerdict::ClassesBroken),
            Some(_) => {}
        }
    }
    if let [Some(a), Some(b)] = class_color {
        if a == b {
            return Ok(ExtensionVerdict::ClassesBroken);
        }
    }
    for &(_, e, oe) in &resolved {
        let col = chi.edge(e);
        if col == chi.vertex(oe.first) || col == chi.vertex(oe.second) {
            return Ok(ExtensionVerdict::EndpointClash(e));
        }
    }
    let scope = PairScope::Subset(q.clone());
    Ok(
        match is_rainbow_k_connected(g, chi, k, ColoringMode::Total, &scope, VerifyOptions::default())? {
            KConnectivity::Holds => ExtensionVerdict::Satisfied,
            KConnectivity::FailsAt(u, v) => ExtensionVerdict::PairFails(u, v),
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Element;

    fn path3() -> Graph {
        Graph::from_labels(["a", "b", "c"], [("a", "b"), ("b", "c")]).unwrap()
    }

    fn c4() -> Graph {
        Graph::from_labels(
            ["a", "b", "c", "d"],
            [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")],
        )
        .unwrap()
    }

    fn p3_coloring(ab: Color, b: Color, bc: Color) -> TotalColoring {
        TotalColoring::new(3, vec![0, b, 0], vec![ab, bc]).unwrap()
    }

    #[test]
    fn length_bounds() {
        assert_eq!(max_rainbow_path_length(3, ColoringMode::Total), LengthBound::Edges(2));
        assert_eq!(max_rainbow_path_length(5, ColoringMode::Total), LengthBound::Edges(3));
        assert_eq!(max_rainbow_path_length(2, ColoringMode::Edge), LengthBound::Edges(2));
        assert_eq!(max_rainbow_path_length(2, ColoringMode::Vertex), LengthBound::Unbounded);
    }

    #[test]
    fn single_edge_is_always_rainbow() {
        let g = path3();
        let c = TotalColoring::uniform(&g, 1, 0).unwrap();
        let p = Path::from_labels(&g, &["a", "b"]).unwrap();
        for mode in [ColoringMode::Edge, ColoringMode::Vertex, ColoringMode::Total] {
            assert!(is_rainbow_path(&g, &c, &p, mode).unwrap());
        }
    }

    #[test]
    fn modes_differ_on_edge_vertex_clash() {
        let g = path3();
        let p = Path::from_labels(&g, &["a", "b", "c"]).unwrap();
        assert!(is_rainbow_path(&g, &p3_coloring(0, 2, 1), &p, ColoringMode::Total).unwrap());
        let clash = p3_coloring(0, 0, 1);
        assert!(!is_rainbow_path(&g, &clash, &p, ColoringMode::Total).unwrap());
        assert!(is_rainbow_path(&g, &clash, &p, ColoringMode::Vertex).unwrap());
        assert!(is_rainbow_path(&g, &clash, &p, ColoringMode::Edge).unwrap());
    }

    #[test]
    fn endpoint_colors_are_ignored() {
        let g = path3();
        // endpoints share every color with the path
        let c = TotalColoring::new(3, vec![0, 2, 1], vec![0, 1]).unwrap();
        let p = Path::from_labels(&g, &["a", "b", "c"]).unwrap();
        assert!(is_rainbow_path(&g, &c, &p, ColoringMode::Total).unwrap());
    }

    #[test]
    fn enumerate_on_c4_with_distinct_colors() {
        let g = c4();
        let c = TotalColoring::new(8, vec![0, 1, 2, 3], vec![4, 5, 6, 7]).unwrap();
        let a = g.vertex("a").unwrap();
        let cc = g.vertex("c").unwrap();
        let paths = enumerate_rainbow_paths(&g, &c, a, cc, ColoringMode::Total, 2).unwrap();
        let labels: Vec<Vec<String>> = paths.iter().map(|p| p.to_labels(&g)).collect();
        assert_eq!(labels, vec![vec!["a", "b", "c"], vec!["a", "d", "c"]]);
    }

    #[test]
    fn enumerate_rejects_repeated_edge_color() {
        let g = path3();
        let c = TotalColoring::new(2, vec![0, 1, 0], vec![0, 0]).unwrap();
        let paths =
            enumerate_rainbow_paths(&g, &c, VertexId(0), VertexId(2), ColoringMode::Edge, 2).unwrap();
        assert!(paths.is_empty());
    }

    #[test]
    fn c4_two_disjoint_paths() {
        let g = c4();
        // c(ab)=0, c(bc)=1, c(cd)=0, c(da)=1, all vertices 2
        let c = TotalColoring::new(3, vec![2; 4], vec![0, 1, 0, 1]).unwrap();
        let w = has_k_disjoint_rainbow_paths(
            &g,
            &c,
            VertexId(0),
            VertexId(2),
            2,
            ColoringMode::Total,
            VerifyOptions::default(),
        )
        .unwrap()
        .expect("two paths");
        let labels: Vec<Vec<String>> = w.iter().map(|p| p.to_labels(&g)).collect();
        assert_eq!(labels, vec![vec!["a", "b", "c"], vec!["a", "d", "c"]]);
    }

    #[test]
    fn star_leaves_share_center() {
        let g = Graph::from_labels(
            ["z", "l1", "l2", "l3"],
            [("z", "l1"), ("z", "l2"), ("z", "l3")],
        )
        .unwrap();
        let c = TotalColoring::new(7, vec![0, 1, 2, 3], vec![4, 5, 6]).unwrap();
        let res = has_k_disjoint_rainbow_paths(
            &g,
            &c,
            VertexId(1),
            VertexId(2),
            2,
            ColoringMode::Total,
            VerifyOptions::default(),
        )
        .unwrap();
        assert!(res.is_none());
    }

    #[test]
    fn adjacent_pair_k1_always_connected() {
        let g = c4();
        let c = TotalColoring::uniform(&g, 1, 0).unwrap();
        let res = has_k_disjoint_rainbow_paths(
            &g,
            &c,
            VertexId(0),
            VertexId(1),
            1,
            ColoringMode::Total,
            VerifyOptions::default(),
        )
        .unwrap();
        assert_eq!(res.unwrap().len(), 1);
    }

    #[test]
    fn packing_is_exact_where_greedy_fails() {
        // Greedy would take {1,2} first and block both others.
        let sets: Vec<Vec<VertexId>> = vec![
            vec![VertexId(1), VertexId(2)],
            vec![VertexId(1)],
            vec![VertexId(2)],
        ];
        assert_eq!(pack_disjoint(&sets, 2, 3), Some(vec![1, 2]));
        assert_eq!(pack_disjoint(&sets, 3, 3), None);
    }

    #[test]
    fn complete_graph_single_color() {
        let labels: Vec<String> = (0..5).map(|i| i.to_string()).collect();
        let mut edges = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                edges.push((labels[i].clone(), labels[j].clone()));
            }
        }
        let g = Graph::from_labels(labels.clone(), edges).unwrap();
        let c = TotalColoring::uniform(&g, 1, 0).unwrap();
        let r = is_rainbow_k_connected(&g, &c, 1, ColoringMode::Total, &PairScope::All, VerifyOptions::default())
            .unwrap();
        assert!(r.holds());
    }

    #[test]
    fn path3_two_colors_fails_at_ends() {
        let g = path3();
        let c = TotalColoring::new(2, vec![0, 1, 0], vec![0, 1]).unwrap();
        let r = is_rainbow_k_connected(&g, &c, 1, ColoringMode::Total, &PairScope::All, VerifyOptions::default())
            .unwrap();
        assert_eq!(r, KConnectivity::FailsAt(VertexId(0), VertexId(2)));
    }

    #[test]
    fn override_extends_candidate_length() {
        // P4 under a 3-palette: no 3-edge path fits unless the cap is lifted,
        // and even then a 3-edge total path needs 5 distinct colors.
        let g = Graph::from_labels(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d")]).unwrap();
        let c = TotalColoring::new(5, vec![0, 3, 4, 0], vec![0, 1, 2]).unwrap();
        let (a, d) = (VertexId(0), VertexId(3));
        let capped = has_k_disjoint_rainbow_paths(
            &g,
            &c,
            a,
            d,
            1,
            ColoringMode::Total,
            VerifyOptions { max_len: Some(2) },
        )
        .unwrap();
        assert!(capped.is_none());
        let natural =
            has_k_disjoint_rainbow_paths(&g, &c, a, d, 1, ColoringMode::Total, VerifyOptions::default())
                .unwrap();
        assert!(natural.is_some());
    }

    #[test]
    fn problem3_vacuous_and_endpoint_clash() {
        let g = path3();
        let chi = p3_coloring(0, 0, 0);
        let verdict =
            satisfies_problem3(&g, &PairSet::new(), &PartialEdgeColoring::default(), &chi, 1).unwrap();
        assert!(verdict.is_satisfied());

        use crate::coloring::OrientedEdge;
        let partial = PartialEdgeColoring::new(vec![OrientedEdge::new(VertexId(0), VertexId(1))], vec![]);
        // c(ab) = 0 = c(a)
        let verdict = satisfies_problem3(&g, &PairSet::new(), &partial, &chi, 1).unwrap();
        assert_eq!(verdict, ExtensionVerdict::EndpointClash(EdgeId(0)));
    }

    #[test]
    fn problem3_rejects_adjacent_q_and_foreign_edges() {
        let g = path3();
        let chi = p3_coloring(0, 2, 1);
        let q = PairSet::from_labels(&g, [("a", "b")]).unwrap();
        assert!(satisfies_problem3(&g, &q, &PartialEdgeColoring::default(), &chi, 1).is_err());
        use crate::coloring::OrientedEdge;
        let partial = PartialEdgeColoring::new(vec![OrientedEdge::new(VertexId(0), VertexId(2))], vec![]);
        assert!(satisfies_problem3(&g, &PairSet::new(), &partial, &chi, 1).is_err());
    }

    #[test]
    fn problem3_classes_may_swap_colors() {
        use crate::coloring::OrientedEdge;
        let g = path3();
        let partial = PartialEdgeColoring::new(
            vec![OrientedEdge::new(VertexId(0), VertexId(1))],
            vec![OrientedEdge::new(VertexId(1), VertexId(2))],
        );
        let q = PairSet::from_labels(&g, [("a", "c")]).unwrap();
        for (e1, e2) in [(0, 1), (1, 0)] {
            let chi = TotalColoring::new(3, vec![2, 2, 2], vec![e1, e2]).unwrap();
            assert!(satisfies_problem3(&g, &q, &partial, &chi, 1).unwrap().is_satisfied());
        }
        let same = TotalColoring::new(3, vec![2, 2, 2], vec![0, 0]).unwrap();
        assert_eq!(
            satisfies_problem3(&g, &q, &partial, &same, 1).unwrap(),
            ExtensionVerdict::ClassesBroken
        );
    }

    #[test]
    fn element_access_matches_slices() {
        let c = p3_coloring(0, 2, 1);
        assert_eq!(c.get(Element::Vertex(VertexId(1))), 2);
        assert_eq!(c.get(Element::Edge(EdgeId(1))), 1);
    }
}
