//! Undirected simple labeled graphs.
//!
//! Vertices are addressed by [`VertexId`] (declaration order) and edges by
//! [`EdgeId`] (declaration order). Labels are strings so that reduction
//! outputs can carry readable gadget names. Graphs are immutable once built.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

/// A single colorable element of a graph: a vertex or an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Vertex(VertexId),
    Edge(EdgeId),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),
    #[error("invalid vertex label `{0}` (labels must be non-empty and must not contain `|`)")]
    InvalidLabel(String),
    #[error("self-loop on `{0}`")]
    SelfLoop(String),
    #[error("edge endpoint `{0}` is not a vertex")]
    UnknownVertex(String),
    #[error("duplicate edge `{0}`–`{1}`")]
    DuplicateEdge(String, String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("operation needs at least two vertices")]
    TooFewVertices,
    #[error("`{0}` and `{1}` are not adjacent")]
    NotAdjacent(String, String),
    #[error("path must have at least two vertices")]
    ShortPath,
    #[error("path repeats vertex `{0}`")]
    RepeatedVertex(String),
    #[error("pair uses the same vertex `{0}` twice")]
    DiagonalPair(String),
    #[error("pair `{0}`–`{1}` is adjacent")]
    AdjacentPair(String, String),
}

/// Incremental constructor used by [`Graph::from_labels`] and the reductions.
///
/// Duplicate edges are detected in [`GraphBuilder::build`] by sorting the
/// adjacency lists, so large gadget cliques never go through a hash set.
#[derive(Debug, Default)]
pub struct GraphBuilder {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<[u32; 2]>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(vertices: usize, edges: usize) -> Self {
        Self {
            labels: Vec::with_capacity(vertices),
            index: HashMap::with_capacity(vertices),
            edges: Vec::with_capacity(edges),
        }
    }

    pub fn add_vertex(&mut self, label: impl Into<String>) -> Result<VertexId, GraphError> {
        let label = label.into();
        if label.is_empty() || label.contains('|') {
            return Err(GraphError::InvalidLabel(label));
        }
        if self.index.contains_key(&label) {
            return Err(GraphError::DuplicateVertex(label));
        }
        let id = self.labels.len();
        self.index.insert(label.clone(), id);
        self.labels.push(label);
        Ok(VertexId(id))
    }

    pub fn vertex(&self, label: &str) -> Option<VertexId> {
        self.index.get(label).copied().map(VertexId)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v.0]
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId, GraphError> {
        let n = self.labels.len();
        for x in [u, v] {
            if x.0 >= n {
                return Err(GraphError::UnknownVertex(x.to_string()));
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(self.labels[u.0].clone()));
        }
        let (lo, hi) = if u < v { (u, v) } else { (v, u) };
        self.edges.push([lo.0 as u32, hi.0 as u32]);
        Ok(EdgeId(self.edges.len() - 1))
    }

    pub fn add_edge_by_label(&mut self, u: &str, v: &str) -> Result<EdgeId, GraphError> {
        let a = self
            .vertex(u)
            .ok_or_else(|| GraphError::UnknownVertex(u.to_string()))?;
        let b = self
            .vertex(v)
            .ok_or_else(|| GraphError::UnknownVertex(v.to_string()))?;
        self.add_edge(a, b)
    }

    pub fn build(self) -> Result<Graph, GraphError> {
        let n = self.labels.len();
        let mut degree = vec![0usize; n];
        for &[a, b] in &self.edges {
            degree[a as usize] += 1;
            degree[b as usize] += 1;
        }
        let mut adj: Vec<Vec<(u32, u32)>> =
            degree.iter().map(|&d| Vec::with_capacity(d)).collect();
        for (id, &[a, b]) in self.edges.iter().enumerate() {
            adj[a as usize].push((b, id as u32));
            adj[b as usize].push((a, id as u32));
        }
        for (v, list) in adj.iter_mut().enumerate() {
            if !list.windows(2).all(|w| w[0].0 < w[1].0) {
                list.sort_unstable();
            }
            if let Some(w) = list.windows(2).find(|w| w[0].0 == w[1].0) {
                return Err(GraphError::DuplicateEdge(
                    self.labels[v].clone(),
                    self.labels[w[0].0 as usize].clone(),
                ));
            }
        }
        Ok(Graph {
            labels: self.labels,
            index: self.index,
            edges: self.edges,
            adj,
        })
    }
}

/// Undirected simple graph with string labels.
#[derive(Debug, Clone)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<[u32; 2]>,
    // Sorted by neighbour id: (neighbour, edge id).
    adj: Vec<Vec<(u32, u32)>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.edges == other.edges
    }
}

impl Eq for Graph {}

/// Shortest-path diameter, or a marker that some pair is unreachable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diameter {
    Finite(usize),
    Disconnected,
}

impl Graph {
    /// Builds a graph from vertex labels and label pairs.
    pub fn from_labels<V, A, B>(
        vertices: impl IntoIterator<Item = V>,
        edges: impl IntoIterator<Item = (A, B)>,
    ) -> Result<Self, GraphError>
    where
        V: Into<String>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let mut builder = GraphBuilder::new();
        for v in vertices {
            builder.add_vertex(v)?;
        }
        for (a, b) in edges {
            builder.add_edge_by_label(a.as_ref(), b.as_ref())?;
        }
        builder.build()
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Number of colorable elements (vertices plus edges).
    pub fn element_count(&self) -> usize {
        self.labels.len() + self.edges.len()
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = VertexId> + '_ {
        (0..self.labels.len()).map(VertexId)
    }

    pub fn edge_ids(&self) -> impl ExactSizeIterator<Item = EdgeId> + '_ {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v.0]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex(&self, label: &str) -> Option<VertexId> {
        self.index.get(label).copied().map(VertexId)
    }

    pub fn vertex_or_err(&self, label: &str) -> Result<VertexId, GraphError> {
        self.vertex(label)
            .ok_or_else(|| GraphError::UnknownVertex(label.to_string()))
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        v.0 < self.labels.len()
    }

    /// Endpoints of `e` with the smaller vertex id first.
    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        let [a, b] = self.edges[e.0];
        (VertexId(a as usize), VertexId(b as usize))
    }

    /// Endpoint labels of `e`, lexicographically sorted.
    pub fn edge_labels(&self, e: EdgeId) -> (&str, &str) {
        let (a, b) = self.endpoints(e);
        let (a, b) = (self.label(a), self.label(b));
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        let list = self.adj.get(u.0)?;
        list.binary_search_by_key(&(v.0 as u32), |&(w, _)| w)
            .ok()
            .map(|i| EdgeId(list[i].1 as usize))
    }

    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.edge_between(u, v).is_some()
    }

    /// Neighbours of `v` in increasing id order, with the connecting edge.
    pub fn neighbors(&self, v: VertexId) -> impl ExactSizeIterator<Item = (VertexId, EdgeId)> + '_ {
        self.adj[v.0]
            .iter()
            .map(|&(w, e)| (VertexId(w as usize), EdgeId(e as usize)))
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v.0].len()
    }

    /// Dense index of an element: vertices first, then edges.
    pub fn element_index(&self, el: Element) -> usize {
        match el {
            Element::Vertex(v) => v.0,
            Element::Edge(e) => self.labels.len() + e.0,
        }
    }

    pub fn element_at(&self, index: usize) -> Element {
        if index < self.labels.len() {
            Element::Vertex(VertexId(index))
        } else {
            Element::Edge(EdgeId(index - self.labels.len()))
        }
    }

    pub fn contains_element(&self, el: Element) -> bool {
        match el {
            Element::Vertex(v) => v.0 < self.labels.len(),
            Element::Edge(e) => e.0 < self.edges.len(),
        }
    }

    pub fn describe_element(&self, el: Element) -> String {
        match el {
            Element::Vertex(v) => self.label(v).to_string(),
            Element::Edge(e) => {
                let (a, b) = self.edge_labels(e);
                format!("{a}|{b}")
            }
        }
    }

    fn bfs(&self, source: VertexId) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[source.0] = Some(0);
        let mut queue = VecDeque::from([source.0]);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap_or(0);
            for &(w, _) in &self.adj[x] {
                let w = w as usize;
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Shortest-path distance in edges, `None` if unreachable.
    pub fn distance(&self, u: VertexId, v: VertexId) -> Option<usize> {
        self.bfs(u)[v.0]
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() == 0 || self.bfs(VertexId(0)).iter().all(Option::is_some)
    }

    pub fn diameter(&self) -> Diameter {
        let mut best = 0;
        for v in self.vertices() {
            for d in self.bfs(v) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Diameter::Disconnected,
                }
            }
        }
        Diameter::Finite(best)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.adj.iter().all(|list| list.len() + 1 == n)
    }

    pub fn common_neighbors(&self, u: VertexId, v: VertexId) -> Vec<VertexId> {
        let (a, b) = (&self.adj[u.0], &self.adj[v.0]);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(VertexId(a[i].0 as usize));
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    /// All simple `u`–`v` paths with at most `max_len` edges, in
    /// lexicographic order of their vertex-id sequences.
    pub fn simple_paths(&self, u: VertexId, v: VertexId, max_len: usize) -> Vec<Vec<VertexId>> {
        let mut out = Vec::new();
        if u == v || max_len == 0 {
            return out;
        }
        let mut on_path = vec![false; self.vertex_count()];
        let mut stack = vec![u];
        on_path[u.0] = true;
        self.extend_paths(v, max_len, &mut stack, &mut on_path, &mut out);
        out
    }

    fn extend_paths(
        &self,
        target: VertexId,
        max_len: usize,
        stack: &mut Vec<VertexId>,
        on_path: &mut [bool],
        out: &mut Vec<Vec<VertexId>>,
    ) {
        let last = *stack.last().expect("non-empty");
        for &(w, _) in &self.adj[last.0] {
            let w = VertexId(w as usize);
            if on_path[w.0] {
                continue;
            }
            if w == target {
                let mut p = stack.clone();
                p.push(w);
                out.push(p);
            } else if stack.len() < max_len {
                on_path[w.0] = true;
                stack.push(w);
                self.extend_paths(target, max_len, stack, on_path, out);
                stack.pop();
                on_path[w.0] = false;
            }
        }
    }

    /// Maximum number of internally vertex-disjoint `u`–`v` paths (local
    /// connectivity), via unit-capacity augmenting paths on the split graph.
    /// Adjacent pairs count the direct edge as one path.
    pub fn local_connectivity(&self, u: VertexId, v: VertexId) -> usize {
        let direct = usize::from(self.adjacent(u, v));
        let mut flow = SplitFlow::new(self, u, v);
        direct + flow.max_flow()
    }

    /// Vertex connectivity ℓ: the size of a minimum vertex cut, or n−1 for
    /// complete graphs.
    pub fn vertex_connectivity(&self) -> Result<usize, GraphError> {
        let n = self.vertex_count();
        if n < 2 {
            return Err(GraphError::TooFewVertices);
        }
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        if self.is_complete() {
            return Ok(n - 1);
        }
        let mut best = n - 1;
        for u in self.vertices() {
            for v in (u.0 + 1..n).map(VertexId) {
                if !self.adjacent(u, v) {
                    best = best.min(self.local_connectivity(u, v));
                }
            }
        }
        Ok(best)
    }
}

/// Residual network for vertex-disjoint paths: vertex `x` becomes
/// `in(x) = 2x` → `out(x) = 2x+1` with capacity one.
struct SplitFlow {
    head: Vec<usize>,
    next: Vec<usize>,
    to: Vec<usize>,
    cap: Vec<u8>,
    source: usize,
    sink: usize,
}

impl SplitFlow {
    const NIL: usize = usize::MAX;

    fn new(g: &Graph, s: VertexId, t: VertexId) -> Self {
        let n = g.vertex_count();
        let mut net = SplitFlow {
            head: vec![Self::NIL; 2 * n],
            next: Vec::new(),
            to: Vec::new(),
            cap: Vec::new(),
            source: 2 * s.0 + 1,
            sink: 2 * t.0,
        };
        for x in 0..n {
            net.arc(2 * x, 2 * x + 1);
        }
        for e in g.edge_ids() {
            let (a, b) = g.endpoints(e);
            if (a == s && b == t) || (a == t && b == s) {
                continue;
            }
            net.arc(2 * a.0 + 1, 2 * b.0);
            net.arc(2 * b.0 + 1, 2 * a.0);
        }
        net
    }

    fn arc(&mut self, from: usize, to: usize) {
        for (a, b, c) in [(from, to, 1), (to, from, 0)] {
            self.to.push(b);
            self.cap.push(c);
            self.next.push(self.head[a]);
            self.head[a] = self.to.len() - 1;
        }
    }

    fn max_flow(&mut self) -> usize {
        let mut flow = 0;
        loop {
            let mut via = vec![Self::NIL; self.head.len()];
            let mut seen = vec![false; self.head.len()];
            seen[self.source] = true;
            let mut queue = VecDeque::from([self.source]);
            while let Some(x) = queue.pop_front() {
                let mut a = self.head[x];
                while a != Self::NIL {
                    let y = self.to[a];
                    if self.cap[a] > 0 && !seen[y] {
                        seen[y] = true;
                        via[y] = a;
                        queue.push_back(y);
                    }
                    a = self.next[a];
                }
            }
            if !seen[self.sink] {
                return flow;
            }
            let mut y = self.sink;
            while y != self.source {
                let a = via[y];
                self.cap[a] -= 1;
                self.cap[a ^ 1] += 1;
                y = self.to[a ^ 1];
            }
            flow += 1;
        }
    }
}

/// A simple path: at least two distinct vertices, consecutive ones adjacent.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path(Vec<VertexId>);

impl Path {
    pub fn new(g: &Graph, vertices: Vec<VertexId>) -> Result<Self, GraphError> {
        if vertices.len() < 2 {
            return Err(GraphError::ShortPath);
        }
        let mut seen = BTreeSet::new();
        for &v in &vertices {
            if !g.contains_vertex(v) {
                return Err(GraphError::UnknownVertex(v.to_string()));
            }
            if !seen.insert(v) {
                return Err(GraphError::RepeatedVertex(g.label(v).to_string()));
            }
        }
        for w in vertices.windows(2) {
            if !g.adjacent(w[0], w[1]) {
                return Err(GraphError::NotAdjacent(
                    g.label(w[0]).to_string(),
                    g.label(w[1]).to_string(),
                ));
            }
        }
        Ok(Path(vertices))
    }

    pub fn from_labels(g: &Graph, labels: &[&str]) -> Result<Self, GraphError> {
        let ids = labels
            .iter()
            .map(|l| g.vertex_or_err(l))
            .collect::<Result<Vec<_>, _>>()?;
        Path::new(g, ids)
    }

    /// Wraps a vertex sequence already known to be a path of `g`.
    pub(crate) fn trusted(vertices: Vec<VertexId>) -> Self {
        Path(vertices)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn internal(&self) -> &[VertexId] {
        &self.0[1..self.0.len() - 1]
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn edges<'a>(&'a self, g: &'a Graph) -> impl Iterator<Item = EdgeId> + 'a {
        self.0
            .windows(2)
            .map(move |w| g.edge_between(w[0], w[1]).expect("path edges exist"))
    }

    pub fn to_labels(&self, g: &Graph) -> Vec<String> {
        self.0.iter().map(|&v| g.label(v).to_string()).collect()
    }
}

/// Set of unordered pairs of distinct vertices, stored as `(lo, hi)` by id.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PairSet {
    pairs: BTreeSet<(VertexId, VertexId)>,
}

impl PairSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, g: &Graph, u: VertexId, v: VertexId) -> Result<bool, GraphError> {
        for x in [u, v] {
            if !g.contains_vertex(x) {
                return Err(GraphError::UnknownVertex(x.to_string()));
            }
        }
        if u == v {
            return Err(GraphError::DiagonalPair(g.label(u).to_string()));
        }
        Ok(self.pairs.insert(if u < v { (u, v) } else { (v, u) }))
    }

    pub fn from_labels<A: AsRef<str>, B: AsRef<str>>(
        g: &Graph,
        pairs: impl IntoIterator<Item = (A, B)>,
    ) -> Result<Self, GraphError> {
        let mut set = PairSet::new();
        for (a, b) in pairs {
            let u = g.vertex_or_err(a.as_ref())?;
            let v = g.vertex_or_err(b.as_ref())?;
            set.insert(g, u, v)?;
        }
        Ok(set)
    }

    pub fn contains(&self, u: VertexId, v: VertexId) -> bool {
        self.pairs.contains(&if u < v { (u, v) } else { (v, u) })
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Checks every pair is nonadjacent in `g`.
    pub fn ensure_nonadjacent(&self, g: &Graph) -> Result<(), GraphError> {
        for (u, v) in self.iter() {
            if !g.contains_vertex(u) || !g.contains_vertex(v) {
                return Err(GraphError::UnknownVertex(format!("{u}/{v}")));
            }
            if g.adjacent(u, v) {
                return Err(GraphError::AdjacentPair(
                    g.label(u).to_string(),
                    g.label(v).to_string(),
                ));
            }
        }
        Ok(())
    }

    pub fn to_labels(&self, g: &Graph) -> Vec<(String, String)> {
        self.iter()
            .map(|(u, v)| {
                let (a, b) = (g.label(u).to_string(), g.label(v).to_string());
                if a <= b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect()
    }
}

/// The pairs a connectivity question ranges over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairScope {
    All,
    Subset(PairSet),
}

impl PairScope {
    /// Pairs in deterministic order: by `(lo, hi)` vertex id.
    pub fn pairs<'a>(&'a self, g: &'a Graph) -> Box<dyn Iterator<Item = (VertexId, VertexId)> + 'a> {
        match self {
            PairScope::All => {
                let n = g.vertex_count();
                Box::new(
                    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (VertexId(u), VertexId(v)))),
                )
            }
            PairScope::Subset(set) => Box::new(set.iter()),
        }
    }

    pub fn len(&self, g: &Graph) -> usize {
        match self {
            PairScope::All => {
                let n = g.vertex_count();
                n * n.saturating_sub(1) / 2
            }
            PairScope::Subset(set) => set.len(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Graph {
        Graph::from_labels(["a", "b", "c"], [("a", "b"), ("b", "c")]).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let labels: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let edges: Vec<(String, String)> = (0..n)
            .map(|i| (labels[i].clone(), labels[(i + 1) % n].clone()))
            .collect();
        Graph::from_labels(labels.clone(), edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let labels: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((labels[i].clone(), labels[j].clone()));
            }
        }
        Graph::from_labels(labels.clone(), edges).unwrap()
    }

    #[test]
    fn build_rejects_invalid_input() {
        let no_edges: [(&str, &str); 0] = [];
        assert!(matches!(
            Graph::from_labels(["a", "a"], no_edges),
            Err(GraphError::DuplicateVertex(_))
        ));
        assert!(matches!(
            Graph::from_labels(["a", "b"], [("a", "a")]),
            Err(GraphError::SelfLoop(_))
        ));
        assert!(matches!(
            Graph::from_labels(["a", "b"], [("a", "z")]),
            Err(GraphError::UnknownVertex(_))
        ));
        assert!(matches!(
            Graph::from_labels(["a", "b"], [("a", "b"), ("b", "a")]),
            Err(GraphError::DuplicateEdge(_, _))
        ));
        assert!(matches!(
            Graph::from_labels(["a|b"], no_edges),
            Err(GraphError::InvalidLabel(_))
        ));
    }

    #[test]
    fn single_vertex_graph() {
        let no_edges: [(&str, &str); 0] = [];
        let g = Graph::from_labels(["a"], no_edges).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert!(g.is_complete());
        assert_eq!(g.diameter(), Diameter::Finite(0));
        assert_eq!(g.vertex_connectivity(), Err(GraphError::TooFewVertices));
    }

    #[test]
    fn diameters() {
        assert_eq!(path3().diameter(), Diameter::Finite(2));
        assert_eq!(complete(4).diameter(), Diameter::Finite(1));
        assert_eq!(cycle(6).diameter(), Diameter::Finite(3));
        let g = Graph::from_labels(["a", "b", "c"], [("a", "b")]).unwrap();
        assert_eq!(g.diameter(), Diameter::Disconnected);
    }

    #[test]
    fn completeness() {
        assert!(complete(4).is_complete());
        assert!(!path3().is_complete());
    }

    #[test]
    fn connectivity_examples() {
        assert_eq!(cycle(4).vertex_connectivity(), Ok(2));
        assert_eq!(complete(4).vertex_connectivity(), Ok(3));
        assert_eq!(path3().vertex_connectivity(), Ok(1));
        let g = Graph::from_labels(["a", "b", "c"], [("a", "b")]).unwrap();
        assert_eq!(g.vertex_connectivity(), Err(GraphError::Disconnected));
    }

    #[test]
    fn simple_paths_are_lexicographic() {
        let g = cycle(4);
        let a = g.vertex("v0").unwrap();
        let c = g.vertex("v2").unwrap();
        let paths = g.simple_paths(a, c, 3);
        let seqs: Vec<Vec<usize>> = paths
            .iter()
            .map(|p| p.iter().map(|v| v.0).collect())
            .collect();
        assert_eq!(seqs, vec![vec![0, 1, 2], vec![0, 3, 2]]);
        assert!(g.simple_paths(a, c, 1).is_empty());
    }

    #[test]
    fn path_validation() {
        let g = path3();
        assert!(Path::from_labels(&g, &["a", "b", "c"]).is_ok());
        assert!(matches!(
            Path::from_labels(&g, &["a", "c"]),
            Err(GraphError::NotAdjacent(_, _))
        ));
        assert!(matches!(
            Path::from_labels(&g, &["a"]),
            Err(GraphError::ShortPath)
        ));
        assert!(matches!(
            Path::from_labels(&g, &["a", "b", "a"]),
            Err(GraphError::RepeatedVertex(_))
        ));
        let p = Path::from_labels(&g, &["a", "b", "c"]).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.internal(), &[VertexId(1)]);
    }

    #[test]
    fn pair_sets() {
        let g = path3();
        let set = PairSet::from_labels(&g, [("c", "a")]).unwrap();
        assert!(set.contains(VertexId(0), VertexId(2)));
        assert!(set.ensure_nonadjacent(&g).is_ok());
        let bad = PairSet::from_labels(&g, [("a", "b")]).unwrap();
        assert!(matches!(
            bad.ensure_nonadjacent(&g),
            Err(GraphError::AdjacentPair(_, _))
        ));
        assert!(matches!(
            PairSet::from_labels(&g, [("a", "a")]),
            Err(GraphError::DiagonalPair(_))
        ));
        assert_eq!(PairScope::All.pairs(&g).count(), 3);
    }

    #[test]
    fn element_indexing_round_trips() {
        let g = path3();
        for i in 0..g.element_count() {
            assert_eq!(g.element_index(g.element_at(i)), i);
        }
        assert_eq!(g.describe_element(Element::Edge(EdgeId(1))), "b|c");
    }
}
