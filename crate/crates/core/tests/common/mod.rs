//! Shared test helpers: graph corpora and brute-force oracles written
//! without the library's search code.

#![allow(dead_code)]

use rainbow_core::{CnfFormula, Color, ColoringMode, Graph, Literal, TotalColoring, VertexId};
use rand::Rng;

pub const LABELS: [&str; 8] = ["a", "b", "c", "d", "e", "f", "g", "h"];

/// Graph on `n` vertices from an upper-triangle bitmask (pairs in
/// lexicographic order).
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for a in 0..n {
        for b in a + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((LABELS[a], LABELS[b]));
            }
            bit += 1;
        }
    }
    Graph::from_labels(LABELS[..n].iter().copied(), edges).unwrap()
}

fn adjacency(n: usize, mask: u64) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; n]; n];
    let mut bit = 0;
    for a in 0..n {
        for b in a + 1..n {
            if mask >> bit & 1 == 1 {
                adj[a][b] = true;
                adj[b][a] = true;
            }
            bit += 1;
        }
    }
    adj
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn canonical(n: usize, adj: &[Vec<bool>], perms: &[Vec<usize>]) -> u64 {
    perms
        .iter()
        .map(|p| {
            let mut mask = 0u64;
            let mut bit = 0;
            for a in 0..n {
                for b in a + 1..n {
                    if adj[p[a]][p[b]] {
                        mask |= 1 << bit;
                    }
                    bit += 1;
                }
            }
            mask
        })
        .min()
        .unwrap()
}

fn connected(n: usize, adj: &[Vec<bool>]) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for w in 0..n {
            if adj[v][w] && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// One representative of every isomorphism class of connected graphs with
/// 2 ≤ n ≤ `max_n` vertices.
pub fn connected_graphs(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        let perms = permutations(n);
        let bits = n * (n - 1) / 2;
        let mut seen = std::collections::HashSet::new();
        for mask in 0u64..1 << bits {
            let adj = adjacency(n, mask);
            if !connected(n, &adj) {
                continue;
            }
            if seen.insert(canonical(n, &adj, &perms)) {
                out.push(graph_from_mask(n, mask));
            }
        }
    }
    out
}

fn matrix(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.vertex_count();
    let mut m = vec![vec![None; n]; n];
    for e in g.edge_ids() {
        let (a, b) = g.endpoints(e);
        m[a.0][b.0] = Some(e.0);
        m[b.0][a.0] = Some(e.0);
    }
    m
}

/// Every simple u–v path, as vertex index lists.
pub fn brute_paths(g: &Graph, u: usize, v: usize) -> Vec<Vec<usize>> {
    fn go(m: &[Vec<Option<usize>>], v: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        if last == v {
            out.push(path.clone());
            return;
        }
        for w in 0..m.len() {
            if m[last][w].is_some() && !path.contains(&w) {
                path.push(w);
                go(m, v, path, out);
                path.pop();
            }
        }
    }
    let m = matrix(g);
    let mut out = Vec::new();
    go(&m, v, &mut vec![u], &mut out);
    out
}

pub fn brute_is_rainbow(g: &Graph, c: &TotalColoring, path: &[usize], mode: ColoringMode) -> bool {
    let m = matrix(g);
    let mut colors: Vec<Color> = Vec::new();
    if mode != ColoringMode::Vertex {
        for w in path.windows(2) {
            colors.push(c.edge_colors()[m[w[0]][w[1]].unwrap()]);
        }
    }
    if mode != ColoringMode::Edge {
        for &x in &path[1..path.len() - 1] {
            colors.push(c.vertex_colors()[x]);
        }
    }
    let mut sorted = colors.clone();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len() == colors.len()
}

fn disjoint_choice(paths: &[Vec<usize>], k: usize, start: usize, used: &mut Vec<usize>) -> bool {
    if k == 0 {
        return true;
    }
    for i in start..paths.len() {
        let inner = &paths[i][1..paths[i].len() - 1];
        if inner.iter().any(|x| used.contains(x)) {
            continue;
        }
        let before = used.len();
        used.extend_from_slice(inner);
        if disjoint_choice(paths, k - 1, i + 1, used) {
            return true;
        }
        used.truncate(before);
    }
    false
}

/// Are there `k` internally disjoint rainbow u–v paths?
pub fn brute_pair(g: &Graph, c: &TotalColoring, u: usize, v: usize, k: usize, mode: ColoringMode) -> bool {
    let rainbow: Vec<Vec<usize>> = brute_paths(g, u, v)
        .into_iter()
        .filter(|p| brute_is_rainbow(g, c, p, mode))
        .collect();
    disjoint_choice(&rainbow, k, 0, &mut Vec::new())
}

pub fn brute_connected(g: &Graph, c: &TotalColoring, k: usize, mode: ColoringMode) -> bool {
    let n = g.vertex_count();
    (0..n).all(|u| (u + 1..n).all(|v| brute_pair(g, c, u, v, k, mode)))
}

/// All colorings with `t` colors, vertices first then edges, in base-t order.
pub fn all_colorings(g: &Graph, t: usize) -> impl Iterator<Item = TotalColoring> + '_ {
    let (n, m) = (g.vertex_count(), g.edge_count());
    let total = (t as u64).pow((n + m) as u32);
    (0..total).map(move |mut code| {
        let mut digits = Vec::with_capacity(n + m);
        for _ in 0..n + m {
            digits.push((code % t as u64) as Color);
            code /= t as u64;
        }
        let edges = digits.split_off(n);
        TotalColoring::new(t, digits, edges).unwrap()
    })
}

/// Smallest `t ≤ max_t` admitting a rainbow k-connected coloring, by full
/// enumeration.
pub fn naive_min_colors(g: &Graph, k: usize, mode: ColoringMode, max_t: usize) -> Option<usize> {
    (1..=max_t).find(|&t| all_colorings(g, t).any(|c| brute_connected(g, &c, k, mode)))
}

/// Minimum vertex cut separating two nonadjacent vertices, or n−1 for
/// complete graphs, by trying every vertex subset.
pub fn brute_vertex_connectivity(g: &Graph) -> usize {
    let n = g.vertex_count();
    if g.is_complete() {
        return n - 1;
    }
    let m = matrix(g);
    let mut best = n;
    for removed in 0u32..1 << n {
        let size = removed.count_ones() as usize;
        if size >= best || n - size < 2 {
            continue;
        }
        let alive: Vec<usize> = (0..n).filter(|&x| removed >> x & 1 == 0).collect();
        let mut seen = vec![false; n];
        let mut stack = vec![alive[0]];
        seen[alive[0]] = true;
        while let Some(x) = stack.pop() {
            for &y in &alive {
                if m[x][y].is_some() && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        if alive.iter().any(|&x| !seen[x]) {
            best = size;
        }
    }
    best
}

pub fn brute_diameter(g: &Graph) -> usize {
    let n = g.vertex_count();
    let m = matrix(g);
    let mut d = vec![vec![usize::MAX / 4; n]; n];
    for a in 0..n {
        d[a][a] = 0;
        for b in 0..n {
            if m[a][b].is_some() {
                d[a][b] = 1;
            }
        }
    }
    for w in 0..n {
        for a in 0..n {
            for b in 0..n {
                d[a][b] = d[a][b].min(d[a][w] + d[w][b]);
            }
        }
    }
    d.iter().flatten().copied().max().unwrap()
}

/// Random 3-CNF with `n` variables and `m` clauses; no clause mentions a
/// variable with both signs.
pub fn random_cnf<R: Rng>(rng: &mut R, n: usize, m: usize) -> CnfFormula {
    let clauses = (0..m)
        .map(|_| {
            let mut lits = [Literal::pos(1); 3];
            for i in 0..3 {
                loop {
                    let lit = Literal {
                        var: rng.gen_range(1..=n),
                        positive: rng.gen_bool(0.5),
                    };
                    if lits[..i].iter().all(|l| l.var != lit.var || l.positive == lit.positive) {
                        lits[i] = lit;
                        break;
                    }
                }
            }
            lits
        })
        .collect();
    CnfFormula::new(n, clauses).unwrap()
}

pub fn vid(i: usize) -> VertexId {
    VertexId(i)
}

/// Random 3-CNF with 1..=`max_n` variables and 1..=`max_m` clauses.
pub fn random_small_cnf<R: Rng>(rng: &mut R, max_n: usize, max_m: usize) -> CnfFormula {
    let n = rng.gen_range(1..=max_n);
    let m = rng.gen_range(1..=max_m);
    random_cnf(rng, n, m)
}
