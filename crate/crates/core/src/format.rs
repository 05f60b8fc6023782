//! JSON forms of graphs, colorings, pair sets, partial colorings and
//! reduction bundles.
//!
//! Vertices are referred to by label. An edge is written as its two labels
//! in sorted order, and as the key `"a|b"` in maps (labels never contain `|`).
//! Serialization keeps vertex and edge declaration order, so parsing a
//! serialized graph yields the same ids.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cnf::{parse_dimacs, CnfError};
use crate::coloring::{Color, ColoringError, OrientedEdge, PartialEdgeColoring, TotalColoring};
use crate::graph::{EdgeId, Graph, GraphError, PairScope, PairSet, VertexId};
use crate::reductions::{reduce_p2_to_p1, reduce_p3_to_p2, reduce_sat_to_p3, ReducedInstance, ReductionError, Role, Source, Stage};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Cnf(#[from] CnfError),
    #[error(transparent)]
    Reduction(#[from] ReductionError),
    #[error("{0}")]
    Invalid(String),
}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        FormatError::Json(e.to_string())
    }
}

fn invalid<T>(msg: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError::Invalid(msg.into()))
}

/// Map key of an edge.
pub fn edge_key(a: &str, b: &str) -> String {
    if a <= b {
        format!("{a}|{b}")
    } else {
        format!("{b}|{a}")
    }
}

fn sorted_pair(a: &str, b: &str) -> [String; 2] {
    if a <= b {
        [a.to_string(), b.to_string()]
    } else {
        [b.to_string(), a.to_string()]
    }
}

fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> Self {
        Self {
            vertices: g.labels().to_vec(),
            edges: g
                .edge_ids()
                .map(|e| {
                    let (a, b) = g.edge_labels(e);
                    sorted_pair(a, b)
                })
                .collect(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph, FormatError> {
        Ok(Graph::from_labels(
            self.vertices.iter().cloned(),
            self.edges.iter().map(|[a, b]| (a, b)),
        )?)
    }
}

pub fn write_graph(g: &Graph) -> String {
    to_pretty(&GraphJson::from_graph(g))
}

pub fn read_graph(text: &str) -> Result<Graph, FormatError> {
    serde_json::from_str::<GraphJson>(text)?.to_graph()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColoringJson {
    pub palette: usize,
    pub vertex_colors: BTreeMap<String, Color>,
    pub edge_colors: BTreeMap<String, Color>,
}

impl ColoringJson {
    pub fn from_coloring(g: &Graph, c: &TotalColoring) -> Self {
        Self {
            palette: c.palette(),
            vertex_colors: g.vertices().map(|v| (g.label(v).to_string(), c.vertex(v))).collect(),
            edge_colors: g
                .edge_ids()
                .map(|e| {
                    let (a, b) = g.edge_labels(e);
                    (edge_key(a, b), c.edge(e))
                })
                .collect(),
        }
    }

    /// Every vertex and edge of `g` must be colored, and nothing else.
    pub fn to_coloring(&self, g: &Graph) -> Result<TotalColoring, FormatError> {
        if self.vertex_colors.len() != g.vertex_count() {
            return invalid(format!(
                "coloring lists {} vertices, graph has {}",
                self.vertex_colors.len(),
                g.vertex_count()
            ));
        }
        if self.edge_colors.len() != g.edge_count() {
            return invalid(format!(
                "coloring lists {} edges, graph has {}",
                self.edge_colors.len(),
                g.edge_count()
            ));
        }
        let mut vc = vec![0; g.vertex_count()];
        for (label, &col) in &self.vertex_colors {
            vc[g.vertex_or_err(label)?.0] = col;
        }
        let mut ec = vec![0; g.edge_count()];
        for (key, &col) in &self.edge_colors {
            let e = edge_from_key(g, key)?;
            ec[e.0] = col;
        }
        Ok(TotalColoring::new(self.palette, vc, ec)?)
    }
}

fn edge_from_key(g: &Graph, key: &str) -> Result<EdgeId, FormatError> {
    let Some((a, b)) = key.split_once('|') else {
        return invalid(format!("edge key `{key}` is not of the form `a|b`"));
    };
    let (u, v) = (g.vertex_or_err(a)?, g.vertex_or_err(b)?);
    g.edge_between(u, v)
        .ok_or_else(|| GraphError::NotAdjacent(a.to_string(), b.to_string()).into())
}

pub fn write_coloring(g: &Graph, c: &TotalColoring) -> String {
    to_pretty(&ColoringJson::from_coloring(g, c))
}

pub fn read_coloring(g: &Graph, text: &str) -> Result<TotalColoring, FormatError> {
    serde_json::from_str::<ColoringJson>(text)?.to_coloring(g)
}

pub fn pairs_to_json(g: &Graph, p: &PairSet) -> Vec<[String; 2]> {
    p.to_labels(g).into_iter().map(|(a, b)| [a, b]).collect()
}

pub fn pairs_from_json(g: &Graph, pairs: &[[String; 2]]) -> Result<PairSet, FormatError> {
    Ok(PairSet::from_labels(g, pairs.iter().map(|[a, b]| (a, b)))?)
}

pub fn write_pairs(g: &Graph, p: &PairSet) -> String {
    to_pretty(&pairs_to_json(g, p))
}

pub fn read_pairs(g: &Graph, text: &str) -> Result<PairSet, FormatError> {
    pairs_from_json(g, &serde_json::from_str::<Vec<[String; 2]>>(text)?)
}

/// `E1`/`E2` list edges as `[e¹, e²]`; `endpoint_order` repeats the
/// orientation keyed by edge and wins when both are given.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PartialJson {
    #[serde(rename = "E1")]
    pub e1: Vec<[String; 2]>,
    #[serde(rename = "E2")]
    pub e2: Vec<[String; 2]>,
    #[serde(default)]
    pub endpoint_order: BTreeMap<String, [String; 2]>,
}

impl PartialJson {
    pub fn from_partial(g: &Graph, p: &PartialEdgeColoring) -> Self {
        let names = |oe: &OrientedEdge| [g.label(oe.first).to_string(), g.label(oe.second).to_string()];
        Self {
            e1: p.class1.iter().map(names).collect(),
            e2: p.class2.iter().map(names).collect(),
            endpoint_order: p
                .iter()
                .map(|(_, oe)| {
                    let n = names(&oe);
                    (edge_key(&n[0], &n[1]), n)
                })
                .collect(),
        }
    }

    pub fn to_partial(&self, g: &Graph) -> Result<PartialEdgeColoring, FormatError> {
        let orient = |[a, b]: &[String; 2]| -> Result<OrientedEdge, FormatError> {
            let [a, b] = match self.endpoint_order.get(&edge_key(a, b)) {
                Some([x, y]) if edge_key(x, y) == edge_key(a, b) => [x, y],
                Some(_) => return invalid(format!("endpoint order for {a}|{b} names another edge")),
                None => [a, b],
            };
            Ok(OrientedEdge::new(g.vertex_or_err(a)?, g.vertex_or_err(b)?))
        };
        let p = PartialEdgeColoring::new(
            self.e1.iter().map(orient).collect::<Result<_, _>>()?,
            self.e2.iter().map(orient).collect::<Result<_, _>>()?,
        );
        p.resolve(g)?;
        if self.endpoint_order.len() > p.len() {
            return invalid("endpoint order lists edges outside E1 and E2");
        }
        Ok(p)
    }
}

pub fn write_partial(g: &Graph, p: &PartialEdgeColoring) -> String {
    to_pretty(&PartialJson::from_partial(g, p))
}

pub fn read_partial(g: &Graph, text: &str) -> Result<PartialEdgeColoring, FormatError> {
    serde_json::from_str::<PartialJson>(text)?.to_partial(g)
}

/// Pair field of a bundle: a list, or `"all"` for Problem 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PairsJson {
    All(AllMarker),
    List(Vec<[String; 2]>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AllMarker {
    All,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum SourceJson {
    Formula { dimacs: String },
    Instance { bundle: Box<BundleJson> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BundleJson {
    pub stage: Stage,
    pub k: usize,
    pub graph: GraphJson,
    pub pairs: PairsJson,
    pub partial: Option<PartialJson>,
    pub roles: BTreeMap<String, Role>,
    pub provenance: BTreeMap<String, String>,
    pub source: Option<SourceJson>,
}

impl BundleJson {
    pub fn from_instance(inst: &ReducedInstance) -> Self {
        let g = &inst.graph;
        Self {
            stage: inst.stage,
            k: inst.k,
            graph: GraphJson::from_graph(g),
            pairs: match &inst.pairs {
                PairScope::All => PairsJson::All(AllMarker::All),
                PairScope::Subset(p) => PairsJson::List(pairs_to_json(g, p)),
            },
            partial: inst.partial.as_ref().map(|p| PartialJson::from_partial(g, p)),
            roles: g
                .vertices()
                .map(|v| (g.label(v).to_string(), inst.role(v).clone()))
                .collect(),
            provenance: g
                .vertices()
                .map(|v| (g.label(v).to_string(), g.label(inst.origin(v)).to_string()))
                .collect(),
            source: match &inst.source {
                Source::Given => None,
                Source::Formula(f) => Some(SourceJson::Formula { dimacs: f.to_dimacs() }),
                Source::Instance(src) => Some(SourceJson::Instance {
                    bundle: Box::new(BundleJson::from_instance(src)),
                }),
            },
        }
    }

    /// Rebuilds the instance. A bundle that records its source must match
    /// what the reduction produces from that source.
    pub fn to_instance(&self) -> Result<ReducedInstance, FormatError> {
        let graph = self.graph.to_graph()?;
        let n = graph.vertex_count();
        if self.roles.len() != n || self.provenance.len() != n {
            return invalid("roles and provenance must list every vertex exactly once");
        }
        let mut roles = vec![Role::Original; n];
        for (label, role) in &self.roles {
            roles[graph.vertex_or_err(label)?.0] = role.clone();
        }
        let mut provenance = vec![VertexId(0); n];
        for (label, anchor) in &self.provenance {
            provenance[graph.vertex_or_err(label)?.0] = graph.vertex_or_err(anchor)?;
        }
        let pairs = match (&self.pairs, self.stage) {
            (PairsJson::All(_), Stage::P1) => PairScope::All,
            (PairsJson::List(list), Stage::P2 | Stage::P3) => {
                let p = pairs_from_json(&graph, list)?;
                p.ensure_nonadjacent(&graph)?;
                PairScope::Subset(p)
            }
            (_, stage) => return invalid(format!("pair field does not fit a {stage} instance")),
        };
        let partial = match (&self.partial, self.stage) {
            (Some(p), Stage::P3) => Some(p.to_partial(&graph)?),
            (None, Stage::P2 | Stage::P1) => None,
            (_, stage) => return invalid(format!("partial coloring does not fit a {stage} instance")),
        };
        if self.k == 0 {
            return invalid("k must be at least 1");
        }
        let source = match &self.source {
            None => Source::Given,
            Some(SourceJson::Formula { dimacs }) => Source::Formula(parse_dimacs(dimacs)?),
            Some(SourceJson::Instance { bundle }) => Source::Instance(Box::new(bundle.to_instance()?)),
        };
        let inst = ReducedInstance {
            stage: self.stage,
            k: self.k,
            graph,
            pairs,
            partial,
            roles,
            provenance,
            source,
        };
        let expected = match (&inst.source, inst.stage) {
            (Source::Given, _) => {
                if inst.roles.iter().any(|r| *r != Role::Original)
                    || inst.provenance.iter().enumerate().any(|(i, a)| a.0 != i)
                {
                    return invalid("a given instance must have original roles and trivial provenance");
                }
                None
            }
            (Source::Formula(f), Stage::P3) => Some(reduce_sat_to_p3(f, inst.k)?),
            (Source::Instance(src), Stage::P2) => Some(reduce_p3_to_p2(src)?),
            (Source::Instance(src), Stage::P1) => Some(reduce_p2_to_p1(src)?),
            (_, stage) => return invalid(format!("source kind does not fit a {stage} instance")),
        };
        if let Some(expected) = expected {
            if expected != inst {
                return invalid("bundle does not match the reduction of its source");
            }
        }
        Ok(inst)
    }
}

pub fn write_bundle(inst: &ReducedInstance) -> String {
    to_pretty(&BundleJson::from_instance(inst))
}

pub fn read_bundle(text: &str) -> Result<ReducedInstance, FormatError> {
    serde_json::from_str::<BundleJson>(text)?.to_instance()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cnf::CnfFormula;
    use crate::reductions::reduce_sat_to_trc3;

    fn path3() -> Graph {
        Graph::from_labels(["a", "b", "c"], [("b", "a"), ("b", "c")]).unwrap()
    }

    #[test]
    fn graph_round_trip() {
        let g = path3();
        let text = write_graph(&g);
        assert_eq!(read_graph(&text).unwrap(), g);
        assert_eq!(write_graph(&read_graph(&text).unwrap()), text);
    }

    #[test]
    fn coloring_round_trip_and_checks() {
        let g = path3();
        let c = TotalColoring::new(3, vec![0, 2, 0], vec![0, 1]).unwrap();
        let text = write_coloring(&g, &c);
        assert!(text.contains("\"a|b\": 0"));
        assert_eq!(read_coloring(&g, &text).unwrap(), c);
        let missing = r#"{"palette":3,"vertex_colors":{"a":0,"b":0},"edge_colors":{"a|b":0,"b|c":1}}"#;
        assert!(read_coloring(&g, missing).is_err());
        let wrong_edge = r#"{"palette":3,"vertex_colors":{"a":0,"b":0,"c":0},"edge_colors":{"a|c":0,"b|c":1}}"#;
        assert!(read_coloring(&g, wrong_edge).is_err());
    }

    #[test]
    fn partial_keeps_orientation() {
        let g = path3();
        let (a, b, c) = (VertexId(0), VertexId(1), VertexId(2));
        let p = PartialEdgeColoring::new(vec![OrientedEdge::new(b, a)], vec![OrientedEdge::new(c, b)]);
        let text = write_partial(&g, &p);
        assert_eq!(read_partial(&g, &text).unwrap(), p);
    }

    #[test]
    fn bundles_round_trip_through_the_chain() {
        let phi = CnfFormula::from_ints(2, &[[1, -2, 1]]).unwrap();
        let p1 = reduce_sat_to_trc3(&phi, 1).unwrap();
        let text = write_bundle(&p1);
        assert_eq!(read_bundle(&text).unwrap(), p1);
        let p3 = p1.source_instance().unwrap().source_instance().unwrap();
        assert_eq!(read_bundle(&write_bundle(p3)).unwrap(), *p3);
    }

    #[test]
    fn tampered_bundle_rejected() {
        let phi = CnfFormula::from_ints(2, &[[1, -2, 1]]).unwrap();
        let p3 = reduce_sat_to_p3(&phi, 1).unwrap();
        let mut json = BundleJson::from_instance(&p3);
        json.k = 2;
        assert!(json.to_instance().is_err());
    }
}
