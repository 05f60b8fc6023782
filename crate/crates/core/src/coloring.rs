//! Total colorings, coloring modes and partial 2-edge-colorings.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{EdgeId, Element, Graph, GraphError, VertexId};

/// A color id. Palettes are `0..t`.
pub type Color = u8;

/// Largest supported palette; color sets are tracked as `u64` masks.
pub const MAX_PALETTE: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("palette size {0} is outside 1..={MAX_PALETTE}")]
    Palette(usize),
    #[error("color {color} on `{element}` is outside the palette of {palette}")]
    OutOfPalette {
        element: String,
        color: usize,
        palette: usize,
    },
    #[error("coloring covers {got} elements, graph has {expected}")]
    SizeMismatch { got: usize, expected: usize },
    #[error("edge `{0}`–`{1}` appears twice in the partial coloring")]
    DuplicatePartialEdge(String, String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Which elements a rainbow path must keep distinct.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ColoringMode {
    /// Edge colors only (rainbow connection, rc).
    Edge,
    /// Internal-vertex colors only (rainbow vertex connection, rvc).
    Vertex,
    /// Edges and internal vertices together (total rainbow connection, trc).
    Total,
}

impl fmt::Display for ColoringMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ColoringMode::Edge => "edge",
            ColoringMode::Vertex => "vertex",
            ColoringMode::Total => "total",
        })
    }
}

impl FromStr for ColoringMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "edge" => Ok(ColoringMode::Edge),
            "vertex" => Ok(ColoringMode::Vertex),
            "total" => Ok(ColoringMode::Total),
            other => Err(format!("unknown mode `{other}`")),
        }
    }
}

/// A color for every vertex and every edge of a host graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TotalColoring {
    palette: usize,
    vertex: Vec<Color>,
    edge: Vec<Color>,
}

impl TotalColoring {
    pub fn new(palette: usize, vertex: Vec<Color>, edge: Vec<Color>) -> Result<Self, ColoringError> {
        check_palette(palette)?;
        for (i, &c) in vertex.iter().enumerate() {
            if c as usize >= palette {
                return Err(ColoringError::OutOfPalette {
                    element: format!("vertex #{i}"),
                    color: c as usize,
                    palette,
                });
            }
        }
        for (i, &c) in edge.iter().enumerate() {
            if c as usize >= palette {
                return Err(ColoringError::OutOfPalette {
                    element: format!("edge #{i}"),
                    color: c as usize,
                    palette,
                });
            }
        }
        Ok(Self {
            palette,
            vertex,
            edge,
        })
    }

    /// Every element colored `color`.
    pub fn uniform(g: &Graph, palette: usize, color: Color) -> Result<Self, ColoringError> {
        Self::new(
            palette,
            vec![color; g.vertex_count()],
            vec![color; g.edge_count()],
        )
    }

    /// Builds a coloring from a function over elements.
    pub fn from_fn(
        g: &Graph,
        palette: usize,
        mut f: impl FnMut(Element) -> Color,
    ) -> Result<Self, ColoringError> {
        let vertex = g.vertices().map(|v| f(Element::Vertex(v))).collect();
        let edge = g.edge_ids().map(|e| f(Element::Edge(e))).collect();
        Self::new(palette, vertex, edge)
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn vertex(&self, v: VertexId) -> Color {
        self.vertex[v.0]
    }

    pub fn edge(&self, e: EdgeId) -> Color {
        self.edge[e.0]
    }

    pub fn get(&self, el: Element) -> Color {
        match el {
            Element::Vertex(v) => self.vertex(v),
            Element::Edge(e) => self.edge(e),
        }
    }

    pub fn vertex_colors(&self) -> &[Color] {
        &self.vertex
    }

    pub fn edge_colors(&self) -> &[Color] {
        &self.edge
    }

    /// Sets one element; panics if the color is outside the palette.
    pub fn set(&mut self, el: Element, color: Color) {
        assert!((color as usize) < self.palette, "color outside palette");
        match el {
            Element::Vertex(v) => self.vertex[v.0] = color,
            Element::Edge(e) => self.edge[e.0] = color,
        }
    }

    /// Checks that this coloring covers exactly the elements of `g`.
    pub fn check_fits(&self, g: &Graph) -> Result<(), ColoringError> {
        let got = self.vertex.len() + self.edge.len();
        if self.vertex.len() != g.vertex_count() || self.edge.len() != g.edge_count() {
            return Err(ColoringError::SizeMismatch {
                got,
                expected: g.element_count(),
            });
        }
        Ok(())
    }

    /// Applies `perm` (a permutation of `0..palette`) to every color.
    pub fn permuted(&self, perm: &[Color]) -> Self {
        assert_eq!(perm.len(), self.palette, "permutation must cover the palette");
        Self {
            palette: self.palette,
            vertex: self.vertex.iter().map(|&c| perm[c as usize]).collect(),
            edge: self.edge.iter().map(|&c| perm[c as usize]).collect(),
        }
    }

    /// The restriction to the first `vertices` vertices and `edges` edges.
    /// Reductions lay out the source graph as such a prefix.
    pub fn prefix(&self, vertices: usize, edges: usize) -> Self {
        Self {
            palette: self.palette,
            vertex: self.vertex[..vertices].to_vec(),
            edge: self.edge[..edges].to_vec(),
        }
    }
}

pub(crate) fn check_palette(palette: usize) -> Result<(), ColoringError> {
    if palette == 0 || palette > MAX_PALETTE {
        return Err(ColoringError::Palette(palette));
    }
    Ok(())
}

/// An edge with its endpoints in a chosen order `(e¹, e²)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrientedEdge {
    pub first: VertexId,
    pub second: VertexId,
}

impl OrientedEdge {
    pub fn new(first: VertexId, second: VertexId) -> Self {
        Self { first, second }
    }

    /// `e^j` for `j ∈ {1, 2}`.
    pub fn end(&self, j: usize) -> VertexId {
        match j {
            1 => self.first,
            2 => self.second,
            _ => panic!("edge ends are numbered 1 and 2"),
        }
    }
}

/// A partial 2-edge-coloring given as an ordered partition `(Ê₁, Ê₂)`.
///
/// Class one is frozen to color 0 and class two to color 1 by the solver;
/// verification accepts either assignment of the two colors.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PartialEdgeColoring {
    pub class1: Vec<OrientedEdge>,
    pub class2: Vec<OrientedEdge>,
}

impl PartialEdgeColoring {
    pub fn new(class1: Vec<OrientedEdge>, class2: Vec<OrientedEdge>) -> Self {
        Self { class1, class2 }
    }

    pub fn is_empty(&self) -> bool {
        self.class1.is_empty() && self.class2.is_empty()
    }

    pub fn len(&self) -> usize {
        self.class1.len() + self.class2.len()
    }

    /// `(class, edge)` for every pre-colored edge, class one first.
    pub fn iter(&self) -> impl Iterator<Item = (usize, OrientedEdge)> + '_ {
        self.class1
            .iter()
            .map(|&e| (1, e))
            .chain(self.class2.iter().map(|&e| (2, e)))
    }

    /// Resolves every pre-colored edge in `g`, rejecting missing or repeated
    /// edges. Returns `(class, edge id, orientation)` in [`Self::iter`] order.
    pub fn resolve(&self, g: &Graph) -> Result<Vec<(usize, EdgeId, OrientedEdge)>, ColoringError> {
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::with_capacity(self.len());
        for (class, oe) in self.iter() {
            if !g.contains_vertex(oe.first) || !g.contains_vertex(oe.second) {
                return Err(GraphError::UnknownVertex(format!("{}/{}", oe.first, oe.second)).into());
            }
            let e = g.edge_between(oe.first, oe.second).ok_or_else(|| {
                GraphError::NotAdjacent(
                    g.label(oe.first).to_string(),
                    g.label(oe.second).to_string(),
                )
            })?;
            if !seen.insert(e) {
                let (a, b) = g.edge_labels(e);
                return Err(ColoringError::DuplicatePartialEdge(a.to_string(), b.to_string()));
            }
            out.push((class, e, oe));
        }
        Ok(out)
    }
}
