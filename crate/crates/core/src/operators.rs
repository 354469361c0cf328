//! Graph operators: subdivision `S`, line graph `L` and line cut-vertex
//! graph `L_c`, plus left-to-right composition of them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, VertexLabel};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OperatorId {
    Subdivision,
    LineGraph,
    LineCutVertex,
}

impl OperatorId {
    pub const ALL: [OperatorId; 3] = [
        OperatorId::Subdivision,
        OperatorId::LineGraph,
        OperatorId::LineCutVertex,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OperatorId::Subdivision => "subdivision",
            OperatorId::LineGraph => "line",
            OperatorId::LineCutVertex => "line-cut",
        }
    }

    pub fn apply(self, g: &Graph) -> Result<Graph> {
        match self {
            OperatorId::Subdivision => subdivision(g),
            OperatorId::LineGraph => Ok(line_graph(g)),
            OperatorId::LineCutVertex => Ok(line_cut_vertex_graph(g)),
        }
    }
}

impl fmt::Display for OperatorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OperatorId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "subdivision" | "s" => Ok(OperatorId::Subdivision),
            "line" | "l" => Ok(OperatorId::LineGraph),
            "line-cut" | "line-cut-vertex" | "lc" => Ok(OperatorId::LineCutVertex),
            other => Err(Error::InvalidParameter(format!(
                "unknown operator `{other}` (expected subdivision, line or line-cut)"
            ))),
        }
    }
}

/// Replaces every edge `{u, v}` by the path `u - s(u,v) - v`.
///
/// Fails only if `g` already holds a vertex whose label equals one of the
/// subdivision labels to be created.
pub fn subdivision(g: &Graph) -> Result<Graph> {
    let mut b = GraphBuilder::new();
    for v in g.vertices() {
        b.add_vertex(v.clone());
    }
    for (u, v) in g.edges() {
        let s = VertexLabel::subdivision_of(u, v);
        if g.contains(&s) {
            return Err(Error::InvalidParameter(format!(
                "subdivision label `{s}` collides with an existing vertex"
            )));
        }
        b.add_edge(u.clone(), s.clone())?;
        b.add_edge(s, v.clone())?;
    }
    Ok(b.build())
}

fn line_graph_builder(g: &Graph) -> GraphBuilder {
    let mut b = GraphBuilder::new();
    for (u, v) in g.edges() {
        b.add_vertex(VertexLabel::edge_vertex(u, v));
    }
    for (i, nbrs) in g.adjacency_lists().iter().enumerate() {
        let center = &g.vertices()[i];
        let incident: Vec<VertexLabel> = nbrs
            .iter()
            .map(|&j| VertexLabel::edge_vertex(center, &g.vertices()[j]))
            .collect();
        for (x, e) in incident.iter().enumerate() {
            for f in &incident[x + 1..] {
                // Two distinct edges of a simple graph share at most one
                // endpoint, so each pair is visited exactly once.
                b.add_edge(e.clone(), f.clone())
                    .expect("incident edge pairs are distinct");
            }
        }
    }
    b
}

/// Line graph: one vertex per edge, adjacent when the edges share an endpoint.
pub fn line_graph(g: &Graph) -> Graph {
    line_graph_builder(g).build()
}

/// Line cut-vertex graph: the line graph plus a `cut(c)` vertex for every
/// articulation point `c`, joined to the edge-vertices of the edges at `c`.
pub fn line_cut_vertex_graph(g: &Graph) -> Graph {
    let mut b = line_graph_builder(g);
    for c in g.articulation_points() {
        let copy = VertexLabel::cut_copy(&c);
        let nbrs = g.neighbors(&c).expect("articulation point belongs to g");
        for w in nbrs {
            b.add_edge(copy.clone(), VertexLabel::edge_vertex(&c, w))
                .expect("cut copies are fresh vertices");
        }
    }
    b.build()
}

/// Applies `ops` left to right; an empty sequence returns a copy of `g`.
pub fn apply_pipeline(g: &Graph, ops: &[OperatorId]) -> Result<Graph> {
    ops.iter().try_fold(g.clone(), |acc, op| op.apply(&acc))
}

/// Parses a comma-separated operator list such as `subdivision,line`.
pub fn parse_pipeline(spec: &str) -> Result<Vec<OperatorId>> {
    if spec.trim().is_empty() {
        return Ok(Vec::new());
    }
    spec.split(',').map(str::parse).collect()
}
