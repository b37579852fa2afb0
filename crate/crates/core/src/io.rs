//! Graph input and output: the JSON object form, plain edge lists and DOT.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, FiniteGraph, Vertex};

#[derive(Debug, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<[Vertex; 2]>,
}

impl From<&FiniteGraph> for GraphJson {
    fn from(g: &FiniteGraph) -> Self {
        GraphJson {
            vertices: g.vertices().to_vec(),
            edges: g.edges().map(Into::into).collect(),
        }
    }
}

impl TryFrom<GraphJson> for FiniteGraph {
    type Error = Error;

    fn try_from(j: GraphJson) -> Result<Self> {
        FiniteGraph::new(j.vertices, j.edges.into_iter().map(|[a, b]| (a, b)))
    }
}

/// Parses either format: text whose first non-blank character is `{` is
/// JSON, anything else is an edge list.
pub fn parse_graph(text: &str) -> Result<FiniteGraph> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_edge_list(text)
    }
}

pub fn parse_json(text: &str) -> Result<FiniteGraph> {
    let j: GraphJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    FiniteGraph::try_from(j)
}

/// One `u v` pair per line. A line holding a single id declares an isolated
/// vertex; blank lines and lines starting with `#` are skipped.
pub fn parse_edge_list(text: &str) -> Result<FiniteGraph> {
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let ids = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<Vertex>()
                    .map_err(|_| Error::Parse(format!("line {}: `{tok}` is not a vertex id", lineno + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        match ids.as_slice() {
            [v] => vertices.push(*v),
            [a, b] => {
                vertices.extend([*a, *b]);
                edges.push((*a, *b));
            }
            _ => return Err(Error::Parse(format!("line {}: expected `u v`", lineno + 1))),
        }
    }
    FiniteGraph::new(vertices, edges)
}

pub fn to_json(g: &FiniteGraph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("graph JSON is always serialisable")
}

pub fn to_edge_list(g: &FiniteGraph) -> String {
    let mut out = String::new();
    for &v in g.vertices() {
        if g.degree(v) == 0 {
            let _ = writeln!(out, "{v}");
        }
    }
    for e in g.edges() {
        let (a, b) = e.ends();
        let _ = writeln!(out, "{a} {b}");
    }
    out
}

pub fn to_dot(g: &FiniteGraph, name: &str) -> String {
    to_dot_styled(g, name, |v| v.to_string(), &EdgeSet::new(), &EdgeSet::new())
}

/// DOT output where `bold` edges are drawn solid and heavy, `dashed` edges
/// dashed, and every other edge light grey. Vertices are named by `label`.
pub fn to_dot_styled(
    g: &FiniteGraph,
    name: &str,
    label: impl Fn(Vertex) -> String,
    bold: &EdgeSet,
    dashed: &EdgeSet,
) -> String {
    let styled = !bold.is_empty() || !dashed.is_empty();
    let mut out = format!("graph \"{name}\" {{\n");
    for &v in g.vertices() {
        let _ = writeln!(out, "  {v} [label=\"{}\"];", label(v));
    }
    for e in g.edges() {
        let (a, b) = e.ends();
        let attr = if bold.contains(&e) {
            " [style=bold, penwidth=2]"
        } else if dashed.contains(&e) {
            " [style=dashed]"
        } else if styled {
            " [color=gray80]"
        } else {
            ""
        };
        let _ = writeln!(out, "  {a} -- {b}{attr};");
    }
    out.push_str("}\n");
    out
}
