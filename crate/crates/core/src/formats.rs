//! Text and JSON encodings: the edge list format, the graph JSON schema,
//! and chronology and script JSON.
//!
//! Edge list format: a header line `n m` followed by m lines `u v` with
//! 0-indexed endpoints. Blank lines are ignored. Graph JSON carries the
//! same data plus optional role labels and an optional name to index map.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::engine::{Chronology, Force};
use crate::graph::{Graph, GraphError, Role, Vertex, VertexSet};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {reason}")]
    Syntax { line: usize, reason: String },
    #[error("expected {expected} edge lines, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("{expected} vertices but {found} labels")]
    LabelCount { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
}

fn syntax(line: usize, reason: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        reason: reason.into(),
    }
}

/// Parses the edge list text format.
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (header_no, header) = lines
        .next()
        .ok_or_else(|| syntax(1, "empty input, expected header `n m`"))?;
    let mut parts = header.split_whitespace();
    let n = parse_number(&mut parts, header_no, "vertex count")?;
    let m = parse_number(&mut parts, header_no, "edge count")?;
    if parts.next().is_some() {
        return Err(syntax(header_no, "trailing tokens after `n m` header"));
    }
    let mut edges = Vec::with_capacity(m);
    for (line_no, line) in lines {
        if edges.len() == m {
            return Err(FormatError::EdgeCount {
                expected: m,
                found: m + 1,
            });
        }
        let mut parts = line.split_whitespace();
        let u = parse_number(&mut parts, line_no, "edge endpoint")?;
        let v = parse_number(&mut parts, line_no, "edge endpoint")?;
        if parts.next().is_some() {
            return Err(syntax(line_no, "trailing tokens after edge `u v`"));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(FormatError::EdgeCount {
            expected: m,
            found: edges.len(),
        });
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

fn parse_number(
    parts: &mut std::str::SplitWhitespace<'_>,
    line: usize,
    what: &str,
) -> Result<usize, FormatError> {
    let token = parts
        .next()
        .ok_or_else(|| syntax(line, format!("missing {what}")))?;
    token.parse().map_err(|_| {
        syntax(
            line,
            format!("{what} `{token}` is not a non-negative integer"),
        )
    })
}

/// Writes the edge list text format, edges sorted.
pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// JSON shape of a graph: vertex count, edges, optional role labels and
/// name to index map.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<(Vertex, Vertex)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<Role>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub index_map: Option<BTreeMap<String, Vertex>>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges(),
            labels: g.labels().map(<[Role]>::to_vec),
            index_map: None,
        }
    }

    pub fn with_index_map(mut self, map: BTreeMap<String, Vertex>) -> Self {
        self.index_map = Some(map);
        self
    }

    pub fn to_graph(&self) -> Result<Graph, FormatError> {
        let g = Graph::from_edge_list(self.n, &self.edges)?;
        match &self.labels {
            Some(labels) if labels.len() != self.n => Err(FormatError::LabelCount {
                expected: self.n,
                found: labels.len(),
            }),
            Some(labels) => Ok(g.with_labels(labels.clone())),
            None => Ok(g),
        }
    }
}

/// Reads a graph from either format, deciding by the leading character:
/// `{` means JSON, anything else the edge list format.
pub fn read_graph_auto(text: &str) -> Result<Graph, FormatError> {
    if text.trim_start().starts_with('{') {
        let json: GraphJson = serde_json::from_str(text)?;
        json.to_graph()
    } else {
        parse_edge_list(text)
    }
}

/// JSON shape of a chronology: the initial set and the forces per step.
/// Expansions are derived data and stay out of the encoding; replaying the
/// steps through the relaxed runner reconstructs and revalidates them.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ChronologyJson {
    pub initial: Vec<Vertex>,
    pub steps: Vec<Vec<Force>>,
}

impl From<&Chronology> for ChronologyJson {
    fn from(c: &Chronology) -> Self {
        ChronologyJson {
            initial: c.initial().to_vec(),
            steps: c.steps().to_vec(),
        }
    }
}

/// Script input for replay: steps, plus optionally the initial set when the
/// file is a full chronology.
#[derive(Clone, Debug, Deserialize)]
pub struct ScriptJson {
    #[serde(default)]
    pub initial: Option<Vec<Vertex>>,
    pub steps: Vec<Vec<Force>>,
}

pub fn parse_script(text: &str) -> Result<ScriptJson, FormatError> {
    Ok(serde_json::from_str(text)?)
}

/// Builds a vertex set from explicit indices, rejecting out of range ones.
pub fn vertex_set_from_list(n: usize, list: &[Vertex]) -> Result<VertexSet, GraphError> {
    let mut s = VertexSet::empty(n);
    for &v in list {
        if v >= n {
            return Err(GraphError::InvalidVertex { v, n });
        }
        s.insert(v);
    }
    Ok(s)
}

/// Parses a comma separated vertex list such as `0,3,5`.
pub fn parse_vertex_list(text: &str) -> Result<Vec<Vertex>, FormatError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse()
                .map_err(|_| syntax(1, format!("vertex `{tok}` is not a non-negative integer")))
        })
        .collect()
}
