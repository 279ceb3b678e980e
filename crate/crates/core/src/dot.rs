//! Graphviz DOT export. Blue vertices render filled, chain edges bold, and
//! role labels pick the node shape so generated families are recognizable
//! at a glance.

use std::collections::HashSet;

use crate::engine::ChainSet;
use crate::graph::{Graph, Role, Vertex, VertexSet};

/// Renders `g` as an undirected DOT graph. Vertices in `blue` are drawn
/// filled; edges listed in `chain_edges` (in either orientation) are drawn
/// bold.
pub fn to_dot(g: &Graph, blue: Option<&VertexSet>, chain_edges: &[(Vertex, Vertex)]) -> String {
    let bold: HashSet<(Vertex, Vertex)> = chain_edges
        .iter()
        .map(|&(u, v)| (u.min(v), u.max(v)))
        .collect();
    let mut out = String::from("graph zf {\n  node [shape=circle];\n");
    for v in g.vertices() {
        let mut attrs = Vec::new();
        match g.role(v) {
            Role::Center => attrs.push("shape=doublecircle".to_string()),
            Role::Pendant => attrs.push("shape=square".to_string()),
            _ => {}
        }
        if blue.is_some_and(|b| b.contains(v)) {
            attrs.push("style=filled".to_string());
            attrs.push("fillcolor=\"#8ab8e6\"".to_string());
        }
        if attrs.is_empty() {
            out.push_str(&format!("  {v};\n"));
        } else {
            out.push_str(&format!("  {v} [{}];\n", attrs.join(", ")));
        }
    }
    for (u, v) in g.edges() {
        if bold.contains(&(u, v)) {
            out.push_str(&format!("  {u} -- {v} [penwidth=2.5];\n"));
        } else {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
    }
    out.push_str("}\n");
    out
}

/// Convenience wrapper: blue set plus the bold edges of a chain set.
pub fn to_dot_with_chains(g: &Graph, blue: &VertexSet, chains: &ChainSet) -> String {
    to_dot(g, Some(blue), &chains.chain_edges())
}
