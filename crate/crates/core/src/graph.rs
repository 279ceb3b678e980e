//! Dense graph representation over a fixed vertex universe `0..n`, with a
//! packed bitset for vertex sets and optional role labels for generated
//! families.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Vertex = usize;

const BLOCK_BITS: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    InvalidEdge { u: Vertex, v: Vertex, n: usize },
    #[error("self loop at vertex {v}")]
    SelfLoop { v: Vertex },
    #[error("vertex {v} outside 0..{n}")]
    InvalidVertex { v: Vertex, n: usize },
    #[error("operation undefined on the empty graph")]
    EmptyGraph,
    #[error("vertex {v} listed more than once")]
    DuplicateVertex { v: Vertex },
}

/// Set of vertices drawn from a universe `0..n`, packed 64 per block.
///
/// All binary operations require both operands to share the same universe
/// size; mixing sets from different graphs is a programming error and panics.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    blocks: Vec<u64>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            n,
            blocks: vec![0; n.div_ceil(BLOCK_BITS)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = VertexSet {
            n,
            blocks: vec![!0u64; n.div_ceil(BLOCK_BITS)],
        };
        s.trim();
        s
    }

    /// Builds a set from explicit indices. Panics on an out of range index;
    /// validate untrusted input before calling.
    pub fn from_indices<I: IntoIterator<Item = Vertex>>(n: usize, indices: I) -> Self {
        let mut s = VertexSet::empty(n);
        for v in indices {
            s.insert(v);
        }
        s
    }

    /// Clears any bits at positions >= n. Internal invariant: such bits are
    /// never set, which lets Eq and len read blocks directly.
    fn trim(&mut self) {
        let rem = self.n % BLOCK_BITS;
        if rem != 0 {
            if let Some(last) = self.blocks.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn universe_len(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    #[inline]
    pub fn is_full(&self) -> bool {
        self.len() == self.n
    }

    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        debug_assert!(v < self.n);
        self.blocks[v / BLOCK_BITS] >> (v % BLOCK_BITS) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: Vertex) {
        assert!(v < self.n, "vertex {v} outside universe 0..{}", self.n);
        self.blocks[v / BLOCK_BITS] |= 1u64 << (v % BLOCK_BITS);
    }

    #[inline]
    pub fn remove(&mut self, v: Vertex) {
        assert!(v < self.n, "vertex {v} outside universe 0..{}", self.n);
        self.blocks[v / BLOCK_BITS] &= !(1u64 << (v % BLOCK_BITS));
    }

    pub fn clear(&mut self) {
        self.blocks.fill(0);
    }

    fn check_same_universe(&self, other: &VertexSet) {
        assert!(
            self.n == other.n,
            "vertex sets from different universes ({} vs {})",
            self.n,
            other.n
        );
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.check_same_universe(other);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.check_same_universe(other);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a &= b;
        }
    }

    pub fn subtract(&mut self, other: &VertexSet) {
        self.check_same_universe(other);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a &= !b;
        }
    }

    pub fn complement(&self) -> VertexSet {
        let mut out = self.clone();
        for b in &mut out.blocks {
            *b = !*b;
        }
        out.trim();
        out
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.check_same_universe(other);
        self.blocks
            .iter()
            .zip(&other.blocks)
            .all(|(a, b)| a & !b == 0)
    }

    /// Returns `Some(v)` exactly when `self \ other` is the singleton `{v}`,
    /// and `None` when the difference is empty or has two or more members.
    /// This is the color change rule test: with `self` the neighborhood of a
    /// blue vertex and `other` the blue set, `Some(v)` means the vertex
    /// forces `v`.
    #[inline]
    pub fn unique_difference(&self, other: &VertexSet) -> Option<Vertex> {
        debug_assert_eq!(self.n, other.n);
        let mut found = None;
        for (i, (a, b)) in self.blocks.iter().zip(&other.blocks).enumerate() {
            let w = a & !b;
            if w == 0 {
                continue;
            }
            if found.is_some() || w & (w - 1) != 0 {
                return None;
            }
            found = Some(i * BLOCK_BITS + w.trailing_zeros() as usize);
        }
        found
    }

    pub fn iter(&self) -> Members<'_> {
        Members {
            blocks: &self.blocks,
            block_index: 0,
            current: self.blocks.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Iterator over set members in increasing order.
pub struct Members<'a> {
    blocks: &'a [u64],
    block_index: usize,
    current: u64,
}

impl Iterator for Members<'_> {
    type Item = Vertex;

    fn next(&mut self) -> Option<Vertex> {
        while self.current == 0 {
            self.block_index += 1;
            if self.block_index >= self.blocks.len() {
                return None;
            }
            self.current = self.blocks[self.block_index];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.block_index * BLOCK_BITS + bit)
    }
}

/// Role a vertex plays inside a generated family. Hand-built graphs carry no
/// labels and report every vertex as `Plain`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Center,
    Spoke,
    Intermediate,
    Pendant,
    Plain,
}

/// Simple undirected graph on the vertex set `0..n`, stored as one adjacency
/// bitset per vertex.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adjacency: Vec<VertexSet>,
    labels: Option<Vec<Role>>,
}

impl Graph {
    /// Builds a graph from an explicit edge list. Duplicate edges collapse;
    /// self loops and out of range endpoints are rejected.
    pub fn from_edge_list(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph, GraphError> {
        let mut adjacency = vec![VertexSet::empty(n); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::InvalidEdge { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v });
            }
            adjacency[u].insert(v);
            adjacency[v].insert(u);
        }
        Ok(Graph {
            n,
            adjacency,
            labels: None,
        })
    }

    /// Attaches role labels; used by the generators. The label vector length
    /// must equal the vertex count.
    pub fn with_labels(mut self, labels: Vec<Role>) -> Graph {
        assert_eq!(labels.len(), self.n, "one label per vertex");
        self.labels = Some(labels);
        self
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    /// Neighborhood of `v`. Panics when `v` is out of range; use
    /// [`Graph::degree`] for checked access.
    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &VertexSet {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> Result<usize, GraphError> {
        if v >= self.n {
            return Err(GraphError::InvalidVertex { v, n: self.n });
        }
        Ok(self.adjacency[v].len())
    }

    pub fn min_degree(&self) -> Result<usize, GraphError> {
        if self.n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        Ok(self
            .adjacency
            .iter()
            .map(VertexSet::len)
            .min()
            .expect("nonempty"))
    }

    pub fn edge_count(&self) -> usize {
        let endpoint_sum: usize = self.adjacency.iter().map(VertexSet::len).sum();
        endpoint_sum / 2
    }

    /// Edges as `(u, v)` pairs with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adjacency[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.adjacency[u].contains(v)
    }

    /// Tests whether `order` lists the vertices of an induced path in the
    /// given traversal order: consecutive entries adjacent, all other pairs
    /// non-adjacent. Singleton and empty sequences pass trivially.
    pub fn is_induced_path(&self, order: &[Vertex]) -> Result<bool, GraphError> {
        let mut seen = VertexSet::empty(self.n);
        for &v in order {
            if v >= self.n {
                return Err(GraphError::InvalidVertex { v, n: self.n });
            }
            if seen.contains(v) {
                return Err(GraphError::DuplicateVertex { v });
            }
            seen.insert(v);
        }
        for (i, &v) in order.iter().enumerate() {
            for (j, &w) in order.iter().enumerate().skip(i + 1) {
                let adjacent = self.adjacency[v].contains(w);
                let consecutive = j == i + 1;
                if adjacent != consecutive {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn labels(&self) -> Option<&[Role]> {
        self.labels.as_deref()
    }

    /// Role of `v`, `Plain` when the graph carries no labels.
    pub fn role(&self, v: Vertex) -> Role {
        assert!(v < self.n);
        match &self.labels {
            Some(l) => l[v],
            None => Role::Plain,
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edge_count())
    }
}
