//! Constructors for the graph families the crate studies, with a fixed
//! index layout so search results can be read back as symbolic vertex names.
//!
//! Layouts:
//!
//! * `gear(m, r)`: center at index 0; the outer cycle occupies 1..=m(r+1) in
//!   cyclic order. Spokes sit at indices divisible by r+1, so each pair of
//!   consecutive spokes has r intermediate vertices between them. The center
//!   is adjacent to every spoke, and 1 is adjacent to m(r+1) to close the
//!   cycle. `gear(m, 1)` is the ordinary gear on 2m+1 vertices.
//! * `helm(m, s)`: center 0, spoke cycle 1..=m (1 adjacent to m), and s
//!   pendants per spoke stored row major, pendant j of spoke i at index
//!   m + (i-1)s + j. `helm(m, 1)` is the ordinary helm.
//! * `wheel(n)`: hub 0 plus rim cycle 1..=n.
//! * `path(n)`, `cycle(n)`: plain 0..n layouts, no role labels.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::{Graph, Role, Vertex};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("invalid parameters for {family}: {reason}")]
    InvalidParams {
        family: &'static str,
        reason: String,
    },
}

fn invalid(family: &'static str, reason: impl Into<String>) -> GenError {
    GenError::InvalidParams {
        family,
        reason: reason.into(),
    }
}

/// Generalized gear: a wheel on m spokes with r intermediate cycle vertices
/// inserted between each pair of consecutive spokes. Requires m >= 3, r >= 1.
pub fn gear(m: usize, r: usize) -> Result<Graph, GenError> {
    if m < 3 {
        return Err(invalid("gear", format!("m = {m}, need m >= 3")));
    }
    if r < 1 {
        return Err(invalid("gear", format!("r = {r}, need r >= 1")));
    }
    let cycle_len = m * (r + 1);
    let n = cycle_len + 1;
    let mut edges = Vec::with_capacity(m * (r + 2));
    for c in 1..=cycle_len {
        if c % (r + 1) == 0 {
            edges.push((0, c));
        }
        if c < cycle_len {
            edges.push((c, c + 1));
        }
    }
    edges.push((1, cycle_len));
    let mut labels = vec![Role::Center];
    for c in 1..=cycle_len {
        labels.push(if c % (r + 1) == 0 {
            Role::Spoke
        } else {
            Role::Intermediate
        });
    }
    Ok(Graph::from_edge_list(n, &edges)
        .expect("generator edges are valid")
        .with_labels(labels))
}

/// Generalized helm: a wheel on m spokes with s pendant vertices attached to
/// each spoke. Requires m >= 3, s >= 1.
pub fn helm(m: usize, s: usize) -> Result<Graph, GenError> {
    if m < 3 {
        return Err(invalid("helm", format!("m = {m}, need m >= 3")));
    }
    if s < 1 {
        return Err(invalid("helm", format!("s = {s}, need s >= 1")));
    }
    let n = m * (1 + s) + 1;
    let mut edges = Vec::with_capacity(m * (s + 2));
    for i in 1..=m {
        edges.push((0, i));
        edges.push((i, i % m + 1));
        for j in 1..=s {
            edges.push((i, pendant_index(m, s, i, j)));
        }
    }
    let mut labels = vec![Role::Center];
    labels.extend(std::iter::repeat_n(Role::Spoke, m));
    labels.extend(std::iter::repeat_n(Role::Pendant, m * s));
    Ok(Graph::from_edge_list(n, &edges)
        .expect("generator edges are valid")
        .with_labels(labels))
}

/// Wheel with n rim vertices (n + 1 vertices total). Requires n >= 3.
pub fn wheel(n: usize) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(invalid("wheel", format!("n = {n}, need n >= 3")));
    }
    let mut edges = Vec::with_capacity(2 * n);
    for i in 1..=n {
        edges.push((0, i));
        edges.push((i, i % n + 1));
    }
    let mut labels = vec![Role::Center];
    labels.extend(std::iter::repeat_n(Role::Spoke, n));
    Ok(Graph::from_edge_list(n + 1, &edges)
        .expect("generator edges are valid")
        .with_labels(labels))
}

/// Path on n vertices, 0 through n-1 in order. Requires n >= 1.
pub fn path(n: usize) -> Result<Graph, GenError> {
    if n < 1 {
        return Err(invalid("path", "n = 0, need n >= 1"));
    }
    let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    Ok(Graph::from_edge_list(n, &edges).expect("generator edges are valid"))
}

/// Cycle on n vertices. Requires n >= 3.
pub fn cycle(n: usize) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(invalid("cycle", format!("n = {n}, need n >= 3")));
    }
    let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((n - 1, 0));
    Ok(Graph::from_edge_list(n, &edges).expect("generator edges are valid"))
}

/// Index of pendant j of spoke i in `helm(m, s)`, 1-based in both i and j.
pub fn pendant_index(m: usize, s: usize, i: usize, j: usize) -> Vertex {
    debug_assert!((1..=m).contains(&i) && (1..=s).contains(&j));
    m + (i - 1) * s + j
}

/// Resolves a possibly out of range 1-based cycle position for `gear(m, r)`
/// to its canonical index in 1..=m(r+1). Index 0 stays the center. Formula
/// references that walk past the end of the cycle wrap around, so position
/// m(r+1) + 1 is vertex 1.
pub fn wrap_gear_index(m: usize, r: usize, idx: usize) -> Vertex {
    if idx == 0 {
        return 0;
    }
    let len = m * (r + 1);
    (idx - 1) % len + 1
}

/// Resolves a possibly out of range 1-based spoke position for `helm(m, s)`
/// to its canonical index in 1..=m.
pub fn wrap_spoke_index(m: usize, idx: usize) -> Vertex {
    debug_assert!(idx >= 1);
    (idx - 1) % m + 1
}

/// Symbolic name for every vertex of `gear(m, r)`: "v_0" for the center,
/// "v_c" along the cycle.
pub fn gear_index_map(m: usize, r: usize) -> BTreeMap<String, Vertex> {
    let mut map = BTreeMap::new();
    for c in 0..=m * (r + 1) {
        map.insert(format!("v_{c}"), c);
    }
    map
}

/// Symbolic name for every vertex of `helm(m, s)`: "v_0" for the center,
/// "v_i" for spokes, "p_i_j" for pendant j of spoke i.
pub fn helm_index_map(m: usize, s: usize) -> BTreeMap<String, Vertex> {
    let mut map = BTreeMap::new();
    for i in 0..=m {
        map.insert(format!("v_{i}"), i);
    }
    for i in 1..=m {
        for j in 1..=s {
            map.insert(format!("p_{i}_{j}"), pendant_index(m, s, i, j));
        }
    }
    map
}

/// True when `perm` (a map v -> perm[v]) is an automorphism of `g`.
pub fn is_automorphism(g: &Graph, perm: &[Vertex]) -> bool {
    let n = g.n();
    if perm.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return false;
        }
        seen[p] = true;
    }
    g.edges().iter().all(|&(u, v)| g.has_edge(perm[u], perm[v]))
}

/// The dihedral symmetries of `gear(m, r)`: the m tooth rotations and the m
/// reflections through spoke axes, as vertex permutations. Identity first.
pub fn gear_symmetries(m: usize, r: usize) -> Vec<Vec<Vertex>> {
    let len = m * (r + 1);
    let n = len + 1;
    let mut perms = Vec::with_capacity(2 * m);
    for k in 0..m {
        let shift = k * (r + 1);
        let mut rot = vec![0; n];
        let mut refl = vec![0; n];
        for q in 0..len {
            rot[q + 1] = (q + shift) % len + 1;
            // Reflection through the spoke at cycle offset r, then rotate.
            refl[q + 1] = ((2 * r + len - q % len) % len + shift) % len + 1;
        }
        perms.push(rot);
        perms.push(refl);
    }
    perms
}

/// The dihedral symmetries of `helm(m, s)`: spoke rotations and reflections
/// carried to the pendant rows. Identity first.
pub fn helm_symmetries(m: usize, s: usize) -> Vec<Vec<Vertex>> {
    let n = m * (1 + s) + 1;
    let mut perms = Vec::with_capacity(2 * m);
    for k in 0..m {
        let mut rot = vec![0; n];
        let mut refl = vec![0; n];
        for i in 1..=m {
            let rot_i = (i - 1 + k) % m + 1;
            let refl_i = ((m + 1 - i) % m + k) % m + 1;
            rot[i] = rot_i;
            refl[i] = refl_i;
            for j in 1..=s {
                rot[pendant_index(m, s, i, j)] = pendant_index(m, s, rot_i, j);
                refl[pendant_index(m, s, i, j)] = pendant_index(m, s, refl_i, j);
            }
        }
        perms.push(rot);
        perms.push(refl);
    }
    perms
}
