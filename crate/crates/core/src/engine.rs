//! The color change rule and everything derived from it: synchronous
//! propagation, relaxed chronology replay, closures, propagation time of a
//! set, forcing chains, and the terminus.
//!
//! A blue vertex with exactly one white neighbor forces that neighbor blue.
//! The rule test itself lives in [`VertexSet::unique_difference`]; every
//! process here goes through [`force_target`], so there is a single
//! implementation of the rule to trust.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Vertex, VertexSet};

/// One application of the color change rule: `source` forces `target`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Force {
    #[serde(rename = "src")]
    pub source: Vertex,
    #[serde(rename = "dst")]
    pub target: Vertex,
}

impl Force {
    pub fn new(source: Vertex, target: Vertex) -> Self {
        Force { source, target }
    }
}

impl std::fmt::Display for Force {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} -> {}", self.source, self.target)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EngineError {
    #[error("step {step}: force {force} is not applicable there")]
    InvalidForceAtStep { step: usize, force: Force },
    #[error("step {step}: vertex {target} forced twice")]
    DuplicateTarget { step: usize, target: Vertex },
    #[error("chronology does not color the whole graph")]
    IncompleteChronology,
}

/// Which source is credited when several blue vertices can force the same
/// target in one synchronous step. The expansion sequence is identical under
/// every policy; only the recorded chains differ.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Default)]
pub enum TieBreak {
    #[default]
    LowestSource,
    HighestSource,
}

/// A record of a forcing process on a fixed graph: the initial blue set, the
/// forces performed at each step, and the expansion sequence (the blue set
/// after each step, starting with the initial set).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chronology {
    initial: VertexSet,
    steps: Vec<Vec<Force>>,
    expansions: Vec<VertexSet>,
}

impl Chronology {
    pub fn initial(&self) -> &VertexSet {
        &self.initial
    }

    pub fn steps(&self) -> &[Vec<Force>] {
        &self.steps
    }

    /// Blue set after each step; entry 0 is the initial set, so the length
    /// is always `steps().len() + 1`.
    pub fn expansions(&self) -> &[VertexSet] {
        &self.expansions
    }

    pub fn completion_time(&self) -> usize {
        self.steps.len()
    }

    pub fn final_set(&self) -> &VertexSet {
        self.expansions.last().expect("expansions never empty")
    }

    /// True when the process ended with every vertex blue.
    pub fn is_complete(&self) -> bool {
        self.final_set().is_full()
    }

    /// All forces of the chronology in time order.
    pub fn forces(&self) -> impl Iterator<Item = Force> + '_ {
        self.steps.iter().flatten().copied()
    }
}

/// Partition of the vertices into forcing chains, one per initial blue
/// vertex. Each chain lists its vertices in forcing order, starting at the
/// initial vertex; a chain whose initial vertex never forces is a singleton.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainSet {
    chains: Vec<Vec<Vertex>>,
}

impl ChainSet {
    pub fn chains(&self) -> &[Vec<Vertex>] {
        &self.chains
    }

    pub fn len(&self) -> usize {
        self.chains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }

    /// Consecutive pairs of every chain, the edges drawn bold in DOT output.
    pub fn chain_edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for chain in &self.chains {
            for w in chain.windows(2) {
                out.push((w[0], w[1]));
            }
        }
        out
    }
}

/// `Some(t)` when `source` forces `t` out of the blue set `blue`, that is,
/// `t` is the unique white neighbor of the blue vertex `source`.
#[inline]
pub fn force_target(g: &Graph, source: Vertex, blue: &VertexSet) -> Option<Vertex> {
    debug_assert!(blue.contains(source));
    g.neighbors(source).unique_difference(blue)
}

/// Every force applicable to `blue` in one step: all pairs (u, t) where u is
/// blue and t is its unique white neighbor. Several forces may share a
/// target. Sorted by source.
pub fn valid_forces(g: &Graph, blue: &VertexSet) -> Vec<Force> {
    let mut out = Vec::new();
    for u in blue.iter() {
        if let Some(t) = force_target(g, u, blue) {
            out.push(Force::new(u, t));
        }
    }
    out
}

/// Runs the synchronous process: at every step all currently applicable
/// forces fire at once, until nothing changes. Equivalent to
/// [`propagate_with`] under the default tie break.
pub fn propagate(g: &Graph, b: &VertexSet) -> Chronology {
    propagate_with(g, b, TieBreak::default())
}

/// Synchronous propagation with an explicit source crediting policy.
pub fn propagate_with(g: &Graph, b: &VertexSet, tie_break: TieBreak) -> Chronology {
    assert_eq!(b.universe_len(), g.n(), "blue set universe mismatch");
    let n = g.n();
    let mut blue = b.clone();
    let mut expansions = vec![blue.clone()];
    let mut steps = Vec::new();
    let mut credited: Vec<Option<Vertex>> = vec![None; n];
    loop {
        let mut targets: Vec<Vertex> = Vec::new();
        for u in blue.iter() {
            if let Some(t) = force_target(g, u, &blue) {
                match credited[t] {
                    None => {
                        credited[t] = Some(u);
                        targets.push(t);
                    }
                    // Sources are visited in increasing order, so the first
                    // credit is the lowest and the last is the highest.
                    Some(_) if tie_break == TieBreak::HighestSource => credited[t] = Some(u),
                    Some(_) => {}
                }
            }
        }
        if targets.is_empty() {
            break;
        }
        targets.sort_unstable();
        let mut step = Vec::with_capacity(targets.len());
        for &t in &targets {
            step.push(Force::new(credited[t].take().expect("credited above"), t));
            blue.insert(t);
        }
        steps.push(step);
        expansions.push(blue.clone());
    }
    Chronology {
        initial: b.clone(),
        steps,
        expansions,
    }
}

/// Replays a relaxed chronology: at step k every listed force must be
/// applicable to the blue set left by step k - 1, and no vertex may be
/// forced twice in one step. Any subset of the applicable forces is allowed,
/// including none. Steps are numbered from 1 in errors.
pub fn run_relaxed(
    g: &Graph,
    b: &VertexSet,
    script: &[Vec<Force>],
) -> Result<Chronology, EngineError> {
    assert_eq!(b.universe_len(), g.n(), "blue set universe mismatch");
    let mut blue = b.clone();
    let mut expansions = vec![blue.clone()];
    let mut steps = Vec::with_capacity(script.len());
    for (i, listed) in script.iter().enumerate() {
        let step = i + 1;
        let mut forced_now = VertexSet::empty(g.n());
        for &f in listed {
            let applicable = f.source < g.n()
                && f.target < g.n()
                && blue.contains(f.source)
                && force_target(g, f.source, &blue) == Some(f.target);
            if !applicable {
                return Err(EngineError::InvalidForceAtStep { step, force: f });
            }
            if forced_now.contains(f.target) {
                return Err(EngineError::DuplicateTarget {
                    step,
                    target: f.target,
                });
            }
            forced_now.insert(f.target);
        }
        blue.union_with(&forced_now);
        steps.push(listed.clone());
        expansions.push(blue.clone());
    }
    Ok(Chronology {
        initial: b.clone(),
        steps,
        expansions,
    })
}

/// The closure of `b`: the final blue set of the synchronous process. `b` is
/// a zero forcing set exactly when the closure is the whole vertex set.
pub fn closure(g: &Graph, b: &VertexSet) -> VertexSet {
    assert_eq!(b.universe_len(), g.n(), "blue set universe mismatch");
    let mut blue = b.clone();
    let mut targets: Vec<Vertex> = Vec::new();
    loop {
        targets.clear();
        for u in blue.iter() {
            if let Some(t) = force_target(g, u, &blue) {
                targets.push(t);
            }
        }
        if targets.is_empty() {
            return blue;
        }
        // Targets are white with respect to the set they were collected
        // against, so inserting them always grows the set.
        for &t in &targets {
            blue.insert(t);
        }
    }
}

/// Number of synchronous steps until the whole graph is blue, or `None` when
/// `b` is not a zero forcing set. A set that is already everything takes 0
/// steps.
pub fn propagation_time_of_set(g: &Graph, b: &VertexSet) -> Option<usize> {
    assert_eq!(b.universe_len(), g.n(), "blue set universe mismatch");
    let mut blue = b.clone();
    let mut targets: Vec<Vertex> = Vec::new();
    let mut t = 0;
    loop {
        if blue.is_full() {
            return Some(t);
        }
        targets.clear();
        for u in blue.iter() {
            if let Some(w) = force_target(g, u, &blue) {
                targets.push(w);
            }
        }
        if targets.is_empty() {
            return None;
        }
        for &w in &targets {
            blue.insert(w);
        }
        t += 1;
    }
}

/// Extracts the forcing chains of a complete chronology: follow each initial
/// vertex through the forces it performs. Requires that every vertex force
/// at most once overall, which holds for every chronology this module
/// produces.
pub fn chain_set(c: &Chronology) -> Result<ChainSet, EngineError> {
    if !c.is_complete() {
        return Err(EngineError::IncompleteChronology);
    }
    let n = c.final_set().universe_len();
    let mut successor: Vec<Option<Vertex>> = vec![None; n];
    for f in c.forces() {
        debug_assert!(successor[f.source].is_none(), "vertex forces twice");
        successor[f.source] = Some(f.target);
    }
    let mut chains = Vec::with_capacity(c.initial.len());
    for head in c.initial.iter() {
        let mut chain = vec![head];
        let mut v = head;
        while let Some(next) = successor[v] {
            chain.push(next);
            v = next;
        }
        chains.push(chain);
    }
    Ok(ChainSet { chains })
}

/// The terminus of a complete chronology: the vertices that perform no
/// force, equivalently the set of final vertices of its chains.
pub fn terminus(c: &Chronology) -> Result<VertexSet, EngineError> {
    if !c.is_complete() {
        return Err(EngineError::IncompleteChronology);
    }
    let n = c.final_set().universe_len();
    let mut term = VertexSet::full(n);
    for f in c.forces() {
        term.remove(f.source);
    }
    Ok(term)
}
