//! Exhaustive searches: the zero forcing number, propagation time, and path
//! cover number of small graphs, by direct enumeration.
//!
//! The zero forcing search walks k-subsets in lexicographic order for
//! increasing k, testing each subset's closure. The rank space of each
//! cardinality is split into contiguous chunks handed to scoped worker
//! threads; chunk results are concatenated in worker order, so reports are
//! identical for every worker count. Candidate cardinalities start at
//! max(1, min degree) because a first force needs a source with at most one
//! white neighbor, and optionally at the pendant bound: a path cover needs
//! a separate part end for every degree one vertex, two per part, and the
//! path cover number is itself a lower bound for the zero forcing number.
//!
//! Propagation time needs the minimum over every minimum zero forcing set,
//! so the full cardinality-z stratum is always enumerated; the
//! `pt_first_witness` option trades that guarantee for speed and labels its
//! answer an upper bound.
//!
//! An optional list of known automorphisms shrinks the scan to
//! lexicographic orbit representatives. This is sound for the numbers
//! reported here because automorphisms carry forcing sets to forcing sets
//! of equal propagation time, but witness lists then hold only canonical
//! representatives, and a cross check mode reruns the full scan and
//! compares.

use std::collections::{HashMap, HashSet};
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::combo::{binomial, SubsetCursor};
use crate::engine::{chain_set, closure, propagate, propagation_time_of_set};
use crate::graph::{Graph, Vertex, VertexSet};

/// Largest vertex count the path cover search accepts by default.
pub const PATH_COVER_CEILING: usize = 14;

/// Below this many candidate sets a scan stays on one thread.
const PARALLEL_THRESHOLD: u64 = 2048;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("search undefined on the empty graph")]
    EmptyGraph,
    #[error("graph has {n} vertices, above the search ceiling of {ceiling}")]
    TooLarge { n: usize, ceiling: usize },
    #[error("symmetry-reduced search disagrees with the full search: {0}")]
    SymmetryMismatch(String),
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Worker thread count; 0 means all available parallelism.
    pub workers: usize,
    /// Report every minimum witness instead of the lexicographically first.
    pub all_witnesses: bool,
    /// Also scan the full stratum below z and record that it holds no
    /// forcing set.
    pub prove_minimality: bool,
    /// Compute propagation time from the first witness only and label the
    /// result an upper bound.
    pub pt_first_witness: bool,
    /// Start the cardinality climb at 1, ignoring the degree bounds.
    pub no_pruning: bool,
    /// Additionally start no lower than half the number of degree one
    /// vertices, rounded up.
    pub pendant_bound: bool,
    /// Automorphisms used to skip non-canonical candidate sets. Must be
    /// genuine automorphisms of the searched graph.
    pub symmetries: Vec<Vec<Vertex>>,
    /// Rerun without symmetries and fail on any disagreement.
    pub symmetry_cross_check: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            workers: 1,
            all_witnesses: false,
            prove_minimality: false,
            pt_first_witness: false,
            no_pruning: false,
            pendant_bound: false,
            symmetries: Vec::new(),
            symmetry_cross_check: false,
        }
    }
}

/// Record that the stratum below z was fully enumerated without finding a
/// forcing set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalityEvidence {
    pub cardinality: usize,
    pub sets_examined: u64,
    pub forcing_sets_found: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub z: usize,
    pub pt: Option<usize>,
    pub pt_is_upper_bound: bool,
    /// Minimum zero forcing sets, each sorted ascending, in lexicographic
    /// order. Holds every witness under `all_witnesses`, otherwise the
    /// first. Under a symmetry-reduced scan only orbit representatives.
    pub witnesses: Vec<Vec<Vertex>>,
    /// Witnesses achieving the reported propagation time.
    pub pt_witnesses: Vec<Vec<Vertex>>,
    pub sets_examined: u64,
    pub closure_calls: u64,
    pub wall_time_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minimality: Option<MinimalityEvidence>,
}

/// Computes Z(G) by exhaustive search.
pub fn zero_forcing_number(g: &Graph, opts: &SearchOptions) -> Result<SearchReport, SearchError> {
    search(g, opts, false)
}

/// Computes Z(G) and pt(G), the minimum synchronous completion time over
/// all minimum zero forcing sets.
pub fn propagation_time(g: &Graph, opts: &SearchOptions) -> Result<SearchReport, SearchError> {
    search(g, opts, true)
}

fn search(g: &Graph, opts: &SearchOptions, want_pt: bool) -> Result<SearchReport, SearchError> {
    if g.n() == 0 {
        return Err(SearchError::EmptyGraph);
    }
    if opts.symmetry_cross_check && !opts.symmetries.is_empty() {
        let mut reduced_opts = opts.clone();
        reduced_opts.symmetry_cross_check = false;
        let mut full_opts = reduced_opts.clone();
        full_opts.symmetries = Vec::new();
        let reduced = search_core(g, &reduced_opts, want_pt);
        let full = search_core(g, &full_opts, want_pt);
        if reduced.z != full.z || reduced.pt != full.pt {
            return Err(SearchError::SymmetryMismatch(format!(
                "reduced z = {}, pt = {:?}; full z = {}, pt = {:?}",
                reduced.z, reduced.pt, full.z, full.pt
            )));
        }
        return Ok(reduced);
    }
    Ok(search_core(g, opts, want_pt))
}

fn search_core(g: &Graph, opts: &SearchOptions, want_pt: bool) -> SearchReport {
    let start = Instant::now();
    let n = g.n();
    let workers = effective_workers(opts.workers);
    let start_k = climb_start(g, opts);

    let mut sets_examined = 0u64;
    let mut closure_calls = 0u64;
    // Cardinalities fully enumerated without symmetry skipping, with their
    // candidate counts; consulted for minimality evidence.
    let mut full_scans: HashMap<usize, u64> = HashMap::new();
    let mut z = 0;
    let mut witnesses: Vec<Vec<Vertex>> = Vec::new();
    for k in start_k..=n {
        let out = scan_cardinality(g, k, workers, &opts.symmetries);
        sets_examined += out.examined;
        closure_calls += out.closure_calls;
        if opts.symmetries.is_empty() {
            full_scans.insert(k, out.examined);
        }
        if !out.witnesses.is_empty() {
            z = k;
            witnesses = out.witnesses;
            break;
        }
    }
    debug_assert!(!witnesses.is_empty(), "the full vertex set forces");

    let minimality = opts.prove_minimality.then(|| {
        let below = z - 1;
        match full_scans.get(&below) {
            Some(&examined) => MinimalityEvidence {
                cardinality: below,
                sets_examined: examined,
                forcing_sets_found: 0,
            },
            None => {
                let out = scan_cardinality(g, below, workers, &[]);
                sets_examined += out.examined;
                closure_calls += out.closure_calls;
                MinimalityEvidence {
                    cardinality: below,
                    sets_examined: out.examined,
                    forcing_sets_found: out.witnesses.len() as u64,
                }
            }
        }
    });

    let mut pt = None;
    let mut pt_is_upper_bound = false;
    let mut pt_witnesses = Vec::new();
    if want_pt {
        if opts.pt_first_witness {
            let w = &witnesses[0];
            let b = VertexSet::from_indices(n, w.iter().copied());
            closure_calls += 1;
            pt = Some(propagation_time_of_set(g, &b).expect("witness forces"));
            pt_is_upper_bound = witnesses.len() > 1;
            pt_witnesses.push(w.clone());
        } else {
            let mut best = usize::MAX;
            for w in &witnesses {
                let b = VertexSet::from_indices(n, w.iter().copied());
                closure_calls += 1;
                let t = propagation_time_of_set(g, &b).expect("witness forces");
                if t < best {
                    best = t;
                    pt_witnesses.clear();
                }
                if t == best {
                    pt_witnesses.push(w.clone());
                }
            }
            pt = Some(best);
        }
    }

    if !opts.all_witnesses {
        witnesses.truncate(1);
    }

    SearchReport {
        z,
        pt,
        pt_is_upper_bound,
        witnesses,
        pt_witnesses,
        sets_examined,
        closure_calls,
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
        minimality,
    }
}

/// First cardinality the climb visits under the given options. A first
/// force needs a blue vertex with at most one white neighbor, so no set
/// smaller than the minimum degree forces; the optional pendant bound
/// additionally uses that each degree one vertex must end a path cover part.
pub(crate) fn climb_start(g: &Graph, opts: &SearchOptions) -> usize {
    if opts.no_pruning {
        return 1;
    }
    let mut k = g.min_degree().expect("nonempty graph").max(1);
    if opts.pendant_bound {
        let degree_one = g.vertices().filter(|&v| g.neighbors(v).len() == 1).count();
        k = k.max(degree_one.div_ceil(2));
    }
    k
}

fn effective_workers(requested: usize) -> usize {
    if requested > 0 {
        return requested;
    }
    std::thread::available_parallelism()
        .map(|p| p.get())
        .unwrap_or(1)
}

#[derive(Default)]
struct ScanOutcome {
    examined: u64,
    closure_calls: u64,
    witnesses: Vec<Vec<Vertex>>,
}

/// Tests every k-subset of the vertices (or every orbit representative) and
/// collects the forcing ones. Deterministic for every worker count: chunk
/// results are concatenated in rank order.
fn scan_cardinality(
    g: &Graph,
    k: usize,
    workers: usize,
    symmetries: &[Vec<Vertex>],
) -> ScanOutcome {
    let total = binomial(g.n(), k);
    if total == 0 {
        return ScanOutcome::default();
    }
    let workers = workers.max(1).min(total.min(64) as usize);
    if workers == 1 || total < PARALLEL_THRESHOLD {
        return scan_range(g, k, 0, total, symmetries);
    }
    let chunk = total / workers as u64;
    let remainder = total % workers as u64;
    let mut outcomes: Vec<ScanOutcome> = std::thread::scope(|scope| {
        let mut handles = Vec::with_capacity(workers);
        let mut cursor = 0u64;
        for w in 0..workers as u64 {
            let len = chunk + u64::from(w < remainder);
            let (start, end) = (cursor, cursor + len);
            cursor += len;
            handles.push(scope.spawn(move || scan_range(g, k, start, end, symmetries)));
        }
        handles
            .into_iter()
            .map(|h| h.join().expect("scan worker panicked"))
            .collect()
    });
    let mut merged = ScanOutcome::default();
    for out in &mut outcomes {
        merged.examined += out.examined;
        merged.closure_calls += out.closure_calls;
        merged.witnesses.append(&mut out.witnesses);
    }
    merged
}

fn scan_range(g: &Graph, k: usize, from: u64, to: u64, symmetries: &[Vec<Vertex>]) -> ScanOutcome {
    let n = g.n();
    let mut out = ScanOutcome::default();
    let mut cursor = SubsetCursor::starting_at(n, k, from);
    let mut blue = VertexSet::empty(n);
    let mut image: Vec<Vertex> = Vec::with_capacity(k);
    for _ in from..to {
        let combo = cursor.advance().expect("rank within range");
        if !symmetries.is_empty() && !is_orbit_representative(combo, symmetries, &mut image) {
            continue;
        }
        out.examined += 1;
        blue.clear();
        for &v in combo {
            blue.insert(v);
        }
        out.closure_calls += 1;
        if closure(g, &blue).is_full() {
            out.witnesses.push(combo.to_vec());
        }
    }
    out
}

/// True when `combo` is the lexicographically smallest member of its orbit
/// under the given permutations.
fn is_orbit_representative(
    combo: &[Vertex],
    symmetries: &[Vec<Vertex>],
    image: &mut Vec<Vertex>,
) -> bool {
    for perm in symmetries {
        image.clear();
        image.extend(combo.iter().map(|&v| perm[v]));
        image.sort_unstable();
        if image.as_slice() < combo {
            return false;
        }
    }
    true
}

/// Computes the path cover number: the fewest parts in a partition of the
/// vertices into sets each inducing a path. Exhaustive with memoization on
/// the uncovered set; refuses graphs above [`PATH_COVER_CEILING`].
pub fn path_cover_number(g: &Graph) -> Result<usize, SearchError> {
    path_cover_number_with_ceiling(g, PATH_COVER_CEILING)
}

pub fn path_cover_number_with_ceiling(g: &Graph, ceiling: usize) -> Result<usize, SearchError> {
    let n = g.n();
    if n > ceiling {
        return Err(SearchError::TooLarge { n, ceiling });
    }
    if n == 0 {
        return Ok(0);
    }
    let adj: Vec<u64> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0u64, |acc, w| acc | 1 << w))
        .collect();
    let mut memo: HashMap<u64, usize> = HashMap::new();
    let full = if n == 64 { !0 } else { (1u64 << n) - 1 };
    Ok(cover_rec(&adj, full, &mut memo))
}

fn cover_rec(adj: &[u64], mask: u64, memo: &mut HashMap<u64, usize>) -> usize {
    if mask == 0 {
        return 0;
    }
    if let Some(&v) = memo.get(&mask) {
        return v;
    }
    // The part containing the lowest uncovered vertex is some induced path
    // through it; try them all.
    let pivot = mask.trailing_zeros() as usize;
    let mut paths = HashSet::new();
    grow_paths(adj, mask, 1 << pivot, pivot, pivot, false, &mut paths);
    let mut best = usize::MAX;
    for p in paths {
        best = best.min(1 + cover_rec(adj, mask & !p, memo));
    }
    memo.insert(mask, best);
    best
}

/// Collects the vertex sets of all induced paths inside `mask` that contain
/// the starting vertex. The path grows at its right end first, then only at
/// its left end; the two orientations of the same path both arrive, and the
/// set dedups them.
fn grow_paths(
    adj: &[u64],
    mask: u64,
    set: u64,
    left: usize,
    right: usize,
    left_phase: bool,
    out: &mut HashSet<u64>,
) {
    out.insert(set);
    if !left_phase {
        let mut cands = adj[right] & mask & !set;
        while cands != 0 {
            let w = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            // Induced: the new end may touch only the old end.
            if adj[w] & set == 1 << right {
                grow_paths(adj, mask, set | 1 << w, left, w, false, out);
            }
        }
    }
    let mut cands = adj[left] & mask & !set;
    while cands != 0 {
        let w = cands.trailing_zeros() as usize;
        cands &= cands - 1;
        if adj[w] & set == 1 << left {
            grow_paths(adj, mask, set | 1 << w, w, right, true, out);
        }
    }
}

/// The chain of bounds that sandwiches these invariants: the minimum degree
/// is at most the zero forcing number, the path cover number is at most the
/// zero forcing number, and a chain set of a minimum witness has exactly z
/// chains, so its size also dominates the path cover number.
#[derive(Clone, Debug, Serialize)]
pub struct BoundChainReport {
    pub n: usize,
    pub min_degree: usize,
    pub z: usize,
    pub path_cover: usize,
    pub chain_count: usize,
    pub holds: bool,
}

pub fn verify_bound_chain(
    g: &Graph,
    opts: &SearchOptions,
) -> Result<BoundChainReport, SearchError> {
    let min_degree = g.min_degree().map_err(|_| SearchError::EmptyGraph)?;
    let report = zero_forcing_number(g, opts)?;
    let z = report.z;
    let path_cover = path_cover_number(g)?;
    let witness = &report.witnesses[0];
    let b = VertexSet::from_indices(g.n(), witness.iter().copied());
    let chains = chain_set(&propagate(g, &b)).expect("witness forces");
    let chain_count = chains.len();
    let holds = min_degree <= z
        && path_cover <= z
        && chain_count == witness.len()
        && path_cover <= chain_count;
    Ok(BoundChainReport {
        n: g.n(),
        min_degree,
        z,
        path_cover,
        chain_count,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, gear, gear_symmetries, helm, helm_symmetries, path, wheel};

    fn opts() -> SearchOptions {
        SearchOptions::default()
    }

    fn all_opts() -> SearchOptions {
        SearchOptions {
            all_witnesses: true,
            ..SearchOptions::default()
        }
    }

    // Brute force references built straight from the definitions, on u32
    // subset masks; usable up to about 20 vertices.
    fn brute_closure_mask(g: &Graph, b: u32) -> u32 {
        let n = g.n();
        let mut blue = b;
        loop {
            let mut add = 0u32;
            for u in 0..n {
                if blue >> u & 1 == 0 {
                    continue;
                }
                let white: Vec<_> = (0..n)
                    .filter(|&w| g.has_edge(u, w) && blue >> w & 1 == 0)
                    .collect();
                if white.len() == 1 {
                    add |= 1 << white[0];
                }
            }
            if add & !blue == 0 {
                return blue;
            }
            blue |= add;
        }
    }

    fn brute_z_pt(g: &Graph) -> (usize, usize) {
        let n = g.n();
        let full = (1u32 << n) - 1;
        for k in 1..=n {
            let mut best_pt = None;
            for mask in 0u32..=full {
                if mask.count_ones() as usize != k {
                    continue;
                }
                if brute_closure_mask(g, mask) != full {
                    continue;
                }
                // Step count of the synchronous process.
                let mut blue = mask;
                let mut t = 0;
                while blue != full {
                    blue = one_step(g, blue);
                    t += 1;
                }
                best_pt = Some(best_pt.map_or(t, |b: usize| b.min(t)));
            }
            if let Some(pt) = best_pt {
                return (k, pt);
            }
        }
        unreachable!("full set forces");
    }

    fn one_step(g: &Graph, blue: u32) -> u32 {
        let n = g.n();
        let mut add = 0u32;
        for u in 0..n {
            if blue >> u & 1 == 0 {
                continue;
            }
            let white: Vec<_> = (0..n)
                .filter(|&w| g.has_edge(u, w) && blue >> w & 1 == 0)
                .collect();
            if white.len() == 1 {
                add |= 1 << white[0];
            }
        }
        blue | add
    }

    #[test]
    fn path_and_cycle_numbers() {
        let p4 = path(4).unwrap();
        let r = propagation_time(&p4, &all_opts()).unwrap();
        assert_eq!(r.z, 1);
        assert_eq!(r.pt, Some(3));
        assert_eq!(r.witnesses, vec![vec![0], vec![3]]);
        assert_eq!(r.pt_witnesses, vec![vec![0], vec![3]]);

        let c5 = cycle(5).unwrap();
        let r = propagation_time(&c5, &all_opts()).unwrap();
        assert_eq!(r.z, 2);
        assert_eq!(r.pt, Some(2));
        // Exactly the five adjacent pairs force.
        assert_eq!(r.witnesses.len(), 5);
        for w in &r.witnesses {
            assert!(c5.has_edge(w[0], w[1]), "witness {w:?}");
        }
    }

    #[test]
    fn complete_graph_numbers() {
        let mut edges = Vec::new();
        for u in 0..4 {
            for v in u + 1..4 {
                edges.push((u, v));
            }
        }
        let k4 = Graph::from_edge_list(4, &edges).unwrap();
        let r = propagation_time(&k4, &all_opts()).unwrap();
        assert_eq!((r.z, r.pt), (3, Some(1)));
        assert_eq!(r.witnesses.len(), 4);
    }

    #[test]
    fn gear_3_1_with_minimality_proof() {
        let g = gear(3, 1).unwrap();
        let o = SearchOptions {
            prove_minimality: true,
            all_witnesses: true,
            ..opts()
        };
        let r = propagation_time(&g, &o).unwrap();
        assert_eq!(r.z, 3);
        assert_eq!(r.pt, Some(2));
        assert!(!r.pt_is_upper_bound);
        // Minimum degree 2 starts the climb at cardinality 2; the proof
        // stratum below z is all of C(7, 2).
        assert_eq!(
            r.minimality,
            Some(MinimalityEvidence {
                cardinality: 2,
                sets_examined: 21,
                forcing_sets_found: 0
            })
        );
        assert!(r.witnesses.contains(&vec![1, 5, 6]));
        assert_eq!(r.sets_examined, 21 + 35);
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        let graphs = vec![
            path(6).unwrap(),
            cycle(6).unwrap(),
            wheel(5).unwrap(),
            gear(3, 1).unwrap(),
            helm(3, 1).unwrap(),
            helm(3, 2).unwrap(),
            Graph::from_edge_list(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (2, 4), (4, 5)]).unwrap(),
        ];
        for g in &graphs {
            let (bz, bpt) = brute_z_pt(g);
            let r = propagation_time(g, &opts()).unwrap();
            assert_eq!((r.z, r.pt), (bz, Some(bpt)), "{g:?}");
        }
    }

    #[test]
    fn worker_count_does_not_change_the_report() {
        let g = helm(5, 1).unwrap();
        let serial = propagation_time(
            &g,
            &SearchOptions {
                workers: 1,
                all_witnesses: true,
                ..opts()
            },
        )
        .unwrap();
        let parallel = propagation_time(
            &g,
            &SearchOptions {
                workers: 4,
                all_witnesses: true,
                ..opts()
            },
        )
        .unwrap();
        assert_eq!(serial.z, parallel.z);
        assert_eq!(serial.pt, parallel.pt);
        assert_eq!(serial.witnesses, parallel.witnesses);
        assert_eq!(serial.pt_witnesses, parallel.pt_witnesses);
        assert_eq!(serial.sets_examined, parallel.sets_examined);
        assert_eq!(serial.closure_calls, parallel.closure_calls);
    }

    #[test]
    fn pruning_flags_change_work_not_answers() {
        let g = gear(3, 1).unwrap();
        let pruned = zero_forcing_number(&g, &opts()).unwrap();
        let unpruned = zero_forcing_number(
            &g,
            &SearchOptions {
                no_pruning: true,
                ..opts()
            },
        )
        .unwrap();
        assert_eq!(pruned.z, unpruned.z);
        // Without pruning the singletons are scanned too.
        assert_eq!(unpruned.sets_examined, pruned.sets_examined + 7);

        let h = helm(5, 1).unwrap();
        let base = zero_forcing_number(&h, &opts()).unwrap();
        let bounded = zero_forcing_number(
            &h,
            &SearchOptions {
                pendant_bound: true,
                ..opts()
            },
        )
        .unwrap();
        assert_eq!(base.z, bounded.z);
        // Five pendants push the start from min degree 1 up to cardinality
        // 3, skipping the first two strata.
        assert!(bounded.sets_examined < base.sets_examined);
    }

    #[test]
    fn pt_first_witness_is_labeled() {
        let g = helm(4, 3).unwrap();
        let fast = propagation_time(
            &g,
            &SearchOptions {
                pt_first_witness: true,
                ..opts()
            },
        )
        .unwrap();
        assert_eq!(fast.z, 9);
        assert!(fast.pt_is_upper_bound);
        assert_eq!(fast.pt_witnesses.len(), 1);
        let exact = propagation_time(&g, &opts()).unwrap();
        assert!(!exact.pt_is_upper_bound);
        assert!(exact.pt <= fast.pt);
    }

    #[test]
    fn symmetry_reduction_cross_checks() {
        let g = gear(3, 1).unwrap();
        let o = SearchOptions {
            symmetries: gear_symmetries(3, 1),
            symmetry_cross_check: true,
            ..opts()
        };
        let r = propagation_time(&g, &o).unwrap();
        assert_eq!((r.z, r.pt), (3, Some(2)));

        let h = helm(5, 1).unwrap();
        let o = SearchOptions {
            symmetries: helm_symmetries(5, 1),
            symmetry_cross_check: true,
            ..opts()
        };
        let r = propagation_time(&h, &o).unwrap();
        assert_eq!((r.z, r.pt), (3, Some(4)));
    }

    #[test]
    fn symmetry_reduction_examines_fewer_sets() {
        let g = gear(4, 1).unwrap();
        let full = zero_forcing_number(&g, &opts()).unwrap();
        let reduced = zero_forcing_number(
            &g,
            &SearchOptions {
                symmetries: gear_symmetries(4, 1),
                ..opts()
            },
        )
        .unwrap();
        assert_eq!(full.z, reduced.z);
        assert!(reduced.sets_examined < full.sets_examined);
        // Canonical witnesses are a subset of the full list.
        let all = zero_forcing_number(&g, &all_opts()).unwrap();
        for w in &reduced.witnesses {
            assert!(all.witnesses.contains(w));
        }
    }

    #[test]
    fn empty_graph_is_rejected() {
        let g = Graph::from_edge_list(0, &[]).unwrap();
        assert!(matches!(
            zero_forcing_number(&g, &opts()),
            Err(SearchError::EmptyGraph)
        ));
    }

    #[test]
    fn single_vertex_graph() {
        let g = path(1).unwrap();
        let r = propagation_time(&g, &opts()).unwrap();
        assert_eq!((r.z, r.pt), (1, Some(0)));
    }

    #[test]
    fn edgeless_graph_needs_everything() {
        let g = Graph::from_edge_list(4, &[]).unwrap();
        let r = zero_forcing_number(&g, &opts()).unwrap();
        assert_eq!(r.z, 4);
    }

    // ---- path cover ----

    #[test]
    fn path_cover_frozen_values() {
        assert_eq!(path_cover_number(&path(7).unwrap()), Ok(1));
        assert_eq!(path_cover_number(&cycle(5).unwrap()), Ok(2));
        let mut edges = Vec::new();
        for u in 0..4 {
            for v in u + 1..4 {
                edges.push((u, v));
            }
        }
        let k4 = Graph::from_edge_list(4, &edges).unwrap();
        assert_eq!(path_cover_number(&k4), Ok(2));
        // The gear on 7 vertices splits into the induced paths 1-2-3-4 and
        // 5-6-0, and no spanning induced path exists because the center
        // would need degree 3 inside it.
        assert_eq!(path_cover_number(&gear(3, 1).unwrap()), Ok(2));
        // Each part uses at most two pendants, and a cover of the 6 pendant
        // helm by three parts exists.
        assert_eq!(path_cover_number(&helm(6, 1).unwrap()), Ok(3));
        assert_eq!(path_cover_number(&helm(5, 1).unwrap()), Ok(3));
    }

    #[test]
    fn path_cover_isolated_vertices() {
        let g = Graph::from_edge_list(3, &[]).unwrap();
        assert_eq!(path_cover_number(&g), Ok(3));
        assert_eq!(path_cover_number(&path(1).unwrap()), Ok(1));
    }

    #[test]
    fn path_cover_respects_ceiling() {
        let g = helm(5, 3).unwrap();
        assert_eq!(
            path_cover_number(&g),
            Err(SearchError::TooLarge {
                n: 21,
                ceiling: PATH_COVER_CEILING
            })
        );
        let small = gear(3, 1).unwrap();
        assert_eq!(
            path_cover_number_with_ceiling(&small, 6),
            Err(SearchError::TooLarge { n: 7, ceiling: 6 })
        );
        assert_eq!(path_cover_number_with_ceiling(&small, 7), Ok(2));
    }

    #[test]
    fn bound_chain_holds_on_families() {
        for g in [
            gear(3, 1).unwrap(),
            helm(4, 1).unwrap(),
            wheel(6).unwrap(),
            cycle(7).unwrap(),
            path(5).unwrap(),
        ] {
            let r = verify_bound_chain(&g, &opts()).unwrap();
            assert!(r.holds, "{r:?}");
            assert!(r.min_degree <= r.z);
            assert!(r.path_cover <= r.z);
            assert_eq!(r.chain_count, r.z);
        }
    }

    #[test]
    fn report_serializes_with_expected_fields() {
        let g = path(3).unwrap();
        let r = propagation_time(&g, &opts()).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        for field in [
            "z",
            "pt",
            "witnesses",
            "sets_examined",
            "closure_calls",
            "wall_time_ms",
        ] {
            assert!(json.get(field).is_some(), "missing {field}");
        }
        assert!(json.get("minimality").is_none());
    }
}
