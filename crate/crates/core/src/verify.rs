//! Closed form predictions for the gear and helm families and the grid
//! runner that compares them against exhaustive search, including the
//! structural claims about minimum witnesses of the single pendant helm.

use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::mpsc;
use std::time::Instant;

use serde::Serialize;

use crate::combo::binomial;
use crate::engine::{chain_set, propagate};
use crate::generators::{gear, helm, pendant_index, GenError};
use crate::graph::{Graph, Role, Vertex, VertexSet};
use crate::search::{climb_start, propagation_time, SearchOptions};

/// Predicted zero forcing number and propagation time of a family member.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub z: usize,
    pub pt: usize,
}

fn invalid(family: &'static str, reason: String) -> GenError {
    GenError::InvalidParams { family, reason }
}

/// Closed form for the generalized gear: the zero forcing number is 3 for
/// every m >= 3, r >= 1, and the propagation time is m - 1 when m is odd
/// and r = 1, otherwise ceil(m(r+1)/2) - 2.
pub fn predict_gear(m: usize, r: usize) -> Result<Prediction, GenError> {
    if m < 3 {
        return Err(invalid("gear", format!("m = {m}, need m >= 3")));
    }
    if r < 1 {
        return Err(invalid("gear", format!("r = {r}, need r >= 1")));
    }
    let cycle_len = m * (r + 1);
    let pt = if r == 1 && m % 2 == 1 {
        m - 1
    } else {
        cycle_len.div_ceil(2) - 2
    };
    Ok(Prediction { z: 3, pt })
}

/// Closed form for the single pendant helm: special values for m = 3 and
/// m = 4, then z = ceil(m/2) and a propagation time of period four in m.
pub fn predict_helm(m: usize) -> Result<Prediction, GenError> {
    if m < 3 {
        return Err(invalid("helm", format!("m = {m}, need m >= 3")));
    }
    Ok(match m {
        3 => Prediction { z: 3, pt: 2 },
        4 => Prediction { z: 3, pt: 3 },
        _ => Prediction {
            z: m.div_ceil(2),
            pt: [6, 4, 5, 5][m % 4],
        },
    })
}

/// Closed form for the generalized helm: s = 1 routes to the single pendant
/// helm; for s > 1 the zero forcing number is m(s - 1) + 1 and the
/// propagation time is 2.
pub fn predict_generalized_helm(m: usize, s: usize) -> Result<Prediction, GenError> {
    if s < 1 {
        return Err(invalid("helm", format!("s = {s}, need s >= 1")));
    }
    if s == 1 {
        return predict_helm(m);
    }
    if m < 3 {
        return Err(invalid("helm", format!("m = {m}, need m >= 3")));
    }
    Ok(Prediction {
        z: m * (s - 1) + 1,
        pt: 2,
    })
}

/// One grid instance. Constructed through the grid helpers or with
/// validated parameters; the runner assumes parameters are in range.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilyCase {
    Gear { m: usize, r: usize },
    Helm { m: usize },
    GeneralizedHelm { m: usize, s: usize },
}

impl fmt::Display for FamilyCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilyCase::Gear { m, r } => write!(f, "gear({m},{r})"),
            FamilyCase::Helm { m } => write!(f, "helm({m})"),
            FamilyCase::GeneralizedHelm { m, s } => write!(f, "helm({m},{s})"),
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseStatus {
    Match,
    Mismatch,
    BudgetExceeded,
}

/// One structural claim checked across a witness list.
#[derive(Clone, Debug, Serialize)]
pub struct StructuralCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremCase {
    #[serde(flatten)]
    pub case: FamilyCase,
    pub n: usize,
    pub predicted: Prediction,
    pub computed: Option<Prediction>,
    pub status: CaseStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    pub structural: Vec<StructuralCheck>,
    pub witnesses_found: usize,
    pub sets_examined: u64,
    pub wall_time_ms: f64,
}

/// Feasibility gate for a grid case: vertex count cap and a cap on the
/// estimated number of candidate sets the search would enumerate.
#[derive(Copy, Clone, Debug)]
pub struct Budget {
    pub max_vertices: usize,
    pub max_candidate_sets: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_vertices: 30,
            max_candidate_sets: 50_000_000,
        }
    }
}

/// All gear cases over inclusive parameter ranges, validated up front.
pub fn gear_grid(
    ms: std::ops::RangeInclusive<usize>,
    rs: std::ops::RangeInclusive<usize>,
) -> Result<Vec<FamilyCase>, GenError> {
    let mut cases = Vec::new();
    for m in ms {
        for r in rs.clone() {
            predict_gear(m, r)?;
            cases.push(FamilyCase::Gear { m, r });
        }
    }
    Ok(cases)
}

/// All single pendant helm cases over an inclusive range of m.
pub fn helm_grid(ms: std::ops::RangeInclusive<usize>) -> Result<Vec<FamilyCase>, GenError> {
    let mut cases = Vec::new();
    for m in ms {
        predict_helm(m)?;
        cases.push(FamilyCase::Helm { m });
    }
    Ok(cases)
}

/// All generalized helm cases over inclusive ranges; s = 1 entries are
/// valid and route to the single pendant prediction.
pub fn generalized_helm_grid(
    ms: std::ops::RangeInclusive<usize>,
    ss: std::ops::RangeInclusive<usize>,
) -> Result<Vec<FamilyCase>, GenError> {
    let mut cases = Vec::new();
    for m in ms {
        for s in ss.clone() {
            predict_generalized_helm(m, s)?;
            cases.push(FamilyCase::GeneralizedHelm { m, s });
        }
    }
    Ok(cases)
}

/// Runs every case, comparing search against prediction and evaluating the
/// structural claims. Cases are independent and are dispatched to `workers`
/// threads; the result order matches the input order regardless.
pub fn run_grid(cases: &[FamilyCase], budget: &Budget, workers: usize) -> Vec<TheoremCase> {
    let workers = workers.max(1).min(cases.len().max(1));
    if workers == 1 {
        return cases.iter().map(|c| run_case(c, budget)).collect();
    }
    let next = AtomicUsize::new(0);
    let (tx, rx) = mpsc::channel();
    std::thread::scope(|scope| {
        for _ in 0..workers {
            let tx = tx.clone();
            let next = &next;
            scope.spawn(move || loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= cases.len() {
                    break;
                }
                tx.send((i, run_case(&cases[i], budget)))
                    .expect("receiver alive");
            });
        }
        drop(tx);
        let mut slots: Vec<Option<TheoremCase>> = cases.iter().map(|_| None).collect();
        for (i, done) in rx {
            slots[i] = Some(done);
        }
        slots
            .into_iter()
            .map(|s| s.expect("every case dispatched"))
            .collect()
    })
}

fn run_case(case: &FamilyCase, budget: &Budget) -> TheoremCase {
    let start = Instant::now();
    let (g, predicted, opts) = match *case {
        FamilyCase::Gear { m, r } => (
            gear(m, r).expect("validated parameters"),
            predict_gear(m, r).expect("validated parameters"),
            SearchOptions {
                all_witnesses: true,
                ..SearchOptions::default()
            },
        ),
        FamilyCase::Helm { m } => (
            helm(m, 1).expect("validated parameters"),
            predict_helm(m).expect("validated parameters"),
            SearchOptions {
                all_witnesses: true,
                pendant_bound: true,
                ..SearchOptions::default()
            },
        ),
        FamilyCase::GeneralizedHelm { m, s } => (
            helm(m, s).expect("validated parameters"),
            predict_generalized_helm(m, s).expect("validated parameters"),
            SearchOptions {
                all_witnesses: true,
                pendant_bound: true,
                ..SearchOptions::default()
            },
        ),
    };
    let n = g.n();

    let mut estimate: u64 = 0;
    for k in climb_start(&g, &opts)..=predicted.z.min(n) {
        estimate = estimate.saturating_add(binomial(n, k));
    }
    if n > budget.max_vertices || estimate > budget.max_candidate_sets {
        return TheoremCase {
            case: *case,
            n,
            predicted,
            computed: None,
            status: CaseStatus::BudgetExceeded,
            detail: Some(format!(
                "about {estimate} candidate sets on {n} vertices exceeds the budget"
            )),
            structural: Vec::new(),
            witnesses_found: 0,
            sets_examined: 0,
            wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
        };
    }

    let report = propagation_time(&g, &opts).expect("family graphs are nonempty");
    let computed = Prediction {
        z: report.z,
        pt: report.pt.expect("propagation time computed"),
    };

    let mut structural = vec![min_degree_check(&g, report.z)];
    match *case {
        FamilyCase::Helm { m } if m >= 5 => {
            structural.extend(helm_witness_checks(&g, m, &report.witnesses));
        }
        FamilyCase::GeneralizedHelm { m, s } if s >= 2 => {
            structural.push(spoke_floor_check(m, s, &report.witnesses));
        }
        _ => {}
    }

    let values_match = computed == predicted;
    let structural_ok = structural.iter().all(|c| c.passed);
    let status = if values_match && structural_ok {
        CaseStatus::Match
    } else {
        CaseStatus::Mismatch
    };
    let detail = (!values_match).then(|| {
        format!(
            "predicted z = {}, pt = {}; computed z = {}, pt = {}",
            predicted.z, predicted.pt, computed.z, computed.pt
        )
    });
    TheoremCase {
        case: *case,
        n,
        predicted,
        computed: Some(computed),
        status,
        detail,
        structural,
        witnesses_found: report.witnesses.len(),
        sets_examined: report.sets_examined,
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

fn min_degree_check(g: &Graph, z: usize) -> StructuralCheck {
    let delta = g.min_degree().expect("nonempty");
    StructuralCheck {
        name: "min_degree_bound".into(),
        passed: delta <= z,
        detail: format!("min degree {delta} <= z = {z}"),
    }
}

/// The witness shape claims for the single pendant helm with m >= 5.
///
/// Pendants per chain: chain sets of minimum witnesses have exactly two
/// pendant vertices in every chain when m is even; when m is odd exactly
/// one chain has a single pendant and the rest have two.
///
/// Windows: a window is a position j with the pendants of spokes j, j+1,
/// j+2 (cyclically) all in the witness. Even m: every minimum witness has
/// exactly one window. Odd m: never three windows, and a witness consisting
/// solely of pendants has at least one.
fn helm_witness_checks(g: &Graph, m: usize, witnesses: &[Vec<Vertex>]) -> Vec<StructuralCheck> {
    let even = m.is_multiple_of(2);
    let mut chains_passed = true;
    let mut chains_detail = format!("{} witnesses checked", witnesses.len());
    let mut windows_passed = true;
    let mut windows_detail = chains_detail.clone();
    for w in witnesses {
        let b = VertexSet::from_indices(g.n(), w.iter().copied());
        let chains = chain_set(&propagate(g, &b)).expect("witness forces");
        let mut pendant_counts: Vec<usize> = chains
            .chains()
            .iter()
            .map(|chain| {
                chain
                    .iter()
                    .filter(|&&v| g.role(v) == Role::Pendant)
                    .count()
            })
            .collect();
        pendant_counts.sort_unstable();
        let profile_ok = if even {
            pendant_counts.iter().all(|&c| c == 2)
        } else {
            pendant_counts.first() == Some(&1) && pendant_counts[1..].iter().all(|&c| c == 2)
        };
        if chains_passed && !profile_ok {
            chains_passed = false;
            chains_detail = format!("witness {w:?} has pendant profile {pendant_counts:?}");
        }

        let windows = pendant_window_count(m, w);
        let all_pendant = w.iter().all(|&v| g.role(v) == Role::Pendant);
        let windows_ok = if even {
            windows == 1
        } else {
            windows <= 2 && (!all_pendant || windows >= 1)
        };
        if windows_passed && !windows_ok {
            windows_passed = false;
            windows_detail =
                format!("witness {w:?} has {windows} windows (all pendant: {all_pendant})");
        }
    }
    vec![
        StructuralCheck {
            name: "pendants_per_chain".into(),
            passed: chains_passed,
            detail: chains_detail,
        },
        StructuralCheck {
            name: "consecutive_pendant_windows".into(),
            passed: windows_passed,
            detail: windows_detail,
        },
    ]
}

/// Number of cyclic positions j such that the witness holds the pendants of
/// spokes j, j+1, and j+2 of the single pendant helm on m spokes.
fn pendant_window_count(m: usize, witness: &[Vertex]) -> usize {
    let has = |i: usize| {
        let spoke = (i - 1) % m + 1;
        witness.binary_search(&(m + spoke)).is_ok()
    };
    (1..=m)
        .filter(|&j| has(j) && has(j + 1) && has(j + 2))
        .count()
}

/// For the generalized helm with s > 1: every minimum witness keeps at
/// least s - 1 pendants of every spoke, because a spoke can force only one
/// of its white pendants.
fn spoke_floor_check(m: usize, s: usize, witnesses: &[Vec<Vertex>]) -> StructuralCheck {
    let mut passed = true;
    let mut detail = format!("{} witnesses checked", witnesses.len());
    'outer: for w in witnesses {
        for i in 1..=m {
            let count = (1..=s)
                .filter(|&j| w.binary_search(&pendant_index(m, s, i, j)).is_ok())
                .count();
            if count < s - 1 {
                passed = false;
                detail = format!("witness {w:?} keeps {count} pendants of spoke {i}");
                break 'outer;
            }
        }
    }
    StructuralCheck {
        name: "pendants_per_spoke_floor".into(),
        passed,
        detail,
    }
}

/// Human readable table of grid results, one line per case.
pub fn render_table(cases: &[TheoremCase]) -> String {
    let mut out = format!(
        "{:<12} {:>4}  {:<14} {:<14} {:<16} {:<10} {:>10} {:>9}\n",
        "case", "n", "predicted", "computed", "status", "checks", "sets", "ms"
    );
    for c in cases {
        let predicted = format!("z={} pt={}", c.predicted.z, c.predicted.pt);
        let computed = match &c.computed {
            Some(p) => format!("z={} pt={}", p.z, p.pt),
            None => "-".into(),
        };
        let status = match c.status {
            CaseStatus::Match => "match",
            CaseStatus::Mismatch => "MISMATCH",
            CaseStatus::BudgetExceeded => "budget exceeded",
        };
        let checks = format!(
            "{}/{} ok",
            c.structural.iter().filter(|s| s.passed).count(),
            c.structural.len()
        );
        out.push_str(&format!(
            "{:<12} {:>4}  {:<14} {:<14} {:<16} {:<10} {:>10} {:>9.1}\n",
            c.case.to_string(),
            c.n,
            predicted,
            computed,
            status,
            checks,
            c.sets_examined,
            c.wall_time_ms
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gear_prediction_table() {
        let expect = [
            ((3, 1), 2),
            ((3, 2), 3),
            ((3, 3), 4),
            ((4, 1), 2),
            ((4, 2), 4),
            ((4, 3), 6),
            ((5, 1), 4),
            ((5, 2), 6),
            ((5, 3), 8),
            ((6, 1), 4),
            ((6, 2), 7),
            ((6, 3), 10),
        ];
        for ((m, r), pt) in expect {
            let p = predict_gear(m, r).unwrap();
            assert_eq!((p.z, p.pt), (3, pt), "gear({m},{r})");
        }
    }

    #[test]
    fn helm_prediction_ladder() {
        let expect = [
            (3, 3, 2),
            (4, 3, 3),
            (5, 3, 4),
            (6, 3, 5),
            (7, 4, 5),
            (8, 4, 6),
            (9, 5, 4),
            (10, 5, 5),
            (11, 6, 5),
            (12, 6, 6),
        ];
        for (m, z, pt) in expect {
            let p = predict_helm(m).unwrap();
            assert_eq!((p.z, p.pt), (z, pt), "helm({m})");
        }
    }

    #[test]
    fn generalized_helm_predictions() {
        for (m, s, z) in [(3, 2, 4), (3, 3, 7), (4, 2, 5), (4, 3, 9), (6, 4, 19)] {
            let p = predict_generalized_helm(m, s).unwrap();
            assert_eq!((p.z, p.pt), (z, 2), "helm({m},{s})");
        }
        // s = 1 routes to the single pendant prediction.
        assert_eq!(
            predict_generalized_helm(7, 1).unwrap(),
            predict_helm(7).unwrap()
        );
    }

    #[test]
    fn predictions_reject_bad_parameters() {
        assert!(predict_gear(2, 1).is_err());
        assert!(predict_gear(3, 0).is_err());
        assert!(predict_helm(2).is_err());
        assert!(predict_generalized_helm(2, 2).is_err());
        assert!(predict_generalized_helm(3, 0).is_err());
    }

    #[test]
    fn grid_builders_expand_ranges() {
        let cases = gear_grid(3..=4, 1..=2).unwrap();
        assert_eq!(cases.len(), 4);
        assert_eq!(cases[0], FamilyCase::Gear { m: 3, r: 1 });
        assert!(gear_grid(2..=3, 1..=1).is_err());
        assert_eq!(helm_grid(3..=5).unwrap().len(), 3);
        assert_eq!(generalized_helm_grid(3..=4, 2..=3).unwrap().len(), 4);
    }

    #[test]
    fn small_grids_match() {
        let mut cases = gear_grid(3..=4, 1..=2).unwrap();
        cases.extend(helm_grid(3..=6).unwrap());
        let results = run_grid(&cases, &Budget::default(), 2);
        assert_eq!(results.len(), cases.len());
        for r in &results {
            assert_eq!(r.status, CaseStatus::Match, "{}: {:?}", r.case, r.detail);
            assert!(r.structural.iter().all(|c| c.passed));
        }
        // Structural witness checks appear exactly for helm m >= 5.
        let by_case = |fc: FamilyCase| results.iter().find(|r| r.case == fc).unwrap();
        assert_eq!(by_case(FamilyCase::Helm { m: 3 }).structural.len(), 1);
        assert_eq!(by_case(FamilyCase::Helm { m: 5 }).structural.len(), 3);
        assert_eq!(by_case(FamilyCase::Helm { m: 6 }).structural.len(), 3);
    }

    #[test]
    fn generalized_grid_matches() {
        let cases = generalized_helm_grid(3..=3, 2..=3).unwrap();
        let results = run_grid(&cases, &Budget::default(), 1);
        for r in &results {
            assert_eq!(r.status, CaseStatus::Match, "{}", r.case);
            assert!(r
                .structural
                .iter()
                .any(|c| c.name == "pendants_per_spoke_floor" && c.passed));
        }
    }

    #[test]
    fn budget_gate_reports_not_fails() {
        let cases = gear_grid(5..=5, 2..=2).unwrap();
        let tight = Budget {
            max_vertices: 10,
            max_candidate_sets: 1000,
        };
        let results = run_grid(&cases, &tight, 1);
        assert_eq!(results[0].status, CaseStatus::BudgetExceeded);
        assert!(results[0].computed.is_none());
        assert!(results[0].detail.as_deref().unwrap().contains("budget"));
    }

    #[test]
    fn result_order_is_input_order_despite_threads() {
        let cases = gear_grid(3..=5, 1..=1).unwrap();
        let a = run_grid(&cases, &Budget::default(), 1);
        let b = run_grid(&cases, &Budget::default(), 3);
        let key = |r: &TheoremCase| (r.case, r.status, r.computed);
        assert_eq!(
            a.iter().map(key).collect::<Vec<_>>(),
            b.iter().map(key).collect::<Vec<_>>()
        );
    }

    #[test]
    fn case_json_shape() {
        let cases = helm_grid(5..=5).unwrap();
        let results = run_grid(&cases, &Budget::default(), 1);
        let json = serde_json::to_value(&results[0]).unwrap();
        assert_eq!(json["family"], "helm");
        assert_eq!(json["m"], 5);
        assert_eq!(json["status"], "match");
        assert_eq!(json["predicted"]["z"], 3);
        assert!(json["structural"].as_array().unwrap().len() == 3);
    }

    #[test]
    fn table_lists_every_case() {
        let cases = gear_grid(3..=3, 1..=2).unwrap();
        let results = run_grid(&cases, &Budget::default(), 1);
        let table = render_table(&results);
        assert!(table.contains("gear(3,1)"));
        assert!(table.contains("gear(3,2)"));
        assert!(table.contains("match"));
    }

    #[test]
    fn window_counting_wraps() {
        // helm(6): pendants 7..12. Pendants of spokes 5, 6, 1 form the
        // wrapped window at j = 5 and no other.
        assert_eq!(pendant_window_count(6, &[7, 11, 12]), 1);
        assert_eq!(pendant_window_count(6, &[7, 8, 9]), 1);
        // A four in a row run counts as two windows.
        assert_eq!(pendant_window_count(6, &[7, 8, 9, 10]), 2);
        assert_eq!(pendant_window_count(6, &[7, 9, 11]), 0);
    }
}
