//! Relaxed chronologies: a hand written schedule of forces where each
//! step performs any subset of the currently valid forces, including
//! none at all. The engine validates every force against the blue set
//! as it stood before the step and rejects anything stale.
//!
//! The payoff of scheduling by hand is control over the chain set: the
//! script below sweeps two arcs around a gear's outer cycle so the hub
//! never forces, leaving it as a singleton chain.
//!
//! Run with `cargo run --example relaxed_chronology`.

use zero_forcing::engine::{chain_set, propagation_time_of_set, run_relaxed, terminus, Force};
use zero_forcing::generators::gear;
use zero_forcing::graph::VertexSet;

/// Script for gear(m,r) from blue {hub, 1, L} where L = m(r+1): vertex
/// `lo` walks clockwise and `hi` counterclockwise until the arcs meet.
/// Both moves are valid in the same step because each source's only
/// white neighbor is the next vertex on its own arc.
fn two_arc_script(l: usize) -> (Vec<usize>, Vec<Vec<Force>>) {
    let (mut lo, mut hi) = (1, l);
    let mut steps = Vec::new();
    while hi - lo > 1 {
        let mut step = vec![Force::new(lo, lo + 1)];
        if hi - lo > 2 {
            step.push(Force::new(hi, hi - 1));
            hi -= 1;
        }
        lo += 1;
        steps.push(step);
    }
    (vec![0, 1, l], steps)
}

fn main() {
    let g = gear(4, 2).expect("valid parameters");
    let l = g.n() - 1;
    let (initial, steps) = two_arc_script(l);
    println!("gear(4,2), script from {initial:?}:");
    for (k, step) in steps.iter().enumerate() {
        let text: Vec<String> = step.iter().map(|f| format!("{f}")).collect();
        println!("  step {}: [{}]", k + 1, text.join(", "));
    }

    let b = VertexSet::from_indices(g.n(), initial.iter().copied());
    let c = run_relaxed(&g, &b, &steps).expect("script is valid");
    assert!(c.is_complete());
    println!("completes in {} steps", c.completion_time());

    // Each chain starts at an initial blue vertex and lists the
    // vertices it forced, in order. The hub forced nothing, so its
    // chain is the singleton. Every chain is an induced path.
    let chains = chain_set(&c).expect("complete chronology");
    println!("chains:");
    for chain in chains.chains() {
        println!("  {chain:?}");
        assert!(g.is_induced_path(chain).expect("vertices in range"));
    }

    // The terminus collects the vertices that forced nothing: the last
    // vertex of every chain. It is itself a forcing set, and never a
    // slower one than the original.
    let t = terminus(&c).expect("complete chronology");
    println!("terminus: {:?}", t.to_vec());
    let original = propagation_time_of_set(&g, &b).expect("forcing set");
    let reversed = propagation_time_of_set(&g, &t).expect("terminus forces");
    println!("pt from initial {original}, pt from terminus {reversed}");
    assert!(reversed <= original);

    // Relaxed steps may also wait. Padding the script with empty steps
    // changes the completion time but not the outcome.
    let mut padded: Vec<Vec<Force>> = vec![Vec::new()];
    for step in &steps {
        padded.push(step.clone());
        padded.push(Vec::new());
    }
    let slow = run_relaxed(&g, &b, &padded).expect("waiting is allowed");
    println!(
        "padded script completes in {} steps, same final set {}",
        slow.completion_time(),
        slow.final_set() == c.final_set()
    );

    // Validation is strict: a force whose source still has two white
    // neighbors is rejected with the step number.
    let bogus = vec![vec![Force::new(0, 3)]];
    let err = run_relaxed(&g, &b, &bogus).unwrap_err();
    println!("rejected script: {err}");
}
