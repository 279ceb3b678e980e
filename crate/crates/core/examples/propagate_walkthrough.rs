//! Watches the synchronous process run step by step: every vertex that
//! can force at the start of a step does so, all forces in a step land
//! at once, and the process stalls when no vertex has a unique white
//! neighbor.
//!
//! Run with `cargo run --example propagate_walkthrough`.

use zero_forcing::engine::{propagate, propagation_time_of_set, valid_forces};
use zero_forcing::generators::{gear, helm};
use zero_forcing::graph::{Graph, VertexSet};

fn walk(name: &str, g: &Graph, initial: &[usize]) {
    let b = VertexSet::from_indices(g.n(), initial.iter().copied());
    println!("{name}, starting blue {initial:?}");

    // The chronology records the forces of every step and the
    // expansion (cumulative blue set) after each one.
    let c = propagate(g, &b);
    for (k, step) in c.steps().iter().enumerate() {
        let forces: Vec<String> = step.iter().map(|f| format!("{f}")).collect();
        println!(
            "  step {}: [{}] expansion {:?}",
            k + 1,
            forces.join(", "),
            c.expansions()[k + 1].to_vec()
        );
    }
    if c.is_complete() {
        println!("  forcing set, completion time {}", c.completion_time());
    } else {
        println!("  stalls at {:?}", c.final_set().to_vec());
        // No blue vertex has a unique white neighbor at the stall.
        assert!(valid_forces(g, c.final_set()).is_empty());
    }
    println!();
}

fn main() {
    let g = gear(3, 1).expect("valid parameters");
    walk("gear(3,1)", &g, &[1, 5, 6]);

    // The hub plus two adjacent cycle vertices force as two arcs that
    // sweep around the cycle toward each other.
    let g = gear(4, 2).expect("valid parameters");
    walk("gear(4,2)", &g, &[0, 1, 12]);

    // Pendants make sets stall: a spoke with a white pendant and a
    // white cycle neighbor can never pick between them.
    let h = helm(6, 1).expect("valid parameters");
    walk("helm(6,1)", &h, &[7, 9, 11]);

    // propagation_time_of_set is None exactly when the set stalls.
    let h = helm(6, 1).expect("valid parameters");
    let stalls = VertexSet::from_indices(h.n(), [7, 9, 11]);
    assert_eq!(propagation_time_of_set(&h, &stalls), None);
    let forces = VertexSet::from_indices(h.n(), [7, 8, 9, 10, 11, 12]);
    println!(
        "helm(6,1) from all six pendants: pt {:?}",
        propagation_time_of_set(&h, &forces)
    );
}
