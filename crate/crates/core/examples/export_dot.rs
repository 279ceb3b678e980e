//! Renders graphs to Graphviz DOT. Role labels pick the node shapes
//! (hub doubled, pendants square), a blue set fills its vertices, and
//! the chains of a complete chronology are drawn bold.
//!
//! Run with `cargo run --example export_dot`, then e.g.
//! `dot -Tsvg helm_chains.dot -o helm_chains.svg`.

use zero_forcing::dot::{to_dot, to_dot_with_chains};
use zero_forcing::engine::{chain_set, propagate};
use zero_forcing::generators::{gear, helm};
use zero_forcing::graph::VertexSet;

fn main() {
    // Plain structure, no coloring.
    let g = gear(5, 1).expect("valid parameters");
    let text = to_dot(&g, None, &[]);
    std::fs::write("gear.dot", &text).expect("writable directory");
    println!("wrote gear.dot ({} bytes)", text.len());

    // A forcing set with its chains. The blue set fills, every forced
    // edge along a chain is drawn with a heavier pen.
    let h = helm(5, 1).expect("valid parameters");
    let b = VertexSet::from_indices(h.n(), [0, 6, 7, 8]);
    let c = propagate(&h, &b);
    assert!(c.is_complete(), "chosen set forces");
    let chains = chain_set(&c).expect("complete chronology");
    let text = to_dot_with_chains(&h, &b, &chains);
    std::fs::write("helm_chains.dot", &text).expect("writable directory");
    println!("wrote helm_chains.dot, chains:");
    for chain in chains.chains() {
        println!("  {chain:?}");
    }

    // A stalled set still renders, just without chains.
    let b = VertexSet::from_indices(h.n(), [6, 8]);
    let c = propagate(&h, &b);
    assert!(!c.is_complete());
    let text = to_dot(&h, Some(c.final_set()), &[]);
    std::fs::write("helm_stalled.dot", &text).expect("writable directory");
    println!(
        "wrote helm_stalled.dot (stalls at {:?})",
        c.final_set().to_vec()
    );
}
