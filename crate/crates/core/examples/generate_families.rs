//! Builds one graph from each family and shows the vertex layout,
//! role labels, and the three serialization formats.
//!
//! Run with `cargo run --example generate_families`.

use zero_forcing::formats::{write_edge_list, GraphJson};
use zero_forcing::generators::{cycle, gear, gear_index_map, helm, helm_index_map, wheel};
use zero_forcing::graph::{Graph, Role};

fn describe(name: &str, g: &Graph) {
    println!("{name}: n = {}", g.n());
    let mut by_role: Vec<(Role, Vec<usize>)> = Vec::new();
    for v in 0..g.n() {
        let role = g.role(v);
        match by_role.iter_mut().find(|(r, _)| *r == role) {
            Some((_, vs)) => vs.push(v),
            None => by_role.push((role, vec![v])),
        }
    }
    for (role, vs) in &by_role {
        println!("  {role:?}: {vs:?}");
    }
}

fn main() {
    // A gear with m spokes and r intermediate cycle vertices between
    // consecutive spokes. Vertex 0 is the hub, the outer cycle is
    // 1..=m(r+1), and spoke vertices sit at the indices divisible by r+1.
    let g = gear(4, 2).expect("valid parameters");
    describe("gear(4,2)", &g);
    println!("  named layout:");
    for (name, idx) in gear_index_map(4, 2) {
        print!(" {name}={idx}");
    }
    println!("\n");

    // A helm: wheel on m spokes plus s pendants hanging off each spoke.
    let h = helm(5, 1).expect("valid parameters");
    describe("helm(5,1)", &h);
    let h2 = helm(3, 2).expect("valid parameters");
    describe("helm(3,2)", &h2);
    println!("  named layout:");
    for (name, idx) in helm_index_map(3, 2) {
        print!(" {name}={idx}");
    }
    println!("\n");

    describe("wheel(6)", &wheel(6).expect("valid parameters"));
    describe("cycle(5)", &cycle(5).expect("valid parameters"));
    println!();

    // Edge list: a header line `n m`, then one edge per line.
    let small = gear(3, 1).expect("valid parameters");
    println!("gear(3,1) as an edge list:");
    print!("{}", write_edge_list(&small));

    // JSON carries the labels and an optional name-to-index map, so a
    // consumer can find the hub or a particular pendant without
    // recomputing the layout.
    let json = GraphJson::from_graph(&small).with_index_map(gear_index_map(3, 1));
    println!("\ngear(3,1) as JSON:");
    println!(
        "{}",
        serde_json::to_string_pretty(&json).expect("graph serializes")
    );

    // Parameter validation is part of the constructors.
    let err = gear(2, 1).unwrap_err();
    println!("\ngear(2,1) is rejected: {err}");
}
