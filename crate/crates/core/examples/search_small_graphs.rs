//! Exhaustive searches on small graphs: the zero forcing number, the
//! propagation time, witness enumeration and a minimality certificate,
//! the path cover number, and the chain of bounds that ties them all
//! together.
//!
//! Run with `cargo run --example search_small_graphs`.

use zero_forcing::generators::{gear, helm, path};
use zero_forcing::search::{
    path_cover_number, propagation_time, verify_bound_chain, zero_forcing_number, SearchOptions,
};

fn main() {
    let opts = SearchOptions {
        all_witnesses: true,
        prove_minimality: true,
        ..SearchOptions::default()
    };

    // The search climbs cardinalities from max(1, min degree) and stops
    // at the first stratum containing a forcing set.
    let g = gear(3, 1).expect("valid parameters");
    let report = zero_forcing_number(&g, &opts).expect("small graph");
    println!("gear(3,1): z = {}", report.z);
    println!("  witnesses: {:?}", report.witnesses);
    let proof = report.minimality.as_ref().expect("requested");
    println!(
        "  minimality: {} sets of size {} examined, {} force",
        proof.sets_examined, proof.cardinality, proof.forcing_sets_found
    );

    // Propagation time minimizes completion time over every minimum
    // forcing set, so the witnesses that attain it can be a strict
    // subset of all witnesses.
    let report = propagation_time(&g, &opts).expect("small graph");
    println!(
        "  pt = {} attained by {} of {} witnesses",
        report.pt.expect("forcing sets exist"),
        report.pt_witnesses.len(),
        report.witnesses.len()
    );

    // Asking only for the first witness's completion time is cheaper
    // and the report says the value is just an upper bound.
    let first = SearchOptions {
        pt_first_witness: true,
        ..SearchOptions::default()
    };
    let h = helm(4, 3).expect("valid parameters");
    let report = propagation_time(&h, &first).expect("small graph");
    println!(
        "helm(4,3): z = {}, pt <= {} (upper bound: {})",
        report.z,
        report.pt.expect("forcing sets exist"),
        report.pt_is_upper_bound
    );

    // The path cover number: fewest vertex disjoint induced paths that
    // cover the graph.
    for (name, g) in [
        ("path(7)", path(7).expect("valid parameters")),
        ("gear(3,1)", gear(3, 1).expect("valid parameters")),
        ("helm(6,1)", helm(6, 1).expect("valid parameters")),
    ] {
        println!(
            "{name}: path cover {}",
            path_cover_number(&g).expect("small")
        );
    }

    // Two bounds pin z from below and above the path cover: min degree
    // is at most z, and the chains of any minimum witness cover the
    // graph with z induced paths, so the path cover is at most z too.
    let report = verify_bound_chain(
        &helm(5, 1).expect("valid parameters"),
        &SearchOptions::default(),
    )
    .expect("small");
    println!(
        "helm(5,1): min_degree {} <= z {}, path_cover {} <= chain_count {} = z: holds {}",
        report.min_degree, report.z, report.path_cover, report.chain_count, report.holds
    );
}
