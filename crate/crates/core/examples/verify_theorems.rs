//! Checks the closed form predictions for gears and helms against
//! exhaustive search over a parameter grid and prints the score table.
//!
//! Every case carries structural checks alongside the two numbers: the
//! min degree bound always, and for helms the pendant distribution of
//! every witness's chain set.
//!
//! Run with `cargo run --release --example verify_theorems`.

use zero_forcing::verify::{
    gear_grid, generalized_helm_grid, helm_grid, predict_gear, predict_helm, render_table,
    run_grid, Budget, CaseStatus,
};

fn main() {
    // The predictions alone, no search involved.
    println!("predicted values:");
    for (m, r) in [(3, 1), (5, 1), (5, 2), (8, 3)] {
        let p = predict_gear(m, r).expect("valid parameters");
        println!("  gear({m},{r}): z = {} pt = {}", p.z, p.pt);
    }
    for m in [3, 4, 5, 9] {
        let p = predict_helm(m).expect("valid parameters");
        println!("  helm({m}): z = {} pt = {}", p.z, p.pt);
    }
    println!();

    // Now the full grids. The budget caps the candidate count per case;
    // a case over budget is reported, not failed.
    let mut cases = gear_grid(3..=6, 1..=3).expect("valid grid");
    cases.extend(helm_grid(3..=10).expect("valid grid"));
    cases.extend(generalized_helm_grid(3..=4, 2..=3).expect("valid grid"));

    let results = run_grid(&cases, &Budget::default(), 0);
    print!("{}", render_table(&results));

    let mismatches = results
        .iter()
        .filter(|c| c.status == CaseStatus::Mismatch)
        .count();
    let skipped = results
        .iter()
        .filter(|c| c.status == CaseStatus::BudgetExceeded)
        .count();
    println!(
        "\n{} cases, {} mismatches, {} over budget",
        results.len(),
        mismatches,
        skipped
    );
    assert_eq!(mismatches, 0);
}
