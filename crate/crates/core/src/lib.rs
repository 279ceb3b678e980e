//! Zero forcing on small graphs: the color change rule, synchronous and
//! relaxed forcing chronologies, forcing chains, exhaustive searches for the
//! zero forcing number, propagation time, and path cover number, and closed
//! form predictions for generalized gear and helm families.
//!
//! The crate is organized around a few small layers:
//!
//! * [`graph`] holds the dense bitset graph representation everything else
//!   works on, plus vertex role labels for generated families.
//! * [`generators`] builds gears, helms, wheels, paths, and cycles with a
//!   documented index layout.
//! * [`engine`] implements the color change rule once and derives the
//!   synchronous process, relaxed replays, closures, chain sets, and termini
//!   from it.
//! * [`search`] runs exhaustive bit-parallel searches for Z(G), pt(G), and
//!   the path cover number, with deterministic multi-worker splitting.
//! * [`verify`] compares searched values against the closed forms for gear
//!   and helm families over parameter grids and runs structural checks on
//!   the witness lists.
//! * [`formats`] and [`dot`] read and write the edge list, JSON, and DOT
//!   encodings used by the `zf` binary.
//!
//! The `examples/` directory is the guided tour: each file is a runnable
//! walkthrough of one capability (`cargo run --release --example
//! propagate_walkthrough`, `... --example verify_theorems`, and so on).

pub mod combo;
pub mod dot;
pub mod engine;
pub mod formats;
pub mod generators;
pub mod graph;
pub mod search;
pub mod verify;

pub use graph::{Graph, GraphError, Role, VertexSet};
