//! Box and cube representations of asteroidal-triple-free graphs.
//!
//! * [`graph`]: the graph type, edge-list and graph6 codecs, metrics, and
//!   corpus generators.
//! * [`invariants`]: AT-freeness, dominating pairs, claw number, chordality,
//!   (unit) interval recognition, coloring.
//! * [`triangulate`]: minimal triangulations and interval models.
//! * [`boxrep`]: the two-dimensional girth-five construction, the
//!   one-dimension-per-color construction, and an exact verifier.
//! * [`cubebound`]: cubicity bounds and brute-force exact oracles.
//! * [`cli`]: the `atbox` command line.

pub mod boxrep;
pub mod cli;
pub mod corpus;
pub mod cubebound;
pub mod graph;
pub mod invariants;
pub mod triangulate;

pub use graph::Graph;
