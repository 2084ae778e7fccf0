//! Recognition predicates and graph parameters: chordality, asteroidal
//! triples and dominating pairs, claw number, coloring, and (unit) interval
//! recognition.

mod asteroidal;
mod chordal;
mod claw;
mod coloring;

pub use asteroidal::{
    diametral_dominating_pair, find_asteroidal_triple, is_at_free, is_dominating_pair,
    AvoidanceTable, DominatingPair,
};
pub use chordal::{
    chordality, find_chordless_cycle, is_chordal, is_perfect_elimination, mcs_ordering, Chordality,
    EliminationOrdering,
};
pub use claw::{
    claw_number, claw_number_with_model, is_claw_free, ClawWitness, MAX_EXACT_NEIGHBORHOOD,
};
pub use coloring::{color, ColorMode, Coloring, DEFAULT_EXACT_LIMIT};

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error("graph is empty or disconnected")]
    Disconnected,
    #[error("a dominating pair needs two distinct vertices, got {0} twice")]
    SameVertex(usize),
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),
    #[error("no diametral pair is a dominating pair: the graph is not AT-free")]
    NoDominatingPair,
    #[error("vertex {vertex} has {degree} neighbors; exact claw search is capped at {cap}")]
    NeighborhoodTooLarge {
        vertex: usize,
        degree: usize,
        cap: usize,
    },
    #[error("exact coloring refused: n = {n} exceeds limit {limit}; use heuristic mode")]
    ExactLimit { n: usize, limit: usize },
}

/// Interval graphs are exactly the chordal AT-free graphs.
pub fn is_interval(g: &Graph) -> bool {
    is_chordal(g) && is_at_free(g)
}

/// Unit interval graphs are exactly the claw-free interval graphs.
pub fn is_unit_interval(g: &Graph) -> bool {
    is_interval(g) && is_claw_free(g)
}
