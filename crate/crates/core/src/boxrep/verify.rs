use std::fmt;

use serde::Serialize;

use super::model::BoxRepresentation;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// The representation and the graph disagree on the vertex count.
    VertexCount { graph_n: usize, rep_n: usize },
    /// Dimension `dim` does not list exactly one interval per vertex.
    DimensionSize { dim: usize, found: usize, n: usize },
    /// An edge whose intervals are disjoint in the listed dimensions: some
    /// dimension is not a supergraph of `G`.
    MissingEdge {
        u: usize,
        v: usize,
        disjoint_dims: Vec<usize>,
    },
    /// A non-edge whose intervals meet in every dimension.
    UnkilledNonEdge { u: usize, v: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::VertexCount { graph_n, rep_n } => {
                write!(
                    f,
                    "graph has {graph_n} vertices, representation has {rep_n}"
                )
            }
            Violation::DimensionSize { dim, found, n } => {
                write!(f, "dimension {dim} has {found} intervals, expected {n}")
            }
            Violation::MissingEdge {
                u,
                v,
                disjoint_dims,
            } => write!(
                f,
                "edge ({u}, {v}) is missing: intervals disjoint in dimensions {disjoint_dims:?}"
            ),
            Violation::UnkilledNonEdge { u, v } => write!(
                f,
                "non-edge ({u}, {v}) is unkilled: intervals meet in every dimension"
            ),
        }
    }
}

/// Checks that box intersection reproduces `g` exactly. All comparisons are
/// on exact rationals.
pub fn verify(g: &Graph, rep: &BoxRepresentation) -> Result<(), Vec<Violation>> {
    let n = g.n();
    let mut out = Vec::new();
    if rep.n != n {
        out.push(Violation::VertexCount {
            graph_n: n,
            rep_n: rep.n,
        });
    }
    for (dim, d) in rep.dims.iter().enumerate() {
        if d.len() != n {
            out.push(Violation::DimensionSize {
                dim,
                found: d.len(),
                n,
            });
        }
    }
    if !out.is_empty() {
        return Err(out);
    }
    for u in 0..n {
        for v in u + 1..n {
            let disjoint: Vec<usize> = rep
                .dims
                .iter()
                .enumerate()
                .filter(|(_, d)| !d.get(u).intersects(d.get(v)))
                .map(|(i, _)| i)
                .collect();
            match (g.has_edge(u, v), disjoint.is_empty()) {
                (true, false) => out.push(Violation::MissingEdge {
                    u,
                    v,
                    disjoint_dims: disjoint,
                }),
                (false, true) => out.push(Violation::UnkilledNonEdge { u, v }),
                _ => {}
            }
        }
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

/// Per-dimension supergraph check: dimension `d` must contain every edge.
pub fn dimension_is_supergraph(g: &Graph, rep: &BoxRepresentation, d: usize) -> bool {
    let dim = &rep.dims[d];
    g.edges().all(|(u, v)| dim.get(u).intersects(dim.get(v)))
}
