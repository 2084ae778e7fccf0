//! Simple undirected graphs on vertices `0..n`.
//!
//! Adjacency is held twice: as a bit matrix for constant-time queries and
//! word-parallel set operations, and as sorted neighbor lists for traversal.

mod generate;
mod graph6;
mod io;
mod metrics;

pub use generate::{generate, Family, GraphFamilySpec, GIRTH5_RETRY_BUDGET};
pub use graph6::{from_graph6, to_graph6};
pub use io::{parse_edge_list, to_edge_list};
pub use metrics::{bfs_layers, connected_components, diameter, girth, is_connected};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    Loop(usize),
    #[error("graph6: byte {byte} at offset {offset} is outside 63..=126")]
    Graph6InvalidByte { byte: u8, offset: usize },
    #[error("graph6: expected {expected} data bytes, found {found}")]
    Graph6Truncated { expected: usize, found: usize },
    #[error("graph6: only the short form (n <= 62) is supported, got n = {0}")]
    Graph6TooLarge(usize),
    #[error("invalid parameters for family {family}: {message}")]
    InvalidParams { family: String, message: String },
    #[error("girth5_atfree generator exhausted {attempts} attempts")]
    RetryBudgetExceeded { attempts: usize },
}

/// Number of `u64` words needed for an `n`-bit row.
#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    rows: Vec<Vec<u64>>,
    nbrs: Vec<Vec<usize>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            rows: vec![vec![0; words_for(n)]; n],
            nbrs: vec![Vec::new(); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Builds a graph from an edge iterator. Duplicate edges collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.nbrs.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u][v / 64] >> (v % 64) & 1 == 1
    }

    /// Sorted neighbor list of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.nbrs[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.nbrs[v].len()
    }

    /// Adjacency bit row of `v` (bit `u` set iff `u` is a neighbor).
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v]
    }

    /// Inserts `{u, v}`; returns false when it was already present.
    ///
    /// Panics on a self-loop or an out-of-range endpoint.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v, "self-loop on {u}");
        assert!(u < self.n && v < self.n, "endpoint out of range");
        if self.has_edge(u, v) {
            return false;
        }
        self.rows[u][v / 64] |= 1 << (v % 64);
        self.rows[v][u / 64] |= 1 << (u % 64);
        let pos = self.nbrs[u].binary_search(&v).unwrap_err();
        self.nbrs[u].insert(pos, v);
        let pos = self.nbrs[v].binary_search(&u).unwrap_err();
        self.nbrs[v].insert(pos, u);
        true
    }

    /// Deletes `{u, v}`; returns false when it was absent.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u == v || !self.has_edge(u, v) {
            return false;
        }
        self.rows[u][v / 64] &= !(1 << (v % 64));
        self.rows[v][u / 64] &= !(1 << (u % 64));
        if let Ok(pos) = self.nbrs[u].binary_search(&v) {
            self.nbrs[u].remove(pos);
        }
        if let Ok(pos) = self.nbrs[v].binary_search(&u) {
            self.nbrs[v].remove(pos);
        }
        true
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.nbrs[u]
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Non-adjacent pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (u + 1..self.n)
                .filter(move |&v| !self.has_edge(u, v))
                .map(move |v| (u, v))
        })
    }

    pub fn is_complete(&self) -> bool {
        self.nbrs.iter().all(|l| l.len() + 1 == self.n)
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for (u, v) in self.non_edges() {
            g.add_edge(u, v);
        }
        g
    }

    /// True when every edge of `self` is also an edge of `other` (same `n`).
    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && self.edges().all(|(u, v)| other.has_edge(u, v))
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Bit set of the closed neighborhood `N[v]`.
    pub fn closed_row(&self, v: usize) -> Vec<u64> {
        let mut r = self.rows[v].clone();
        r[v / 64] |= 1 << (v % 64);
        r
    }

    /// Whether the vertices in `set` are pairwise adjacent.
    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }
}
