use std::collections::VecDeque;

use super::InvariantError;
use crate::graph::{bfs_layers, is_connected, Graph};

const REMOVED: usize = usize::MAX;

/// For every vertex `c`, the component labels of `G - N[c]`.
///
/// `label(c, v) == label(c, w)` (and neither removed) iff `v` and `w` are
/// joined by a path avoiding the closed neighborhood of `c`.
pub struct AvoidanceTable {
    labels: Vec<Vec<usize>>,
}

impl AvoidanceTable {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut labels = Vec::with_capacity(n);
        let mut stack = Vec::new();
        for c in 0..n {
            let mut lab = vec![REMOVED - 1; n];
            lab[c] = REMOVED;
            for &w in g.neighbors(c) {
                lab[w] = REMOVED;
            }
            let mut next = 0;
            for s in 0..n {
                if lab[s] != REMOVED - 1 {
                    continue;
                }
                lab[s] = next;
                stack.push(s);
                while let Some(u) = stack.pop() {
                    for &w in g.neighbors(u) {
                        if lab[w] == REMOVED - 1 {
                            lab[w] = next;
                            stack.push(w);
                        }
                    }
                }
                next += 1;
            }
            labels.push(lab);
        }
        AvoidanceTable { labels }
    }

    /// Whether `a` and `b` are connected in `G - N[avoid]`.
    #[inline]
    pub fn joined_avoiding(&self, a: usize, b: usize, avoid: usize) -> bool {
        let lab = &self.labels[avoid];
        lab[a] != REMOVED && lab[a] == lab[b]
    }
}

/// Lexicographically first asteroidal triple, if any.
pub fn find_asteroidal_triple(g: &Graph) -> Option<[usize; 3]> {
    let n = g.n();
    if n < 3 {
        return None;
    }
    let table = AvoidanceTable::new(g);
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(a, b) {
                continue;
            }
            for c in b + 1..n {
                if g.has_edge(a, c) || g.has_edge(b, c) {
                    continue;
                }
                if table.joined_avoiding(a, b, c)
                    && table.joined_avoiding(a, c, b)
                    && table.joined_avoiding(b, c, a)
                {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

pub fn is_at_free(g: &Graph) -> bool {
    find_asteroidal_triple(g).is_none()
}

fn check_pair(g: &Graph, x: usize, y: usize) -> Result<(), InvariantError> {
    if g.n() == 0 || !is_connected(g) {
        return Err(InvariantError::Disconnected);
    }
    if x >= g.n() || y >= g.n() {
        return Err(InvariantError::VertexOutOfRange(x.max(y)));
    }
    if x == y {
        return Err(InvariantError::SameVertex(x));
    }
    Ok(())
}

/// Every `x`-`y` path dominates `G` iff no vertex `v` has `x` and `y` in the
/// same component of `G - N[v]`.
pub fn is_dominating_pair(g: &Graph, x: usize, y: usize) -> Result<bool, InvariantError> {
    check_pair(g, x, y)?;
    let n = g.n();
    let mut blocked = vec![false; n];
    for v in 0..n {
        blocked.fill(false);
        blocked[v] = true;
        for &w in g.neighbors(v) {
            blocked[w] = true;
        }
        if blocked[x] || blocked[y] {
            continue;
        }
        blocked[x] = true;
        let mut queue = VecDeque::from([x]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if w == y {
                    return Ok(false);
                }
                if !blocked[w] {
                    blocked[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominatingPair {
    pub x: usize,
    pub y: usize,
    /// A shortest `x`-`y` path, `x` first.
    pub path: Vec<usize>,
}

/// First lexicographic pair at diameter distance that is a dominating pair,
/// with a BFS shortest path between them.
///
/// A single-vertex graph yields `x = y` and the one-vertex path.
#[allow(clippy::needless_range_loop)]
pub fn diametral_dominating_pair(g: &Graph) -> Result<DominatingPair, InvariantError> {
    let n = g.n();
    if n == 0 || !is_connected(g) {
        return Err(InvariantError::Disconnected);
    }
    if n == 1 {
        return Ok(DominatingPair {
            x: 0,
            y: 0,
            path: vec![0],
        });
    }
    let dist: Vec<Vec<usize>> = (0..n)
        .map(|s| bfs_layers(g, s).into_iter().map(|d| d.unwrap()).collect())
        .collect();
    let diam = dist.iter().flatten().copied().max().unwrap();
    let table = AvoidanceTable::new(g);
    for x in 0..n {
        for y in x + 1..n {
            if dist[x][y] != diam {
                continue;
            }
            let dominating = (0..n).all(|v| !table.joined_avoiding(x, y, v));
            if dominating {
                return Ok(DominatingPair {
                    x,
                    y,
                    path: shortest_path(g, x, y),
                });
            }
        }
    }
    Err(InvariantError::NoDominatingPair)
}

/// BFS shortest path visiting neighbors in ascending order.
pub(crate) fn shortest_path(g: &Graph, x: usize, y: usize) -> Vec<usize> {
    let mut parent = vec![usize::MAX; g.n()];
    parent[x] = x;
    let mut queue = VecDeque::from([x]);
    while let Some(u) = queue.pop_front() {
        if u == y {
            break;
        }
        for &w in g.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    let mut path = vec![y];
    let mut cur = y;
    while cur != x {
        cur = parent[cur];
        path.push(cur);
    }
    path.reverse();
    path
}
