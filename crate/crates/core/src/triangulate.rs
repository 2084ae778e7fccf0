//! Minimal triangulations, the split supergraph of a color class, and
//! interval models of interval graphs via clique paths.

use std::collections::HashSet;

use serde::Serialize;
use thiserror::Error;

use crate::boxrep::{IntervalModel, IntervalQ};
use crate::graph::{words_for, Graph};
use crate::invariants::{is_at_free, is_chordal, mcs_ordering, Coloring};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TriangulateError {
    #[error("coloring is not proper for this graph")]
    ImproperColoring,
    #[error("color index {index} out of range for {k} colors")]
    ColorOutOfRange { index: usize, k: usize },
    #[error("candidate triangulation is not chordal")]
    NotChordal,
    #[error("candidate is not a supergraph of the base graph (edge ({u}, {v}) missing)")]
    NotSupergraph { u: usize, v: usize },
    #[error("vertex counts differ: {base} vs {other}")]
    SizeMismatch { base: usize, other: usize },
    #[error("graph is not an interval graph: no consecutive clique ordering exists")]
    NotInterval,
}

/// A base graph plus a set of added non-edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FillSet {
    pub base: Graph,
    /// Added pairs `(u, v)`, `u < v`, sorted.
    pub fill: Vec<(usize, usize)>,
}

impl FillSet {
    /// The filled graph `G + fill`.
    pub fn graph(&self) -> Graph {
        let mut h = self.base.clone();
        for &(u, v) in &self.fill {
            h.add_edge(u, v);
        }
        h
    }
}

/// Ordered maximal cliques of an interval graph; every vertex occupies a
/// contiguous run of positions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliquePath {
    pub cliques: Vec<Vec<usize>>,
}

impl CliquePath {
    pub fn is_consecutive(&self, n: usize) -> bool {
        (0..n).all(|v| {
            let pos: Vec<usize> = self
                .cliques
                .iter()
                .enumerate()
                .filter(|(_, c)| c.contains(&v))
                .map(|(i, _)| i)
                .collect();
            pos.windows(2).all(|w| w[1] == w[0] + 1)
        })
    }
}

/// Keeps color class `index` independent (with its edges to the rest) and
/// turns everything outside the class into a clique.
pub fn split_supergraph(g: &Graph, c: &Coloring, index: usize) -> Result<Graph, TriangulateError> {
    if !c.is_proper(g) {
        return Err(TriangulateError::ImproperColoring);
    }
    if index >= c.k {
        return Err(TriangulateError::ColorOutOfRange { index, k: c.k });
    }
    let mut h = g.clone();
    let outside: Vec<usize> = (0..g.n()).filter(|&v| c.colors[v] != index).collect();
    for (i, &u) in outside.iter().enumerate() {
        for &v in &outside[i + 1..] {
            h.add_edge(u, v);
        }
    }
    Ok(h)
}

fn check_supergraph(g: &Graph, h: &Graph) -> Result<(), TriangulateError> {
    if g.n() != h.n() {
        return Err(TriangulateError::SizeMismatch {
            base: g.n(),
            other: h.n(),
        });
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| !h.has_edge(u, v)) {
        return Err(TriangulateError::NotSupergraph { u, v });
    }
    Ok(())
}

fn fill_edges(g: &Graph, h: &Graph) -> Vec<(usize, usize)> {
    h.edges().filter(|&(u, v)| !g.has_edge(u, v)).collect()
}

/// Removes fill edges of `h` one at a time, lexicographically, while the
/// result stays chordal, rescanning until nothing more can go. No single
/// remaining fill edge is then removable, so the result is a minimal
/// triangulation of `g` sandwiched between `g` and `h`.
pub fn minimize_triangulation(g: &Graph, h: &Graph) -> Result<FillSet, TriangulateError> {
    check_supergraph(g, h)?;
    if !is_chordal(h) {
        return Err(TriangulateError::NotChordal);
    }
    let mut cur = h.clone();
    let mut fill = fill_edges(g, h);
    loop {
        let mut changed = false;
        fill.retain(|&(u, v)| {
            cur.remove_edge(u, v);
            if is_chordal(&cur) {
                changed = true;
                false
            } else {
                cur.add_edge(u, v);
                true
            }
        });
        if !changed {
            break;
        }
    }
    Ok(FillSet {
        base: g.clone(),
        fill,
    })
}

/// Whether the common neighborhood of `u` and `v` in `h` contains two
/// non-adjacent vertices, i.e. `uv` is the unique chord of a 4-cycle.
pub fn is_unique_chord(h: &Graph, u: usize, v: usize) -> bool {
    let words = words_for(h.n());
    let common: Vec<usize> = (0..words)
        .flat_map(|w| {
            let mut bits = h.row(u)[w] & h.row(v)[w];
            std::iter::from_fn(move || {
                (bits != 0).then(|| {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    w * 64 + b
                })
            })
        })
        .collect();
    !h.is_clique(&common)
}

/// Whether deleting `uv` from `h` leaves a chordal graph.
pub fn removal_keeps_chordal(h: &Graph, u: usize, v: usize) -> bool {
    let mut probe = h.clone();
    probe.remove_edge(u, v);
    is_chordal(&probe)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FillEdgeCheck {
    pub edge: (usize, usize),
    pub unique_chord: bool,
    pub removable: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimalityReport {
    pub chordal: bool,
    pub edges: Vec<FillEdgeCheck>,
}

impl MinimalityReport {
    /// Both tests agree on every fill edge.
    pub fn consistent(&self) -> bool {
        self.edges.iter().all(|e| e.unique_chord != e.removable)
    }

    pub fn is_minimal(&self) -> bool {
        self.chordal && self.edges.iter().all(|e| e.unique_chord && !e.removable)
    }
}

/// Runs the unique-chord test and the one-edge removal probe on every fill
/// edge of `h` over `g`.
pub fn minimality_report(g: &Graph, h: &Graph) -> Result<MinimalityReport, TriangulateError> {
    check_supergraph(g, h)?;
    let chordal = is_chordal(h);
    let edges = fill_edges(g, h)
        .into_iter()
        .map(|(u, v)| FillEdgeCheck {
            edge: (u, v),
            unique_chord: is_unique_chord(h, u, v),
            removable: chordal && removal_keeps_chordal(h, u, v),
        })
        .collect();
    Ok(MinimalityReport { chordal, edges })
}

/// `h` is chordal and every fill edge is the unique chord of a 4-cycle
/// (equivalently, no fill edge can be dropped keeping chordality).
pub fn is_minimal_triangulation(g: &Graph, h: &Graph) -> Result<bool, TriangulateError> {
    Ok(minimality_report(g, h)?.is_minimal())
}

/// Maximal cliques of a chordal graph, each sorted, listed in sorted order.
pub fn maximal_cliques_chordal(h: &Graph) -> Result<Vec<Vec<usize>>, TriangulateError> {
    let order = mcs_ordering(h);
    if !crate::invariants::is_perfect_elimination(h, &order) {
        return Err(TriangulateError::NotChordal);
    }
    let mut pos = vec![0; h.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let candidates: Vec<Vec<usize>> = order
        .iter()
        .map(|&v| {
            let mut c: Vec<usize> = h
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| pos[w] > pos[v])
                .collect();
            c.push(v);
            c.sort_unstable();
            c
        })
        .collect();
    let mut cliques: Vec<Vec<usize>> = candidates
        .iter()
        .filter(|c| {
            !candidates
                .iter()
                .any(|d| d.len() > c.len() && c.iter().all(|x| d.binary_search(x).is_ok()))
        })
        .cloned()
        .collect();
    cliques.sort();
    cliques.dedup();
    Ok(cliques)
}

/// Backtracking search for an ordering of `cliques` in which every vertex
/// occupies consecutive positions. Failed `(last, remaining)` states are
/// memoized.
pub fn find_clique_path(cliques: &[Vec<usize>], n: usize) -> Option<Vec<usize>> {
    let k = cliques.len();
    if k == 0 {
        return Some(vec![]);
    }
    let mut count = vec![0usize; n];
    for c in cliques {
        for &v in c {
            count[v] += 1;
        }
    }
    let member: Vec<Vec<bool>> = cliques
        .iter()
        .map(|c| {
            let mut m = vec![false; n];
            for &v in c {
                m[v] = true;
            }
            m
        })
        .collect();

    struct Search<'a> {
        cliques: &'a [Vec<usize>],
        member: Vec<Vec<bool>>,
        remaining_count: Vec<usize>,
        started: Vec<bool>,
        used: Vec<bool>,
        order: Vec<usize>,
        failed: HashSet<(usize, Vec<u64>)>,
    }

    impl Search<'_> {
        fn key(&self, last: usize) -> (usize, Vec<u64>) {
            let mut bits = vec![0u64; self.used.len().div_ceil(64)];
            for (i, &u) in self.used.iter().enumerate() {
                if u {
                    bits[i / 64] |= 1 << (i % 64);
                }
            }
            (last, bits)
        }

        fn fits(&self, c: usize) -> bool {
            let Some(&last) = self.order.last() else {
                return true;
            };
            // open vertices must continue; closed vertices must not return
            self.cliques[last]
                .iter()
                .all(|&v| self.remaining_count[v] == 0 || self.member[c][v])
                && self.cliques[c]
                    .iter()
                    .all(|&v| !self.started[v] || self.member[last][v])
        }

        fn run(&mut self) -> bool {
            if self.order.len() == self.cliques.len() {
                return true;
            }
            if let Some(&last) = self.order.last() {
                if self.failed.contains(&self.key(last)) {
                    return false;
                }
            }
            for c in 0..self.cliques.len() {
                if self.used[c] || !self.fits(c) {
                    continue;
                }
                let fresh: Vec<usize> = self.cliques[c]
                    .iter()
                    .copied()
                    .filter(|&v| !self.started[v])
                    .collect();
                self.used[c] = true;
                self.order.push(c);
                for &v in &self.cliques[c] {
                    self.remaining_count[v] -= 1;
                }
                for &v in &fresh {
                    self.started[v] = true;
                }
                if self.run() {
                    return true;
                }
                for &v in &fresh {
                    self.started[v] = false;
                }
                for &v in &self.cliques[c] {
                    self.remaining_count[v] += 1;
                }
                self.order.pop();
                self.used[c] = false;
            }
            if let Some(&last) = self.order.last() {
                let key = self.key(last);
                self.failed.insert(key);
            }
            false
        }
    }

    let mut s = Search {
        cliques,
        member,
        remaining_count: count,
        started: vec![false; n],
        used: vec![false; k],
        order: Vec::with_capacity(k),
        failed: HashSet::new(),
    };
    s.run().then_some(s.order)
}

/// Consecutive ordering of the maximal cliques of an interval graph.
pub fn clique_path_order(h: &Graph) -> Result<CliquePath, TriangulateError> {
    let cliques = maximal_cliques_chordal(h)?;
    if !is_at_free(h) {
        return Err(TriangulateError::NotInterval);
    }
    let order = find_clique_path(&cliques, h.n()).ok_or(TriangulateError::NotInterval)?;
    Ok(CliquePath {
        cliques: order.into_iter().map(|i| cliques[i].clone()).collect(),
    })
}

/// Interval model with integer endpoints: `v` spans the 1-based positions
/// of the first and last clique containing it.
pub fn interval_model(h: &Graph) -> Result<IntervalModel, TriangulateError> {
    let path = clique_path_order(h)?;
    Ok(model_from_clique_path(&path, h.n()))
}

pub fn model_from_clique_path(path: &CliquePath, n: usize) -> IntervalModel {
    let mut first = vec![i64::MAX; n];
    let mut last = vec![i64::MIN; n];
    for (i, c) in path.cliques.iter().enumerate() {
        let p = i as i64 + 1;
        for &v in c {
            first[v] = first[v].min(p);
            last[v] = last[v].max(p);
        }
    }
    IntervalModel::new((0..n).map(|v| IntervalQ::ints(first[v], last[v])).collect())
}
