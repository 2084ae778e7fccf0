//! Structure of a connected AT-free graph of girth at least five around a
//! shortest path `P = u_1 .. u_t` between a diametral dominating pair.
//!
//! Every vertex off `P` has exactly one neighbor on `P`; `S_i` collects the
//! off-path vertices attached to `u_i`. Off-path edges only join `S_i` and
//! `S_{i+2}`, at most one such edge per pair of classes, and each class holds
//! at most two non-pendant vertices (those with an off-path neighbor).

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{bfs_layers, diameter, Graph};
use crate::invariants::{diametral_dominating_pair, is_dominating_pair, InvariantError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct SideFlags {
    /// Has a neighbor in `S_{i-2}`.
    pub has_left: bool,
    /// Has a neighbor in `S_{i+2}`.
    pub has_right: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominatingPathDecomposition {
    /// `u_1 .. u_t`.
    pub path: Vec<usize>,
    /// `classes[i - 1]` is `S_i`, sorted by vertex id.
    pub classes: Vec<Vec<usize>>,
    /// Non-pendant off-path vertices, sorted.
    pub nonpendant: Vec<usize>,
    pub side_flags: BTreeMap<usize, SideFlags>,
}

impl DominatingPathDecomposition {
    /// Number of path vertices `t`.
    pub fn len(&self) -> usize {
        self.path.len()
    }

    pub fn is_empty(&self) -> bool {
        self.path.is_empty()
    }

    /// 1-based path position of `v`, if on the path.
    pub fn position(&self, v: usize) -> Option<usize> {
        self.path.iter().position(|&u| u == v).map(|p| p + 1)
    }

    /// 1-based index `i` with `v ∈ S_i`.
    pub fn class_of(&self, v: usize) -> Option<usize> {
        self.classes
            .iter()
            .position(|c| c.binary_search(&v).is_ok())
            .map(|p| p + 1)
    }

    pub fn is_nonpendant(&self, v: usize) -> bool {
        self.nonpendant.binary_search(&v).is_ok()
    }

    /// `S_i` for a 1-based index; empty outside `1..=t`.
    pub fn class(&self, i: isize) -> &[usize] {
        if i < 1 || i as usize > self.classes.len() {
            &[]
        } else {
            &self.classes[i as usize - 1]
        }
    }
}

/// The structural fact a violation contradicts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Clause {
    /// `P` is a shortest path of diameter length between a dominating pair.
    DiametralPath,
    /// `|N(v) ∩ V(P)| = 1` for every off-path `v`.
    SinglePathNeighbor,
    /// `S_1 .. S_t` partition the off-path vertices by path neighbor.
    ClassPartition,
    /// `|N(v) ∩ S_i| = 0`.
    NoEdgeWithinClass,
    /// `|N(v) ∩ S_{i+1}| = 0`.
    NoEdgeToNextClass,
    /// `|N(v) ∩ S_{i+2}| <= 1`.
    AtMostOneNeighborTwoAhead,
    /// `|N(v) ∩ S_j| = 0` for `j >= i + 3`.
    NoEdgeBeyondTwo,
    /// An edge between `S_i` and `S_{i+2}` excludes every other such edge
    /// between the remaining vertices.
    SingleCrossEdge,
    /// At most two non-pendant vertices per class.
    AtMostTwoNonPendant,
    /// Two non-pendant vertices of one class face opposite sides.
    OppositeSides,
    /// Every non-pendant vertex has a neighbor two classes away.
    HasSide,
    /// Recorded non-pendant set or side flags disagree with the graph.
    Bookkeeping,
}

impl Clause {
    pub fn citation(self) -> &'static str {
        match self {
            Clause::DiametralPath => {
                "P is a shortest x-y path for a dominating pair at diameter distance"
            }
            Clause::SinglePathNeighbor => "|N_G(v) ∩ V(P)| = 1",
            Clause::ClassPartition => "S_1, ..., S_t partition V(G) \\ V(P)",
            Clause::NoEdgeWithinClass => "|N_G(v) ∩ S_i| = 0",
            Clause::NoEdgeToNextClass => "|N_G(v) ∩ S_{i+1}| = 0",
            Clause::AtMostOneNeighborTwoAhead => "|N_G(v) ∩ S_{i+2}| <= 1",
            Clause::NoEdgeBeyondTwo => "|N_G(v) ∩ S_j| = 0 for j >= i+3",
            Clause::SingleCrossEdge => "(u,v) ∈ E(G), u ∈ S_i, v ∈ S_{i+2} implies (p,q) ∉ E(G)",
            Clause::AtMostTwoNonPendant => "S_i contains at most 2 non-pendant vertices",
            Clause::OppositeSides => "two non-pendant vertices of S_i face opposite sides",
            Clause::HasSide => "a non-pendant vertex has a neighbor in S_{i-2} or S_{i+2}",
            Clause::Bookkeeping => "recorded pendant/side data matches the graph",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClauseViolation {
    pub clause: Clause,
    pub vertices: Vec<usize>,
    pub detail: String,
}

impl fmt::Display for ClauseViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] vertices {:?}: {}",
            self.clause.citation(),
            self.vertices,
            self.detail
        )
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecomposeError {
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error("decomposition violates {} structural clause(s); first: {}", .0.len(), .0[0])]
    Violations(Vec<ClauseViolation>),
}

fn violation(clause: Clause, vertices: Vec<usize>, detail: impl Into<String>) -> ClauseViolation {
    ClauseViolation {
        clause,
        vertices,
        detail: detail.into(),
    }
}

/// Builds the decomposition of a connected graph and checks every
/// structural clause against it.
pub fn decompose(g: &Graph) -> Result<DominatingPathDecomposition, DecomposeError> {
    let pair = diametral_dominating_pair(g)?;
    let path = pair.path;
    let t = path.len();
    let mut on_path = vec![None; g.n()];
    for (i, &u) in path.iter().enumerate() {
        on_path[u] = Some(i + 1);
    }

    let mut classes = vec![Vec::new(); t];
    let mut bad = Vec::new();
    for v in 0..g.n() {
        if on_path[v].is_some() {
            continue;
        }
        let hits: Vec<usize> = g.neighbors(v).iter().filter_map(|&w| on_path[w]).collect();
        if hits.len() == 1 {
            classes[hits[0] - 1].push(v);
        } else {
            bad.push(violation(
                Clause::SinglePathNeighbor,
                vec![v],
                format!("vertex {v} has {} neighbors on P", hits.len()),
            ));
        }
    }
    if !bad.is_empty() {
        return Err(DecomposeError::Violations(bad));
    }

    let (nonpendant, side_flags) = derive_flags(g, &on_path, &classes);
    let d = DominatingPathDecomposition {
        path,
        classes,
        nonpendant,
        side_flags,
    };
    let found = validate(&d, g);
    if found.is_empty() {
        Ok(d)
    } else {
        Err(DecomposeError::Violations(found))
    }
}

fn class_index(classes: &[Vec<usize>], n: usize) -> Vec<Option<usize>> {
    let mut idx = vec![None; n];
    for (i, c) in classes.iter().enumerate() {
        for &v in c {
            if v < n {
                idx[v] = Some(i + 1);
            }
        }
    }
    idx
}

fn derive_flags(
    g: &Graph,
    on_path: &[Option<usize>],
    classes: &[Vec<usize>],
) -> (Vec<usize>, BTreeMap<usize, SideFlags>) {
    let cls = class_index(classes, g.n());
    let mut nonpendant = Vec::new();
    let mut flags = BTreeMap::new();
    for v in 0..g.n() {
        let Some(i) = cls[v] else { continue };
        if on_path[v].is_some() {
            continue;
        }
        let off: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| on_path[w].is_none())
            .collect();
        if off.is_empty() {
            continue;
        }
        nonpendant.push(v);
        let mut f = SideFlags::default();
        for w in off {
            match cls[w] {
                Some(j) if j + 2 == i => f.has_left = true,
                Some(j) if j == i + 2 => f.has_right = true,
                _ => {}
            }
        }
        flags.insert(v, f);
    }
    (nonpendant, flags)
}

/// Checks `d` against `g`; an empty list means every clause holds.
pub fn validate(d: &DominatingPathDecomposition, g: &Graph) -> Vec<ClauseViolation> {
    let n = g.n();
    let t = d.path.len();
    let mut out = Vec::new();

    // path shape
    let mut on_path = vec![None; n];
    for (i, &u) in d.path.iter().enumerate() {
        if u >= n || on_path[u].is_some() {
            out.push(violation(
                Clause::DiametralPath,
                vec![u],
                "path vertex repeated or out of range",
            ));
            return out;
        }
        on_path[u] = Some(i + 1);
    }
    if t == 0 {
        if n > 0 {
            out.push(violation(Clause::DiametralPath, vec![], "empty path"));
        }
        return out;
    }
    for w in d.path.windows(2) {
        if !g.has_edge(w[0], w[1]) {
            out.push(violation(
                Clause::DiametralPath,
                w.to_vec(),
                "consecutive path vertices not adjacent",
            ));
        }
    }
    let (x, y) = (d.path[0], d.path[t - 1]);
    let dist = bfs_layers(g, x)[y];
    if dist != Some(t - 1) {
        out.push(violation(
            Clause::DiametralPath,
            vec![x, y],
            format!("path length {} but distance {dist:?}", t - 1),
        ));
    }
    if diameter(g) != Some(t - 1) {
        out.push(violation(
            Clause::DiametralPath,
            vec![x, y],
            format!("path length {} differs from the diameter", t - 1),
        ));
    }
    if t >= 2 && !matches!(is_dominating_pair(g, x, y), Ok(true)) {
        out.push(violation(
            Clause::DiametralPath,
            vec![x, y],
            "endpoints are not a dominating pair",
        ));
    }

    // partition and single path neighbor
    if d.classes.len() != t {
        out.push(violation(
            Clause::ClassPartition,
            vec![],
            format!("{} classes for {t} path vertices", d.classes.len()),
        ));
    }
    let mut seen = vec![0usize; n];
    for c in &d.classes {
        for &v in c {
            if v < n {
                seen[v] += 1;
            }
        }
    }
    let cls = class_index(&d.classes, n);
    for v in 0..n {
        if on_path[v].is_some() {
            if seen[v] > 0 {
                out.push(violation(
                    Clause::ClassPartition,
                    vec![v],
                    "path vertex listed in a class",
                ));
            }
            continue;
        }
        let hits: Vec<usize> = g.neighbors(v).iter().filter_map(|&w| on_path[w]).collect();
        if hits.len() != 1 {
            out.push(violation(
                Clause::SinglePathNeighbor,
                vec![v],
                format!("vertex {v} has {} neighbors on P", hits.len()),
            ));
        }
        if seen[v] != 1 {
            out.push(violation(
                Clause::ClassPartition,
                vec![v],
                format!("vertex {v} listed in {} classes", seen[v]),
            ));
        } else if hits.len() == 1 && cls[v] != Some(hits[0]) {
            out.push(violation(
                Clause::ClassPartition,
                vec![v],
                format!(
                    "vertex {v} is in S_{} but attached to u_{}",
                    cls[v].unwrap(),
                    hits[0]
                ),
            ));
        }
    }
    if !out.is_empty() {
        return out;
    }
    let cls: Vec<usize> = cls.into_iter().map(|c| c.unwrap_or(0)).collect();

    // off-path adjacency
    let mut cross: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for (a, b) in g.edges() {
        if on_path[a].is_some() || on_path[b].is_some() {
            continue;
        }
        let (a, b) = if cls[a] <= cls[b] { (a, b) } else { (b, a) };
        let (i, j) = (cls[a], cls[b]);
        match j - i {
            0 => out.push(violation(
                Clause::NoEdgeWithinClass,
                vec![a, b],
                format!("edge inside S_{i}"),
            )),
            1 => out.push(violation(
                Clause::NoEdgeToNextClass,
                vec![a, b],
                format!("edge between S_{i} and S_{j}"),
            )),
            2 => cross.entry(i).or_default().push((a, b)),
            _ => out.push(violation(
                Clause::NoEdgeBeyondTwo,
                vec![a, b],
                format!("edge between S_{i} and S_{j}"),
            )),
        }
    }
    for (&i, edges) in &cross {
        let mut by_low: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        let mut by_high: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &(a, b) in edges {
            by_low.entry(a).or_default().push(b);
            by_high.entry(b).or_default().push(a);
        }
        for (v, nb) in by_low.iter().chain(by_high.iter()) {
            if nb.len() > 1 {
                let mut vs = vec![*v];
                vs.extend(nb);
                out.push(violation(
                    Clause::AtMostOneNeighborTwoAhead,
                    vs,
                    format!(
                        "vertex {v} has {} neighbors two classes away (S_{i} / S_{})",
                        nb.len(),
                        i + 2
                    ),
                ));
            }
        }
        for (k, &(p, q)) in edges.iter().enumerate() {
            for &(u, v) in &edges[k + 1..] {
                if p != u && q != v {
                    out.push(violation(
                        Clause::SingleCrossEdge,
                        vec![u, v, p, q],
                        format!(
                            "edges ({u},{v}) and ({p},{q}) both join S_{i} and S_{}",
                            i + 2
                        ),
                    ));
                }
            }
        }
    }

    // non-pendant bookkeeping
    let (np, flags) = derive_flags(g, &on_path, &d.classes);
    if np != d.nonpendant {
        out.push(violation(
            Clause::Bookkeeping,
            np.clone(),
            format!("recorded non-pendant set {:?}", d.nonpendant),
        ));
    }
    for (&v, f) in &flags {
        if d.side_flags.get(&v) != Some(f) {
            out.push(violation(
                Clause::Bookkeeping,
                vec![v],
                format!("side flags should be {f:?}"),
            ));
        }
        if !f.has_left && !f.has_right {
            out.push(violation(
                Clause::HasSide,
                vec![v],
                "non-pendant vertex without a side",
            ));
        }
    }
    if d.side_flags.keys().any(|v| !flags.contains_key(v)) {
        out.push(violation(
            Clause::Bookkeeping,
            vec![],
            "side flags recorded for a pendant vertex",
        ));
    }
    for (ci, class) in d.classes.iter().enumerate() {
        let members: Vec<usize> = class
            .iter()
            .copied()
            .filter(|v| flags.contains_key(v))
            .collect();
        if members.len() > 2 {
            out.push(violation(
                Clause::AtMostTwoNonPendant,
                members.clone(),
                format!("S_{} has {} non-pendant vertices", ci + 1, members.len()),
            ));
        } else if let [u, v] = members[..] {
            let (fu, fv) = (flags[&u], flags[&v]);
            let opposite = (!fu.has_left && fu.has_right && fv.has_left && !fv.has_right)
                || (fu.has_left && !fu.has_right && !fv.has_left && fv.has_right);
            if !opposite {
                out.push(violation(
                    Clause::OppositeSides,
                    vec![u, v],
                    format!("flags {fu:?} and {fv:?} in S_{}", ci + 1),
                ));
            }
        }
    }
    out
}
