//! Sandwich problems on at most 32 vertices: given `G` and a set `F` of
//! forbidden pairs, find a chordal, interval or unit interval graph `H`
//! with `G ⊆ H` that avoids every pair of `F`.
//!
//! Each class is searched through its vertex orderings. For a fixed
//! ordering there is a unique smallest `H` of the class containing `G`, so
//! it is enough to test that one graph against `F`.

use std::collections::HashSet;

use crate::boxrep::{int, rational, IntervalModel, IntervalQ};
use crate::graph::Graph;

pub(crate) type Masks = Vec<u32>;

pub(crate) fn adjacency_masks(g: &Graph) -> Masks {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect()
}

fn full(n: usize) -> u32 {
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

fn members(mut m: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            v
        })
    })
}

/// Vertices outside `s ∪ {v}` joined to `v` by a path with interior in `s`.
fn reach_through(adj: &[u32], v: usize, s: u32) -> u32 {
    let mut interior = 0u32;
    let mut frontier = adj[v] & s;
    while frontier != 0 {
        interior |= frontier;
        let mut next = 0u32;
        for u in members(frontier) {
            next |= adj[u];
        }
        frontier = next & s & !interior;
    }
    let mut out = adj[v];
    for u in members(interior) {
        out |= adj[u];
    }
    out & !s & !(1 << v)
}

/// Subset DP over orderings where the step "append `v` after the set `s`"
/// is allowed iff `step(s, v)`. Returns an ordering of all vertices.
fn order_dp(n: usize, step: impl Fn(u32, usize) -> bool) -> Option<Vec<usize>> {
    let all = full(n);
    let size = 1usize << n;
    let mut from = vec![u8::MAX; size];
    let mut ok = vec![false; size];
    ok[0] = true;
    for s in 0..size {
        if !ok[s] {
            continue;
        }
        let s32 = s as u32;
        for v in members(all & !s32) {
            let t = (s32 | 1 << v) as usize;
            if !ok[t] && step(s32, v) {
                ok[t] = true;
                from[t] = v as u8;
            }
        }
    }
    if !ok[all as usize] {
        return None;
    }
    let mut order = Vec::with_capacity(n);
    let mut s = all;
    while s != 0 {
        let v = from[s as usize] as usize;
        order.push(v);
        s &= !(1 << v);
    }
    order.reverse();
    Some(order)
}

/// Elimination ordering whose fill graph avoids `forbid`.
pub(crate) fn chordal_order(adj: &[u32], forbid: &[u32]) -> Option<Vec<usize>> {
    order_dp(adj.len(), |s, v| reach_through(adj, v, s) & forbid[v] == 0)
}

/// Left-endpoint ordering whose interval completion avoids `forbid`: once
/// `v` is placed, every earlier vertex with a neighbor at or after `v`
/// overlaps it.
pub(crate) fn interval_order(adj: &[u32], forbid: &[u32]) -> Option<Vec<usize>> {
    order_dp(adj.len(), |s, v| {
        let active = members(s).fold(0u32, |m, u| if adj[u] & !s != 0 { m | 1 << u } else { m });
        active & forbid[v] == 0
    })
}

/// Ordering whose unit interval completion (every edge span becomes a
/// clique) avoids `forbid`.
pub(crate) fn unit_order(adj: &[u32], forbid: &[u32]) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut placed = Vec::with_capacity(n);
    let mut failed = HashSet::new();
    unit_dfs(adj, forbid, &mut placed, 0, &mut failed).then_some(placed)
}

fn unit_dfs(
    adj: &[u32],
    forbid: &[u32],
    placed: &mut Vec<usize>,
    s: u32,
    failed: &mut HashSet<(u32, Vec<usize>)>,
) -> bool {
    let n = adj.len();
    if placed.len() == n {
        return true;
    }
    let rest = full(n) & !s;
    let start = placed
        .iter()
        .position(|&u| adj[u] & rest != 0)
        .unwrap_or(placed.len());
    let key = (s, placed[start..].to_vec());
    if failed.contains(&key) {
        return false;
    }
    let window = placed[start..].iter().fold(0u32, |m, &u| m | 1 << u);
    for v in members(rest) {
        if window & forbid[v] != 0 {
            continue;
        }
        placed.push(v);
        if unit_dfs(adj, forbid, placed, s | 1 << v, failed) {
            return true;
        }
        placed.pop();
    }
    failed.insert(key);
    false
}

/// Fill graph of an elimination ordering.
pub(crate) fn fill_graph(g: &Graph, order: &[usize]) -> Graph {
    let adj = adjacency_masks(g);
    let mut h = g.clone();
    let mut s = 0u32;
    for &v in order {
        for w in members(reach_through(&adj, v, s)) {
            h.add_edge(v, w);
        }
        s |= 1 << v;
    }
    h
}

/// Interval model `[pos(u), reach(u)]` of the interval completion of an
/// ordering, where `reach(u)` is the last position of a neighbor of `u`.
pub(crate) fn interval_completion(g: &Graph, order: &[usize]) -> IntervalModel {
    let mut pos = vec![0usize; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let intervals = (0..g.n())
        .map(|u| {
            let reach = g
                .neighbors(u)
                .iter()
                .map(|&w| pos[w])
                .fold(pos[u], usize::max);
            IntervalQ::ints(pos[u] as i64, reach as i64)
        })
        .collect();
    IntervalModel::new(intervals)
}

/// Unit interval completion of an ordering as a graph.
pub(crate) fn unit_completion(g: &Graph, order: &[usize]) -> Graph {
    let mut pos = vec![0usize; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut h = g.clone();
    for (u, v) in g.edges() {
        let (a, b) = (pos[u].min(pos[v]), pos[u].max(pos[v]));
        for i in a..=b {
            for j in i + 1..=b {
                h.add_edge(order[i], order[j]);
            }
        }
    }
    h
}

/// Unit-length model of `h` given an ordering in which every edge span is a
/// clique of `h`. Left endpoints `x/L` come from difference constraints:
/// `x_j - x_i <= L` for adjacent `i < j`, `x_j - x_i >= L + 1` otherwise,
/// and `x` nondecreasing along the ordering.
pub(crate) fn unit_model(h: &Graph, order: &[usize]) -> Option<IntervalModel> {
    let n = h.n();
    (n.max(1)..=4 * n.max(1)).find_map(|scale| {
        let x = difference_solution(h, order, scale as i64)?;
        let mut intervals = vec![IntervalQ::ints(0, 1); n];
        for (i, &v) in order.iter().enumerate() {
            let lo = rational(x[i], scale as i64);
            intervals[v] = IntervalQ::closed(lo, lo + int(1));
        }
        let model = IntervalModel::new(intervals);
        (model.intersection_graph() == *h).then_some(model)
    })
}

fn difference_solution(h: &Graph, order: &[usize], l: i64) -> Option<Vec<i64>> {
    let n = order.len();
    // edge (a, b, w): x_b - x_a <= w
    let mut edges = Vec::new();
    for i in 0..n {
        if i + 1 < n {
            edges.push((i + 1, i, 0));
        }
        for j in i + 1..n {
            if h.has_edge(order[i], order[j]) {
                edges.push((i, j, l));
            } else {
                edges.push((j, i, -(l + 1)));
            }
        }
    }
    let mut dist = vec![0i64; n];
    for round in 0..=n {
        let mut changed = false;
        for &(a, b, w) in &edges {
            if dist[a] + w < dist[b] {
                dist[b] = dist[a] + w;
                changed = true;
            }
        }
        if !changed {
            let min = dist.iter().copied().min().unwrap_or(0);
            return Some(dist.into_iter().map(|d| d - min).collect());
        }
        if round == n {
            break;
        }
    }
    None
}
