//! Brute-force oracles written without the library's algorithms, for
//! cross-checking on small graphs.
#![allow(dead_code)]

use atbox::boxrep::BoxRepresentation;
use atbox::Graph;
use rand::Rng;

pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Smallest `k` with a proper `k`-coloring, by plain backtracking.
pub fn brute_chromatic(g: &Graph) -> usize {
    fn fits(g: &Graph, colors: &mut Vec<usize>, v: usize, k: usize) -> bool {
        if v == g.n() {
            return true;
        }
        for c in 0..k {
            if (0..v).all(|u| !(g.has_edge(u, v) && colors[u] == c)) {
                colors[v] = c;
                if fits(g, colors, v + 1, k) {
                    return true;
                }
            }
        }
        false
    }
    (0..=g.n())
        .find(|&k| fits(g, &mut vec![0; g.n()], 0, k))
        .unwrap()
}

/// Largest independent set among `cand`, by include/exclude recursion.
fn mis(g: &Graph, cand: &[usize]) -> usize {
    match cand.split_first() {
        None => 0,
        Some((&v, rest)) => {
            let without = mis(g, rest);
            let others: Vec<usize> = rest
                .iter()
                .copied()
                .filter(|&w| !g.has_edge(v, w))
                .collect();
            without.max(1 + mis(g, &others))
        }
    }
}

/// Largest `k` with an induced `K_{1,k}`.
pub fn brute_claw_number(g: &Graph) -> usize {
    (0..g.n())
        .map(|v| {
            let nb: Vec<usize> = (0..g.n()).filter(|&w| g.has_edge(v, w)).collect();
            mis(g, &nb)
        })
        .max()
        .unwrap_or(0)
}

#[allow(clippy::needless_range_loop)]
fn joined_avoiding(g: &Graph, a: usize, b: usize, c: usize) -> bool {
    let n = g.n();
    let blocked = |w: usize| w == c || g.has_edge(w, c);
    if blocked(a) || blocked(b) {
        return false;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![a];
    seen[a] = true;
    while let Some(u) = stack.pop() {
        if u == b {
            return true;
        }
        for w in 0..n {
            if g.has_edge(u, w) && !seen[w] && !blocked(w) {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    false
}

pub fn brute_at_free(g: &Graph) -> bool {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if g.has_edge(a, b) || g.has_edge(a, c) || g.has_edge(b, c) {
                    continue;
                }
                if joined_avoiding(g, a, b, c)
                    && joined_avoiding(g, a, c, b)
                    && joined_avoiding(g, b, c, a)
                {
                    return false;
                }
            }
        }
    }
    true
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Class {
    Chordal,
    Interval,
    UnitInterval,
}

/// Membership by searching all vertex orderings for the ordering
/// characterization of the class.
pub fn brute_in_class(g: &Graph, class: Class) -> bool {
    let n = g.n();
    permutations(n).into_iter().any(|o| match class {
        // every vertex's later neighbors are pairwise adjacent
        Class::Chordal => (0..n).all(|i| {
            let later: Vec<usize> = (i + 1..n).filter(|&j| g.has_edge(o[i], o[j])).collect();
            later
                .iter()
                .all(|&a| later.iter().all(|&b| a == b || g.has_edge(o[a], o[b])))
        }),
        // i < j < k and ik an edge imply ij an edge
        Class::Interval => (0..n).all(|i| {
            (i + 1..n)
                .all(|j| (j + 1..n).all(|k| !g.has_edge(o[i], o[k]) || g.has_edge(o[i], o[j])))
        }),
        // i < j < k and ik an edge imply ij and jk edges
        Class::UnitInterval => (0..n).all(|i| {
            (i + 1..n).all(|j| {
                (j + 1..n).all(|k| {
                    !g.has_edge(o[i], o[k]) || (g.has_edge(o[i], o[j]) && g.has_edge(o[j], o[k]))
                })
            })
        }),
    })
}

/// Minimum number of class members whose edge intersection is `g`, by
/// enumerating every supergraph of `g` (use only for tiny graphs).
/// `None` when more than `kmax` are needed.
pub fn brute_dimension(g: &Graph, class: Class, kmax: usize) -> Option<usize> {
    let non_edges: Vec<(usize, usize)> = g.non_edges().collect();
    let m = non_edges.len();
    if m == 0 {
        return Some(0);
    }
    let all = (1u32 << m) - 1;
    // for each supergraph in the class, the set of non-edges it still misses
    let mut missed: Vec<u32> = Vec::new();
    for added in 0..=all {
        let mut h = g.clone();
        for (i, &(u, v)) in non_edges.iter().enumerate() {
            if added >> i & 1 == 1 {
                h.add_edge(u, v);
            }
        }
        if brute_in_class(&h, class) {
            missed.push(all & !added);
        }
    }
    let maximal: Vec<u32> = missed
        .iter()
        .copied()
        .filter(|&a| !missed.iter().any(|&b| b != a && b & a == a))
        .collect();
    fn cover(sets: &[u32], need: u32, k: usize, from: usize) -> bool {
        if need == 0 {
            return true;
        }
        if k == 0 {
            return false;
        }
        (from..sets.len()).any(|i| cover(sets, need & !sets[i], k - 1, i))
    }
    (1..=kmax).find(|&k| cover(&maximal, all, k, 0))
}

/// Closed-interval overlap in every dimension, compared by cross
/// multiplication of the raw numerators and denominators.
pub fn boxes_intersect(rep: &BoxRepresentation, u: usize, v: usize) -> bool {
    let le = |a: (i64, i64), b: (i64, i64)| {
        (a.0 as i128) * (b.1 as i128) <= (b.0 as i128) * (a.1 as i128)
    };
    rep.dims.iter().all(|d| {
        let (a, b) = (d.get(u), d.get(v));
        let p = |r: &atbox::boxrep::Rational| (*r.numer(), *r.denom());
        le(p(&a.lo), p(&b.hi)) && le(p(&b.lo), p(&a.hi))
    })
}

/// The representation's intersection graph equals `g`, checked pair by pair.
pub fn pairwise_matches(g: &Graph, rep: &BoxRepresentation) -> bool {
    rep.n == g.n()
        && (0..g.n())
            .all(|u| (u + 1..g.n()).all(|v| boxes_intersect(rep, u, v) == g.has_edge(u, v)))
}
