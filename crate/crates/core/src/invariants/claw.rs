use serde::Serialize;

use super::InvariantError;
use crate::boxrep::IntervalModel;
use crate::graph::Graph;

/// Largest neighborhood handled by the exact search.
pub const MAX_EXACT_NEIGHBORHOOD: usize = 64;

/// An induced star: `center` adjacent to every leaf, leaves pairwise
/// non-adjacent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClawWitness {
    pub center: usize,
    pub leaves: Vec<usize>,
}

impl ClawWitness {
    pub fn is_induced_star(&self, g: &Graph) -> bool {
        self.leaves.iter().all(|&l| g.has_edge(self.center, l)) && {
            let ls = &self.leaves;
            (0..ls.len()).all(|i| ls[i + 1..].iter().all(|&w| !g.has_edge(ls[i], w)))
        }
    }
}

/// Maximum independent set of the vertices in `cand`, where `adj[i]` is
/// the neighborhood of local vertex `i` as a bit mask.
pub(crate) fn max_independent(cand: u64, adj: &[u64]) -> u64 {
    if cand == 0 {
        return 0;
    }
    let mut min_v = 0;
    let mut min_d = u32::MAX;
    let mut max_v = 0;
    let mut max_d = 0;
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (adj[v] & cand).count_ones();
        if d < min_d {
            min_d = d;
            min_v = v;
        }
        if d > max_d {
            max_d = d;
            max_v = v;
        }
    }
    // a vertex of degree <= 1 lies in some maximum independent set
    if min_d <= 1 {
        let bit = 1u64 << min_v;
        return bit | max_independent(cand & !bit & !adj[min_v], adj);
    }
    let bit = 1u64 << max_v;
    let with = bit | max_independent(cand & !bit & !adj[max_v], adj);
    let without_cand = cand & !bit;
    if without_cand.count_ones() <= with.count_ones() {
        return with;
    }
    let without = max_independent(without_cand, adj);
    if without.count_ones() > with.count_ones() {
        without
    } else {
        with
    }
}

fn best_leaves_exact(g: &Graph, v: usize) -> Vec<usize> {
    let nb = g.neighbors(v);
    let adj: Vec<u64> = nb
        .iter()
        .map(|&a| {
            nb.iter()
                .enumerate()
                .filter(|&(_, &b)| g.has_edge(a, b))
                .fold(0u64, |m, (j, _)| m | 1 << j)
        })
        .collect();
    let full = if nb.len() == 64 {
        u64::MAX
    } else {
        (1u64 << nb.len()) - 1
    };
    let set = max_independent(full, &adj);
    (0..nb.len())
        .filter(|&i| set >> i & 1 == 1)
        .map(|i| nb[i])
        .collect()
}

fn pick_best(g: &Graph, per_vertex: impl Fn(usize) -> Vec<usize>) -> (usize, Option<ClawWitness>) {
    let mut best: Option<ClawWitness> = None;
    for v in 0..g.n() {
        if g.degree(v) == 0 || best.as_ref().is_some_and(|b| b.leaves.len() >= g.degree(v)) {
            continue;
        }
        let leaves = per_vertex(v);
        if best.as_ref().is_none_or(|b| leaves.len() > b.leaves.len()) {
            best = Some(ClawWitness { center: v, leaves });
        }
    }
    (best.as_ref().map_or(0, |b| b.leaves.len()), best)
}

/// Claw number: the largest `k` with an induced `K_{1,k}`; `0` for edgeless
/// graphs. Exact per-neighborhood search, capped at
/// [`MAX_EXACT_NEIGHBORHOOD`] neighbors.
pub fn claw_number(g: &Graph) -> Result<(usize, Option<ClawWitness>), InvariantError> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) > MAX_EXACT_NEIGHBORHOOD) {
        return Err(InvariantError::NeighborhoodTooLarge {
            vertex: v,
            degree: g.degree(v),
            cap: MAX_EXACT_NEIGHBORHOOD,
        });
    }
    Ok(pick_best(g, |v| best_leaves_exact(g, v)))
}

/// Claw number from an interval model of `g`: in each neighborhood the
/// maximum independent set is found by earliest-right-endpoint greedy.
pub fn claw_number_with_model(g: &Graph, model: &IntervalModel) -> (usize, Option<ClawWitness>) {
    pick_best(g, |v| {
        let mut nb: Vec<usize> = g.neighbors(v).to_vec();
        nb.sort_by(|&a, &b| model.get(a).hi.cmp(&model.get(b).hi).then(a.cmp(&b)));
        let mut leaves: Vec<usize> = Vec::new();
        for w in nb {
            if leaves
                .last()
                .is_none_or(|&l| model.get(l).hi < model.get(w).lo)
            {
                leaves.push(w);
            }
        }
        leaves.sort_unstable();
        leaves
    })
}

/// No induced `K_{1,3}`.
pub fn is_claw_free(g: &Graph) -> bool {
    (0..g.n()).all(|v| {
        let nb = g.neighbors(v);
        nb.iter().enumerate().all(|(i, &a)| {
            nb[i + 1..].iter().enumerate().all(|(j, &b)| {
                g.has_edge(a, b)
                    || nb[i + 1 + j + 1..]
                        .iter()
                        .all(|&c| g.has_edge(a, c) || g.has_edge(b, c))
            })
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family, GraphFamilySpec};

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn examples() {
        let claw = generate(&GraphFamilySpec::new(Family::Star, [3], 0)).unwrap();
        let (psi, w) = claw_number(&claw).unwrap();
        assert_eq!(psi, 3);
        assert_eq!(
            w.unwrap(),
            ClawWitness {
                center: 0,
                leaves: vec![1, 2, 3]
            }
        );

        let (psi, w) = claw_number(&cycle(5)).unwrap();
        assert_eq!(psi, 2);
        assert!(w.unwrap().is_induced_star(&cycle(5)));

        for n in 2..7 {
            assert_eq!(claw_number(&Graph::complete(n)).unwrap().0, 1);
        }
        assert_eq!(claw_number(&Graph::empty(4)).unwrap(), (0, None));
    }

    #[test]
    fn claw_free() {
        assert!(!is_claw_free(
            &generate(&GraphFamilySpec::new(Family::Star, [3], 0)).unwrap()
        ));
        assert!(is_claw_free(&cycle(7)));
        assert!(is_claw_free(
            &generate(&GraphFamilySpec::new(Family::MatchingComplement, [8], 0)).unwrap()
        ));
    }

    #[test]
    fn cap_enforced() {
        let big = generate(&GraphFamilySpec::new(Family::Star, [65], 0)).unwrap();
        assert!(matches!(
            claw_number(&big),
            Err(InvariantError::NeighborhoodTooLarge {
                vertex: 0,
                degree: 65,
                ..
            })
        ));
        let edge64 = generate(&GraphFamilySpec::new(Family::Star, [64], 0)).unwrap();
        assert_eq!(claw_number(&edge64).unwrap().0, 64);
    }
}
