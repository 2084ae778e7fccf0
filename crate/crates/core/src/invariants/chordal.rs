use std::collections::VecDeque;

use crate::graph::Graph;

/// A vertex ordering. When `perfect` is set, the later neighbors of every
/// vertex form a clique.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationOrdering {
    pub order: Vec<usize>,
    pub perfect: bool,
}

impl EliminationOrdering {
    /// `position[v]` is the index of `v` in `order`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Chordality {
    Chordal(EliminationOrdering),
    /// A chordless cycle of length at least four, in cycle order.
    ChordlessCycle(Vec<usize>),
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal(_))
    }
}

/// Maximum cardinality search; the reverse of the visit order is a perfect
/// elimination ordering exactly when the graph is chordal.
pub fn mcs_ordering(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut done = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !done[v])
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .unwrap();
        done[v] = true;
        visit.push(v);
        for &w in g.neighbors(v) {
            if !done[w] {
                weight[w] += 1;
            }
        }
    }
    visit.reverse();
    visit
}

/// Checks the perfect-elimination property of `order`.
pub fn is_perfect_elimination(g: &Graph, order: &[usize]) -> bool {
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in order {
        let later: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[w] > pos[v])
            .collect();
        let Some(&parent) = later.iter().min_by_key(|&&w| pos[w]) else {
            continue;
        };
        if later.iter().any(|&w| w != parent && !g.has_edge(parent, w)) {
            return false;
        }
    }
    true
}

/// Fast boolean chordality test.
pub fn is_chordal(g: &Graph) -> bool {
    is_perfect_elimination(g, &mcs_ordering(g))
}

/// Chordality with a certificate either way.
pub fn chordality(g: &Graph) -> Chordality {
    let order = mcs_ordering(g);
    if is_perfect_elimination(g, &order) {
        return Chordality::Chordal(EliminationOrdering {
            order,
            perfect: true,
        });
    }
    Chordality::ChordlessCycle(
        find_chordless_cycle(g).expect("non-chordal graph has a chordless cycle"),
    )
}

/// Searches for `v` with non-adjacent neighbors `a`, `b` joined by a path
/// that avoids the rest of `N[v]`; the shortest such path closes a
/// chordless cycle through `v`.
pub fn find_chordless_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut blocked = vec![false; n];
    let mut parent = vec![usize::MAX; n];
    for v in 0..n {
        let nb = g.neighbors(v);
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if g.has_edge(a, b) {
                    continue;
                }
                blocked.fill(false);
                blocked[v] = true;
                for &w in nb {
                    if w != a && w != b {
                        blocked[w] = true;
                    }
                }
                parent.fill(usize::MAX);
                parent[a] = a;
                let mut queue = VecDeque::from([a]);
                while let Some(u) = queue.pop_front() {
                    if u == b {
                        break;
                    }
                    for &w in g.neighbors(u) {
                        if !blocked[w] && parent[w] == usize::MAX {
                            parent[w] = u;
                            queue.push_back(w);
                        }
                    }
                }
                if parent[b] == usize::MAX {
                    continue;
                }
                let mut path = vec![b];
                let mut cur = b;
                while cur != a {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.push(v);
                path.reverse();
                return Some(path);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family, GraphFamilySpec};

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn is_chordless_cycle(g: &Graph, c: &[usize]) -> bool {
        let k = c.len();
        k >= 4
            && (0..k).all(|i| {
                (0..k).all(|j| {
                    let consecutive = (i + 1) % k == j || (j + 1) % k == i;
                    i == j || g.has_edge(c[i], c[j]) == consecutive
                })
            })
    }

    #[test]
    fn c4_witness() {
        match chordality(&cycle(4)) {
            Chordality::ChordlessCycle(c) => assert_eq!(c, vec![0, 1, 2, 3]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn trees_are_chordal() {
        let t = Graph::from_edges(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (5, 6)]).unwrap();
        let c = chordality(&t);
        let Chordality::Chordal(peo) = c else {
            panic!()
        };
        assert!(peo.perfect);
        assert!(is_perfect_elimination(&t, &peo.order));
    }

    #[test]
    fn k222_is_not_chordal() {
        let g = generate(&GraphFamilySpec::new(
            Family::CompleteMultipartite,
            [2, 2, 2],
            0,
        ))
        .unwrap();
        match chordality(&g) {
            Chordality::ChordlessCycle(c) => {
                assert_eq!(c.len(), 4);
                assert!(is_chordless_cycle(&g, &c));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn longer_cycles() {
        for n in 4..10 {
            let g = cycle(n);
            assert!(!is_chordal(&g));
            let Chordality::ChordlessCycle(c) = chordality(&g) else {
                panic!()
            };
            assert_eq!(c.len(), n);
            assert!(is_chordless_cycle(&g, &c));
        }
        let mut fan = cycle(5);
        fan.add_edge(0, 2);
        fan.add_edge(0, 3);
        assert!(is_chordal(&fan));
    }

    #[test]
    fn mcs_agrees_with_cycle_search() {
        // every graph on 5 vertices
        for mask in 0u32..1024 {
            let mut g = Graph::empty(5);
            let mut k = 0;
            for u in 0..5 {
                for v in u + 1..5 {
                    if mask >> k & 1 == 1 {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            let witness = find_chordless_cycle(&g);
            assert_eq!(is_chordal(&g), witness.is_none(), "mask {mask}");
            if let Some(c) = witness {
                assert!(is_chordless_cycle(&g, &c));
            }
        }
    }
}
