use serde::{Deserialize, Serialize};

use super::InvariantError;
use crate::graph::Graph;

/// Default vertex cap for exact coloring.
pub const DEFAULT_EXACT_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub colors: Vec<usize>,
    pub k: usize,
}

impl Coloring {
    /// Wraps raw colors, renumbering them to `0..k` in order of first use.
    pub fn from_colors(raw: &[usize]) -> Self {
        let mut map = std::collections::HashMap::new();
        let colors = raw
            .iter()
            .map(|c| {
                let next = map.len();
                *map.entry(*c).or_insert(next)
            })
            .collect();
        Coloring {
            colors,
            k: map.len(),
        }
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.n()
            && self.colors.iter().all(|&c| c < self.k)
            && (0..self.k).all(|c| self.colors.contains(&c))
            && g.edges().all(|(u, v)| self.colors[u] != self.colors[v])
    }

    pub fn class(&self, i: usize) -> Vec<usize> {
        (0..self.colors.len())
            .filter(|&v| self.colors[v] == i)
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColorMode {
    /// Degree-saturation greedy.
    Heuristic,
    /// Branch and bound; returns a minimum coloring.
    Exact,
}

pub fn color(g: &Graph, mode: ColorMode, limit: usize) -> Result<Coloring, InvariantError> {
    match mode {
        ColorMode::Heuristic => Ok(dsatur(g)),
        ColorMode::Exact if g.n() > limit => Err(InvariantError::ExactLimit { n: g.n(), limit }),
        ColorMode::Exact => Ok(exact(g)),
    }
}

const NONE: usize = usize::MAX;

fn saturation(g: &Graph, colors: &[usize], v: usize) -> usize {
    let mut seen: Vec<usize> = g
        .neighbors(v)
        .iter()
        .map(|&w| colors[w])
        .filter(|&c| c != NONE)
        .collect();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

fn pick_vertex(g: &Graph, colors: &[usize]) -> Option<usize> {
    (0..g.n())
        .filter(|&v| colors[v] == NONE)
        .max_by_key(|&v| (saturation(g, colors, v), g.degree(v), std::cmp::Reverse(v)))
}

fn dsatur(g: &Graph) -> Coloring {
    let mut colors = vec![NONE; g.n()];
    while let Some(v) = pick_vertex(g, &colors) {
        let c = (0..)
            .find(|c| g.neighbors(v).iter().all(|&w| colors[w] != *c))
            .unwrap();
        colors[v] = c;
    }
    Coloring::from_colors(&colors)
}

fn exact(g: &Graph) -> Coloring {
    let mut best = dsatur(g);
    let lower = greedy_clique(g);
    if best.k <= lower {
        return best;
    }
    let mut colors = vec![NONE; g.n()];
    branch(g, &mut colors, 0, &mut best, lower);
    best
}

fn branch(g: &Graph, colors: &mut [usize], used: usize, best: &mut Coloring, lower: usize) -> bool {
    let Some(v) = pick_vertex(g, colors) else {
        let found = Coloring::from_colors(colors);
        if found.k < best.k {
            *best = found;
        }
        return best.k <= lower;
    };
    for c in 0..=used {
        if c + 1 >= best.k {
            break;
        }
        if g.neighbors(v).iter().any(|&w| colors[w] == c) {
            continue;
        }
        colors[v] = c;
        if branch(g, colors, used.max(c + 1), best, lower) {
            return true;
        }
        colors[v] = NONE;
    }
    false
}

fn greedy_clique(g: &Graph) -> usize {
    let mut best = usize::from(g.n() > 0);
    for s in 0..g.n() {
        let mut clique = vec![s];
        let mut cand: Vec<usize> = g.neighbors(s).to_vec();
        cand.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
        for v in cand {
            if clique.iter().all(|&u| g.has_edge(u, v)) {
                clique.push(v);
            }
        }
        best = best.max(clique.len());
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family, GraphFamilySpec};

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    /// Brute force: smallest k admitting a proper k-coloring.
    fn chromatic_brute(g: &Graph) -> usize {
        let n = g.n();
        if n == 0 {
            return 0;
        }
        for k in 1..=n {
            let mut colors = vec![0usize; n];
            loop {
                if g.edges().all(|(u, v)| colors[u] != colors[v]) {
                    return k;
                }
                let mut i = 0;
                while i < n && colors[i] == k - 1 {
                    colors[i] = 0;
                    i += 1;
                }
                if i == n {
                    break;
                }
                colors[i] += 1;
            }
        }
        unreachable!()
    }

    #[test]
    fn examples() {
        let k222 = generate(&GraphFamilySpec::new(
            Family::CompleteMultipartite,
            [2, 2, 2],
            0,
        ))
        .unwrap();
        assert_eq!(color(&k222, ColorMode::Exact, 16).unwrap().k, 3);
        assert_eq!(color(&cycle(5), ColorMode::Exact, 16).unwrap().k, 3);
        assert_eq!(color(&cycle(8), ColorMode::Exact, 16).unwrap().k, 2);
        let star = generate(&GraphFamilySpec::new(Family::Star, [5], 0)).unwrap();
        assert_eq!(color(&star, ColorMode::Exact, 16).unwrap().k, 2);
        assert_eq!(color(&Graph::empty(0), ColorMode::Exact, 16).unwrap().k, 0);
    }

    #[test]
    fn limit() {
        let g = Graph::empty(17);
        assert_eq!(
            color(&g, ColorMode::Exact, DEFAULT_EXACT_LIMIT),
            Err(InvariantError::ExactLimit { n: 17, limit: 16 })
        );
        assert_eq!(color(&g, ColorMode::Heuristic, 16).unwrap().k, 1);
    }

    #[test]
    fn exact_matches_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..300 {
            let n = rng.gen_range(1..=8);
            let p = rng.gen_range(0.1..0.9);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        g.add_edge(u, v);
                    }
                }
            }
            let c = color(&g, ColorMode::Exact, 16).unwrap();
            assert!(c.is_proper(&g));
            assert_eq!(c.k, chromatic_brute(&g), "{g:?}");
            let h = color(&g, ColorMode::Heuristic, 16).unwrap();
            assert!(h.is_proper(&g));
            assert!(h.k >= c.k);
        }
    }
}
