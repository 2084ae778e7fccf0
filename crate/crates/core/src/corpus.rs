//! Deterministic corpus of AT-free graphs used by the property and
//! acceptance tests and by `atbox gen`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{generate, Family, Graph, GraphFamilySpec};
use crate::invariants::{is_at_free, is_claw_free};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusGraph {
    pub label: String,
    pub graph: Graph,
}

fn family(f: Family, params: &[usize], seed: u64) -> CorpusGraph {
    let spec = GraphFamilySpec::new(f, params.to_vec(), seed);
    let graph = generate(&spec).expect("corpus specs are valid");
    let params: Vec<String> = params.iter().map(ToString::to_string).collect();
    CorpusGraph {
        label: format!("{f}({}) seed {seed}", params.join(",")),
        graph,
    }
}

/// Unit interval graph from `n` left endpoints drawn uniformly from
/// `[0, spread)` in tenths.
pub fn random_unit_interval(n: usize, spread: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let xs: Vec<usize> = (0..n)
        .map(|_| rng.gen_range(0..spread.max(1) * 10))
        .collect();
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if xs[u].abs_diff(xs[v]) <= 10 {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// `C5` with vertex `i` replaced by a clique of `sizes[i]` vertices.
pub fn c5_blowup(sizes: [usize; 5]) -> Graph {
    let mut start = [0usize; 6];
    for i in 0..5 {
        start[i + 1] = start[i] + sizes[i];
    }
    let mut g = Graph::empty(start[5]);
    for i in 0..5 {
        let j = (i + 1) % 5;
        for a in start[i]..start[i + 1] {
            for b in a + 1..start[i + 1] {
                g.add_edge(a, b);
            }
            for b in start[j]..start[j + 1] {
                g.add_edge(a, b);
            }
        }
    }
    g
}

/// Every graph in the corpus, in a fixed order. All are AT-free.
pub fn at_free_corpus() -> Vec<CorpusGraph> {
    let mut out = Vec::new();
    for n in 1..=8 {
        out.push(family(Family::Path, &[n], 0));
    }
    for n in 3..=5 {
        out.push(family(Family::Cycle, &[n], 0));
    }
    for k in 1..=8 {
        out.push(family(Family::Star, &[k], 0));
    }
    for parts in [
        &[2, 2][..],
        &[2, 2, 2],
        &[1, 2, 3],
        &[3, 3],
        &[2, 2, 2, 2],
        &[1, 1, 4],
        &[4, 5],
    ] {
        out.push(family(Family::CompleteMultipartite, parts, 0));
    }
    for n in (2..=12).step_by(2) {
        out.push(family(Family::MatchingComplement, &[n], 0));
    }
    for seed in 0..40 {
        out.push(family(
            Family::Permutation,
            &[6 + (seed as usize % 20)],
            seed,
        ));
    }
    for seed in 0..30 {
        let n = 8 + (seed as usize % 18);
        out.push(family(
            Family::RandomInterval,
            &[n, 1 + seed as usize % 5],
            seed,
        ));
    }
    for seed in 0..25 {
        out.push(family(
            Family::Girth5Atfree,
            &[6 + (seed as usize % 20)],
            seed,
        ));
    }
    for seed in 0..45 {
        let n = 4 + (seed as usize % 20);
        out.push(CorpusGraph {
            label: format!("unit_interval({n}) seed {seed}"),
            graph: random_unit_interval(n, 1 + n / 3, seed),
        });
    }
    for seed in 0..12u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let sizes = std::array::from_fn(|_| rng.gen_range(1..=3));
        out.push(CorpusGraph {
            label: format!("c5_blowup{sizes:?}"),
            graph: c5_blowup(sizes),
        });
    }
    debug_assert!(
        out.iter().all(|c| is_at_free(&c.graph)),
        "corpus must be AT-free"
    );
    out
}

/// The claw-free members of [`at_free_corpus`].
pub fn claw_free_corpus() -> Vec<CorpusGraph> {
    at_free_corpus()
        .into_iter()
        .filter(|c| is_claw_free(&c.graph))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{is_interval, is_unit_interval};

    #[test]
    fn corpus_shape() {
        let all = at_free_corpus();
        assert!(all.iter().all(|c| is_at_free(&c.graph)));
        assert!(all.iter().filter(|c| c.graph.n() <= 25).count() >= 100);
        assert!(claw_free_corpus().len() >= 50);
        assert_eq!(all, at_free_corpus());
    }

    #[test]
    fn unit_intervals() {
        for seed in 0..20 {
            assert!(is_unit_interval(&random_unit_interval(12, 4, seed)));
        }
    }

    #[test]
    fn blowups() {
        let g = c5_blowup([1, 2, 1, 3, 2]);
        assert_eq!(g.n(), 9);
        assert!(is_at_free(&g) && is_claw_free(&g) && !is_interval(&g));
    }
}
