//! Deterministic generators for the test corpus.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{girth, Graph, GraphError};
use crate::invariants::is_at_free;

/// Attempts made by the `girth5_atfree` rejection sampler before giving up.
pub const GIRTH5_RETRY_BUDGET: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Cycle,
    Path,
    CompleteMultipartite,
    MatchingComplement,
    Star,
    Permutation,
    RandomInterval,
    Girth5Atfree,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Cycle,
        Family::Path,
        Family::CompleteMultipartite,
        Family::MatchingComplement,
        Family::Star,
        Family::Permutation,
        Family::RandomInterval,
        Family::Girth5Atfree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Cycle => "cycle",
            Family::Path => "path",
            Family::CompleteMultipartite => "complete_multipartite",
            Family::MatchingComplement => "matching_complement",
            Family::Star => "star",
            Family::Permutation => "permutation",
            Family::RandomInterval => "random_interval",
            Family::Girth5Atfree => "girth5_atfree",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| GraphError::InvalidParams {
                family: s.to_string(),
                message: "unknown family".into(),
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFamilySpec {
    pub family: Family,
    pub params: Vec<usize>,
    pub seed: u64,
}

impl GraphFamilySpec {
    pub fn new(family: Family, params: impl Into<Vec<usize>>, seed: u64) -> Self {
        GraphFamilySpec {
            family,
            params: params.into(),
            seed,
        }
    }

    pub fn validate(&self) -> Result<(), GraphError> {
        let bad = |message: &str| {
            Err(GraphError::InvalidParams {
                family: self.family.to_string(),
                message: message.to_string(),
            })
        };
        let p = &self.params;
        match self.family {
            Family::Cycle => match p.as_slice() {
                [n] if *n >= 3 => Ok(()),
                _ => bad("expects [n] with n >= 3"),
            },
            Family::Path | Family::Permutation | Family::Girth5Atfree => match p.as_slice() {
                [n] if *n >= 1 => Ok(()),
                _ => bad("expects [n] with n >= 1"),
            },
            Family::Star => match p.as_slice() {
                [_] => Ok(()),
                _ => bad("expects [k]"),
            },
            Family::CompleteMultipartite => {
                if p.is_empty() || p.contains(&0) {
                    bad("expects one or more positive part sizes")
                } else {
                    Ok(())
                }
            }
            Family::MatchingComplement => match p.as_slice() {
                [n] if *n >= 2 && n % 2 == 0 => Ok(()),
                _ => bad("expects [n] with n even and n >= 2"),
            },
            Family::RandomInterval => match p.as_slice() {
                [n] if *n >= 1 => Ok(()),
                [n, _] if *n >= 1 => Ok(()),
                _ => bad("expects [n] or [n, max_len] with n >= 1"),
            },
        }
    }
}

/// Builds the graph described by `spec`. Same spec, same graph.
pub fn generate(spec: &GraphFamilySpec) -> Result<Graph, GraphError> {
    spec.validate()?;
    let p = &spec.params;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let g = match spec.family {
        Family::Cycle => cycle(p[0]),
        Family::Path => path(p[0]),
        Family::Star => {
            let k = p[0];
            Graph::from_edges(k + 1, (1..=k).map(|v| (0, v)))?
        }
        Family::CompleteMultipartite => complete_multipartite(p),
        Family::MatchingComplement => {
            let n = p[0];
            let mut g = Graph::complete(n);
            for i in (0..n).step_by(2) {
                g.remove_edge(i, i + 1);
            }
            g
        }
        Family::Permutation => {
            let n = p[0];
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let mut g = Graph::empty(n);
            for i in 0..n {
                for j in i + 1..n {
                    if perm[i] > perm[j] {
                        g.add_edge(i, j);
                    }
                }
            }
            g
        }
        Family::RandomInterval => {
            let n = p[0];
            let max_len = p.get(1).copied().unwrap_or(4);
            let ivs: Vec<(usize, usize)> = (0..n)
                .map(|_| {
                    let lo = rng.gen_range(0..2 * n);
                    (lo, lo + rng.gen_range(0..=max_len))
                })
                .collect();
            let mut g = Graph::empty(n);
            for i in 0..n {
                for j in i + 1..n {
                    if ivs[i].0 <= ivs[j].1 && ivs[j].0 <= ivs[i].1 {
                        g.add_edge(i, j);
                    }
                }
            }
            g
        }
        Family::Girth5Atfree => {
            let n = p[0];
            let mut found = None;
            for _ in 0..GIRTH5_RETRY_BUDGET {
                let g = girth5_candidate(n, &mut rng);
                if girth(&g).is_none_or(|c| c >= 5) && is_at_free(&g) {
                    found = Some(g);
                    break;
                }
            }
            found.ok_or(GraphError::RetryBudgetExceeded {
                attempts: GIRTH5_RETRY_BUDGET,
            })?
        }
    };
    Ok(g)
}

pub(crate) fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
}

pub(crate) fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
}

pub(crate) fn complete_multipartite(parts: &[usize]) -> Graph {
    let n = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (i, &s) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, s));
    }
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// A spine path `u_1..u_t` with off-spine vertices hanging from single spine
/// vertices, plus occasional 5-cycles closed through an edge between a
/// vertex of `S_i` and one of `S_{i+2}`. Labels are shuffled at the end.
fn girth5_candidate(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    if n <= 2 {
        return path(n);
    }
    let t = rng.gen_range(2..=n.div_ceil(2).max(2)).min(n);
    let mut edges: Vec<(usize, usize)> = (1..t).map(|i| (i - 1, i)).collect();
    let mut next = t;
    // per spine index: the non-pendant vertex linked to the right / left
    let mut right: Vec<Option<usize>> = vec![None; t];
    let mut left: Vec<Option<usize>> = vec![None; t];

    for i in 0..t.saturating_sub(2) {
        if n - next < 1 || !rng.gen_bool(0.5) {
            continue;
        }
        let reuse = left[i].filter(|_| rng.gen_bool(0.4));
        let a = match reuse {
            Some(a) => a,
            None => {
                if n - next < 2 {
                    continue;
                }
                let a = next;
                next += 1;
                edges.push((i, a));
                a
            }
        };
        let b = next;
        next += 1;
        edges.push((i + 2, b));
        edges.push((a, b));
        right[i] = Some(a);
        left[i + 2] = Some(b);
    }
    while next < n {
        let i = rng.gen_range(0..t);
        edges.push((i, next));
        next += 1;
    }

    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    Graph::from_edges(n, edges.into_iter().map(|(u, v)| (perm[u], perm[v])))
        .expect("generator produces valid edges")
}
