use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::sandwich::{
    adjacency_masks, chordal_order, fill_graph, interval_completion, interval_order,
    unit_completion, unit_model, unit_order,
};
use super::CubeboundError;
use crate::boxrep::{verify, BoxRepresentation, IntervalModel};
use crate::graph::Graph;
use crate::invariants::{is_chordal, is_unit_interval};

pub const KMAX_CAP: usize = 3;

/// Which intersection dimension the oracle computes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Param {
    Box,
    Cub,
    Chord,
}

impl Param {
    pub fn name(self) -> &'static str {
        match self {
            Param::Box => "box",
            Param::Cub => "cub",
            Param::Chord => "chord",
        }
    }

    /// Largest vertex count the oracle accepts.
    pub fn n_cap(self) -> usize {
        match self {
            Param::Box | Param::Chord => 8,
            Param::Cub => 7,
        }
    }

    fn factor_class(self) -> &'static str {
        match self {
            Param::Box => "interval",
            Param::Cub => "unit interval",
            Param::Chord => "chordal",
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Param {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "box" => Ok(Param::Box),
            "cub" => Ok(Param::Cub),
            "chord" => Ok(Param::Chord),
            _ => Err(format!(
                "unknown parameter {s:?} (expected box, cub or chord)"
            )),
        }
    }
}

/// Outcome of an exact search. `value` is `None` when no representation
/// with at most `kmax` factors exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactResult {
    pub param: Param,
    pub kmax: usize,
    pub value: Option<usize>,
    /// Factor graphs whose edge intersection is `G`.
    pub factors: Vec<Graph>,
    /// Interval (box) or unit interval (cub) models of the factors.
    pub models: Option<BoxRepresentation>,
    /// Assignment nodes visited over all tried `k`.
    pub nodes: u64,
}

impl ExactResult {
    pub fn budget_note(&self) -> String {
        format!(
            "exhaustive witness assignment with {} factors, k <= {}, {} nodes",
            self.param.factor_class(),
            self.kmax,
            self.nodes
        )
    }
}

pub fn exact_boxicity(g: &Graph, kmax: usize) -> Result<ExactResult, CubeboundError> {
    exact(g, Param::Box, kmax)
}

pub fn exact_cubicity(g: &Graph, kmax: usize) -> Result<ExactResult, CubeboundError> {
    exact(g, Param::Cub, kmax)
}

pub fn exact_chordality(g: &Graph, kmax: usize) -> Result<ExactResult, CubeboundError> {
    exact(g, Param::Chord, kmax)
}

/// Smallest `k <= kmax` such that `G` is the intersection of `k` graphs of
/// the class, found by giving each non-edge a factor that must miss it.
/// A factor is then any class member between `G` and the complement of its
/// missed non-edges; that is monotone in the missed set, which drives the
/// pruning.
pub fn exact(g: &Graph, param: Param, kmax: usize) -> Result<ExactResult, CubeboundError> {
    let n = g.n();
    if n > param.n_cap() {
        return Err(CubeboundError::VertexCap {
            param,
            n,
            cap: param.n_cap(),
        });
    }
    if kmax > KMAX_CAP {
        return Err(CubeboundError::KmaxCap {
            kmax,
            cap: KMAX_CAP,
        });
    }
    let mut result = ExactResult {
        param,
        kmax,
        value: None,
        factors: vec![],
        models: None,
        nodes: 0,
    };
    if g.is_complete() {
        result.value = Some(0);
        if param != Param::Chord {
            result.models = Some(BoxRepresentation::new(n, vec![]));
        }
        return Ok(result);
    }
    let mut search = Search::new(g, param);
    for k in 1..=kmax {
        let found = search.run(k);
        result.nodes += search.nodes;
        if let Some(orders) = found {
            result.value = Some(k);
            witness(g, param, &orders, &mut result)?;
            return Ok(result);
        }
    }
    Ok(result)
}

/// Decides whether `G` is the intersection of at most `k` class members
/// for a single `k`, without the `kmax` cap: the vertex cap still applies.
/// Used to settle graphs the capped search reports as exceeding `kmax`.
/// On success `value` is `Some(k)` and the witness has exactly `k`
/// factors; it is an upper bound, not necessarily the minimum.
pub fn decide(g: &Graph, param: Param, k: usize) -> Result<Option<ExactResult>, CubeboundError> {
    let n = g.n();
    if n > param.n_cap() {
        return Err(CubeboundError::VertexCap {
            param,
            n,
            cap: param.n_cap(),
        });
    }
    if g.is_complete() {
        return exact(g, param, 0).map(Some);
    }
    if k == 0 {
        return Ok(None);
    }
    let mut search = Search::new(g, param);
    let Some(orders) = search.run(k) else {
        return Ok(None);
    };
    let mut result = ExactResult {
        param,
        kmax: k,
        value: Some(orders.len()),
        factors: vec![],
        models: None,
        nodes: search.nodes,
    };
    witness(g, param, &orders, &mut result)?;
    Ok(Some(result))
}

fn witness(
    g: &Graph,
    param: Param,
    orders: &[Vec<usize>],
    result: &mut ExactResult,
) -> Result<(), CubeboundError> {
    let n = g.n();
    match param {
        Param::Chord => {
            result.factors = orders.iter().map(|o| fill_graph(g, o)).collect();
            let meet = result
                .factors
                .iter()
                .fold(Graph::complete(n), |acc, f| intersect(&acc, f));
            if meet != *g || !result.factors.iter().all(is_chordal) {
                return Err(CubeboundError::WitnessRejected { param });
            }
        }
        Param::Box | Param::Cub => {
            let mut models: Vec<IntervalModel> = Vec::new();
            for o in orders {
                let model = if param == Param::Box {
                    interval_completion(g, o)
                } else {
                    let h = unit_completion(g, o);
                    unit_model(&h, o).ok_or(CubeboundError::WitnessRejected { param })?
                };
                result.factors.push(model.intersection_graph());
                models.push(model);
            }
            let rep = BoxRepresentation::new(n, models);
            if verify(g, &rep).is_err() || (param == Param::Cub && !rep.is_unit()) {
                return Err(CubeboundError::WitnessRejected { param });
            }
            if param == Param::Cub && !result.factors.iter().all(is_unit_interval) {
                return Err(CubeboundError::WitnessRejected { param });
            }
            result.models = Some(rep);
        }
    }
    Ok(())
}

fn intersect(a: &Graph, b: &Graph) -> Graph {
    let mut out = Graph::empty(a.n());
    for (u, v) in a.edges() {
        if b.has_edge(u, v) {
            out.add_edge(u, v);
        }
    }
    out
}

struct Search {
    param: Param,
    adj: Vec<u32>,
    non_edges: Vec<(usize, usize)>,
    feasible: HashMap<u64, Option<Vec<usize>>>,
    failed: HashSet<(usize, Vec<u64>)>,
    nodes: u64,
}

impl Search {
    fn new(g: &Graph, param: Param) -> Self {
        Search {
            param,
            adj: adjacency_masks(g),
            non_edges: g.non_edges().collect(),
            feasible: HashMap::new(),
            failed: HashSet::new(),
            nodes: 0,
        }
    }

    /// A class member between `G` and the complement of `missed`, as the
    /// ordering that produces it.
    fn factor(&mut self, missed: u64) -> Option<&Vec<usize>> {
        if !self.feasible.contains_key(&missed) {
            let mut forbid = vec![0u32; self.adj.len()];
            for (i, &(u, v)) in self.non_edges.iter().enumerate() {
                if missed >> i & 1 == 1 {
                    forbid[u] |= 1 << v;
                    forbid[v] |= 1 << u;
                }
            }
            let order = match self.param {
                Param::Chord => chordal_order(&self.adj, &forbid),
                Param::Box => interval_order(&self.adj, &forbid),
                Param::Cub => unit_order(&self.adj, &forbid),
            };
            self.feasible.insert(missed, order);
        }
        self.feasible[&missed].as_ref()
    }

    fn run(&mut self, k: usize) -> Option<Vec<Vec<usize>>> {
        self.nodes = 0;
        self.failed.clear();
        let mut missed = vec![0u64; k];
        if !self.assign(0, &mut missed, 0) {
            return None;
        }
        Some(
            missed
                .iter()
                .map(|&m| self.factor(m).expect("feasible at leaf").clone())
                .collect(),
        )
    }

    fn assign(&mut self, idx: usize, missed: &mut Vec<u64>, used: usize) -> bool {
        self.nodes += 1;
        if idx == self.non_edges.len() {
            return true;
        }
        let mut key = missed.clone();
        key.sort_unstable();
        if self.failed.contains(&(idx, key.clone())) {
            return false;
        }
        let k = missed.len();
        // factors are interchangeable, so a fresh one is opened only once
        for j in 0..k.min(used + 1) {
            let before = missed[j];
            missed[j] |= 1 << idx;
            if self.factor(missed[j]).is_some() && self.assign(idx + 1, missed, used.max(j + 1)) {
                return true;
            }
            missed[j] = before;
        }
        self.failed.insert((idx, key));
        false
    }
}
