//! Cubicity upper bounds for AT-free graphs and brute-force oracles for
//! boxicity, cubicity and chordal dimension on small graphs.

mod exact;
mod sandwich;

pub use exact::{
    decide, exact, exact_boxicity, exact_chordality, exact_cubicity, ExactResult, Param, KMAX_CAP,
};

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::boxrep::{box_upper, pipeline_coloring, BoxMethod, BoxrepError};
use crate::graph::{girth, to_graph6, Graph};
use crate::invariants::{
    claw_number, claw_number_with_model, find_asteroidal_triple, InvariantError,
    DEFAULT_EXACT_LIMIT,
};
use crate::triangulate::{
    interval_model, minimize_triangulation, split_supergraph, TriangulateError,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CubeboundError {
    #[error("graph is not AT-free: asteroidal triple {triple:?}")]
    NotAtFree { triple: [usize; 3] },
    #[error(
        "exact {param} search refused: n = {n} exceeds the cap of {cap} vertices; \
         use `bounds` for an upper bound instead"
    )]
    VertexCap { param: Param, n: usize, cap: usize },
    #[error("exact search refused: kmax = {kmax} exceeds the cap of {cap}")]
    KmaxCap { kmax: usize, cap: usize },
    #[error("internal error: {param} witness factors failed re-verification")]
    WitnessRejected { param: Param },
    #[error(transparent)]
    Boxrep(#[from] BoxrepError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Triangulate(#[from] TriangulateError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Formula {
    /// `box(G) * (ceil(log2 psi) + 2)`
    Theorem17,
    /// `2 * ceil(log2 psi) + 4`, girth at least five or acyclic
    Corollary18,
    /// number of colors, claw-free
    ChiClawfree,
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Formula::Theorem17 => "theorem17",
            Formula::Corollary18 => "corollary18",
            Formula::ChiClawfree => "chi_clawfree",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CubBound {
    pub formula: Formula,
    pub value: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExactSummary {
    /// `None` when the value exceeds `kmax`.
    pub value: Option<usize>,
    pub kmax: usize,
    pub note: String,
}

impl From<&ExactResult> for ExactSummary {
    fn from(r: &ExactResult) -> Self {
        ExactSummary {
            value: r.value,
            kmax: r.kmax,
            note: r.budget_note(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ExactValues {
    #[serde(rename = "box")]
    pub boxicity: Option<ExactSummary>,
    #[serde(rename = "cub")]
    pub cubicity: Option<ExactSummary>,
    #[serde(rename = "chord")]
    pub chordality: Option<ExactSummary>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    /// graph6 of the input, empty above 62 vertices.
    pub graph: String,
    pub n: usize,
    pub psi: usize,
    pub log2_psi: usize,
    pub girth: Option<usize>,
    pub claw_free: bool,
    pub box_upper: usize,
    pub box_method: BoxMethod,
    pub chi: usize,
    pub chi_exact: bool,
    /// Every applicable formula, in the order theorem17, corollary18,
    /// chi_clawfree.
    pub bounds: Vec<CubBound>,
    pub cub_upper: usize,
    pub formula: Formula,
    pub exact: ExactValues,
}

impl BoundReport {
    pub fn bound(&self, formula: Formula) -> Option<usize> {
        self.bounds
            .iter()
            .find(|b| b.formula == formula)
            .map(|b| b.value)
    }

    /// Runs the oracles that fit under their caps and records the values.
    pub fn fill_exact(&mut self, g: &Graph, kmax: usize) -> Result<(), CubeboundError> {
        let run = |p: Param| -> Result<Option<ExactSummary>, CubeboundError> {
            if g.n() > p.n_cap() {
                return Ok(None);
            }
            Ok(Some(ExactSummary::from(&exact(g, p, kmax)?)))
        };
        self.exact = ExactValues {
            boxicity: run(Param::Box)?,
            cubicity: run(Param::Cub)?,
            chordality: run(Param::Chord)?,
        };
        Ok(())
    }
}

/// `ceil(log2 psi)`, taken as 0 for `psi <= 1`.
pub fn ceil_log2(psi: usize) -> usize {
    if psi <= 1 {
        0
    } else {
        (usize::BITS - (psi - 1).leading_zeros()) as usize
    }
}

fn psi_of(g: &Graph) -> Result<usize, CubeboundError> {
    Ok(claw_number(g)?.0)
}

/// Cubicity upper bound of an AT-free graph. Every applicable formula is
/// listed; the reported `cub_upper` is the smallest of them.
pub fn cub_upper(g: &Graph) -> Result<BoundReport, CubeboundError> {
    if let Some(triple) = find_asteroidal_triple(g) {
        return Err(CubeboundError::NotAtFree { triple });
    }
    let psi = psi_of(g)?;
    let log = ceil_log2(psi);
    let up = box_upper(g)?;
    let gi = girth(g);
    let claw_free = psi <= 2;
    let chi = pipeline_coloring(g).k;

    let mut bounds = vec![CubBound {
        formula: Formula::Theorem17,
        value: up.k * (log + 2),
    }];
    if gi.is_none_or(|c| c >= 5) {
        bounds.push(CubBound {
            formula: Formula::Corollary18,
            value: 2 * log + 4,
        });
    }
    if claw_free {
        bounds.push(CubBound {
            formula: Formula::ChiClawfree,
            value: chi,
        });
    }
    let best = *bounds
        .iter()
        .min_by_key(|b| b.value)
        .expect("theorem17 always applies");
    Ok(BoundReport {
        graph: if g.n() <= 62 {
            to_graph6(g).unwrap_or_default()
        } else {
            String::new()
        },
        n: g.n(),
        psi,
        log2_psi: log,
        girth: gi,
        claw_free,
        box_upper: up.k,
        box_method: up.method,
        chi,
        chi_exact: g.n() <= DEFAULT_EXACT_LIMIT,
        bounds,
        cub_upper: best.value,
        formula: best.formula,
        exact: ExactValues::default(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClawProbe {
    pub psi_g: usize,
    pub psi_h: usize,
    /// The minimal triangulation that was probed.
    pub h: Graph,
}

/// Minimal triangulation of `g` trimmed from the split supergraph of the
/// first color class, with the claw numbers of both graphs.
pub fn triangulation_claw_probe(g: &Graph) -> Result<ClawProbe, CubeboundError> {
    if let Some(triple) = find_asteroidal_triple(g) {
        return Err(CubeboundError::NotAtFree { triple });
    }
    let psi_g = psi_of(g)?;
    let c = pipeline_coloring(g);
    let h = if c.k == 0 {
        g.clone()
    } else {
        let split = split_supergraph(g, &c, 0)?;
        minimize_triangulation(g, &split)?.graph()
    };
    let psi_h = match claw_number(&h) {
        Ok((p, _)) => p,
        Err(_) => claw_number_with_model(&h, &interval_model(&h)?).0,
    };
    Ok(ClawProbe { psi_g, psi_h, h })
}
