use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::chromatic::chromatic_boxrep;
use super::girth5::girth5_boxrep;
use super::model::BoxRepresentation;
use super::BoxrepError;
use crate::graph::{girth, Graph};
use crate::invariants::{
    color, find_asteroidal_triple, is_interval, ColorMode, Coloring, DEFAULT_EXACT_LIMIT,
};
use crate::triangulate::interval_model;

/// Which construction backs an upper bound on the boxicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoxMethod {
    Complete,
    Interval,
    Girth5,
    Coloring,
}

impl BoxMethod {
    pub fn name(self) -> &'static str {
        match self {
            BoxMethod::Complete => "complete",
            BoxMethod::Interval => "interval",
            BoxMethod::Girth5 => "girth5",
            BoxMethod::Coloring => "coloring",
        }
    }
}

impl fmt::Display for BoxMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoxMethod {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [
            BoxMethod::Complete,
            BoxMethod::Interval,
            BoxMethod::Girth5,
            BoxMethod::Coloring,
        ]
        .into_iter()
        .find(|m| m.name() == s)
        .ok_or_else(|| format!("unknown method {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoxUpper {
    pub k: usize,
    pub method: BoxMethod,
}

/// The coloring used by the chromatic route: exact up to the default cap,
/// degree-saturation beyond it.
pub fn pipeline_coloring(g: &Graph) -> Coloring {
    let mode = if g.n() <= DEFAULT_EXACT_LIMIT {
        ColorMode::Exact
    } else {
        ColorMode::Heuristic
    };
    color(g, mode, DEFAULT_EXACT_LIMIT).expect("mode respects the limit")
}

fn has_girth5(g: &Graph) -> bool {
    girth(g).is_none_or(|c| c >= 5)
}

/// Upper bound on the boxicity of an AT-free graph with the construction
/// that realizes it: 0 for complete graphs, 1 for interval graphs, 2 when
/// the girth is at least five, otherwise the number of color classes.
pub fn box_upper(g: &Graph) -> Result<BoxUpper, BoxrepError> {
    if let Some(triple) = find_asteroidal_triple(g) {
        return Err(BoxrepError::NotAtFree { triple });
    }
    let (k, method) = if g.is_complete() {
        (0, BoxMethod::Complete)
    } else if is_interval(g) {
        (1, BoxMethod::Interval)
    } else if has_girth5(g) {
        (2, BoxMethod::Girth5)
    } else {
        (pipeline_coloring(g).k, BoxMethod::Coloring)
    };
    Ok(BoxUpper { k, method })
}

/// Builds the representation behind [`box_upper`], or the one for an
/// explicitly requested method.
pub fn box_witness(
    g: &Graph,
    method: Option<BoxMethod>,
) -> Result<(BoxRepresentation, BoxMethod), BoxrepError> {
    let method = match method {
        Some(m) => m,
        None => box_upper(g)?.method,
    };
    if let Some(triple) = find_asteroidal_triple(g) {
        return Err(BoxrepError::NotAtFree { triple });
    }
    let rep = match method {
        BoxMethod::Complete => {
            if !g.is_complete() {
                return Err(BoxrepError::NotApplicable { method });
            }
            BoxRepresentation::new(g.n(), vec![])
        }
        BoxMethod::Interval => {
            if !is_interval(g) {
                return Err(BoxrepError::NotApplicable { method });
            }
            BoxRepresentation::new(g.n(), vec![interval_model(g)?])
        }
        BoxMethod::Girth5 => girth5_boxrep(g)?,
        BoxMethod::Coloring => chromatic_boxrep(g, &pipeline_coloring(g))?,
    };
    Ok((rep, method))
}
