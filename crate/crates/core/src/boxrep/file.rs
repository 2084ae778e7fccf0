//! JSON representation file:
//!
//! ```json
//! {"n": 5, "dims": 2, "intervals": [[[[2,1],[5,2]], ...], ...],
//!  "method": "girth5", "graph6": "Dhc"}
//! ```
//!
//! `intervals[d][v]` is `[[lo_num, lo_den], [hi_num, hi_den]]` in lowest
//! terms with positive denominators.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::model::{BoxRepresentation, IntervalModel, IntervalQ, Rational};
use crate::graph::{to_graph6, Graph, GraphError};

pub type RationalPair = [i64; 2];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepresentationFile {
    pub n: usize,
    pub dims: usize,
    pub intervals: Vec<Vec<[RationalPair; 2]>>,
    pub method: String,
    pub graph6: String,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SchemaError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("\"dims\" is {declared} but {found} dimensions are listed")]
    DimCount { declared: usize, found: usize },
    #[error("dimension {dim} lists {found} intervals, expected n = {n}")]
    VertexCount { dim: usize, found: usize, n: usize },
    #[error("dimension {dim}, vertex {vertex}: {value:?} is not a canonical rational")]
    NonCanonical {
        dim: usize,
        vertex: usize,
        value: RationalPair,
    },
    #[error("dimension {dim}, vertex {vertex}: lower endpoint exceeds upper")]
    Inverted { dim: usize, vertex: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn to_pair(r: &Rational) -> RationalPair {
    [*r.numer(), *r.denom()]
}

fn from_pair(p: RationalPair) -> Option<Rational> {
    let [num, den] = p;
    if den <= 0 {
        return None;
    }
    let r = Rational::new(num, den);
    (*r.numer() == num && *r.denom() == den).then_some(r)
}

impl RepresentationFile {
    pub fn from_representation(
        g: &Graph,
        rep: &BoxRepresentation,
        method: &str,
    ) -> Result<Self, SchemaError> {
        Ok(RepresentationFile {
            n: rep.n,
            dims: rep.dimension(),
            intervals: rep
                .dims
                .iter()
                .map(|d| {
                    d.intervals
                        .iter()
                        .map(|iv| [to_pair(&iv.lo), to_pair(&iv.hi)])
                        .collect()
                })
                .collect(),
            method: method.to_string(),
            graph6: if g.n() <= 62 {
                to_graph6(g)?
            } else {
                String::new()
            },
        })
    }

    pub fn to_representation(&self) -> Result<BoxRepresentation, SchemaError> {
        if self.intervals.len() != self.dims {
            return Err(SchemaError::DimCount {
                declared: self.dims,
                found: self.intervals.len(),
            });
        }
        let mut dims = Vec::with_capacity(self.dims);
        for (dim, list) in self.intervals.iter().enumerate() {
            if list.len() != self.n {
                return Err(SchemaError::VertexCount {
                    dim,
                    found: list.len(),
                    n: self.n,
                });
            }
            let mut ivs = Vec::with_capacity(self.n);
            for (vertex, [lo, hi]) in list.iter().enumerate() {
                let parse = |p: &RationalPair| {
                    from_pair(*p).ok_or(SchemaError::NonCanonical {
                        dim,
                        vertex,
                        value: *p,
                    })
                };
                let iv = IntervalQ::new(parse(lo)?, parse(hi)?)
                    .ok_or(SchemaError::Inverted { dim, vertex })?;
                ivs.push(iv);
            }
            dims.push(IntervalModel::new(ivs));
        }
        Ok(BoxRepresentation::new(self.n, dims))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self, SchemaError> {
        serde_json::from_str(text).map_err(|e| SchemaError::Json(e.to_string()))
    }
}
