//! Box representations: exact interval models, the girth-five and
//! color-class constructions, and the verifier.

mod chromatic;
pub mod decomposition;
mod file;
mod girth5;
mod model;
mod upper;
mod verify;

pub use chromatic::chromatic_boxrep;
pub use decomposition::{
    decompose, validate, Clause, ClauseViolation, DecomposeError, DominatingPathDecomposition,
    SideFlags,
};
pub use file::{RepresentationFile, SchemaError};
pub use girth5::{component_intervals, girth5_boxrep};
pub use model::{int, rational, BoxRepresentation, IntervalModel, IntervalQ, Rational};
pub use upper::{box_upper, box_witness, pipeline_coloring, BoxMethod, BoxUpper};
pub use verify::{dimension_is_supergraph, verify, Violation};

use thiserror::Error;

use crate::triangulate::TriangulateError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoxrepError {
    #[error("graph is not AT-free: asteroidal triple {triple:?}")]
    NotAtFree { triple: [usize; 3] },
    #[error("girth {girth} is below 5")]
    GirthTooSmall { girth: usize },
    #[error("coloring is not proper")]
    ImproperColoring,
    #[error(
        "minimal triangulation for color class {class} is not an interval graph; \
         minimal triangulations of AT-free graphs are always interval graphs"
    )]
    TriangulationNotInterval { class: usize },
    #[error("method {method} does not apply to this graph")]
    NotApplicable { method: BoxMethod },
    #[error(transparent)]
    Decompose(#[from] DecomposeError),
    #[error(transparent)]
    Triangulate(#[from] TriangulateError),
    #[error("internal error: constructed representation failed verification ({} violations; first: {})", .0.len(), .0[0])]
    InternalVerify(Vec<Violation>),
}
