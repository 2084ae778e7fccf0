use super::model::{BoxRepresentation, IntervalModel};
use super::verify::verify;
use super::BoxrepError;
use crate::graph::Graph;
use crate::invariants::{find_asteroidal_triple, is_interval, Coloring};
use crate::triangulate::{interval_model, minimize_triangulation, split_supergraph};

/// One dimension per color class: the split supergraph of the class is
/// trimmed to a minimal triangulation of `g`, which is an interval graph
/// whenever `g` is AT-free, and its interval model becomes the dimension.
pub fn chromatic_boxrep(g: &Graph, c: &Coloring) -> Result<BoxRepresentation, BoxrepError> {
    if !c.is_proper(g) {
        return Err(BoxrepError::ImproperColoring);
    }
    if let Some(triple) = find_asteroidal_triple(g) {
        return Err(BoxrepError::NotAtFree { triple });
    }
    let dims = (0..c.k)
        .map(|i| class_dimension(g, c, i))
        .collect::<Result<Vec<_>, _>>()?;
    let rep = BoxRepresentation::new(g.n(), dims);
    verify(g, &rep).map_err(BoxrepError::InternalVerify)?;
    Ok(rep)
}

fn class_dimension(g: &Graph, c: &Coloring, class: usize) -> Result<IntervalModel, BoxrepError> {
    let split = split_supergraph(g, c, class)?;
    let minimal = minimize_triangulation(g, &split)?.graph();
    if !is_interval(&minimal) {
        return Err(BoxrepError::TriangulationNotInterval { class });
    }
    Ok(interval_model(&minimal)?)
}
