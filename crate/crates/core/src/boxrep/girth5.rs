//! Two-dimensional box representation of AT-free graphs with girth at
//! least five (or acyclic).
//!
//! Dimension 1 lays the path vertices `u_i` out as `[i, i+1]`, squeezes the
//! pendant vertices of `S_i` into disjoint slivers inside `(i, i+1)`, and
//! stretches non-pendant vertices half a unit towards the side of their
//! off-path neighbor. Dimension 2 separates path, pendant and non-pendant
//! vertices by the parity of their class.

use super::decomposition::{decompose, DominatingPathDecomposition};
use super::model::{int, rational, BoxRepresentation, IntervalModel, IntervalQ, Rational};
use super::verify::verify;
use super::BoxrepError;
use crate::graph::{connected_components, girth, Graph};
use crate::invariants::find_asteroidal_triple;

/// Intervals for one component in local vertex ids, before shifting.
///
/// `n` is the vertex count of the whole graph; pendant slivers have width
/// `1/(2n)`.
pub fn component_intervals(
    d: &DominatingPathDecomposition,
    local_n: usize,
    n: usize,
) -> (Vec<IntervalQ>, Vec<IntervalQ>) {
    let two_n = 2 * n as i64;
    let mut g1 = vec![IntervalQ::ints(0, 0); local_n];
    let mut g2 = vec![IntervalQ::ints(0, 0); local_n];

    for (k, &u) in d.path.iter().enumerate() {
        let i = k as i64 + 1;
        g1[u] = IntervalQ::ints(i, i + 1);
        g2[u] = if i % 2 == 1 {
            IntervalQ::ints(1, 2)
        } else {
            IntervalQ::ints(2, 3)
        };
    }

    let half = rational(1, 2);
    let three_halves = rational(3, 2);
    for (k, class) in d.classes.iter().enumerate() {
        let i = k as i64 + 1;
        let odd = i % 2 == 1;
        let base: Rational = int(i);
        let mut j = 0i64;
        for &v in class {
            if d.is_nonpendant(v) {
                let f = d.side_flags[&v];
                g1[v] = match (f.has_left, f.has_right) {
                    (true, true) => IntervalQ::closed(base - half, base + three_halves),
                    (false, true) => IntervalQ::closed(base + 1, base + three_halves),
                    (true, false) => IntervalQ::closed(base - half, base),
                    (false, false) => unreachable!("validated decomposition"),
                };
                g2[v] = if odd {
                    IntervalQ::ints(0, 1)
                } else {
                    IntervalQ::ints(3, 4)
                };
            } else {
                j += 1;
                g1[v] = IntervalQ::closed(
                    base + rational(2 * j - 1, two_n),
                    base + rational(2 * j, two_n),
                );
                g2[v] = if odd {
                    IntervalQ::closed(rational(5, 4), rational(7, 4))
                } else {
                    IntervalQ::closed(rational(9, 4), rational(11, 4))
                };
            }
        }
    }
    (g1, g2)
}

/// Builds and verifies the two-dimensional representation. Components are
/// handled separately; component `c` has dimension 1 shifted by
/// `c * (n + 4)`.
pub fn girth5_boxrep(g: &Graph) -> Result<BoxRepresentation, BoxrepError> {
    let n = g.n();
    if let Some(girth) = girth(g).filter(|&c| c < 5) {
        return Err(BoxrepError::GirthTooSmall { girth });
    }
    if let Some(triple) = find_asteroidal_triple(g) {
        return Err(BoxrepError::NotAtFree { triple });
    }
    let mut dim1 = vec![IntervalQ::ints(0, 0); n];
    let mut dim2 = vec![IntervalQ::ints(0, 0); n];
    for (c, comp) in connected_components(g).iter().enumerate() {
        let sub = g.induced_subgraph(comp);
        let d = decompose(&sub)?;
        let (a, b) = component_intervals(&d, comp.len(), n);
        let shift = int((c * (n + 4)) as i64);
        for (local, &v) in comp.iter().enumerate() {
            dim1[v] = a[local].shifted(shift);
            dim2[v] = b[local];
        }
    }
    let rep = BoxRepresentation::new(n, vec![IntervalModel::new(dim1), IntervalModel::new(dim2)]);
    verify(g, &rep).map_err(BoxrepError::InternalVerify)?;
    Ok(rep)
}
