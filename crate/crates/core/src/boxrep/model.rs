//! Exact interval models and box representations.

use num_rational::Ratio;

use crate::graph::Graph;

/// Exact rational in lowest terms with a positive denominator.
pub type Rational = Ratio<i64>;

pub fn rational(num: i64, den: i64) -> Rational {
    Ratio::new(num, den)
}

pub fn int(v: i64) -> Rational {
    Ratio::from_integer(v)
}

/// Closed interval `[lo, hi]`, possibly a single point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IntervalQ {
    pub lo: Rational,
    pub hi: Rational,
}

impl IntervalQ {
    pub fn new(lo: Rational, hi: Rational) -> Option<Self> {
        (lo <= hi).then_some(IntervalQ { lo, hi })
    }

    /// Panics when `lo > hi`.
    pub fn closed(lo: Rational, hi: Rational) -> Self {
        Self::new(lo, hi).unwrap_or_else(|| panic!("inverted interval [{lo}, {hi}]"))
    }

    pub fn ints(lo: i64, hi: i64) -> Self {
        Self::closed(int(lo), int(hi))
    }

    #[inline]
    pub fn intersects(&self, other: &IntervalQ) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn shifted(&self, by: Rational) -> Self {
        IntervalQ {
            lo: self.lo + by,
            hi: self.hi + by,
        }
    }

    pub fn length(&self) -> Rational {
        self.hi - self.lo
    }
}

impl std::fmt::Display for IntervalQ {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// One interval per vertex: a single dimension of a box representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalModel {
    pub intervals: Vec<IntervalQ>,
}

impl IntervalModel {
    pub fn new(intervals: Vec<IntervalQ>) -> Self {
        IntervalModel { intervals }
    }

    #[inline]
    pub fn get(&self, v: usize) -> &IntervalQ {
        &self.intervals[v]
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// The interval graph this model induces.
    pub fn intersection_graph(&self) -> Graph {
        let n = self.len();
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if self.intervals[u].intersects(&self.intervals[v]) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }
}

/// An ordered list of interval models over the same vertex set. Two
/// vertices are adjacent iff their intervals meet in every dimension, so
/// zero dimensions describe the complete graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxRepresentation {
    pub n: usize,
    pub dims: Vec<IntervalModel>,
}

impl BoxRepresentation {
    pub fn new(n: usize, dims: Vec<IntervalModel>) -> Self {
        BoxRepresentation { n, dims }
    }

    pub fn dimension(&self) -> usize {
        self.dims.len()
    }

    /// Graph induced by box intersection. Assumes every dimension covers
    /// all `n` vertices.
    pub fn intersection_graph(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.dims.iter().all(|d| d.get(u).intersects(d.get(v))) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Whether every interval in every dimension has length exactly one.
    pub fn is_unit(&self) -> bool {
        self.dims
            .iter()
            .all(|d| d.intervals.iter().all(|iv| iv.length() == int(1)))
    }
}
