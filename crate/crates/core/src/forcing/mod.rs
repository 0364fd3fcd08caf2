//! The zero forcing process.
//!
//! Colour-change rule: a black vertex with exactly one white neighbour turns
//! that neighbour black. The set of black vertices reached once no rule
//! applies does not depend on the order in which forces are applied; the
//! step log recorded here follows a fixed order so it is reproducible.

mod exact;
mod heuristic;

use serde::Serialize;

use crate::bitset::{bits, VertexSet};
use crate::graph::Graph;

pub use exact::{
    forcing_lower_bound, zero_forcing_number_exact, zero_forcing_number_exact_with, Direction,
    ExactOptions, LevelProbe, LowerBoundPolicy, SearchStats, Strategy, ZfResult, EXACT_MAX_N,
};
pub use heuristic::zero_forcing_upper_heuristic;

/// Record of one run of the forcing process.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForcingChronicle {
    initial: VertexSet,
    steps: Vec<(usize, usize)>,
    final_black: VertexSet,
}

impl ForcingChronicle {
    pub fn initial(&self) -> &VertexSet {
        &self.initial
    }

    /// `(forcer, forced)` pairs in the order they were applied.
    pub fn steps(&self) -> &[(usize, usize)] {
        &self.steps
    }

    pub fn final_black(&self) -> &VertexSet {
        &self.final_black
    }

    /// True when every vertex ended black.
    pub fn is_complete(&self) -> bool {
        self.final_black.is_full()
    }

    /// Replays the steps against `g` and checks every chronicle invariant.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let n = g.n();
        if self.initial.universe() != n || self.final_black.universe() != n {
            return false;
        }
        let mut black = self.initial.clone();
        for &(forcer, forced) in &self.steps {
            if forcer >= n || forced >= n || !black.contains(forcer) || black.contains(forced) {
                return false;
            }
            if white_neighbours(g.neighbours(forcer), &black) != WhiteNeighbours::One(forced) {
                return false;
            }
            black.insert(forced);
        }
        black == self.final_black
    }
}

#[derive(Debug, PartialEq, Eq)]
enum WhiteNeighbours {
    None,
    One(usize),
    Many,
}

fn white_neighbours(row: &VertexSet, black: &VertexSet) -> WhiteNeighbours {
    let mut found = None;
    for (i, (&r, &b)) in row.words().iter().zip(black.words()).enumerate() {
        let w = r & !b;
        if w == 0 {
            continue;
        }
        if found.is_some() || w & (w - 1) != 0 {
            return WhiteNeighbours::Many;
        }
        found = Some(i * 64 + w.trailing_zeros() as usize);
    }
    match found {
        Some(v) => WhiteNeighbours::One(v),
        None => WhiteNeighbours::None,
    }
}

/// Runs the colour-change rule from `initial` to its fixed point.
///
/// Each round scans vertices in ascending index; every black vertex that has
/// exactly one white neighbour at the moment it is scanned forces it. Rounds
/// repeat until one applies no force.
pub fn closure(g: &Graph, initial: &VertexSet) -> ForcingChronicle {
    assert_eq!(
        initial.universe(),
        g.n(),
        "vertex set universe must match the graph"
    );
    let n = g.n();
    let mut black = initial.clone();
    // Black vertices with no white neighbour can never force again.
    let mut spent = VertexSet::empty(n);
    let mut steps = Vec::new();
    loop {
        let mut progressed = false;
        for v in 0..n {
            if !black.contains(v) || spent.contains(v) {
                continue;
            }
            match white_neighbours(g.neighbours(v), &black) {
                WhiteNeighbours::None => spent.insert(v),
                WhiteNeighbours::One(u) => {
                    black.insert(u);
                    spent.insert(v);
                    steps.push((v, u));
                    progressed = true;
                }
                WhiteNeighbours::Many => {}
            }
        }
        if !progressed {
            break;
        }
    }
    ForcingChronicle {
        initial: initial.clone(),
        steps,
        final_black: black,
    }
}

/// Final black set for graphs with at most 64 vertices, as a mask.
pub(crate) fn closure_mask(rows: &[u64], start: u64, full: u64) -> u64 {
    let mut black = start;
    let mut active = start;
    loop {
        let mut progressed = false;
        for v in bits(active) {
            let white = rows[v] & !black;
            if white == 0 {
                active &= !(1 << v);
            } else if white & (white - 1) == 0 {
                black |= white;
                active = (active & !(1 << v)) | white;
                progressed = true;
            }
        }
        if !progressed || black == full {
            return black;
        }
    }
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// True when the closure of `s` is the whole vertex set.
pub fn is_forcing_set(g: &Graph, s: &VertexSet) -> bool {
    assert_eq!(
        s.universe(),
        g.n(),
        "vertex set universe must match the graph"
    );
    let n = g.n();
    if n <= 64 {
        let full = full_mask(n);
        closure_mask(&g.row_masks(), s.mask(), full) == full
    } else {
        closure(g, s).is_complete()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{standard_graph, StandardGraph};

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied()).unwrap()
    }

    #[test]
    fn path_from_endpoint() {
        let p4 = standard_graph(&StandardGraph::Path(4)).unwrap();
        let c = closure(&p4, &set(4, &[0]));
        assert_eq!(c.steps(), &[(0, 1), (1, 2), (2, 3)]);
        assert!(c.is_complete());
        assert!(c.is_valid_for(&p4));
    }

    #[test]
    fn path_from_interior_is_blocked() {
        let p4 = standard_graph(&StandardGraph::Path(4)).unwrap();
        let c = closure(&p4, &set(4, &[1]));
        assert!(c.steps().is_empty());
        assert_eq!(c.final_black(), &set(4, &[1]));
    }

    #[test]
    fn complete_graph_single_force() {
        let k4 = standard_graph(&StandardGraph::Complete(4)).unwrap();
        let c = closure(&k4, &set(4, &[0, 1, 2]));
        assert_eq!(c.steps(), &[(0, 3)]);
        assert!(c.is_complete());
    }

    #[test]
    fn cycle_forcing_sets() {
        let c5 = standard_graph(&StandardGraph::Cycle(5)).unwrap();
        assert!(is_forcing_set(&c5, &set(5, &[0, 1])));
        assert!(!is_forcing_set(&c5, &set(5, &[0])));
        assert!(is_forcing_set(&c5, &VertexSet::full(5)));
    }

    #[test]
    fn large_graph_uses_general_path() {
        let p = standard_graph(&StandardGraph::Path(100)).unwrap();
        assert!(is_forcing_set(&p, &set(100, &[99])));
        assert!(!is_forcing_set(&p, &set(100, &[50])));
        let c = closure(&p, &set(100, &[99]));
        assert_eq!(c.steps().len(), 99);
        assert!(c.is_valid_for(&p));
    }

    #[test]
    fn tampered_chronicle_is_rejected() {
        let p4 = standard_graph(&StandardGraph::Path(4)).unwrap();
        let mut c = closure(&p4, &set(4, &[0]));
        c.steps.swap(0, 1);
        assert!(!c.is_valid_for(&p4));
    }
}
