//! Witnesses: pairs of vertex tuples `(s, t)` with `s_i ~ t_i` for every `i`
//! and `s_i ≁ t_j` whenever `i < j`.
//!
//! A forcing run from `S` yields a witness of order `n - |S|` (read the
//! forces in order), and a witness whose two tuples share no vertex yields
//! the forcing set `V ∖ t`. Witness orders therefore bracket `n - Z(G)`.
//!
//! Two distinctness rules are enforced. The `s_i` must be distinct by
//! definition. The `t_j` are then distinct automatically: if `t_i = t_j`
//! with `i < j`, then `s_i ~ t_i = t_j` contradicts `s_i ≁ t_j`. The checker
//! still reports a repeated `t` as its own violation, since a caller-built
//! tuple can break it before anything else is checked.
//!
//! Positions in violations are 0-based.

mod loose;
mod phi;
mod search;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::forcing::ForcingChronicle;
use crate::graph::{Gf2Matrix, Graph};

pub use loose::{
    check_loose_subwitness, default_loose_parameters, loose_subwitness_from_witness,
    LooseSubwitness, LooseViolation,
};
pub use phi::{
    lemma4_ratio_scan, phi_bruteforce, phi_upper_closed_form, ratio_within_bound, PhiValue,
    RatioCell, RatioScan, PHI_MAX_K, RATIO_BOUND,
};
pub use search::{enumerate_witnesses, max_witness_order, WitnessMode, WITNESS_MAX_N};

/// An ordered pair of equal-length vertex tuples.
///
/// Construction only checks the lengths; use [`Witness::violation`] or
/// [`check_witness`] to test the adjacency pattern against a graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Witness {
    s: Vec<usize>,
    t: Vec<usize>,
}

impl Witness {
    pub fn new(s: Vec<usize>, t: Vec<usize>) -> Result<Self> {
        if s.len() != t.len() {
            return Err(Error::input(format!(
                "witness tuples differ in length: {} vs {}",
                s.len(),
                t.len()
            )));
        }
        Ok(Self { s, t })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn order(&self) -> usize {
        self.s.len()
    }

    pub fn s(&self) -> &[usize] {
        &self.s
    }

    pub fn t(&self) -> &[usize] {
        &self.t
    }

    /// True when no vertex occurs in both tuples.
    pub fn images_disjoint(&self) -> bool {
        self.s.iter().all(|v| !self.t.contains(v))
    }

    /// First violated rule in `g`, or `None` for a valid witness.
    pub fn violation(&self, g: &Graph) -> Result<Option<WitnessViolation>> {
        check_witness(g, &self.s, &self.t)
    }

    pub(crate) fn push(&mut self, s: usize, t: usize) {
        self.s.push(s);
        self.t.push(t);
    }
}

/// The first rule a candidate witness breaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum WitnessViolation {
    /// `s_i = s_j` with `i < j`.
    DuplicateS { i: usize, j: usize },
    /// `t_i = t_j` with `i < j`.
    DuplicateT { i: usize, j: usize },
    /// `s_i = t_j` with `i <= j`.
    IllegalOverlap { i: usize, j: usize },
    /// `s_i` is not adjacent to `t_i`.
    MissingDiagonal { i: usize },
    /// `s_i` is adjacent to `t_j` with `i < j`.
    SuperdiagonalEdge { i: usize, j: usize },
}

impl fmt::Display for WitnessViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            WitnessViolation::DuplicateS { i, j } => {
                write!(f, "duplicate s: s[{i}] = s[{j}]")
            }
            WitnessViolation::DuplicateT { i, j } => {
                write!(f, "duplicate t: t[{i}] = t[{j}]")
            }
            WitnessViolation::IllegalOverlap { i, j } => {
                write!(f, "illegal overlap: s[{i}] = t[{j}] with {i} <= {j}")
            }
            WitnessViolation::MissingDiagonal { i } => {
                write!(f, "missing diagonal edge: s[{i}] not adjacent to t[{i}]")
            }
            WitnessViolation::SuperdiagonalEdge { i, j } => {
                write!(
                    f,
                    "superdiagonal edge: s[{i}] adjacent to t[{j}] with {i} < {j}"
                )
            }
        }
    }
}

/// Checks the witness rules for `(s, t)` in `g`.
///
/// Returns `Ok(None)` for a valid witness and the first violation otherwise,
/// testing duplicates, overlaps, diagonal edges and superdiagonal edges in that
/// order. Tuples of different length or vertices outside `g` are input errors.
pub fn check_witness(g: &Graph, s: &[usize], t: &[usize]) -> Result<Option<WitnessViolation>> {
    if s.len() != t.len() {
        return Err(Error::input(format!(
            "witness tuples differ in length: {} vs {}",
            s.len(),
            t.len()
        )));
    }
    let n = g.n();
    if let Some(&v) = s.iter().chain(t).find(|&&v| v >= n) {
        return Err(Error::input(format!(
            "witness vertex {v} out of range 0..{n}"
        )));
    }
    let k = s.len();
    let pairs = || (0..k).flat_map(move |j| (0..j).map(move |i| (i, j)));
    if let Some((i, j)) = pairs().find(|&(i, j)| s[i] == s[j]) {
        return Ok(Some(WitnessViolation::DuplicateS { i, j }));
    }
    if let Some((i, j)) = pairs().find(|&(i, j)| t[i] == t[j]) {
        return Ok(Some(WitnessViolation::DuplicateT { i, j }));
    }
    for j in 0..k {
        if let Some(i) = (0..=j).find(|&i| s[i] == t[j]) {
            return Ok(Some(WitnessViolation::IllegalOverlap { i, j }));
        }
    }
    if let Some(i) = (0..k).find(|&i| !g.adjacent(s[i], t[i])) {
        return Ok(Some(WitnessViolation::MissingDiagonal { i }));
    }
    if let Some((i, j)) = pairs().find(|&(i, j)| g.adjacent(s[i], t[j])) {
        return Ok(Some(WitnessViolation::SuperdiagonalEdge { i, j }));
    }
    Ok(None)
}

/// True when every `s_i` lies in `v1` and every `t_i` in `v2`.
///
/// `v1` and `v2` must partition the vertex set.
pub fn is_divided(w: &Witness, v1: &VertexSet, v2: &VertexSet) -> Result<bool> {
    let n = v1.universe();
    if v2.universe() != n {
        return Err(Error::input("partition sides have different universes"));
    }
    let mut union = v1.clone();
    union.union_with(v2);
    if !v1.is_disjoint(v2) || !union.is_full() {
        return Err(Error::input("v1 and v2 do not partition the vertex set"));
    }
    if let Some(&v) = w.s.iter().chain(&w.t).find(|&&v| v >= n) {
        return Err(Error::input(format!(
            "witness vertex {v} out of range 0..{n}"
        )));
    }
    Ok(w.s.iter().all(|&v| v1.contains(v)) && w.t.iter().all(|&v| v2.contains(v)))
}

/// Reads the witness off a forcing run: `t` lists the forced vertices in
/// order and `s_i` is the vertex that forced `t_i`.
pub fn witness_from_forcing(g: &Graph, chronicle: &ForcingChronicle) -> Result<Witness> {
    if !chronicle.is_valid_for(g) {
        return Err(Error::input(
            "forcing chronicle is not valid for this graph",
        ));
    }
    let (s, t) = chronicle.steps().iter().copied().unzip();
    Ok(Witness { s, t })
}

/// The forcing set `V ∖ t` certified by a witness with disjoint tuples.
pub fn forcing_set_from_witness(g: &Graph, w: &Witness) -> Result<VertexSet> {
    if let Some(v) = w.violation(g)? {
        return Err(Error::input(format!("not a witness: {v}")));
    }
    if !w.images_disjoint() {
        return Err(Error::input(
            "witness tuples share a vertex; only disjoint witnesses certify a forcing set",
        ));
    }
    let mut set = VertexSet::full(g.n());
    for &v in &w.t {
        set.remove(v);
    }
    Ok(set)
}

/// True when the labels of `t_1, …, t_k` are linearly independent over GF(2).
pub fn witness_gf2_independence(labels: &Gf2Matrix, w: &Witness) -> Result<bool> {
    if let Some(&v) = w.t.iter().find(|&&v| v >= labels.rows()) {
        return Err(Error::input(format!(
            "vertex {v} has no label ({} rows)",
            labels.rows()
        )));
    }
    Ok(labels.select(&w.t).rank() == w.order())
}

/// One-line form `k; s: a1 … ak; t: b1 … bk`.
impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(|x| format!(" {x}")).collect::<String>();
        write!(
            f,
            "{}; s:{}; t:{}",
            self.order(),
            join(&self.s),
            join(&self.t)
        )
    }
}

impl FromStr for Witness {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = |message: String| Error::Parse { line: 1, message };
        let parts: Vec<&str> = text.trim().split(';').map(str::trim).collect();
        let [k, s, t] = parts[..] else {
            return Err(bad(format!("expected \"k; s: …; t: …\", got {text:?}")));
        };
        let k: usize = k
            .parse()
            .map_err(|_| bad(format!("order is not an integer: {k:?}")))?;
        let tuple = |field: &str, label: &str| -> Result<Vec<usize>> {
            let rest = field
                .strip_prefix(label)
                .and_then(|r| r.strip_prefix(':'))
                .ok_or_else(|| bad(format!("expected \"{label}:\", got {field:?}")))?;
            rest.split_whitespace()
                .map(|x| {
                    x.parse()
                        .map_err(|_| bad(format!("not a vertex index: {x:?}")))
                })
                .collect()
        };
        let s = tuple(s, "s")?;
        let t = tuple(t, "t")?;
        if s.len() != k || t.len() != k {
            return Err(bad(format!(
                "order {k} does not match tuple lengths {} and {}",
                s.len(),
                t.len()
            )));
        }
        Ok(Witness { s, t })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forcing::{closure, is_forcing_set};
    use crate::graph::{standard_graph, StandardGraph};

    fn g(kind: StandardGraph) -> Graph {
        standard_graph(&kind).unwrap()
    }

    #[test]
    fn path_overlap_allowed() {
        let p3 = g(StandardGraph::Path(3));
        assert_eq!(check_witness(&p3, &[0, 1], &[1, 2]).unwrap(), None);
    }

    #[test]
    fn triangle_superdiagonal() {
        let k3 = g(StandardGraph::Complete(3));
        assert_eq!(
            check_witness(&k3, &[0, 1], &[1, 2]).unwrap(),
            Some(WitnessViolation::SuperdiagonalEdge { i: 0, j: 1 })
        );
        assert_eq!(check_witness(&k3, &[], &[]).unwrap(), None);
        assert!(check_witness(&k3, &[0], &[]).is_err());
        assert!(check_witness(&k3, &[0], &[7]).is_err());
    }

    #[test]
    fn violation_kinds() {
        let p4 = g(StandardGraph::Path(4));
        assert_eq!(
            check_witness(&p4, &[1, 1], &[0, 2]).unwrap(),
            Some(WitnessViolation::DuplicateS { i: 0, j: 1 })
        );
        assert_eq!(
            check_witness(&p4, &[0, 2], &[1, 1]).unwrap(),
            Some(WitnessViolation::DuplicateT { i: 0, j: 1 })
        );
        assert_eq!(
            check_witness(&p4, &[0, 2], &[1, 0]).unwrap(),
            Some(WitnessViolation::IllegalOverlap { i: 0, j: 1 })
        );
        assert_eq!(
            check_witness(&p4, &[0], &[2]).unwrap(),
            Some(WitnessViolation::MissingDiagonal { i: 0 })
        );
    }

    #[test]
    fn divided() {
        let w = Witness::new(vec![0, 1], vec![2, 3]).unwrap();
        let v1 = VertexSet::from_vertices(4, [0, 1]).unwrap();
        let v2 = v1.complement();
        assert!(is_divided(&w, &v1, &v2).unwrap());
        assert!(!is_divided(&w, &v2, &v1).unwrap());
        let w2 = Witness::new(vec![0, 2], vec![3, 1]).unwrap();
        assert!(!is_divided(&w2, &v1, &v2).unwrap());
        assert!(is_divided(&w, &v1, &v1).is_err());
    }

    #[test]
    fn from_forcing_fixtures() {
        let p4 = g(StandardGraph::Path(4));
        let ch = closure(&p4, &VertexSet::from_vertices(4, [0]).unwrap());
        let w = witness_from_forcing(&p4, &ch).unwrap();
        assert_eq!((w.s(), w.t()), (&[0, 1, 2][..], &[1, 2, 3][..]));
        assert!(forcing_set_from_witness(&p4, &w).is_err());

        let k4 = g(StandardGraph::Complete(4));
        let ch = closure(&k4, &VertexSet::from_vertices(4, [0, 1, 2]).unwrap());
        let w = witness_from_forcing(&k4, &ch).unwrap();
        assert_eq!((w.s(), w.t()), (&[0][..], &[3][..]));
        let s = forcing_set_from_witness(&k4, &w).unwrap();
        assert_eq!(s.to_vec(), vec![0, 1, 2]);

        let c5 = g(StandardGraph::Cycle(5));
        let ch = closure(&c5, &VertexSet::from_vertices(5, [0, 1]).unwrap());
        let w = witness_from_forcing(&c5, &ch).unwrap();
        assert_eq!(w.order(), 3);
        assert_eq!(w.violation(&c5).unwrap(), None);
    }

    #[test]
    fn disjoint_witness_on_c6_gives_forcing_set() {
        let c6 = g(StandardGraph::Cycle(6));
        let w = Witness::new(vec![1, 4], vec![0, 5]).unwrap();
        assert_eq!(w.violation(&c6).unwrap(), None);
        let s = forcing_set_from_witness(&c6, &w).unwrap();
        assert!(is_forcing_set(&c6, &s));
    }

    #[test]
    fn text_round_trip() {
        let w = Witness::new(vec![0, 1, 2], vec![1, 2, 3]).unwrap();
        let text = w.to_string();
        assert_eq!(text, "3; s: 0 1 2; t: 1 2 3");
        assert_eq!(text.parse::<Witness>().unwrap(), w);
        assert_eq!(Witness::empty().to_string(), "0; s:; t:");
        assert_eq!("0; s:; t:".parse::<Witness>().unwrap(), Witness::empty());
        assert!("2; s: 0 1; t: 1".parse::<Witness>().is_err());
        assert!("1; x: 0; t: 1".parse::<Witness>().is_err());
        assert!("garbage".parse::<Witness>().is_err());
    }

    #[test]
    fn gf2_independence() {
        let labels = Gf2Matrix::from_bit_strings(&["100", "010", "110", "001"]).unwrap();
        assert!(witness_gf2_independence(&labels, &Witness::empty()).unwrap());
        let dependent = Witness::new(vec![3, 3, 3], vec![0, 1, 2]).unwrap();
        assert!(!witness_gf2_independence(&labels, &dependent).unwrap());
        let independent = Witness::new(vec![3, 3], vec![0, 1]).unwrap();
        assert!(witness_gf2_independence(&labels, &independent).unwrap());
        let out = Witness::new(vec![0], vec![9]).unwrap();
        assert!(witness_gf2_independence(&labels, &out).is_err());
    }
}
