use serde::Serialize;

use super::spectrum;
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::forcing::is_forcing_set;
use crate::graph::{line_graph, standard_graph, Graph, LineGraph, StandardGraph};

/// Line graph of a Hamiltonian circulant with an explicit large forcing gap.
#[derive(Clone, Debug, Serialize)]
pub struct Prop1Report {
    /// Cycle length of the base circulant.
    pub n: usize,
    /// Degree of the base circulant.
    pub d: usize,
    /// Vertices of the line graph, `nd/2`.
    pub big_n: usize,
    /// Degree of the line graph, `2d - 2`.
    pub big_d: usize,
    pub lambda_min: f64,
    /// `4N/(D + 2) - 2`, which equals `n - 2`.
    pub bound: f64,
    /// Line-graph vertices of the Hamilton cycle edges `e_1, …, e_n`.
    pub cycle: Vec<usize>,
    pub forcing_set: VertexSet,
    pub certificate_verified: bool,
}

/// Builds `G = circulant(n, {1} ∪ extra_offsets)` and its line graph `G*`.
///
/// The offset-1 edges form the Hamilton cycle `e_i = {i-1, i}` for
/// `i = 1..n-1` and `e_n = {n-1, 0}`. In `G*` these vertices induce a cycle,
/// so with every vertex black except `e_3, …, e_n` the forces
/// `e_2 → e_3 → … → e_n` run through. The returned set has `N - (n - 2)`
/// vertices.
pub fn prop1_construction(
    n: usize,
    extra_offsets: &[usize],
) -> Result<(Graph, LineGraph, Prop1Report)> {
    if n < 4 {
        return Err(Error::input(format!("base cycle needs n >= 4, got {n}")));
    }
    let mut offsets = vec![1];
    offsets.extend_from_slice(extra_offsets);
    let base = standard_graph(&StandardGraph::Circulant { n, offsets })?;
    let d = base.regular_degree().expect("circulant graphs are regular");
    let lg = line_graph(&base)?;
    let big_n = lg.graph.n();
    let big_d = lg
        .graph
        .regular_degree()
        .expect("line graph of a regular graph");

    let cycle: Vec<usize> = (1..=n)
        .map(|i| lg.index_of(i - 1, i % n).expect("offset-1 edge present"))
        .collect();
    let mut forcing_set = VertexSet::full(big_n);
    for &x in &cycle[2..] {
        forcing_set.remove(x);
    }
    let certificate_verified = is_forcing_set(&lg.graph, &forcing_set);
    let spec = spectrum(&lg.graph)?;
    let report = Prop1Report {
        n,
        d,
        big_n,
        big_d,
        lambda_min: spec.lambda_min,
        bound: 4.0 * big_n as f64 / (big_d as f64 + 2.0) - 2.0,
        cycle,
        forcing_set,
        certificate_verified,
    };
    Ok((base, lg, report))
}
