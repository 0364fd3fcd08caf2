use super::{Gf2Matrix, Graph};
use crate::error::{Error, Result};

/// Named graph families with canonical vertex numbering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StandardGraph {
    /// `0 - 1 - … - (n-1)`.
    Path(usize),
    /// Path plus the edge `(n-1, 0)`; needs `n >= 3`.
    Cycle(usize),
    Complete(usize),
    /// Parts `0..a` and `a..a+b`.
    CompleteBipartite(usize, usize),
    /// Outer 5-cycle `0..5`, spokes `i - i+5`, inner pentagram on `5..10`.
    Petersen,
    /// `i` joined to `i ± d (mod n)` for every offset `d`.
    Circulant {
        n: usize,
        offsets: Vec<usize>,
    },
}

pub fn standard_graph(kind: &StandardGraph) -> Result<Graph> {
    match *kind {
        StandardGraph::Path(n) => {
            if n == 0 {
                return Err(Error::input("path needs at least one vertex"));
            }
            Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
        }
        StandardGraph::Cycle(n) => {
            if n < 3 {
                return Err(Error::input(format!("cycle needs n >= 3, got {n}")));
            }
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        StandardGraph::Complete(n) => {
            Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        StandardGraph::CompleteBipartite(a, b) => {
            Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
        }
        StandardGraph::Petersen => {
            let outer = (0..5).map(|i| (i, (i + 1) % 5));
            let spokes = (0..5).map(|i| (i, i + 5));
            let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
            Graph::from_edges(10, outer.chain(spokes).chain(inner))
        }
        StandardGraph::Circulant { n, ref offsets } => {
            if n < 3 {
                return Err(Error::input(format!("circulant needs n >= 3, got {n}")));
            }
            if let Some(&d) = offsets.iter().find(|&&d| d == 0 || d >= n) {
                return Err(Error::input(format!("circulant offset {d} not in 1..{n}")));
            }
            Graph::from_edges(
                n,
                offsets
                    .iter()
                    .flat_map(|&d| (0..n).map(move |i| (i, (i + d) % n))),
            )
        }
    }
}

/// A line graph together with the host edge behind each of its vertices.
#[derive(Clone, Debug)]
pub struct LineGraph {
    pub graph: Graph,
    /// `edges[x]` is the host edge `(u, v)`, `u < v`, that became vertex `x`.
    pub edges: Vec<(usize, usize)>,
}

impl LineGraph {
    /// The line-graph vertex for host edge `{u, v}`.
    pub fn index_of(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }
}

/// Vertices are the edges of `g` (in lexicographic order); two are adjacent
/// when the edges share an endpoint.
pub fn line_graph(g: &Graph) -> Result<LineGraph> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    if edges.is_empty() {
        return Err(Error::input("line graph of an edgeless graph"));
    }
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        incident[u].push(i);
        incident[v].push(i);
    }
    let mut lg = Graph::empty(edges.len());
    for inc in &incident {
        for (a, &x) in inc.iter().enumerate() {
            for &y in &inc[a + 1..] {
                lg.insert_edge(x, y);
            }
        }
    }
    Ok(LineGraph { graph: lg, edges })
}

/// Largest `m` accepted by [`gm_graph`]; keeps the dense adjacency in memory.
pub const GM_MAX_M: usize = 15;

/// Vertices are the length-`m` binary vectors of odd weight other than the
/// all-ones vector, in increasing integer order (bit `j` is coordinate `j`).
/// Distinct vectors are adjacent when their inner product is odd.
///
/// Returns the graph and the label matrix, one row per vertex.
pub fn gm_graph(m: usize) -> Result<(Graph, Gf2Matrix)> {
    if m < 3 || m.is_multiple_of(2) {
        return Err(Error::input(format!("gm_graph needs odd m >= 3, got {m}")));
    }
    if m > GM_MAX_M {
        return Err(Error::input(format!(
            "gm_graph supports m <= {GM_MAX_M}, got {m}"
        )));
    }
    let all_ones = (1u64 << m) - 1;
    let labels: Vec<u64> = (1..=all_ones)
        .filter(|&x| x.count_ones() % 2 == 1 && x != all_ones)
        .collect();
    let n = labels.len();
    let mut g = Graph::empty(n);
    for i in 0..n {
        for j in i + 1..n {
            if (labels[i] & labels[j]).count_ones() % 2 == 1 {
                g.insert_edge(i, j);
            }
        }
    }
    Ok((g, Gf2Matrix::from_u64_rows(m, &labels)))
}
