//! Simple undirected graphs on dense vertex indices, plus structural queries.

mod generators;
mod gf2;
pub mod io;
mod random;

use std::collections::VecDeque;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

pub use generators::{gm_graph, line_graph, standard_graph, LineGraph, StandardGraph};
pub use gf2::Gf2Matrix;
pub use random::{gnp_sample, mix_seed, random_regular_sample, RANDOM_REGULAR_RESTART_CAP};

/// A simple undirected graph on `0..n` with one adjacency bit row per vertex.
///
/// Rows are symmetric and irreflexive; `edge_count` is cached at build time.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    edge_count: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![VertexSet::empty(n); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::input(format!("self-loop at vertex {u}")));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    /// Adds `{u, v}` if absent. Callers guarantee `u != v` and both in range.
    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        if !self.adj[u].contains(v) {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
            self.edge_count += 1;
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Closed neighbourhood `N(v) ∪ {v}`.
    pub fn closed_neighbourhood(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Adjacency rows as single words; only valid for `n <= 64`.
    pub(crate) fn row_masks(&self) -> Vec<u64> {
        debug_assert!(self.n() <= 64);
        self.adj.iter().map(VertexSet::mask).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// The common degree if every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let Some(first) = self.adj.first() else {
            return Some(0);
        };
        let d = first.len();
        self.adj.iter().all(|row| row.len() == d).then_some(d)
    }

    /// Length of a shortest cycle, or `None` for a forest.
    ///
    /// Runs a BFS from every vertex; a non-tree edge `(u, w)` met from root `r`
    /// closes a walk of length `dist(u) + dist(w) + 1` that contains a cycle no
    /// longer than that, and the minimum over all roots is attained exactly.
    pub fn girth(&self) -> Option<usize> {
        let n = self.n();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            dist.fill(usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            'bfs: while let Some(u) = queue.pop_front() {
                // Nothing shorter than `best` can be found past this depth.
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for w in self.adj[u].iter() {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                        if best == 3 {
                            break 'bfs;
                        }
                    }
                }
            }
            if best == 3 {
                break;
            }
        }
        (best != usize::MAX).then_some(best)
    }

    /// Searches for a `K_{a,b}`: an `a`-set `A` with at least `b` common
    /// neighbours. Enumerates `a`-subsets of vertices of degree `>= b`, so
    /// it is meant for `a <= 3` and moderate `n`.
    pub fn contains_kab(&self, a: usize, b: usize) -> Result<Option<KabEmbedding>> {
        if a == 0 || a > b {
            return Err(Error::input(format!(
                "need 1 <= a <= b, got a = {a}, b = {b}"
            )));
        }
        if a > self.n() {
            return Ok(None);
        }
        let candidates: Vec<usize> = (0..self.n()).filter(|&v| self.degree(v) >= b).collect();
        let mut chosen = Vec::with_capacity(a);
        let common = VertexSet::full(self.n());
        Ok(self.kab_search(&candidates, 0, a, b, &mut chosen, &common))
    }

    fn kab_search(
        &self,
        candidates: &[usize],
        start: usize,
        a: usize,
        b: usize,
        chosen: &mut Vec<usize>,
        common: &VertexSet,
    ) -> Option<KabEmbedding> {
        if chosen.len() == a {
            return Some(KabEmbedding {
                left: chosen.clone(),
                right: common.iter().take(b).collect(),
            });
        }
        for i in start..candidates.len() {
            let v = candidates[i];
            let mut next = common.clone();
            next.intersect_with(&self.adj[v]);
            if next.len() < b {
                continue;
            }
            chosen.push(v);
            let found = self.kab_search(candidates, i + 1, a, b, chosen, &next);
            chosen.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }

    /// True if the graph is connected (the empty graph on 0 vertices counts).
    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen = VertexSet::empty(n);
        seen.insert(0);
        let mut stack = vec![0];
        while let Some(u) = stack.pop() {
            for w in self.adj[u].iter() {
                if !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        seen.is_full()
    }

    /// Verifies symmetry, irreflexivity and the cached edge count bit by bit.
    pub fn check_invariants(&self) -> bool {
        let n = self.n();
        let mut bits = 0;
        for u in 0..n {
            if self.adj[u].universe() != n || self.adj[u].contains(u) {
                return false;
            }
            for v in self.adj[u].iter() {
                if !self.adj[v].contains(u) {
                    return false;
                }
                bits += 1;
            }
        }
        bits == 2 * self.edge_count
    }

    /// Number of edges with one end in `u` and the other in `w`, counting
    /// edges inside `u ∩ w` twice.
    pub fn edges_between(&self, u: &VertexSet, w: &VertexSet) -> usize {
        u.iter().map(|x| self.adj[x].intersection_len(w)).sum()
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// A witness for `K_{a,b} ⊆ G`: every vertex of `left` is adjacent to every
/// vertex of `right`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KabEmbedding {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}
