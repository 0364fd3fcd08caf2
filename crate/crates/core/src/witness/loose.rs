use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use super::Witness;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Block relaxation of a witness.
///
/// `s0`/`t0` are unordered sets with no edges to the opposite side. Block `i`
/// pairs `S_i` with `T_i` through a matching given as `(v, f_i(v))` pairs;
/// edges inside `S_i × T_i` other than the matching are unconstrained, while
/// `S_i × T_j` with `i < j` must be empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LooseSubwitness {
    pub k: usize,
    pub l: usize,
    pub s0: Vec<usize>,
    pub t0: Vec<usize>,
    pub blocks: Vec<Vec<(usize, usize)>>,
}

impl LooseSubwitness {
    pub fn m(&self) -> usize {
        self.blocks.len()
    }

    fn s_side(&self) -> impl Iterator<Item = usize> + '_ {
        self.s0
            .iter()
            .copied()
            .chain(self.blocks.iter().flatten().map(|&(s, _)| s))
    }

    fn t_side(&self) -> impl Iterator<Item = usize> + '_ {
        self.t0
            .iter()
            .copied()
            .chain(self.blocks.iter().flatten().map(|&(_, t)| t))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LooseViolation {
    VertexOutOfRange {
        vertex: usize,
    },
    /// A vertex appears twice among `S_0, …, S_m`.
    RepeatedS {
        vertex: usize,
    },
    /// A vertex appears twice among `T_0, …, T_m`.
    RepeatedT {
        vertex: usize,
    },
    /// `|S_0| ≠ k - ℓ`, `|T_0| ≠ k - ℓ` or the blocks do not hold `2ℓ - k` pairs.
    WrongSizes,
    /// Block sizes are not non-increasing with spread at most one.
    NotEquitable,
    /// An edge between `S_0` and `T`.
    EdgeFromS0 {
        s: usize,
        t: usize,
    },
    /// An edge between `T_0` and `S`.
    EdgeToT0 {
        s: usize,
        t: usize,
    },
    /// An edge from block `i` of `S` to block `j` of `T`, `i < j` (1-based blocks).
    CrossBlockEdge {
        i: usize,
        j: usize,
        s: usize,
        t: usize,
    },
    /// A matched pair that is not an edge.
    UnmatchedPair {
        block: usize,
        s: usize,
        t: usize,
    },
}

impl fmt::Display for LooseViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            LooseViolation::VertexOutOfRange { vertex } => {
                write!(f, "vertex {vertex} out of range")
            }
            LooseViolation::RepeatedS { vertex } => {
                write!(f, "vertex {vertex} repeated on the S side")
            }
            LooseViolation::RepeatedT { vertex } => {
                write!(f, "vertex {vertex} repeated on the T side")
            }
            LooseViolation::WrongSizes => write!(f, "set sizes do not match k and l"),
            LooseViolation::NotEquitable => {
                write!(f, "blocks are not equitable and non-increasing")
            }
            LooseViolation::EdgeFromS0 { s, t } => write!(f, "edge {s}-{t} between S_0 and T"),
            LooseViolation::EdgeToT0 { s, t } => write!(f, "edge {s}-{t} between S and T_0"),
            LooseViolation::CrossBlockEdge { i, j, s, t } => {
                write!(f, "edge {s}-{t} between S_{i} and T_{j}")
            }
            LooseViolation::UnmatchedPair { block, s, t } => {
                write!(f, "matched pair {s}-{t} in block {block} is not an edge")
            }
        }
    }
}

/// First violated clause, or `None` when `cand` is a loose subwitness of `g`.
pub fn check_loose_subwitness(g: &Graph, cand: &LooseSubwitness) -> Option<LooseViolation> {
    let n = g.n();
    if let Some(vertex) = cand.s_side().chain(cand.t_side()).find(|&v| v >= n) {
        return Some(LooseViolation::VertexOutOfRange { vertex });
    }
    let mut seen = HashSet::new();
    if let Some(vertex) = cand.s_side().find(|&v| !seen.insert(v)) {
        return Some(LooseViolation::RepeatedS { vertex });
    }
    seen.clear();
    if let Some(vertex) = cand.t_side().find(|&v| !seen.insert(v)) {
        return Some(LooseViolation::RepeatedT { vertex });
    }
    let (k, l) = (cand.k, cand.l);
    let paired: usize = cand.blocks.iter().map(Vec::len).sum();
    if l > k || 2 * l < k || cand.s0.len() != k - l || cand.t0.len() != k - l || paired != 2 * l - k
    {
        return Some(LooseViolation::WrongSizes);
    }
    let sizes: Vec<usize> = cand.blocks.iter().map(Vec::len).collect();
    let non_increasing = sizes.windows(2).all(|w| w[0] >= w[1]);
    if !non_increasing
        || sizes
            .first()
            .zip(sizes.last())
            .is_some_and(|(a, b)| a - b > 1)
    {
        return Some(LooseViolation::NotEquitable);
    }
    for &s in &cand.s0 {
        if let Some(t) = cand.t_side().find(|&t| g.adjacent(s, t)) {
            return Some(LooseViolation::EdgeFromS0 { s, t });
        }
    }
    for &t in &cand.t0 {
        if let Some(s) = cand.s_side().find(|&s| g.adjacent(s, t)) {
            return Some(LooseViolation::EdgeToT0 { s, t });
        }
    }
    for (i, bi) in cand.blocks.iter().enumerate() {
        for (j, bj) in cand.blocks.iter().enumerate().skip(i + 1) {
            for &(s, _) in bi {
                if let Some(&(_, t)) = bj.iter().find(|&&(_, t)| g.adjacent(s, t)) {
                    return Some(LooseViolation::CrossBlockEdge {
                        i: i + 1,
                        j: j + 1,
                        s,
                        t,
                    });
                }
            }
        }
    }
    for (i, block) in cand.blocks.iter().enumerate() {
        if let Some(&(s, t)) = block.iter().find(|&&(s, t)| !g.adjacent(s, t)) {
            return Some(LooseViolation::UnmatchedPair { block: i + 1, s, t });
        }
    }
    None
}

/// Integer `(ℓ, m)` for a witness of order `k` at edge density `p`.
///
/// `ℓ` is `k·√2/2` rounded to nearest, raised to at least `⌊k/2⌋ + 1` so that
/// at least one block exists and capped at `k`. `m` is `(2ℓ - k)·p` rounded to
/// nearest, kept within `1..=2ℓ - k`.
pub fn default_loose_parameters(k: usize, p: f64) -> Result<(usize, usize)> {
    if k == 0 {
        return Err(Error::input("a loose subwitness needs k >= 1"));
    }
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::input(format!("density must lie in (0, 1], got {p}")));
    }
    let l = ((k as f64 * std::f64::consts::FRAC_1_SQRT_2).round() as usize)
        .max(k / 2 + 1)
        .min(k);
    let r = 2 * l - k;
    let m = ((r as f64 * p).round() as usize).clamp(1, r);
    Ok((l, m))
}

/// Cuts a witness into a loose subwitness: `S_0` is the first `k - ℓ` of the
/// `s`, `T_0` the last `k - ℓ` of the `t`, and the middle `2ℓ - k` diagonal
/// pairs are split into `m` consecutive blocks of equitable, non-increasing
/// size.
pub fn loose_subwitness_from_witness(
    g: &Graph,
    w: &Witness,
    l: usize,
    m: usize,
) -> Result<LooseSubwitness> {
    if let Some(v) = w.violation(g)? {
        return Err(Error::input(format!("not a witness: {v}")));
    }
    let k = w.order();
    if l > k || 2 * l <= k {
        return Err(Error::input(format!(
            "need k/2 < l <= k, got k = {k}, l = {l}"
        )));
    }
    let r = 2 * l - k;
    if m == 0 || m > r {
        return Err(Error::input(format!(
            "need 1 <= m <= 2l - k = {r}, got m = {m}"
        )));
    }
    let s0 = w.s()[..k - l].to_vec();
    let t0 = w.t()[l..].to_vec();
    let (q, extra) = (r / m, r % m);
    let mut blocks = Vec::with_capacity(m);
    let mut start = k - l;
    for b in 0..m {
        let len = q + usize::from(b < extra);
        blocks.push((start..start + len).map(|i| (w.s()[i], w.t()[i])).collect());
        start += len;
    }
    debug_assert_eq!(start, l);
    Ok(LooseSubwitness {
        k,
        l,
        s0,
        t0,
        blocks,
    })
}
