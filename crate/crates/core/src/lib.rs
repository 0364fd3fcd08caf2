//! Zero forcing on simple graphs.
//!
//! A set `S` of black vertices *forces* the graph when repeatedly letting a
//! black vertex with exactly one white neighbour blacken that neighbour ends
//! with every vertex black. The zero forcing number `Z(G)` is the smallest
//! size of such a set.
//!
//! The crate provides
//! - [`graph`]: bit-row graphs, named families, line graphs, the odd-weight
//!   vector graphs `G_m`, seeded `G(n, p)` and random regular samplers;
//! - [`forcing`]: closure with a reproducible step log, the exact solver and a
//!   randomized upper-bound heuristic;
//! - [`witness`]: ordered witness pairs that certify `n - Z(G)`, their loose
//!   block relaxation and the overlap density `Φ(a, b)`;
//! - [`spectral`]: a dense symmetric eigensolver, edge-distribution checks,
//!   the greedy spectral witness and the line-graph tightness family;
//! - [`bounds`]: closed-form lower and upper bounds with their preconditions,
//!   gathered into a per-graph [`bounds::BoundReport`];
//! - [`experiments`]: seeded sweeps and the command implementations behind the
//!   `zforce` binary.

// `!(x > 0.0)` style guards also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bitset;
pub mod bounds;
pub mod error;
pub mod experiments;
pub mod forcing;
pub mod graph;
pub mod spectral;
pub mod witness;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::Graph;
