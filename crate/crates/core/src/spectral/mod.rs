//! Adjacency spectra and what they say about forcing.
//!
//! [`spectrum`] computes every eigenvalue with an in-house dense solver and
//! checks the result against three exact identities before returning it.

mod eigen;
mod greedy;
mod prop1;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub use greedy::{greedy_guarantee, greedy_witness, GreedyOutcome, GreedyStop, LAMBDA_GRANULARITY};
pub use prop1::{prop1_construction, Prop1Report};

/// Largest graph [`spectrum`] accepts.
pub const SPECTRUM_MAX_N: usize = 4000;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralSummary {
    /// All eigenvalues, largest first.
    pub eigenvalues: Vec<f64>,
    /// Largest eigenvalue.
    pub d: f64,
    /// `max |λ_i|` over all eigenvalues but the largest (0 for one vertex).
    pub lambda: f64,
    pub lambda_min: f64,
    /// Largest deviation seen across the identity checks.
    pub residual: f64,
    /// Allowed deviation, `1e-8 · max(1, n)`.
    pub tolerance: f64,
}

impl SpectralSummary {
    pub fn n(&self) -> usize {
        self.eigenvalues.len()
    }

    /// `d - λ`.
    pub fn spectral_gap(&self) -> f64 {
        self.d - self.lambda
    }

    /// Two columns, `index,eigenvalue`, largest first, 0-based index.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("index,eigenvalue\n");
        for (i, x) in self.eigenvalues.iter().enumerate() {
            out.push_str(&format!("{i},{x:.12}\n"));
        }
        out
    }
}

/// Eigenvalues of the adjacency matrix of `g`.
///
/// The result must satisfy, up to `1e-8 · max(1, n)`: the eigenvalues sum to
/// the trace (0), their squares sum to `2e`, and for a `d`-regular graph the
/// largest equals `d`. A failed check is reported as
/// [`Error::SpectrumResidual`].
pub fn spectrum(g: &Graph) -> Result<SpectralSummary> {
    let n = g.n();
    if n > SPECTRUM_MAX_N {
        return Err(Error::input(format!(
            "spectrum supports n <= {SPECTRUM_MAX_N}, got {n}"
        )));
    }
    let mut a = vec![0.0; n * n];
    for (u, v) in g.edges() {
        a[u * n + v] = 1.0;
        a[v * n + u] = 1.0;
    }
    let mut eigenvalues = eigen::symmetric_eigenvalues(&mut a, n)?;
    eigenvalues.sort_by(|x, y| y.total_cmp(x));

    let tolerance = 1e-8 * (n.max(1) as f64);
    let trace: f64 = eigenvalues.iter().sum();
    let squares: f64 = eigenvalues.iter().map(|x| x * x).sum();
    let mut residual = trace
        .abs()
        .max((squares - 2.0 * g.edge_count() as f64).abs());
    let d = eigenvalues.first().copied().unwrap_or(0.0);
    if let Some(deg) = g.regular_degree() {
        residual = residual.max((d - deg as f64).abs());
    }
    if residual > tolerance {
        return Err(Error::SpectrumResidual {
            residual,
            tolerance,
        });
    }
    let lambda = eigenvalues
        .iter()
        .skip(1)
        .map(|x| x.abs())
        .fold(0.0, f64::max);
    let lambda_min = eigenvalues.last().copied().unwrap_or(0.0);
    Ok(SpectralSummary {
        eigenvalues,
        d,
        lambda,
        lambda_min,
        residual,
        tolerance,
    })
}

/// Slack in the two edge-distribution inequalities for one pair `(U, W)`.
///
/// With `X = d|U||W|/n - e(U, W)` and
/// `R = sqrt(|U||W|(1 - |U|/n)(1 - |W|/n))`:
/// - `slack_lower = -λ_min·R - X`;
/// - `slack_abs = λ·R - |X|`.
///
/// `e(U, W)` counts edges inside `U ∩ W` twice. `slack_abs >= 0` holds for
/// every pair. `slack_lower >= 0` holds for `U = W`, but it can fail for other
/// pairs: in two disjoint copies of `K_m` take `U` and `W` to be the two copies.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MixingDefect {
    pub slack_lower: f64,
    pub slack_abs: f64,
}

pub fn mixing_defect(
    g: &Graph,
    spec: &SpectralSummary,
    u: &VertexSet,
    w: &VertexSet,
) -> Result<MixingDefect> {
    let d = g.regular_degree().ok_or(Error::NotRegular)?;
    let n = g.n();
    if spec.n() != n || u.universe() != n || w.universe() != n {
        return Err(Error::input(
            "spectrum and vertex sets must match the graph",
        ));
    }
    let (nu, nw, nf) = (u.len() as f64, w.len() as f64, n as f64);
    let x = d as f64 * nu * nw / nf - g.edges_between(u, w) as f64;
    let r = (nu * nw * (1.0 - nu / nf) * (1.0 - nw / nf))
        .max(0.0)
        .sqrt();
    Ok(MixingDefect {
        slack_lower: -spec.lambda_min * r - x,
        slack_abs: spec.lambda * r - x.abs(),
    })
}
