use serde::Serialize;

use super::SpectralSummary;
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::witness::Witness;

/// `λ` is rounded up to a multiple of this before the integer comparisons.
pub const LAMBDA_GRANULARITY: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GreedyStop {
    /// `|U| <= λn/(d + λ)`.
    Threshold,
    /// No vertex of `U` had a degree in the window while `|U|` was still
    /// above the threshold.
    Stalled,
}

#[derive(Clone, Debug, Serialize)]
pub struct GreedyOutcome {
    pub witness: Witness,
    /// `|U_0|, |U_1|, …, |U_k|`.
    pub trace: Vec<usize>,
    pub stop: GreedyStop,
    /// The `λ` used, after rounding up.
    pub lambda_used: f64,
    /// `⌈n/(2(d-λ)) · ln((d-λ)/(2λ+1))⌉` with the measured `λ`, or `None`
    /// when `d - λ <= 2λ + 1` and the logarithm gives nothing.
    pub guarantee: Option<usize>,
}

impl GreedyOutcome {
    pub fn k(&self) -> usize {
        self.witness.order()
    }

    /// Whether a qualifying vertex was found at every step above the threshold.
    pub fn claim_held(&self) -> bool {
        self.stop == GreedyStop::Threshold
    }

    /// The forcing set `V ∖ t` certified by the witness.
    pub fn forcing_set(&self, n: usize) -> VertexSet {
        let mut s = VertexSet::full(n);
        for &t in self.witness.t() {
            s.remove(t);
        }
        s
    }
}

/// Guaranteed witness order for an `(n, d, λ)` graph, if positive.
pub fn greedy_guarantee(n: usize, d: f64, lambda: f64) -> Option<usize> {
    let gap = d - lambda;
    if !(gap > 2.0 * lambda + 1.0) {
        return None;
    }
    Some((n as f64 / (2.0 * gap) * (gap / (2.0 * lambda + 1.0)).ln()).ceil() as usize)
}

/// Builds a witness with disjoint tuples in a regular graph.
///
/// Starting from `U = V`, each step takes the smallest `s ∈ U` with
/// `1 <= deg_U(s) <= (d - λ)|U|/n + λ`, pairs it with its smallest neighbour
/// `t ∈ U`, and removes `N[s]` from `U`. The loop runs while
/// `|U| > λn/(d + λ)`.
///
/// Both comparisons are done in integers with `λ` rounded up to a multiple
/// of [`LAMBDA_GRANULARITY`]; rounding up widens the degree window and raises
/// the threshold, so floating error can neither admit an extra step nor
/// reject a qualifying vertex.
pub fn greedy_witness(g: &Graph, spec: &SpectralSummary) -> Result<GreedyOutcome> {
    let d = g.regular_degree().ok_or(Error::NotRegular)?;
    let n = g.n();
    if spec.n() != n {
        return Err(Error::input("spectrum does not belong to this graph"));
    }
    let scale = (1.0 / LAMBDA_GRANULARITY).round() as i128;
    let lam = (spec.lambda / LAMBDA_GRANULARITY - 1e-6).ceil().max(0.0) as i128;
    let (d_s, n_i) = (d as i128 * scale, n as i128);

    let above_threshold = |u: usize| (u as i128) * (d_s + lam) > lam * n_i;
    // deg <= (d - λ)|U|/n + λ, multiplied through by n·scale.
    let in_window = |deg: usize, u: usize| {
        deg >= 1 && (deg as i128) * n_i * scale <= (d_s - lam) * (u as i128) + lam * n_i
    };

    let mut u_set = VertexSet::full(n);
    let mut witness = Witness::empty();
    let mut trace = vec![n];
    let stop = loop {
        let size = u_set.len();
        if !above_threshold(size) {
            break GreedyStop::Threshold;
        }
        let pick = u_set
            .iter()
            .find(|&v| in_window(g.neighbours(v).intersection_len(&u_set), size));
        let Some(s) = pick else {
            break GreedyStop::Stalled;
        };
        let t = g
            .neighbours(s)
            .iter()
            .find(|&x| u_set.contains(x))
            .expect("degree window starts at 1");
        witness.push(s, t);
        u_set.difference_with(&g.closed_neighbourhood(s));
        trace.push(u_set.len());
    };
    Ok(GreedyOutcome {
        witness,
        trace,
        stop,
        lambda_used: lam as f64 * LAMBDA_GRANULARITY,
        guarantee: greedy_guarantee(n, spec.d, spec.lambda),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forcing::is_forcing_set;
    use crate::graph::{gm_graph, standard_graph, StandardGraph};
    use crate::spectral::spectrum;

    #[test]
    fn gm5_runs_and_certifies() {
        let (g, _) = gm_graph(5).unwrap();
        let s = spectrum(&g).unwrap();
        let out = greedy_witness(&g, &s).unwrap();
        assert!(out.k() >= 1);
        assert_eq!(out.guarantee, None);
        assert_eq!(out.witness.violation(&g).unwrap(), None);
        assert!(out.witness.images_disjoint());
        assert!(is_forcing_set(&g, &out.forcing_set(g.n())));
        assert!(out.trace.windows(2).all(|w| w[1] < w[0]));
    }

    #[test]
    fn complete_graph_is_valid() {
        let k6 = standard_graph(&StandardGraph::Complete(6)).unwrap();
        let s = spectrum(&k6).unwrap();
        let out = greedy_witness(&k6, &s).unwrap();
        assert!(out.k() <= 1);
        assert_eq!(out.witness.violation(&k6).unwrap(), None);
    }

    #[test]
    fn guarantee_formula() {
        assert_eq!(greedy_guarantee(15, 6.0, 3.0), None);
        // n/(2·(d-λ)) · ln((d-λ)/(2λ+1)) = 400/(2·40) · ln(40/21)
        let expect = (400.0f64 / 80.0 * (40.0f64 / 21.0).ln()).ceil() as usize;
        assert_eq!(greedy_guarantee(400, 50.0, 10.0), Some(expect));
    }

    #[test]
    fn irregular_rejected() {
        let p = standard_graph(&StandardGraph::Path(5)).unwrap();
        let s = spectrum(&p).unwrap();
        assert!(matches!(greedy_witness(&p, &s), Err(Error::NotRegular)));
    }
}
