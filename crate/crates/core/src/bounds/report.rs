use std::fmt::Write as _;

use serde::Serialize;

use super::{
    girth_lower_bound, hfree_lower_bound, hoffman_forcing_lower, kab_lower_bound, kst_degree_bound,
    spectral_forcing_upper, TuranParams,
};
use crate::error::{Error, Result};
use crate::forcing::{
    is_forcing_set, zero_forcing_number_exact_with, zero_forcing_upper_heuristic, ExactOptions,
    LowerBoundPolicy,
};
use crate::graph::Graph;
use crate::spectral::{greedy_witness, spectrum};

/// Slack used when comparing real-valued bounds with each other or with `Z`.
const COMPARE_EPS: f64 = 1e-9;

/// Largest `n` for which `K_{a,b}` containment is checked.
const KAB_MAX_N: usize = 60;

#[derive(Clone, Debug)]
pub struct BoundOptions {
    /// Compute the spectrum of regular graphs and the spectral entries.
    pub eigensolve: bool,
    /// Run the exact solver when `n` is at most this.
    pub exact_cap: usize,
    /// Closure budget for the exact solver.
    pub exact_budget: u64,
    pub heuristic_restarts: usize,
    pub seed: u64,
    /// Turán parameters for a forbidden graph the caller knows `g` avoids.
    pub hfree: Option<TuranParams>,
}

impl Default for BoundOptions {
    fn default() -> Self {
        Self {
            eigensolve: true,
            exact_cap: 22,
            exact_budget: 50_000_000,
            heuristic_restarts: 20,
            seed: 0,
            hfree: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Lower,
    Upper,
    /// Shown for comparison; not a proven bound.
    Reference,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundEntry {
    pub key: String,
    pub kind: BoundKind,
    pub value: f64,
    pub applicable: bool,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GraphStats {
    pub n: usize,
    pub edges: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub girth: Option<usize>,
    pub regular_degree: Option<usize>,
    pub lambda: Option<f64>,
    pub lambda_min: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ExactStatus {
    Solved {
        z: usize,
        certificate: Vec<usize>,
        closures: u64,
    },
    Skipped {
        reason: String,
    },
    BudgetExhausted {
        closures: u64,
        upper: usize,
        excluded_below: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub stats: GraphStats,
    pub entries: Vec<BoundEntry>,
    pub exact: ExactStatus,
    /// Every broken bound or certificate; empty for a sound report.
    pub violations: Vec<String>,
}

impl BoundReport {
    pub fn entry(&self, key: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.key == key)
    }

    pub fn exact_z(&self) -> Option<usize> {
        match self.exact {
            ExactStatus::Solved { z, .. } => Some(z),
            _ => None,
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// Aligned plain-text table.
    pub fn to_table(&self) -> String {
        let s = &self.stats;
        let opt = |v: Option<usize>| v.map_or("none".to_string(), |x| x.to_string());
        let mut out = String::new();
        let _ = writeln!(
            out,
            "n = {}  e = {}  min degree = {}  max degree = {}  girth = {}  regular = {}",
            s.n,
            s.edges,
            s.min_degree,
            s.max_degree,
            s.girth.map_or("inf".to_string(), |g| g.to_string()),
            opt(s.regular_degree)
        );
        if let (Some(l), Some(lm)) = (s.lambda, s.lambda_min) {
            let _ = writeln!(out, "lambda = {l:.6}  lambda_min = {lm:.6}");
        }
        match &self.exact {
            ExactStatus::Solved {
                z,
                certificate,
                closures,
            } => {
                let _ = writeln!(
                    out,
                    "exact Z = {z}  certificate = {certificate:?}  closures = {closures}"
                );
            }
            ExactStatus::Skipped { reason } => {
                let _ = writeln!(out, "exact Z skipped: {reason}");
            }
            ExactStatus::BudgetExhausted {
                closures,
                upper,
                excluded_below,
            } => {
                let _ = writeln!(
                    out,
                    "exact Z unresolved after {closures} closures: {excluded_below} <= Z <= {upper}"
                );
            }
        }
        let width = self
            .entries
            .iter()
            .map(|e| e.key.len())
            .max()
            .unwrap_or(3)
            .max(3);
        let _ = writeln!(
            out,
            "{:<width$}  {:<9}  {:>12}  {:<10}  note",
            "key", "kind", "value", "applicable"
        );
        for e in &self.entries {
            let kind = match e.kind {
                BoundKind::Lower => "lower",
                BoundKind::Upper => "upper",
                BoundKind::Reference => "reference",
            };
            let _ = writeln!(
                out,
                "{:<width$}  {:<9}  {:>12.4}  {:<10}  {}",
                e.key, kind, e.value, e.applicable, e.note
            );
        }
        if self.violations.is_empty() {
            out.push_str("violations: none\n");
        } else {
            for v in &self.violations {
                let _ = writeln!(out, "VIOLATION: {v}");
            }
        }
        out
    }
}

fn entry(
    key: impl Into<String>,
    kind: BoundKind,
    value: f64,
    applicable: bool,
    note: impl Into<String>,
) -> BoundEntry {
    BoundEntry {
        key: key.into(),
        kind,
        value,
        applicable,
        note: note.into(),
    }
}

/// Evaluates every bound whose inputs are available for `g` and checks them
/// against each other and against `Z` when it is computed.
///
/// The exact solver runs with only the `δ - 1` lower bound, so the check
/// does not rely on any of the bounds it is checking.
pub fn bound_report(g: &Graph, options: &BoundOptions) -> Result<BoundReport> {
    let n = g.n();
    let delta = g.min_degree();
    let girth = g.girth();
    let regular = g.regular_degree();
    let mut entries = Vec::new();
    let mut violations = Vec::new();

    entries.push(entry(
        "trivial_min_degree",
        BoundKind::Lower,
        delta.saturating_sub(1) as f64,
        n > 0,
        "min degree minus one",
    ));

    match (girth, delta >= 2) {
        (Some(gi), true) => {
            let b = girth_lower_bound(delta as f64, gi)?;
            entries.push(entry(
                "girth_sharp",
                BoundKind::Lower,
                b.sharp,
                true,
                format!("girth {gi}"),
            ));
            entries.push(entry(
                "girth_simplified",
                BoundKind::Lower,
                b.simplified,
                true,
                format!("girth {gi}"),
            ));
            if b.sharp + COMPARE_EPS < b.simplified {
                violations.push(format!(
                    "girth_sharp {} below girth_simplified {}",
                    b.sharp, b.simplified
                ));
            }
            entries.push(entry(
                "davila_kenter",
                BoundKind::Reference,
                super::davila_kenter_value(delta as f64, gi)?,
                true,
                "conjectured value, comparison only",
            ));
        }
        _ => entries.push(entry(
            "girth_sharp",
            BoundKind::Lower,
            0.0,
            false,
            "needs a cycle and min degree >= 2",
        )),
    }

    if n <= KAB_MAX_N {
        let avg = if n == 0 {
            0.0
        } else {
            2.0 * g.edge_count() as f64 / n as f64
        };
        for a in 2..=3usize {
            if a > n {
                break;
            }
            let free_b = (a..=n.max(a)).find(|&b| matches!(g.contains_kab(a, b), Ok(None)));
            let Some(b) = free_b else { continue };
            let k = kab_lower_bound(a, b, delta as f64)?;
            entries.push(entry(
                format!("kab_{a}_{b}"),
                BoundKind::Lower,
                k.value,
                k.applicable,
                format!("K_{{{a},{b}}}-free; needs min degree >= {}", 4 * a - 4),
            ));
            let kst = kst_degree_bound(a, b, n)?;
            if avg > kst + COMPARE_EPS {
                violations.push(format!(
                    "average degree {avg} exceeds the K_{{{a},{b}}}-free limit {kst}"
                ));
            }
        }
    }

    if let Some(params) = &options.hfree {
        let h = hfree_lower_bound(delta as f64, params);
        entries.push(entry(
            "hfree",
            BoundKind::Lower,
            h.value,
            h.applicable,
            "H-freeness asserted by the caller",
        ));
    }

    let mut lambda = None;
    let mut lambda_min = None;
    if let (Some(d), true) = (regular, options.eigensolve) {
        if d > 0 {
            let spec = spectrum(g)?;
            lambda = Some(spec.lambda);
            lambda_min = Some(spec.lambda_min);
            if spec.lambda_min < 0.0 {
                let h = hoffman_forcing_lower(n, d as f64, spec.lambda_min)?;
                entries.push(entry(
                    "hoffman_lambda_min",
                    BoundKind::Lower,
                    h,
                    true,
                    "regular graph",
                ));
            }
            if spec.lambda < d as f64 {
                let u = spectral_forcing_upper(n, d as f64, spec.lambda)?;
                let note = if u.vacuous {
                    "vacuous, clamped to n"
                } else {
                    "regular graph"
                };
                entries.push(entry(
                    "spectral_upper",
                    BoundKind::Upper,
                    u.value,
                    true,
                    note,
                ));
            }
            let greedy = greedy_witness(g, &spec)?;
            let set = greedy.forcing_set(n);
            let valid = greedy.witness.violation(g)?.is_none()
                && greedy.witness.images_disjoint()
                && is_forcing_set(g, &set);
            if !valid {
                violations.push("greedy witness failed certificate verification".into());
            }
            if !greedy.claim_held() {
                violations.push(format!(
                    "greedy stalled above the threshold at |U| = {}",
                    greedy.trace.last().copied().unwrap_or(0)
                ));
            }
            if let Some(guar) = greedy.guarantee {
                if greedy.k() < guar {
                    violations.push(format!(
                        "greedy order {} below guarantee {guar}",
                        greedy.k()
                    ));
                }
            }
            entries.push(entry(
                "greedy_certificate",
                BoundKind::Upper,
                set.len() as f64,
                valid,
                format!("greedy witness of order {}", greedy.k()),
            ));
        }
    }

    let (h, _) = zero_forcing_upper_heuristic(g, options.heuristic_restarts.max(1), options.seed)?;
    entries.push(entry(
        "heuristic",
        BoundKind::Upper,
        h as f64,
        true,
        format!("{} restarts", options.heuristic_restarts.max(1)),
    ));

    let exact = if n > options.exact_cap {
        ExactStatus::Skipped {
            reason: format!("n = {n} above exact cap {}", options.exact_cap),
        }
    } else {
        let opts = ExactOptions {
            budget: options.exact_budget,
            lower_bounds: LowerBoundPolicy::Trivial,
        };
        match zero_forcing_number_exact_with(g, &opts) {
            Ok(r) => {
                entries.push(entry(
                    "exact",
                    BoundKind::Upper,
                    r.z as f64,
                    true,
                    "exact solver",
                ));
                ExactStatus::Solved {
                    z: r.z,
                    certificate: r.optimal_set.to_vec(),
                    closures: r.stats.closures,
                }
            }
            Err(Error::ForcingBudget {
                closures,
                upper,
                excluded_below,
                ..
            }) => ExactStatus::BudgetExhausted {
                closures,
                upper,
                excluded_below,
            },
            Err(e) => return Err(e),
        }
    };

    let lowers: Vec<&BoundEntry> = entries
        .iter()
        .filter(|e| e.applicable && e.kind == BoundKind::Lower)
        .collect();
    let uppers: Vec<&BoundEntry> = entries
        .iter()
        .filter(|e| e.applicable && e.kind == BoundKind::Upper)
        .collect();
    for lo in &lowers {
        for up in &uppers {
            if lo.value > up.value + COMPARE_EPS {
                violations.push(format!(
                    "lower bound {} = {} exceeds upper bound {} = {}",
                    lo.key, lo.value, up.key, up.value
                ));
            }
        }
    }
    if let ExactStatus::Solved { z, .. } = exact {
        let zf = z as f64;
        for up in &uppers {
            if up.value + COMPARE_EPS < zf {
                violations.push(format!(
                    "upper bound {} = {} below Z = {z}",
                    up.key, up.value
                ));
            }
        }
    }

    Ok(BoundReport {
        stats: GraphStats {
            n,
            edges: g.edge_count(),
            min_degree: delta,
            max_degree: g.max_degree(),
            girth,
            regular_degree: regular,
            lambda,
            lambda_min,
        },
        entries,
        exact,
        violations,
    })
}
