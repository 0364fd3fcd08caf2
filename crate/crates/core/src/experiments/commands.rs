//! One function per binary subcommand. Each returns the text to print, an
//! optional artifact for `--out`, and the status that picks the exit code.

use std::fmt::Write as _;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use super::{run_gnp_sweep, SweepConfig};
use crate::bitset::VertexSet;
use crate::bounds::{bound_report, gm_witness_cap, BoundOptions, ExactStatus};
use crate::error::{Error, Result};
use crate::forcing::{closure, zero_forcing_number_exact_with, ExactOptions, LowerBoundPolicy};
use crate::graph::io::{read_graph, write_edge_list};
use crate::graph::{
    gm_graph, gnp_sample, random_regular_sample, standard_graph, Graph, StandardGraph,
};
use crate::spectral::{greedy_witness, mixing_defect, prop1_construction, spectrum};
use crate::witness::{
    lemma4_ratio_scan, max_witness_order, witness_from_forcing, witness_gf2_independence, Witness,
    WitnessMode,
};

/// Flags shared by all subcommands. `None` picks the subcommand's default.
#[derive(Clone, Debug, Default)]
pub struct CommonArgs {
    pub seed: Option<u64>,
    pub trials: Option<usize>,
    pub budget: Option<u64>,
    pub exact_cap: Option<usize>,
    pub json: bool,
}

impl CommonArgs {
    fn seed(&self) -> u64 {
        self.seed.unwrap_or(1)
    }

    fn budget(&self, default: u64) -> u64 {
        self.budget.unwrap_or(default)
    }

    fn exact_cap(&self) -> usize {
        self.exact_cap.unwrap_or(22)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// The input was understood but rejected, e.g. a tuple that is not a witness.
    Rejected,
    /// A proven bound or a certificate failed.
    Violation,
    /// A search ran out of budget before finishing.
    Budget,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Rejected => 1,
            Status::Violation => 2,
            Status::Budget => 3,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CommandOutput {
    pub text: String,
    /// Main data product (CSV, edge list); written to `--out` when given.
    pub artifact: Option<String>,
    pub status: Status,
}

impl CommandOutput {
    fn text(text: String, status: Status) -> Self {
        Self {
            text,
            artifact: None,
            status,
        }
    }
}

fn to_json(value: &impl Serialize) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

pub fn cmd_analyze(path: &Path, args: &CommonArgs) -> Result<CommandOutput> {
    let g = read_graph(path)?;
    let options = BoundOptions {
        exact_cap: args.exact_cap(),
        exact_budget: args.budget(BoundOptions::default().exact_budget),
        heuristic_restarts: args.trials.unwrap_or(20),
        seed: args.seed(),
        ..BoundOptions::default()
    };
    let report = bound_report(&g, &options)?;
    let status = if !report.violations.is_empty() {
        Status::Violation
    } else if matches!(report.exact, ExactStatus::BudgetExhausted { .. }) {
        Status::Budget
    } else {
        Status::Ok
    };
    let text = if args.json {
        report.to_json()? + "\n"
    } else {
        report.to_table()
    };
    Ok(CommandOutput::text(text, status))
}

pub fn cmd_gnp_sweep(
    ns: Vec<usize>,
    ps: Vec<f64>,
    allow_heuristic: bool,
    args: &CommonArgs,
) -> Result<CommandOutput> {
    let defaults = SweepConfig::default();
    let config = SweepConfig {
        ns,
        ps,
        trials: args.trials.unwrap_or(defaults.trials),
        seed: args.seed(),
        budget: args.budget(defaults.budget),
        exact_cap: args.exact_cap(),
        allow_heuristic,
        heuristic_restarts: defaults.heuristic_restarts,
    };
    let result = run_gnp_sweep(&config)?;
    let text = if args.json {
        to_json(&json!({ "cells": result.cells, "trends": result.trends }))?
    } else {
        result.summary_text()
    };
    Ok(CommandOutput {
        text,
        artifact: Some(result.records_csv()),
        status: Status::Ok,
    })
}

#[derive(Clone, Debug)]
pub enum WitnessCommand {
    /// Check a witness in `k; s: …; t: …` form.
    Check { witness: String },
    /// Largest witness, optionally with disjoint tuples.
    Max { disjoint: bool },
    /// Witness read off the forcing run from the given set.
    FromForcing { set: Vec<usize> },
}

pub fn cmd_witness(
    path: &Path,
    command: &WitnessCommand,
    args: &CommonArgs,
) -> Result<CommandOutput> {
    let g = read_graph(path)?;
    match command {
        WitnessCommand::Check { witness } => {
            let w: Witness = witness.parse()?;
            let verdict = w.violation(&g)?;
            let (text, status) = match verdict {
                None => (
                    format!("valid witness of order {}\n", w.order()),
                    Status::Ok,
                ),
                Some(v) => (format!("invalid witness: {v}\n"), Status::Rejected),
            };
            if args.json {
                let body =
                    json!({ "valid": verdict.is_none(), "order": w.order(), "violation": verdict });
                return Ok(CommandOutput::text(to_json(&body)?, status));
            }
            Ok(CommandOutput::text(text, status))
        }
        WitnessCommand::Max { disjoint } => {
            let mode = if *disjoint {
                WitnessMode::Disjoint
            } else {
                WitnessMode::Overlapping
            };
            let w = max_witness_order(&g, mode, args.budget(10_000_000))?;
            let text = if args.json {
                to_json(&json!({ "k": w.order(), "witness": w.to_string() }))?
            } else {
                format!("k = {}\n{w}\n", w.order())
            };
            Ok(CommandOutput::text(text, Status::Ok))
        }
        WitnessCommand::FromForcing { set } => {
            let s = VertexSet::from_vertices(g.n(), set.iter().copied())?;
            let chronicle = closure(&g, &s);
            let w = witness_from_forcing(&g, &chronicle)?;
            let forcing = chronicle.is_complete();
            let text = if args.json {
                to_json(&json!({ "forcing": forcing, "k": w.order(), "witness": w.to_string() }))?
            } else {
                format!("forcing = {forcing}\nk = {}\n{w}\n", w.order())
            };
            Ok(CommandOutput::text(text, Status::Ok))
        }
    }
}

#[derive(Clone, Debug)]
pub enum SpectralCommand {
    Spectrum { graph: std::path::PathBuf },
    Mixing { graph: std::path::PathBuf },
    Greedy { graph: std::path::PathBuf },
    Prop1 { n: usize, offsets: Vec<usize> },
    Gm { m: usize },
}

/// Allowed negative slack in numeric inequality checks.
const NUMERIC_SLACK: f64 = 1e-8;

pub fn cmd_spectral(command: &SpectralCommand, args: &CommonArgs) -> Result<CommandOutput> {
    match command {
        SpectralCommand::Spectrum { graph } => {
            let g = read_graph(graph)?;
            let s = spectrum(&g)?;
            let text = if args.json {
                to_json(&s)?
            } else {
                format!(
                    "n = {}  top = {:.9}  lambda = {:.9}  lambda_min = {:.9}  residual = {:.2e}\n",
                    s.n(),
                    s.d,
                    s.lambda,
                    s.lambda_min,
                    s.residual
                )
            };
            Ok(CommandOutput {
                text,
                artifact: Some(s.to_csv()),
                status: Status::Ok,
            })
        }
        SpectralCommand::Mixing { graph } => {
            let g = read_graph(graph)?;
            let s = spectrum(&g)?;
            let trials = args.trials.unwrap_or(1000);
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed());
            let n = g.n();
            let random_set = |rng: &mut ChaCha8Rng| {
                let density: f64 = rng.random();
                VertexSet::from_vertices(n, (0..n).filter(|_| rng.random::<f64>() < density))
            };
            let (mut worst_lower, mut worst_abs) = (f64::INFINITY, f64::INFINITY);
            let mut violations = 0usize;
            for _ in 0..trials {
                let u = random_set(&mut rng)?;
                let w = random_set(&mut rng)?;
                let m = mixing_defect(&g, &s, &u, &w)?;
                worst_lower = worst_lower.min(m.slack_lower);
                worst_abs = worst_abs.min(m.slack_abs);
                if m.slack_lower < -NUMERIC_SLACK || m.slack_abs < -NUMERIC_SLACK {
                    violations += 1;
                }
            }
            let status = if violations > 0 {
                Status::Violation
            } else {
                Status::Ok
            };
            let text = if args.json {
                to_json(&json!({
                    "pairs": trials, "violations": violations,
                    "min_slack_lower": worst_lower, "min_slack_abs": worst_abs
                }))?
            } else {
                format!(
                    "pairs = {trials}  violations = {violations}\nmin slack (lambda_min form) = {worst_lower:.6e}\nmin slack (lambda form) = {worst_abs:.6e}\n"
                )
            };
            Ok(CommandOutput::text(text, status))
        }
        SpectralCommand::Greedy { graph } => {
            let g = read_graph(graph)?;
            let s = spectrum(&g)?;
            let out = greedy_witness(&g, &s)?;
            let set = out.forcing_set(g.n());
            let verified = out.witness.violation(&g)?.is_none()
                && out.witness.images_disjoint()
                && crate::forcing::is_forcing_set(&g, &set);
            let below = out.guarantee.is_some_and(|gu| out.k() < gu);
            let status = if !verified || !out.claim_held() || below {
                Status::Violation
            } else {
                Status::Ok
            };
            let text = if args.json {
                to_json(&json!({
                    "k": out.k(), "guarantee": out.guarantee, "verified": verified,
                    "claim_held": out.claim_held(), "trace": out.trace,
                    "witness": out.witness.to_string(), "lambda": s.lambda,
                }))?
            } else {
                format!(
                    "k = {}\nguarantee = {}\ncertificate verified = {verified}\nlambda = {:.9}\ntrace = {:?}\n{}\n",
                    out.k(),
                    out.guarantee.map_or("vacuous".into(), |x| x.to_string()),
                    s.lambda,
                    out.trace,
                    out.witness
                )
            };
            Ok(CommandOutput::text(text, status))
        }
        SpectralCommand::Prop1 { n, offsets } => {
            let (_, lg, report) = prop1_construction(*n, offsets)?;
            let mut ok = report.certificate_verified && (report.lambda_min + 2.0).abs() <= 1e-6;
            let mut exact = None;
            if report.big_n <= args.exact_cap() {
                let r = zero_forcing_number_exact_with(
                    &lg.graph,
                    &ExactOptions {
                        budget: args.budget(ExactOptions::default().budget),
                        lower_bounds: LowerBoundPolicy::Trivial,
                    },
                )?;
                let gap = (report.big_n - r.z) as f64;
                let upper = 4.0 * report.big_n as f64 / (report.big_d as f64 + 2.0);
                ok &= gap >= report.n as f64 - 2.0 && gap <= upper + 1e-9;
                exact = Some(r.z);
            }
            let status = if ok { Status::Ok } else { Status::Violation };
            let text = if args.json {
                to_json(&json!({ "report": report, "exact_z": exact }))?
            } else {
                let mut t = format!(
                    "N = {}  D = {}  lambda_min = {:.9}\nbound 4N/(D+2) - 2 = {:.4}\nforcing set size = {}  certificate verified = {}\n",
                    report.big_n,
                    report.big_d,
                    report.lambda_min,
                    report.bound,
                    report.forcing_set.len(),
                    report.certificate_verified
                );
                if let Some(z) = exact {
                    let _ = writeln!(t, "exact Z = {z}  N - Z = {}", report.big_n - z);
                }
                t
            };
            Ok(CommandOutput::text(text, status))
        }
        SpectralCommand::Gm { m } => gm_battery(*m, args),
    }
}

fn gm_battery(m: usize, args: &CommonArgs) -> Result<CommandOutput> {
    let (g, labels) = gm_graph(m)?;
    let n = g.n();
    let s = spectrum(&g)?;
    let expected_lambda = 1.0 + 2f64.powf((m as f64 - 3.0) / 2.0);
    let cap = gm_witness_cap(m)?;
    let mut ok =
        g.regular_degree() == Some((n - 3) / 2) && (s.lambda - expected_lambda).abs() <= 1e-6;
    let mut lines = vec![
        format!("n = {n}  d = {}", g.regular_degree().unwrap_or(0)),
        format!("lambda = {:.9} (expected {expected_lambda})", s.lambda),
    ];
    let mut exact = None;
    if n <= args.exact_cap() {
        let r = zero_forcing_number_exact_with(
            &g,
            &ExactOptions {
                budget: args.budget(ExactOptions::default().budget),
                lower_bounds: LowerBoundPolicy::Trivial,
            },
        )?;
        ok &= n - r.z <= cap;
        lines.push(format!(
            "exact Z = {}  n - Z = {}  cap = {cap}",
            r.z,
            n - r.z
        ));
        exact = Some(r.z);
        let w = max_witness_order(&g, WitnessMode::Overlapping, args.budget(10_000_000))?;
        let independent = witness_gf2_independence(&labels, &w)?;
        ok &= independent && w.order() <= cap;
        lines.push(format!(
            "largest witness order = {}  labels independent = {independent}",
            w.order()
        ));
    }
    let status = if ok { Status::Ok } else { Status::Violation };
    let text = if args.json {
        to_json(&json!({
            "m": m, "n": n, "d": g.regular_degree(), "lambda": s.lambda,
            "expected_lambda": expected_lambda, "exact_z": exact, "witness_cap": cap, "ok": ok,
        }))?
    } else {
        lines.join("\n") + "\n"
    };
    Ok(CommandOutput::text(text, status))
}

pub fn cmd_phi(k: usize, args: &CommonArgs) -> Result<CommandOutput> {
    let scan = lemma4_ratio_scan(k)?;
    let status = if scan.all_within_bound {
        Status::Ok
    } else {
        Status::Violation
    };
    let text = if args.json {
        to_json(&json!({
            "k": k, "max_ratio": scan.max_ratio, "argmax": scan.argmax,
            "all_within_bound": scan.all_within_bound, "asymptotic_peak": scan.asymptotic_peak,
        }))?
    } else {
        format!(
            "k = {k}  max ratio = {:.7} at (a, b) = {:?}  within bound = {}  asymptotic peak a = b = {}\n",
            scan.max_ratio, scan.argmax, scan.all_within_bound, scan.asymptotic_peak
        )
    };
    Ok(CommandOutput {
        text,
        artifact: Some(scan.to_csv()),
        status,
    })
}

#[derive(Clone, Debug)]
pub enum GenerateKind {
    Standard(StandardGraph),
    Gnp {
        n: usize,
        p: f64,
    },
    Regular {
        n: usize,
        d: usize,
    },
    Gm {
        m: usize,
    },
    /// Line graph of `circulant(n, {1} ∪ offsets)`.
    Prop1 {
        n: usize,
        offsets: Vec<usize>,
    },
}

pub fn cmd_generate(kind: &GenerateKind, args: &CommonArgs) -> Result<CommandOutput> {
    let g: Graph = match kind {
        GenerateKind::Standard(s) => standard_graph(s)?,
        GenerateKind::Gnp { n, p } => gnp_sample(*n, *p, args.seed())?,
        GenerateKind::Regular { n, d } => random_regular_sample(*n, *d, args.seed())?,
        GenerateKind::Gm { m } => gm_graph(*m)?.0,
        GenerateKind::Prop1 { n, offsets } => prop1_construction(*n, offsets)?.1.graph,
    };
    if !g.check_invariants() {
        return Err(Error::input("generator produced an inconsistent graph"));
    }
    Ok(CommandOutput {
        text: format!(
            "generated graph with n = {} and m = {}\n",
            g.n(),
            g.edge_count()
        ),
        artifact: Some(write_edge_list(&g)),
        status: Status::Ok,
    })
}
