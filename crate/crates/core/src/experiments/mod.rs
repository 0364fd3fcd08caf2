//! Seeded experiments and the command implementations behind the binary.

mod commands;
mod stats;

use std::time::Instant;

use serde::Serialize;

use crate::bounds::gnp_predicted_gap;
use crate::error::{Error, Result};
use crate::forcing::{
    zero_forcing_number_exact_with, zero_forcing_upper_heuristic, ExactOptions, LowerBoundPolicy,
};
use crate::graph::{gnp_sample, mix_seed};

pub use commands::{
    cmd_analyze, cmd_generate, cmd_gnp_sweep, cmd_phi, cmd_spectral, cmd_witness, CommandOutput,
    CommonArgs, GenerateKind, SpectralCommand, Status, WitnessCommand,
};
pub use stats::{mean_and_std, ranks, spearman};

/// First line of every sweep CSV.
pub const SWEEP_CSV_HEADER: &str = "# zforce gnp-sweep csv v1";

/// Identifier stored in every sweep record.
pub const GNP_EXPERIMENT: &str = "gnp-sweep";

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrialRecord {
    pub experiment: String,
    pub cell: usize,
    pub trial: usize,
    pub seed: u64,
    pub n: usize,
    pub p: f64,
    pub exact: bool,
    pub z: usize,
    pub gap: usize,
    /// Predicted `n - Z` for this cell.
    pub formula_gap: f64,
    pub runtime_ms: f64,
    pub closures: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepConfig {
    pub ns: Vec<usize>,
    pub ps: Vec<f64>,
    pub trials: usize,
    pub seed: u64,
    /// Closure budget per exact solve.
    pub budget: u64,
    /// Largest `n` solved exactly.
    pub exact_cap: usize,
    /// Use the heuristic above `exact_cap` instead of rejecting the cell.
    pub allow_heuristic: bool,
    pub heuristic_restarts: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            ns: vec![12, 14, 16, 18, 20, 22],
            ps: vec![0.5],
            trials: 50,
            seed: 1,
            budget: 50_000_000,
            exact_cap: 22,
            allow_heuristic: false,
            heuristic_restarts: 20,
        }
    }
}

impl SweepConfig {
    /// Cells in order: every `n` for the first `p`, then the next `p`.
    pub fn cells(&self) -> Vec<(usize, f64)> {
        self.ps
            .iter()
            .flat_map(|&p| self.ns.iter().map(move |&n| (n, p)))
            .collect()
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::input("trials must be at least 1"));
        }
        if self.ns.is_empty() || self.ps.is_empty() {
            return Err(Error::input("sweep grid is empty"));
        }
        if let Some(p) = self.ps.iter().find(|p| !(0.0..=1.0).contains(*p)) {
            return Err(Error::input(format!("p must lie in [0, 1], got {p}")));
        }
        if !self.allow_heuristic {
            if let Some(n) = self.ns.iter().find(|&&n| n > self.exact_cap) {
                return Err(Error::input(format!(
                    "n = {n} exceeds the exact cap {}; raise the cap or allow the heuristic",
                    self.exact_cap
                )));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CellSummary {
    pub cell: usize,
    pub n: usize,
    pub p: f64,
    pub trials: usize,
    pub mean_gap: f64,
    pub std_gap: f64,
    /// Predicted `n - Z`; `None` where the formula is undefined (`p` of 0 or 1).
    pub formula_gap: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PTrend {
    pub p: f64,
    /// Spearman correlation between `n` and mean `n - Z`; `None` for fewer
    /// than two cells or constant data.
    pub spearman: Option<f64>,
    pub strictly_increasing: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepResult {
    pub config: SweepConfig,
    pub records: Vec<TrialRecord>,
    pub cells: Vec<CellSummary>,
    pub trends: Vec<PTrend>,
}

/// Seed of one trial, derived from the base seed and its grid position so
/// that any cell can be replayed alone.
pub fn trial_seed(base: u64, cell: usize, trial: usize) -> u64 {
    mix_seed(base, &[cell as u64, trial as u64])
}

/// Runs one trial of the sweep.
pub fn run_gnp_trial(config: &SweepConfig, cell: usize, trial: usize) -> Result<TrialRecord> {
    let (n, p) = *config
        .cells()
        .get(cell)
        .ok_or_else(|| Error::input(format!("cell {cell} outside the grid")))?;
    let seed = trial_seed(config.seed, cell, trial);
    let g = gnp_sample(n, p, seed)?;
    let start = Instant::now();
    let (exact, z, closures) = if n <= config.exact_cap {
        let r = zero_forcing_number_exact_with(
            &g,
            &ExactOptions {
                budget: config.budget,
                lower_bounds: LowerBoundPolicy::Structural,
            },
        )?;
        (true, r.z, r.stats.closures)
    } else if config.allow_heuristic {
        let (z, _) = zero_forcing_upper_heuristic(&g, config.heuristic_restarts.max(1), seed)?;
        (false, z, 0)
    } else {
        return Err(Error::input(format!("n = {n} exceeds the exact cap")));
    };
    Ok(TrialRecord {
        experiment: GNP_EXPERIMENT.into(),
        cell,
        trial,
        seed,
        n,
        p,
        exact,
        z,
        gap: n - z,
        formula_gap: gnp_predicted_gap(n, p).unwrap_or(f64::NAN),
        runtime_ms: start.elapsed().as_secs_f64() * 1e3,
        closures,
    })
}

/// Runs every cell of the grid and summarizes it.
pub fn run_gnp_sweep(config: &SweepConfig) -> Result<SweepResult> {
    config.validate()?;
    let cells = config.cells();
    let mut records = Vec::with_capacity(cells.len() * config.trials);
    for cell in 0..cells.len() {
        for trial in 0..config.trials {
            records.push(run_gnp_trial(config, cell, trial)?);
        }
    }
    Ok(summarize(config.clone(), records))
}

fn summarize(config: SweepConfig, records: Vec<TrialRecord>) -> SweepResult {
    let grid = config.cells();
    let cells: Vec<CellSummary> = grid
        .iter()
        .enumerate()
        .map(|(cell, &(n, p))| {
            let gaps: Vec<f64> = records
                .iter()
                .filter(|r| r.cell == cell)
                .map(|r| r.gap as f64)
                .collect();
            let (mean_gap, std_gap) = mean_and_std(&gaps);
            CellSummary {
                cell,
                n,
                p,
                trials: gaps.len(),
                mean_gap,
                std_gap,
                formula_gap: gnp_predicted_gap(n, p).ok(),
            }
        })
        .collect();
    let trends = config
        .ps
        .iter()
        .map(|&p| {
            let row: Vec<&CellSummary> = cells.iter().filter(|c| c.p == p).collect();
            let ns: Vec<f64> = row.iter().map(|c| c.n as f64).collect();
            let means: Vec<f64> = row.iter().map(|c| c.mean_gap).collect();
            let mut order: Vec<usize> = (0..row.len()).collect();
            order.sort_by_key(|&i| row[i].n);
            PTrend {
                p,
                spearman: spearman(&ns, &means),
                strictly_increasing: order.windows(2).all(|w| means[w[1]] > means[w[0]]),
            }
        })
        .collect();
    SweepResult {
        config,
        records,
        cells,
        trends,
    }
}

impl SweepResult {
    /// Per-trial CSV. `runtime_ms` is the only column that varies between
    /// identical runs.
    pub fn records_csv(&self) -> String {
        let mut out = format!(
            "{SWEEP_CSV_HEADER}\nexperiment,cell,trial,seed,n,p,exact,z,gap,formula_gap,closures,runtime_ms\n"
        );
        for r in &self.records {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{:.6},{},{:.3}\n",
                r.experiment,
                r.cell,
                r.trial,
                r.seed,
                r.n,
                r.p,
                r.exact,
                r.z,
                r.gap,
                r.formula_gap,
                r.closures,
                r.runtime_ms
            ));
        }
        out
    }

    /// Per-cell summary followed by the trend lines, as text.
    pub fn summary_text(&self) -> String {
        let mut out =
            String::from("cell      n      p  trials  mean(n-Z)  std(n-Z)  formula(n-Z)\n");
        for c in &self.cells {
            out.push_str(&format!(
                "{:>4} {:>6} {:>6} {:>7} {:>10.4} {:>9.4} {:>13}\n",
                c.cell,
                c.n,
                c.p,
                c.trials,
                c.mean_gap,
                c.std_gap,
                c.formula_gap.map_or("n/a".into(), |f| format!("{f:.4}"))
            ));
        }
        for t in &self.trends {
            out.push_str(&format!(
                "p = {}: spearman(n, mean gap) = {}, strictly increasing = {}\n",
                t.p,
                t.spearman.map_or("n/a".into(), |r| format!("{r:.4}")),
                t.strictly_increasing
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extreme_densities() {
        let config = SweepConfig {
            ns: vec![10],
            ps: vec![1.0, 0.0],
            trials: 3,
            ..SweepConfig::default()
        };
        let r = run_gnp_sweep(&config).unwrap();
        assert!(r.records.iter().filter(|x| x.p == 1.0).all(|x| x.gap == 1));
        assert!(r.records.iter().filter(|x| x.p == 0.0).all(|x| x.gap == 0));
        assert_eq!(r.cells[0].formula_gap, None);
    }

    #[test]
    fn replay_is_identical() {
        let config = SweepConfig {
            ns: vec![8, 10],
            trials: 4,
            seed: 5,
            ..SweepConfig::default()
        };
        let a = run_gnp_sweep(&config).unwrap();
        let b = run_gnp_trial(&config, 1, 2).unwrap();
        let stored = &a.records[config.trials + 2];
        assert_eq!(
            (stored.seed, stored.z, stored.closures),
            (b.seed, b.z, b.closures)
        );
        assert!(a.records_csv().starts_with(SWEEP_CSV_HEADER));
    }

    #[test]
    fn config_checks() {
        let mut c = SweepConfig {
            ns: vec![30],
            ..SweepConfig::default()
        };
        assert!(c.validate().is_err());
        c.allow_heuristic = true;
        assert!(c.validate().is_ok());
        c.trials = 0;
        assert!(c.validate().is_err());
    }
}
