use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use zforce::experiments::{
    cmd_analyze, cmd_generate, cmd_gnp_sweep, cmd_phi, cmd_spectral, cmd_witness, CommandOutput,
    CommonArgs, GenerateKind, SpectralCommand, WitnessCommand,
};
use zforce::graph::StandardGraph;

#[derive(Parser)]
#[command(
    name = "zforce",
    version,
    about = "Zero forcing experiments and bound checks"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Base seed for every random choice.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Trials per cell, heuristic restarts, or sampled pairs, by subcommand.
    #[arg(long, global = true)]
    trials: Option<usize>,
    /// Work budget: closures for exact solves, expansions for witness search.
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Largest vertex count solved exactly.
    #[arg(long, global = true)]
    exact_cap: Option<usize>,
    /// JSON instead of text on stdout.
    #[arg(long, global = true)]
    json: bool,
    /// Write the artifact (CSV or edge list) here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Every bound for a graph, checked against the exact value where feasible.
    Analyze { graph: PathBuf },
    /// Exact Z over a G(n, p) grid.
    GnpSweep {
        #[arg(long, value_delimiter = ',', default_value = "12,14,16,18,20,22")]
        ns: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "0.5")]
        ps: Vec<f64>,
        /// Fall back to the heuristic above the exact cap.
        #[arg(long)]
        allow_heuristic: bool,
    },
    /// Witness checking and search.
    Witness {
        graph: PathBuf,
        #[command(subcommand)]
        action: WitnessAction,
    },
    /// Spectral tools.
    Spectral {
        #[command(subcommand)]
        action: SpectralAction,
    },
    /// Ratio scan of the pair-counting function for k.
    Phi { k: usize },
    /// Write a generated graph as an edge list.
    Generate {
        #[command(subcommand)]
        kind: GenerateAction,
    },
}

#[derive(Subcommand)]
enum WitnessAction {
    /// Check a witness written as "k; s: ...; t: ...".
    Check { witness: String },
    /// Largest witness.
    Max {
        #[arg(long)]
        disjoint: bool,
    },
    /// Witness from the forcing run of a vertex set.
    FromForcing {
        #[arg(value_delimiter = ',', num_args = 0..)]
        set: Vec<usize>,
    },
}

#[derive(Subcommand)]
enum SpectralAction {
    Spectrum {
        graph: PathBuf,
    },
    Mixing {
        graph: PathBuf,
    },
    Greedy {
        graph: PathBuf,
    },
    /// Line graph of circulant(n, {1} + offsets).
    Prop1 {
        n: usize,
        #[arg(long, value_delimiter = ',')]
        offsets: Vec<usize>,
    },
    Gm {
        m: usize,
    },
}

#[derive(Subcommand)]
enum GenerateAction {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    Bipartite {
        a: usize,
        b: usize,
    },
    Petersen,
    Circulant {
        n: usize,
        #[arg(value_delimiter = ',', required = true)]
        offsets: Vec<usize>,
    },
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
    Prop1 {
        n: usize,
        #[arg(long, value_delimiter = ',')]
        offsets: Vec<usize>,
    },
}

fn run(cli: Cli) -> zforce::Result<CommandOutput> {
    let g = &cli.global;
    let common = CommonArgs {
        seed: g.seed,
        trials: g.trials,
        budget: g.budget,
        exact_cap: g.exact_cap,
        json: g.json,
    };
    match cli.command {
        Command::Analyze { graph } => cmd_analyze(&graph, &common),
        Command::GnpSweep {
            ns,
            ps,
            allow_heuristic,
        } => cmd_gnp_sweep(ns, ps, allow_heuristic, &common),
        Command::Witness { graph, action } => {
            let cmd = match action {
                WitnessAction::Check { witness } => WitnessCommand::Check { witness },
                WitnessAction::Max { disjoint } => WitnessCommand::Max { disjoint },
                WitnessAction::FromForcing { set } => WitnessCommand::FromForcing { set },
            };
            cmd_witness(&graph, &cmd, &common)
        }
        Command::Spectral { action } => {
            let cmd = match action {
                SpectralAction::Spectrum { graph } => SpectralCommand::Spectrum { graph },
                SpectralAction::Mixing { graph } => SpectralCommand::Mixing { graph },
                SpectralAction::Greedy { graph } => SpectralCommand::Greedy { graph },
                SpectralAction::Prop1 { n, offsets } => SpectralCommand::Prop1 { n, offsets },
                SpectralAction::Gm { m } => SpectralCommand::Gm { m },
            };
            cmd_spectral(&cmd, &common)
        }
        Command::Phi { k } => cmd_phi(k, &common),
        Command::Generate { kind } => {
            let kind = match kind {
                GenerateAction::Path { n } => GenerateKind::Standard(StandardGraph::Path(n)),
                GenerateAction::Cycle { n } => GenerateKind::Standard(StandardGraph::Cycle(n)),
                GenerateAction::Complete { n } => {
                    GenerateKind::Standard(StandardGraph::Complete(n))
                }
                GenerateAction::Bipartite { a, b } => {
                    GenerateKind::Standard(StandardGraph::CompleteBipartite(a, b))
                }
                GenerateAction::Petersen => GenerateKind::Standard(StandardGraph::Petersen),
                GenerateAction::Circulant { n, offsets } => {
                    GenerateKind::Standard(StandardGraph::Circulant { n, offsets })
                }
                GenerateAction::Gnp { n, p } => GenerateKind::Gnp { n, p },
                GenerateAction::Regular { n, d } => GenerateKind::Regular { n, d },
                GenerateAction::Gm { m } => GenerateKind::Gm { m },
                GenerateAction::Prop1 { n, offsets } => GenerateKind::Prop1 { n, offsets },
            };
            cmd_generate(&kind, &common)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out_path = cli.global.out.clone();
    match run(cli) {
        Ok(output) => {
            print!("{}", output.text);
            if let Some(artifact) = output.artifact {
                match &out_path {
                    Some(path) => {
                        if let Err(e) = std::fs::write(path, artifact) {
                            eprintln!("error: cannot write {}: {e}", path.display());
                            return ExitCode::from(1);
                        }
                    }
                    None => print!("{artifact}"),
                }
            }
            ExitCode::from(output.status.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
