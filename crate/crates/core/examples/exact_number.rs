//! Exact zero forcing numbers with certificates and search statistics.

use zforce::forcing::{forcing_lower_bound, zero_forcing_number_exact, LowerBoundPolicy};
use zforce::graph::{gm_graph, gnp_sample, standard_graph, StandardGraph};

fn main() -> zforce::Result<()> {
    let graphs = vec![
        ("path P8", standard_graph(&StandardGraph::Path(8))?),
        ("cycle C9", standard_graph(&StandardGraph::Cycle(9))?),
        (
            "K_{3,4}",
            standard_graph(&StandardGraph::CompleteBipartite(3, 4))?,
        ),
        ("Petersen", standard_graph(&StandardGraph::Petersen)?),
        ("G_5", gm_graph(5)?.0),
        ("G(20, 1/2) seed 1", gnp_sample(20, 0.5, 1)?),
    ];
    println!(
        "{:<18} {:>3} {:>3} {:>6} {:>10}  certificate",
        "graph", "n", "Z", "start", "closures"
    );
    for (name, g) in graphs {
        let r = zero_forcing_number_exact(&g, 100_000_000)?;
        println!(
            "{name:<18} {:>3} {:>3} {:>6} {:>10}  {:?}",
            g.n(),
            r.z,
            forcing_lower_bound(&g, LowerBoundPolicy::Structural),
            r.stats.closures,
            r.optimal_set.to_vec()
        );
    }
    Ok(())
}
