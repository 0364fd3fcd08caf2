//! Runs the colour-change rule from a few starting sets and prints each force.

use zforce::forcing::{closure, is_forcing_set};
use zforce::graph::{standard_graph, StandardGraph};
use zforce::VertexSet;

fn main() -> zforce::Result<()> {
    let g = standard_graph(&StandardGraph::Petersen)?;
    for start in [vec![0, 1, 2, 3, 4], vec![0, 1, 5], vec![0, 1, 2, 5, 6]] {
        let set = VertexSet::from_vertices(g.n(), start.iter().copied())?;
        let run = closure(&g, &set);
        println!("start {start:?}");
        for (u, v) in run.steps() {
            println!("  {u} forces {v}");
        }
        println!(
            "  black at the end: {:?} (forcing set: {})",
            run.final_black().to_vec(),
            is_forcing_set(&g, &set)
        );
    }
    Ok(())
}
