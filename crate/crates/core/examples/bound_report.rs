//! Every bound side by side, including a regular graph where the
//! smallest-eigenvalue bound overshoots.

use zforce::bounds::{bound_report, BoundOptions};
use zforce::graph::{standard_graph, StandardGraph};

fn main() -> zforce::Result<()> {
    let options = BoundOptions::default();
    for kind in [
        StandardGraph::Petersen,
        StandardGraph::Circulant {
            n: 15,
            offsets: vec![1, 2],
        },
    ] {
        let g = standard_graph(&kind)?;
        println!("{kind:?}");
        print!("{}", bound_report(&g, &options)?.to_table());
        println!();
    }
    Ok(())
}
