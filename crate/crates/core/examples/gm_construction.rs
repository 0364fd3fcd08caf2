//! Odd-weight vector graphs: spectrum and the rank argument that caps witnesses.

use zforce::forcing::zero_forcing_number_exact;
use zforce::graph::gm_graph;
use zforce::spectral::spectrum;
use zforce::witness::{max_witness_order, witness_gf2_independence, WitnessMode};

fn main() -> zforce::Result<()> {
    for m in [3, 5, 7] {
        let (g, labels) = gm_graph(m)?;
        let s = spectrum(&g)?;
        println!(
            "m = {m}: n = {}, d = {}, lambda = {:.6}",
            g.n(),
            g.regular_degree().unwrap_or(0),
            s.lambda
        );
        if g.n() <= 20 {
            let w = max_witness_order(&g, WitnessMode::Overlapping, 10_000_000)?;
            let z = zero_forcing_number_exact(&g, u64::MAX)?.z;
            println!(
                "  largest witness {w} (labels independent: {}), Z = {z}",
                witness_gf2_independence(&labels, &w)?
            );
        }
    }
    Ok(())
}
