//! Relaxing a witness of a random graph into unordered blocks.

use zforce::graph::gnp_sample;
use zforce::witness::{
    check_loose_subwitness, default_loose_parameters, loose_subwitness_from_witness,
    max_witness_order, WitnessMode,
};

fn main() -> zforce::Result<()> {
    let p = 0.3;
    let g = gnp_sample(14, p, 5)?;
    let w = max_witness_order(&g, WitnessMode::Overlapping, 10_000_000)?;
    println!("witness of G(14, {p}): {w}");
    let (l, m) = default_loose_parameters(w.order(), p)?;
    let loose = loose_subwitness_from_witness(&g, &w, l, m)?;
    println!("k = {}, l = {l}, m = {m}", w.order());
    println!("S_0 = {:?}, T_0 = {:?}", loose.s0, loose.t0);
    for (i, block) in loose.blocks.iter().enumerate() {
        println!("block {}: {block:?}", i + 1);
    }
    println!("checker verdict: {:?}", check_loose_subwitness(&g, &loose));
    Ok(())
}
