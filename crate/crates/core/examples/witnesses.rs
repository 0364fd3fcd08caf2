//! Witnesses: the largest ones, the one read off a forcing run, and checking.

use zforce::forcing::closure;
use zforce::forcing::zero_forcing_number_exact;
use zforce::graph::{standard_graph, StandardGraph};
use zforce::witness::{
    check_witness, forcing_set_from_witness, max_witness_order, witness_from_forcing, WitnessMode,
};

fn main() -> zforce::Result<()> {
    let g = standard_graph(&StandardGraph::Circulant {
        n: 8,
        offsets: vec![1, 3],
    })?;
    let z = zero_forcing_number_exact(&g, u64::MAX)?;
    println!("circulant C8(1,3): n = {}, Z = {}", g.n(), z.z);

    let from_run = witness_from_forcing(&g, &closure(&g, &z.optimal_set))?;
    println!("from the optimal forcing run: {from_run}");

    let over = max_witness_order(&g, WitnessMode::Overlapping, 1_000_000)?;
    let disj = max_witness_order(&g, WitnessMode::Disjoint, 1_000_000)?;
    println!("largest witness:          {over}");
    println!("largest disjoint witness: {disj}");
    println!(
        "sandwich: {} <= n - Z = {} <= {}",
        disj.order(),
        g.n() - z.z,
        over.order()
    );
    let set = forcing_set_from_witness(&g, &disj)?;
    println!("forcing set from the disjoint witness: {:?}", set.to_vec());

    // Swapping two columns breaks the superdiagonal condition.
    let mut t = over.t().to_vec();
    t.swap(0, 1);
    match check_witness(&g, over.s(), &t)? {
        Some(v) => println!("after swapping t_1 and t_2: {v}"),
        None => println!("after swapping t_1 and t_2: still a witness"),
    }
    Ok(())
}
