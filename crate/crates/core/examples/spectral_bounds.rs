//! Spectrum, mixing slack and the greedy witness on a random regular graph.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zforce::bounds::spectral_forcing_upper;
use zforce::graph::random_regular_sample;
use zforce::spectral::{greedy_witness, mixing_defect, spectrum};
use zforce::VertexSet;

fn main() -> zforce::Result<()> {
    let (n, d) = (300, 60);
    let g = random_regular_sample(n, d, 4)?;
    let s = spectrum(&g)?;
    println!(
        "n = {n}, d = {d}, lambda = {:.4}, lambda_min = {:.4}",
        s.lambda, s.lambda_min
    );

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut worst = f64::INFINITY;
    for _ in 0..200 {
        let u = VertexSet::from_vertices(n, (0..n).filter(|_| rng.random_bool(0.3)))?;
        let w = VertexSet::from_vertices(n, (0..n).filter(|_| rng.random_bool(0.6)))?;
        worst = worst.min(mixing_defect(&g, &s, &u, &w)?.slack_abs);
    }
    println!("smallest mixing slack over 200 random pairs: {worst:.4}");

    let out = greedy_witness(&g, &s)?;
    println!(
        "greedy witness of order {} (guarantee {:?}), |U| trace {:?}",
        out.k(),
        out.guarantee,
        out.trace
    );
    let upper = spectral_forcing_upper(n, d as f64, s.lambda)?;
    println!(
        "Z <= {} from the certificate, Z <= {:.2} from the eigenvalue bound",
        n - out.k(),
        upper.value
    );
    Ok(())
}
