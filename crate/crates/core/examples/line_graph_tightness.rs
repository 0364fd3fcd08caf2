//! Line graphs of circulants: an explicit forcing set and the exact gap.

use zforce::forcing::zero_forcing_number_exact;
use zforce::spectral::prop1_construction;

fn main() -> zforce::Result<()> {
    for (n, extra) in [
        (8, vec![4]),
        (8, vec![2]),
        (10, vec![5]),
        (10, vec![3]),
        (12, vec![6]),
    ] {
        let (_, lg, r) = prop1_construction(n, &extra)?;
        let z = zero_forcing_number_exact(&lg.graph, u64::MAX)?.z;
        println!(
            "base n = {n}, d = {}: N = {}, D = {}, lambda_min = {:.6}, N - Z = {} (certificate gives {}, ceiling {:.2})",
            r.d,
            r.big_n,
            r.big_d,
            r.lambda_min,
            r.big_n - z,
            r.big_n - r.forcing_set.len(),
            4.0 * r.big_n as f64 / (r.big_d as f64 + 2.0)
        );
    }
    Ok(())
}
