//! A small G(n, 1/2) sweep; the full grid is `zforce gnp-sweep`.

use zforce::experiments::{run_gnp_sweep, SweepConfig};

fn main() -> zforce::Result<()> {
    let config = SweepConfig {
        ns: vec![10, 12, 14, 16],
        trials: 20,
        ..SweepConfig::default()
    };
    let result = run_gnp_sweep(&config)?;
    print!("{}", result.summary_text());
    Ok(())
}
