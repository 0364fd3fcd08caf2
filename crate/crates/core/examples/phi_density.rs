//! Scans the pair-counting function and its density against 1 - 1/sqrt(2).

use zforce::witness::{lemma4_ratio_scan, phi_bruteforce, phi_upper_closed_form, RATIO_BOUND};

fn main() -> zforce::Result<()> {
    let v = phi_bruteforce(6, 4, 3)?;
    println!(
        "k = 6, a = 4, b = 3: value {} (closed form {}), A = {:?}, B = {:?}",
        v.value,
        phi_upper_closed_form(6, 4, 3)?,
        v.arg_a,
        v.arg_b
    );
    println!("bound 1 - 1/sqrt(2) = {RATIO_BOUND:.7}");
    for k in [2, 4, 6, 8, 10, 12] {
        let scan = lemma4_ratio_scan(k)?;
        println!(
            "k = {k:>2}: max ratio {:.6} at {:?}, all within bound: {}",
            scan.max_ratio, scan.argmax, scan.all_within_bound
        );
    }
    Ok(())
}
