//! Girth lower bounds against the conjectured linear value.

use zforce::bounds::{davila_kenter_value, girth_lower_bound, girth_sharp_exact};

fn main() -> zforce::Result<()> {
    println!(
        "{:>5} {:>3} {:>12} {:>12} {:>8}",
        "delta", "g", "sharp", "simplified", "DK"
    );
    for g in [5, 6, 7] {
        for delta in [3, 10, 21, 22, 40] {
            let b = girth_lower_bound(delta as f64, g)?;
            println!(
                "{delta:>5} {g:>3} {:>12.3} {:>12.3} {:>8}",
                b.sharp,
                b.simplified,
                davila_kenter_value(delta as f64, g)?
            );
        }
    }
    if let Some((num, den)) = girth_sharp_exact(22, 5) {
        println!("delta = 22, g = 5: sharp bound is exactly {num}/{den}");
    }
    Ok(())
}
