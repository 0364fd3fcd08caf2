//! `Φ(a, b)`: the largest number of pairs `(i, j)` with `i < j` in `A × B`,
//! over `A, B ⊆ {1, …, k}` with `|A| = a` and `|B| = b`.

use serde::Serialize;

use crate::bitset::bits;
use crate::error::{Error, Result};

/// Largest `k` accepted by the exhaustive routines.
pub const PHI_MAX_K: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiValue {
    pub k: usize,
    pub a: usize,
    pub b: usize,
    pub value: u64,
    /// A maximizing `A`, 1-based, ascending.
    pub arg_a: Vec<usize>,
    /// A maximizing `B`, 1-based, ascending.
    pub arg_b: Vec<usize>,
}

fn check_args(k: usize, a: usize, b: usize) -> Result<()> {
    if a == 0 || b == 0 || a > k || b > k {
        return Err(Error::input(format!(
            "need 1 <= a, b <= k, got k={k}, a={a}, b={b}"
        )));
    }
    Ok(())
}

fn masks_of_weight(k: usize, w: usize) -> impl Iterator<Item = u32> {
    (0u32..1 << k).filter(move |m| m.count_ones() as usize == w)
}

fn to_indices(m: u32) -> Vec<usize> {
    bits(m as u64).map(|i| i + 1).collect()
}

/// Number of pairs `i < j` with `i ∈ A`, `j ∈ B`.
fn pairs_below(a: u32, b: u32) -> u64 {
    bits(b as u64)
        .map(|j| (a & ((1u32 << j) - 1)).count_ones() as u64)
        .sum()
}

/// Exhaustive `Φ(a, b)` over all `C(k, a)·C(k, b)` pairs of index sets.
///
/// The reported argmax is the first maximizer with sets ordered by their
/// bitmask, `A` before `B`.
pub fn phi_bruteforce(k: usize, a: usize, b: usize) -> Result<PhiValue> {
    if k > PHI_MAX_K {
        return Err(Error::input(format!(
            "phi_bruteforce supports k <= {PHI_MAX_K}, got {k}"
        )));
    }
    check_args(k, a, b)?;
    let bs: Vec<u32> = masks_of_weight(k, b).collect();
    let mut best = (0u64, 0u32, 0u32);
    let mut first = true;
    for am in masks_of_weight(k, a) {
        for &bm in &bs {
            let v = pairs_below(am, bm);
            if first || v > best.0 {
                best = (v, am, bm);
                first = false;
            }
        }
    }
    Ok(PhiValue {
        k,
        a,
        b,
        value: best.0,
        arg_a: to_indices(best.1),
        arg_b: to_indices(best.2),
    })
}

/// `ab - g(g+1)/2` with `g = max(0, a + b - k)`, the least possible overlap.
pub fn phi_upper_closed_form(k: usize, a: usize, b: usize) -> Result<u64> {
    check_args(k, a, b)?;
    let g = (a + b).saturating_sub(k) as u64;
    Ok((a * b) as u64 - g * (g + 1) / 2)
}

/// The ratio bound `1 - √2/2`.
pub const RATIO_BOUND: f64 = 1.0 - std::f64::consts::FRAC_1_SQRT_2;

/// Decides `phi / (k(a+b)) <= 1 - √2/2` in integers.
///
/// With `D = k(a+b)` the inequality reads `√2·D <= 2(D - phi)`, which for
/// `D >= phi` is equivalent to `D² <= 2(D - phi)²`.
pub fn ratio_within_bound(k: usize, a: usize, b: usize, phi: u64) -> bool {
    let d = (k * (a + b)) as u128;
    let phi = phi as u128;
    d >= phi && d * d <= 2 * (d - phi) * (d - phi)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RatioCell {
    pub a: usize,
    pub b: usize,
    pub phi: u64,
    pub ratio: f64,
    pub within_bound: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RatioScan {
    pub k: usize,
    pub cells: Vec<RatioCell>,
    pub max_ratio: f64,
    /// `(a, b)` of the first cell attaining `max_ratio`.
    pub argmax: (usize, usize),
    /// True when every cell satisfies the bound exactly.
    pub all_within_bound: bool,
    /// `round(√2·k/2)`, where the maximum sits for large `k`.
    pub asymptotic_peak: usize,
}

/// `Φ(a, b)/(k(a+b))` for every `1 <= a, b <= k`.
pub fn lemma4_ratio_scan(k: usize) -> Result<RatioScan> {
    if k == 0 || k > PHI_MAX_K {
        return Err(Error::input(format!(
            "ratio scan needs 1 <= k <= {PHI_MAX_K}, got {k}"
        )));
    }
    let mut cells = Vec::with_capacity(k * k);
    for a in 1..=k {
        for b in 1..=k {
            let phi = phi_bruteforce(k, a, b)?.value;
            cells.push(RatioCell {
                a,
                b,
                phi,
                ratio: phi as f64 / (k * (a + b)) as f64,
                within_bound: ratio_within_bound(k, a, b, phi),
            });
        }
    }
    let top = cells.iter().fold(&cells[0], |best, c| {
        // Compare phi/(k(a+b)) exactly by cross-multiplication.
        if c.phi * (best.a + best.b) as u64 > best.phi * (c.a + c.b) as u64 {
            c
        } else {
            best
        }
    });
    Ok(RatioScan {
        k,
        max_ratio: top.ratio,
        argmax: (top.a, top.b),
        all_within_bound: cells.iter().all(|c| c.within_bound),
        asymptotic_peak: (k as f64 * std::f64::consts::FRAC_1_SQRT_2).round() as usize,
        cells,
    })
}

impl RatioScan {
    /// CSV with header `a,b,phi,ratio,within_bound`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("a,b,phi,ratio,within_bound\n");
        for c in &self.cells {
            out.push_str(&format!(
                "{},{},{},{:.9},{}\n",
                c.a, c.b, c.phi, c.ratio, c.within_bound
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_values() {
        let v = phi_bruteforce(4, 3, 3).unwrap();
        assert_eq!(v.value, 6);
        assert_eq!(v.arg_a, vec![1, 2, 3]);
        assert_eq!(v.arg_b, vec![2, 3, 4]);
        assert_eq!(phi_bruteforce(5, 1, 1).unwrap().value, 1);
        assert_eq!(phi_bruteforce(6, 6, 6).unwrap().value, 15);
        assert_eq!(phi_upper_closed_form(4, 3, 3).unwrap(), 6);
        assert_eq!(phi_upper_closed_form(10, 2, 2).unwrap(), 4);
        assert_eq!(phi_upper_closed_form(6, 4, 4).unwrap(), 13);
        assert_eq!(phi_bruteforce(6, 4, 4).unwrap().value, 13);
    }

    #[test]
    fn argument_errors() {
        assert!(phi_bruteforce(13, 1, 1).is_err());
        assert!(phi_bruteforce(4, 0, 1).is_err());
        assert!(phi_bruteforce(4, 5, 1).is_err());
        assert!(lemma4_ratio_scan(0).is_err());
    }

    #[test]
    fn scans() {
        let s4 = lemma4_ratio_scan(4).unwrap();
        assert_eq!(s4.max_ratio, 0.25);
        // (2, 2), (2, 3) and (3, 3) all tie at 1/4; the first in scan order wins.
        assert_eq!(s4.argmax, (2, 2));
        let s1 = lemma4_ratio_scan(1).unwrap();
        assert_eq!(s1.max_ratio, 0.0);
        assert!(s1.all_within_bound);
    }

    #[test]
    fn exact_ratio_test_edges() {
        // 0.25 < 0.2929 < 0.3
        assert!(ratio_within_bound(4, 3, 3, 6));
        assert!(!ratio_within_bound(10, 1, 0, 3));
        assert!(!ratio_within_bound(1, 1, 1, 3));
    }
}
