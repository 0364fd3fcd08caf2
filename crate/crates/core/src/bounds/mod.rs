//! Closed-form bounds on the zero forcing number.
//!
//! Every evaluator returns a real number; compare against an integer `Z`
//! by rounding the bound towards the side it constrains. Lower bounds that
//! would be negative clamp to 0, and upper bounds that say nothing clamp to
//! `n`.

mod report;

use serde::Serialize;

use crate::error::{Error, Result};

pub use report::{
    bound_report, BoundEntry, BoundKind, BoundOptions, BoundReport, ExactStatus, GraphStats,
};

/// Minimum vertex count of a graph with average degree `d` and girth `g`:
/// `(d-1)^k` for `g = 2k+1` and `2(d-1)^k` for `g = 2k+2`.
pub fn moore_bound(d: f64, g: usize) -> Result<f64> {
    if g < 3 {
        return Err(Error::input(format!("girth must be at least 3, got {g}")));
    }
    if !(d >= 1.0) {
        return Err(Error::input(format!(
            "average degree must be at least 1, got {d}"
        )));
    }
    let k = ((g - 1) / 2) as i32;
    let factor = if g.is_multiple_of(2) { 2.0 } else { 1.0 };
    Ok(factor * (d - 1.0).powi(k))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GirthBound {
    /// `(kδ/(k+1) - 1)^k / (k+1)`, doubled for even girth.
    pub sharp: f64,
    /// `e^{-1}(δ^k/(k+1) - δ^{k-1})`, doubled for even girth.
    pub simplified: f64,
}

fn girth_half(g: usize) -> (i32, f64) {
    (((g - 1) / 2) as i32, if g.is_multiple_of(2) { 2.0 } else { 1.0 })
}

/// Lower bounds on `Z` for minimum degree `delta` and girth `g`, where
/// `k = ⌊(g-1)/2⌋`.
pub fn girth_lower_bound(delta: f64, g: usize) -> Result<GirthBound> {
    if !(delta >= 2.0) || g < 3 {
        return Err(Error::input(format!(
            "girth bound needs delta >= 2 and g >= 3, got delta = {delta}, g = {g}"
        )));
    }
    let (k, factor) = girth_half(g);
    let kf = k as f64;
    let sharp = (kf * delta / (kf + 1.0) - 1.0).max(0.0).powi(k) / (kf + 1.0);
    let simplified = (delta.powi(k) / (kf + 1.0) - delta.powi(k - 1)) / std::f64::consts::E;
    Ok(GirthBound {
        sharp: factor * sharp,
        simplified: (factor * simplified).max(0.0),
    })
}

/// The sharp girth bound as a reduced fraction `(numerator, denominator)`,
/// or `None` if the integers overflow.
pub fn girth_sharp_exact(delta: u64, g: usize) -> Option<(u128, u128)> {
    if delta < 2 || g < 3 {
        return None;
    }
    let (k, factor) = girth_half(g);
    let k = k as u32;
    let k1 = k as u128 + 1;
    // (kδ/(k+1) - 1)^k / (k+1) = (kδ - (k+1))^k / (k+1)^(k+1)
    let base = (k as u128 * delta as u128).saturating_sub(k1);
    let num = base.checked_pow(k)?.checked_mul(factor as u128)?;
    let den = k1.checked_pow(k + 1)?;
    let g = gcd(num, den);
    Some((num / g, den / g))
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

/// `δ + (δ - 2)(g - 3)`, a conjectured lower bound used for comparison only.
pub fn davila_kenter_value(delta: f64, g: usize) -> Result<f64> {
    if !(delta >= 2.0) || g < 3 {
        return Err(Error::input(format!(
            "needs delta >= 2 and g >= 3, got delta = {delta}, g = {g}"
        )));
    }
    Ok(delta + (delta - 2.0) * (g as f64 - 3.0))
}

/// Turán-type parameters of a forbidden graph `H`: `ex(n, H) <= β n^{1+c}`
/// for `n >= n0`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TuranParams {
    pub beta: f64,
    pub c: f64,
    pub n0: usize,
}

impl TuranParams {
    pub fn new(beta: f64, c: f64, n0: usize) -> Result<Self> {
        if !(beta > 0.0) || !(c > 0.0 && c < 1.0) || n0 == 0 {
            return Err(Error::input(format!(
                "need beta > 0, 0 < c < 1, n0 >= 1; got beta = {beta}, c = {c}, n0 = {n0}"
            )));
        }
        Ok(Self { beta, c, n0 })
    }
}

/// A bound value with its precondition verdict.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Conditional {
    pub value: f64,
    pub applicable: bool,
}

/// Lower bound for `H`-free graphs, `½(δ/(4β))^{1/c}`, applicable when
/// `δ >= 2·n0`.
///
/// The same quantity written as `2^{-1-2/c}(δ/β)^{1/c}` is evaluated too and
/// the two must agree to `1e-12` relative.
pub fn hfree_lower_bound(delta: f64, params: &TuranParams) -> Conditional {
    let inv = 1.0 / params.c;
    let value = 0.5 * (delta / (4.0 * params.beta)).powf(inv);
    let other = 2f64.powf(-1.0 - 2.0 * inv) * (delta / params.beta).powf(inv);
    assert!(
        (value - other).abs() <= 1e-12 * value.abs().max(other.abs()).max(f64::MIN_POSITIVE),
        "the two forms of the H-free bound disagree: {value} vs {other}"
    );
    Conditional {
        value,
        applicable: delta >= 2.0 * params.n0 as f64,
    }
}

/// Lower bound for `K_{a,b}`-free graphs,
/// `½ (δ / (4(b-1)^{1/a}))^{a/(a-1)}`, applicable when `δ >= 4a - 4`.
pub fn kab_lower_bound(a: usize, b: usize, delta: f64) -> Result<Conditional> {
    if a < 2 || a > b {
        return Err(Error::input(format!(
            "need 2 <= a <= b, got a = {a}, b = {b}"
        )));
    }
    let (af, bf) = (a as f64, b as f64);
    let value = 0.5 * (delta / (4.0 * (bf - 1.0).powf(1.0 / af))).powf(af / (af - 1.0));
    Ok(Conditional {
        value,
        applicable: delta >= 4.0 * af - 4.0,
    })
}

/// Largest average degree of an `n`-vertex `K_{a,b}`-free graph:
/// `(b-1)^{1/a} n^{1-1/a} + a - 1`.
pub fn kst_degree_bound(a: usize, b: usize, n: usize) -> Result<f64> {
    if a == 0 || a > b || n == 0 {
        return Err(Error::input(format!(
            "need 1 <= a <= b and n >= 1, got a = {a}, b = {b}, n = {n}"
        )));
    }
    let af = a as f64;
    Ok((b as f64 - 1.0).powf(1.0 / af) * (n as f64).powf(1.0 - 1.0 / af) + af - 1.0)
}

/// `n(1 + 2λ_min/(d - λ_min))` for a `d`-regular graph, clamped at 0.
pub fn hoffman_forcing_lower(n: usize, d: f64, lambda_min: f64) -> Result<f64> {
    if !(d > 0.0) {
        return Err(Error::input(format!("degree must be positive, got {d}")));
    }
    if !(lambda_min < 0.0) {
        return Err(Error::input(format!(
            "smallest eigenvalue must be negative, got {lambda_min}"
        )));
    }
    Ok((n as f64 * (1.0 + 2.0 * lambda_min / (d - lambda_min))).max(0.0))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SpectralUpper {
    pub value: f64,
    /// True when `d - λ <= 2λ + 1`; `value` is then `n`.
    pub vacuous: bool,
}

/// `n(1 - ln((d-λ)/(2λ+1)) / (2(d-λ)))` for an `(n, d, λ)` graph.
pub fn spectral_forcing_upper(n: usize, d: f64, lambda: f64) -> Result<SpectralUpper> {
    if !(lambda >= 0.0) || !(lambda < d) {
        return Err(Error::input(format!(
            "need 0 <= lambda < d, got lambda = {lambda}, d = {d}"
        )));
    }
    let gap = d - lambda;
    let nf = n as f64;
    if gap <= 2.0 * lambda + 1.0 {
        return Ok(SpectralUpper {
            value: nf,
            vacuous: true,
        });
    }
    Ok(SpectralUpper {
        value: nf * (1.0 - (gap / (2.0 * lambda + 1.0)).ln() / (2.0 * gap)),
        vacuous: false,
    })
}

/// `(2 + √2)·ln(np)/(-ln(1-p))`, the predicted `n - Z` for `G(n, p)` with
/// the lower-order term dropped.
pub fn gnp_predicted_gap(n: usize, p: f64) -> Result<f64> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::input(format!("p must lie in (0, 1), got {p}")));
    }
    Ok((2.0 + std::f64::consts::SQRT_2) * (n as f64 * p).ln() / -(-p).ln_1p())
}

/// Predicted `Z(G(n, p))`, i.e. `n` minus [`gnp_predicted_gap`].
///
/// The asymptotic statement behind it covers roughly `log²n/√n <= p <= 2/3`;
/// no range is enforced here.
pub fn gnp_forcing_formula(n: usize, p: f64) -> Result<f64> {
    Ok(n as f64 - gnp_predicted_gap(n, p)?)
}

/// Largest witness order in the odd-weight vector graph `G_m`, which is `m`.
/// Consequently `Z(G_m) >= 2^{m-1} - 1 - m`.
pub fn gm_witness_cap(m: usize) -> Result<usize> {
    if m < 3 || m.is_multiple_of(2) {
        return Err(Error::input(format!(
            "m must be odd and at least 3, got {m}"
        )));
    }
    Ok(m)
}
