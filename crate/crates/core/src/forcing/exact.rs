use serde::Serialize;

use super::{closure, closure_mask, full_mask, ForcingChronicle};
use crate::bitset::VertexSet;
use crate::bounds::girth_lower_bound;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Which proven lower bounds seed the ascending side of the search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LowerBoundPolicy {
    /// Only `δ - 1`.
    Trivial,
    /// `δ - 1` and the girth bound.
    ///
    /// The smallest-eigenvalue bound is deliberately left out: the square of
    /// the 15-cycle has `Z = 4` while that bound evaluates to about 4.46.
    Structural,
}

#[derive(Clone, Copy, Debug)]
pub struct ExactOptions {
    /// Maximum number of closure evaluations.
    pub budget: u64,
    pub lower_bounds: LowerBoundPolicy,
}

impl Default for ExactOptions {
    fn default() -> Self {
        Self {
            budget: 200_000_000,
            lower_bounds: LowerBoundPolicy::Structural,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Direction {
    /// Tried sets of the smallest size not yet excluded.
    Ascending,
    /// Tried sets one smaller than the best forcing set known, by choosing
    /// the complement.
    Descending,
}

/// One enumerated size level.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelProbe {
    pub size: usize,
    pub direction: Direction,
    pub closures: u64,
    pub found: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Strategy {
    Exact,
    Heuristic,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchStats {
    pub closures: u64,
    pub strategy: Strategy,
    pub initial_lower: usize,
    pub probes: Vec<LevelProbe>,
}

/// Zero forcing number with a certificate.
#[derive(Clone, Debug, Serialize)]
pub struct ZfResult {
    pub z: usize,
    /// Lexicographically smallest forcing set of size `z`.
    pub optimal_set: VertexSet,
    pub chronicle: ForcingChronicle,
    pub stats: SearchStats,
}

/// Largest size known to be below `Z(g)` plus one, from proven bounds.
pub fn forcing_lower_bound(g: &Graph, policy: LowerBoundPolicy) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let delta = g.min_degree();
    let mut lo = delta.saturating_sub(1);
    if policy == LowerBoundPolicy::Structural
        && delta >= 2 {
            if let Some(b) = g
                .girth()
                .and_then(|girth| girth_lower_bound(delta as f64, girth).ok())
            {
                // Slack for rounding in the real-valued bound.
                lo = lo.max((b.sharp - 1e-6).ceil().max(0.0) as usize);
            }
        }
    lo.min(n)
}

/// Largest graph the exact solver accepts.
pub const EXACT_MAX_N: usize = 64;

/// Exact `Z(g)` with the default structural lower bounds.
pub fn zero_forcing_number_exact(g: &Graph, budget: u64) -> Result<ZfResult> {
    zero_forcing_number_exact_with(
        g,
        &ExactOptions {
            budget,
            ..ExactOptions::default()
        },
    )
}

/// Exact `Z(g)` by meeting in the middle over set sizes.
///
/// `lo` is the smallest size not yet excluded and `hi` the size of the best
/// forcing set found (initially `V`). Each step enumerates whichever level is
/// cheaper, `lo` or `hi - 1`, measured by `C(n, level)`:
/// - a hit at `lo` proves `Z = lo`;
/// - a miss at `lo` excludes it;
/// - a hit at `hi - 1` lowers `hi`;
/// - a miss at `hi - 1` proves `Z = hi`, because supersets of forcing sets force.
///
/// Both sides visit sets in lexicographic order, so the certificate is the
/// lexicographically smallest forcing set of size `Z` and closure counts are
/// deterministic.
pub fn zero_forcing_number_exact_with(g: &Graph, opts: &ExactOptions) -> Result<ZfResult> {
    let n = g.n();
    if n > EXACT_MAX_N {
        return Err(Error::input(format!(
            "exact solver supports n <= {EXACT_MAX_N}, got {n}"
        )));
    }
    if opts.budget == 0 {
        return Err(Error::input("closure budget must be positive"));
    }
    let rows = g.row_masks();
    let full = full_mask(n);
    let initial_lower = forcing_lower_bound(g, opts.lower_bounds);

    let mut lo = initial_lower;
    let mut hi = n;
    let mut best = full;
    let mut closures = 0u64;
    let mut probes = Vec::new();

    while lo < hi {
        let (size, direction) = if binomial(n, lo) <= binomial(n, hi - 1) {
            (lo, Direction::Ascending)
        } else {
            (hi - 1, Direction::Descending)
        };
        let remaining = opts.budget - closures;
        let scan = match direction {
            Direction::Ascending => {
                scan_level(n, size, remaining, |m| closure_mask(&rows, m, full) == full)
            }
            Direction::Descending => scan_level_by_complement(n, n - size, remaining, |m| {
                closure_mask(&rows, m, full) == full
            }),
        };
        closures += scan.evaluated;
        probes.push(LevelProbe {
            size,
            direction,
            closures: scan.evaluated,
            found: scan.hit.is_some(),
        });
        match (scan.hit, direction) {
            (Some(m), Direction::Ascending) => {
                best = m;
                hi = size;
            }
            (Some(m), Direction::Descending) => {
                best = m;
                hi = size;
            }
            (None, _) if !scan.complete => {
                return Err(Error::ForcingBudget {
                    closures,
                    upper: hi,
                    upper_set: VertexSet::from_mask(n, best),
                    excluded_below: lo,
                });
            }
            (None, Direction::Ascending) => lo = size + 1,
            (None, Direction::Descending) => lo = hi,
        }
    }

    let optimal_set = VertexSet::from_mask(n, best);
    let chronicle = closure(g, &optimal_set);
    debug_assert!(chronicle.is_complete());
    Ok(ZfResult {
        z: hi,
        optimal_set,
        chronicle,
        stats: SearchStats {
            closures,
            strategy: Strategy::Exact,
            initial_lower,
            probes,
        },
    })
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

struct LevelScan {
    hit: Option<u64>,
    evaluated: u64,
    complete: bool,
}

fn mask_of(c: &[usize]) -> u64 {
    c.iter().fold(0, |m, &v| m | 1 << v)
}

/// Visits the `k`-subsets of `0..n` in lexicographic order of their sorted
/// elements and stops at the first accepted one.
fn scan_level(n: usize, k: usize, limit: u64, mut accept: impl FnMut(u64) -> bool) -> LevelScan {
    let mut c: Vec<usize> = (0..k).collect();
    let mut evaluated = 0;
    loop {
        if evaluated == limit {
            return LevelScan {
                hit: None,
                evaluated,
                complete: false,
            };
        }
        evaluated += 1;
        let m = mask_of(&c);
        if accept(m) {
            return LevelScan {
                hit: Some(m),
                evaluated,
                complete: true,
            };
        }
        // Successor: bump the rightmost entry that has room, then pack the tail.
        let Some(i) = (0..k).rev().find(|&i| c[i] < n - k + i) else {
            return LevelScan {
                hit: None,
                evaluated,
                complete: true,
            };
        };
        c[i] += 1;
        for j in i + 1..k {
            c[j] = c[j - 1] + 1;
        }
    }
}

/// Visits the complements `V ∖ T` of the `k`-subsets `T`, with `T` in
/// decreasing lexicographic order. For equal-size sets this is exactly
/// increasing lexicographic order of the complements.
fn scan_level_by_complement(
    n: usize,
    k: usize,
    limit: u64,
    mut accept: impl FnMut(u64) -> bool,
) -> LevelScan {
    let full = full_mask(n);
    let mut c: Vec<usize> = (n - k..n).collect();
    let mut evaluated = 0;
    loop {
        if evaluated == limit {
            return LevelScan {
                hit: None,
                evaluated,
                complete: false,
            };
        }
        evaluated += 1;
        let m = full & !mask_of(&c);
        if accept(m) {
            return LevelScan {
                hit: Some(m),
                evaluated,
                complete: true,
            };
        }
        // Predecessor: lower the rightmost entry that can drop by one, then
        // push the tail as high as it goes.
        let Some(i) = (0..k).rev().find(|&i| {
            if i == 0 {
                c[0] > 0
            } else {
                c[i] > c[i - 1] + 1
            }
        }) else {
            return LevelScan {
                hit: None,
                evaluated,
                complete: true,
            };
        };
        c[i] -= 1;
        for j in i + 1..k {
            c[j] = n - k + j;
        }
    }
}
