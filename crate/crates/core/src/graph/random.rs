//! Seeded random graph samplers.
//!
//! Two generators are in play, both reproducible across platforms:
//! - per-pair Bernoulli draws for `G(n, p)` come from a SplitMix64-style hash
//!   of `(seed, u, v)`, so every pair is decided independently of the others;
//! - sequential sampling (regular graphs) uses `ChaCha8Rng` seeded with the
//!   caller's 64-bit seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::{Error, Result};

#[inline]
fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Hashes a base seed together with a sequence of integers.
///
/// Used to split one seed into independent streams (graph pairs, sweep
/// cells, trials).
pub fn mix_seed(seed: u64, parts: &[u64]) -> u64 {
    parts
        .iter()
        .fold(splitmix64(seed), |h, &p| splitmix64(h ^ splitmix64(p)))
}

/// Uniform draw in `[0, 1)` from the top 53 bits of a hash.
#[inline]
fn unit(h: u64) -> f64 {
    (h >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Samples `G(n, p)`: each pair `u < v` is an edge iff its hashed uniform
/// draw falls below `p`.
pub fn gnp_sample(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::input(format!("edge probability {p} not in [0, 1]")));
    }
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if unit(mix_seed(seed, &[u as u64, v as u64])) < p {
                g.insert_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Restart budget for [`random_regular_sample`].
pub const RANDOM_REGULAR_RESTART_CAP: usize = 10_000;

/// Consecutive rejected draws before checking whether the pairing is stuck.
const STUCK_CHECK_AFTER: usize = 64;

/// Samples a simple `d`-regular graph by configuration-model pairing.
///
/// Points (`d` per vertex) are paired one random pair at a time; a pair that
/// would create a loop or a repeated edge is redrawn, and when no admissible
/// pair remains the whole pairing restarts. The output distribution is close
/// to, but not exactly, uniform over `d`-regular graphs.
pub fn random_regular_sample(n: usize, d: usize, seed: u64) -> Result<Graph> {
    if (n * d) % 2 == 1 {
        return Err(Error::input(format!(
            "n·d must be even, got n = {n}, d = {d}"
        )));
    }
    if d >= n && !(n == 0 && d == 0) {
        return Err(Error::input(format!("degree {d} must be below n = {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_REGULAR_RESTART_CAP {
        if let Some(g) = try_pairing(n, d, &mut rng) {
            return Ok(g);
        }
    }
    Err(Error::RestartBudget {
        restarts: RANDOM_REGULAR_RESTART_CAP,
    })
}

fn try_pairing(n: usize, d: usize, rng: &mut ChaCha8Rng) -> Option<Graph> {
    let mut g = Graph::empty(n);
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
    let mut rejected = 0;
    while !points.is_empty() {
        let i = rng.random_range(0..points.len());
        let mut j = rng.random_range(0..points.len() - 1);
        if j >= i {
            j += 1;
        }
        let (u, v) = (points[i], points[j]);
        if u != v && !g.adjacent(u, v) {
            g.insert_edge(u, v);
            // Remove the larger index first so the smaller stays valid.
            points.swap_remove(i.max(j));
            points.swap_remove(i.min(j));
            rejected = 0;
        } else {
            rejected += 1;
            if rejected >= STUCK_CHECK_AFTER {
                if !has_admissible_pair(&g, &points) {
                    return None;
                }
                rejected = 0;
            }
        }
    }
    Some(g)
}

fn has_admissible_pair(g: &Graph, points: &[usize]) -> bool {
    let mut open: Vec<usize> = points.to_vec();
    open.sort_unstable();
    open.dedup();
    open.iter()
        .enumerate()
        .any(|(a, &u)| open[a + 1..].iter().any(|&v| !g.adjacent(u, v)))
}
