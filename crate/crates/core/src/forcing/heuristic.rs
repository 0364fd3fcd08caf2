use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{closure, closure_mask, full_mask};
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{mix_seed, Graph};

/// Upper bound on `Z(g)` by randomized pruning.
///
/// Each restart starts from `V` and tries to drop every vertex once, in an
/// order shuffled by ChaCha8 seeded with `mix_seed(seed, [restart])`, keeping
/// a removal only when the set still forces. The result of one pass is an
/// inclusion-minimal forcing set. The smallest one over all restarts is
/// returned (the earliest restart wins ties).
pub fn zero_forcing_upper_heuristic(
    g: &Graph,
    restarts: usize,
    seed: u64,
) -> Result<(usize, VertexSet)> {
    if restarts == 0 {
        return Err(Error::input("heuristic needs at least one restart"));
    }
    let n = g.n();
    let small = n <= 64;
    let rows = if small { g.row_masks() } else { Vec::new() };
    let full = if small { full_mask(n) } else { 0 };
    let forces = |s: &VertexSet| {
        if small {
            closure_mask(&rows, s.mask(), full) == full
        } else {
            closure(g, s).is_complete()
        }
    };

    let mut best = VertexSet::full(n);
    for r in 0..restarts {
        let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(seed, &[r as u64]));
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let mut s = VertexSet::full(n);
        for v in order {
            s.remove(v);
            if !forces(&s) {
                s.insert(v);
            }
        }
        if s.len() < best.len() {
            best = s;
        }
    }
    Ok((best.len(), best))
}
