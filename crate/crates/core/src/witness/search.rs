use std::collections::HashMap;

use serde::Serialize;

use super::Witness;
use crate::bitset::bits;
use crate::error::{Error, Result};
use crate::forcing::full_mask;
use crate::graph::Graph;

/// Largest graph the witness searches accept.
pub const WITNESS_MAX_N: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum WitnessMode {
    /// `s_i = t_j` allowed for `i > j`.
    Overlapping,
    /// No vertex in both tuples.
    Disjoint,
}

/// Finds a witness of maximum order.
///
/// After choosing `(s_1, t_1), …, (s_{j-1}, t_{j-1})`, the only thing that
/// constrains later choices is `F = N[s_1] ∪ … ∪ N[s_{j-1}]`: the next `t`
/// must be a neighbour of the next `s` outside `F`. In disjoint mode the
/// chosen `t`s are also barred from later `s` positions, so they join the
/// state. The search is a memoized recursion over these states. Each `t`
/// lies outside the current `F` and then joins it, so `|V ∖ F|` bounds the
/// remaining order.
///
/// Among maximum witnesses the returned one is the first in the order of
/// choices (smallest `s_1`, then smallest `t_1`, …). `budget` caps the number
/// of distinct states expanded; when it runs out the error carries the
/// longest witness seen so far.
pub fn max_witness_order(g: &Graph, mode: WitnessMode, budget: u64) -> Result<Witness> {
    let n = g.n();
    if n > WITNESS_MAX_N {
        return Err(Error::input(format!(
            "witness search supports n <= {WITNESS_MAX_N}, got {n}"
        )));
    }
    let rows = g.row_masks();
    let closed: Vec<u64> = rows.iter().enumerate().map(|(v, r)| r | 1 << v).collect();
    let mut search = Search {
        rows: &rows,
        closed: &closed,
        full: full_mask(n),
        mode,
        memo: HashMap::new(),
        expanded: 0,
        budget,
        stack: Vec::new(),
        best: Vec::new(),
    };
    let budget_error = |s: &Search| Error::WitnessBudget {
        expanded: s.expanded,
        best: to_witness(&s.best),
    };
    if search.value(0, 0).is_none() {
        return Err(budget_error(&search));
    }

    // Walk the memo table along the first optimal choice at every level.
    let (mut f, mut t_set) = (0u64, 0u64);
    let mut out = Witness::empty();
    loop {
        let Some(target) = search.value(f, t_set) else {
            return Err(budget_error(&search));
        };
        if target == 0 {
            break;
        }
        let mut advanced = false;
        let candidates: Vec<usize> = search.candidates(f, t_set).collect();
        'choose: for s in candidates {
            for t in bits(rows[s] & !f) {
                let (nf, nt) = (f | closed[s], t_set | 1 << t);
                match search.value(nf, nt) {
                    None => return Err(budget_error(&search)),
                    Some(v) if v + 1 == target => {
                        out.push(s, t);
                        (f, t_set) = (nf, nt);
                        advanced = true;
                        break 'choose;
                    }
                    Some(_) => {}
                }
                if mode == WitnessMode::Overlapping {
                    break;
                }
            }
        }
        assert!(advanced, "memo table inconsistent with its own optimum");
    }
    Ok(out)
}

struct Search<'a> {
    rows: &'a [u64],
    closed: &'a [u64],
    full: u64,
    mode: WitnessMode,
    memo: HashMap<u128, u32>,
    expanded: u64,
    budget: u64,
    stack: Vec<(usize, usize)>,
    best: Vec<(usize, usize)>,
}

impl Search<'_> {
    /// Vertices that can still serve as the next `s`.
    fn candidates(&self, f: u64, t_set: u64) -> impl Iterator<Item = usize> + '_ {
        let barred = match self.mode {
            WitnessMode::Overlapping => 0,
            WitnessMode::Disjoint => t_set,
        };
        (0..self.rows.len()).filter(move |&s| barred >> s & 1 == 0 && self.rows[s] & !f != 0)
    }

    fn key(&self, f: u64, t_set: u64) -> u128 {
        match self.mode {
            WitnessMode::Overlapping => f as u128,
            WitnessMode::Disjoint => {
                // Only chosen t's that could still be picked as s matter.
                let live = self.candidates(f, 0).fold(0u64, |m, s| m | 1 << s);
                f as u128 | ((t_set & live) as u128) << 64
            }
        }
    }

    /// Largest number of further steps from state `(f, t_set)`, or `None`
    /// once the budget is spent.
    fn value(&mut self, f: u64, t_set: u64) -> Option<u32> {
        let key = self.key(f, t_set);
        if let Some(&v) = self.memo.get(&key) {
            return Some(v);
        }
        if self.expanded == self.budget {
            return None;
        }
        self.expanded += 1;
        if self.stack.len() > self.best.len() {
            self.best = self.stack.clone();
        }
        let ceiling = (self.full & !f).count_ones();
        let mut best = 0u32;
        let candidates: Vec<usize> = self.candidates(f, t_set).collect();
        'outer: for s in candidates {
            for t in bits(self.rows[s] & !f) {
                self.stack.push((s, t));
                let v = self.value(f | self.closed[s], t_set | 1 << t);
                self.stack.pop();
                best = best.max(v? + 1);
                if best == ceiling {
                    break 'outer;
                }
                if self.mode == WitnessMode::Overlapping {
                    break;
                }
            }
        }
        self.memo.insert(key, best);
        Some(best)
    }
}

fn to_witness(steps: &[(usize, usize)]) -> Witness {
    let mut w = Witness::empty();
    for &(s, t) in steps {
        w.push(s, t);
    }
    w
}

/// Calls `visit` on every witness of order `1..=max_order` in `g`, in the
/// order of a depth-first search over `(s_1, t_1), (s_2, t_2), …` with
/// ascending vertex choices. Returns the number of witnesses visited.
///
/// `budget` caps the number of visits; on exhaustion the error carries the
/// longest witness visited.
pub fn enumerate_witnesses(
    g: &Graph,
    mode: WitnessMode,
    max_order: usize,
    budget: u64,
    mut visit: impl FnMut(&Witness),
) -> Result<u64> {
    let n = g.n();
    if n > WITNESS_MAX_N {
        return Err(Error::input(format!(
            "witness search supports n <= {WITNESS_MAX_N}, got {n}"
        )));
    }
    let rows = g.row_masks();
    let mut state = Enumeration {
        rows: &rows,
        mode,
        max_order,
        budget,
        visited: 0,
        current: Witness::empty(),
        best: Witness::empty(),
    };
    if state.descend(0, 0, &mut visit) {
        Ok(state.visited)
    } else {
        Err(Error::WitnessBudget {
            expanded: state.visited,
            best: state.best,
        })
    }
}

struct Enumeration<'a> {
    rows: &'a [u64],
    mode: WitnessMode,
    max_order: usize,
    budget: u64,
    visited: u64,
    current: Witness,
    best: Witness,
}

impl Enumeration<'_> {
    fn descend(&mut self, f: u64, t_set: u64, visit: &mut impl FnMut(&Witness)) -> bool {
        if self.current.order() == self.max_order {
            return true;
        }
        for s in 0..self.rows.len() {
            if self.mode == WitnessMode::Disjoint && t_set >> s & 1 == 1 {
                continue;
            }
            for t in bits(self.rows[s] & !f) {
                if self.visited == self.budget {
                    return false;
                }
                self.visited += 1;
                self.current.push(s, t);
                visit(&self.current);
                if self.current.order() > self.best.order() {
                    self.best = self.current.clone();
                }
                let ok = self.descend(f | self.rows[s] | 1 << s, t_set | 1 << t, visit);
                self.current.s.pop();
                self.current.t.pop();
                if !ok {
                    return false;
                }
            }
        }
        true
    }
}
