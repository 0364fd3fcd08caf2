//! Reference implementations used as test oracles. They share no code with
//! the library beyond reading adjacency out of a `Graph`.
#![allow(dead_code)]

use nalgebra::DMatrix;
use zforce::Graph;

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.n();
    (0..n)
        .map(|u| (0..n).map(|v| g.adjacent(u, v)).collect())
        .collect()
}

/// Colour-change rule applied until nothing changes.
pub fn closure_oracle(adj: &[Vec<bool>], start: &[bool]) -> Vec<bool> {
    let n = adj.len();
    let mut black = start.to_vec();
    loop {
        let mut changed = false;
        for u in 0..n {
            if !black[u] {
                continue;
            }
            let white: Vec<usize> = (0..n).filter(|&v| adj[u][v] && !black[v]).collect();
            if white.len() == 1 {
                black[white[0]] = true;
                changed = true;
            }
        }
        if !changed {
            return black;
        }
    }
}

pub fn forces_all(adj: &[Vec<bool>], mask: u64) -> bool {
    let start: Vec<bool> = (0..adj.len()).map(|v| mask >> v & 1 == 1).collect();
    closure_oracle(adj, &start).iter().all(|&b| b)
}

/// Zero forcing number by trying every subset, smallest sizes first.
pub fn z_bruteforce(g: &Graph) -> usize {
    let adj = adjacency(g);
    let n = adj.len();
    assert!(n <= 24, "brute force oracle is for small graphs");
    for k in 0..=n {
        if subsets_of_size(n, k).any(|m| forces_all(&adj, m)) {
            return k;
        }
    }
    unreachable!("the full vertex set always forces")
}

/// All `k`-subsets of `0..n` as bit masks (Gosper's hack).
pub fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = 1u64 << n;
    let mut next = if k == 0 {
        Some(0)
    } else if k <= n {
        Some((1u64 << k) - 1)
    } else {
        None
    };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let nx = (((r ^ cur) >> 2) / c) | r;
            (nx < limit).then_some(nx)
        };
        Some(cur)
    })
}

/// Direct check of the witness clauses. `None` means valid.
pub fn witness_problem(adj: &[Vec<bool>], s: &[usize], t: &[usize]) -> Option<String> {
    let k = s.len();
    if t.len() != k {
        return Some("length mismatch".into());
    }
    for i in 0..k {
        for j in 0..k {
            if i != j && (s[i] == s[j] || t[i] == t[j]) {
                return Some(format!("repeat at {i},{j}"));
            }
            // s_i = t_j is only allowed for i > j.
            if i <= j && s[i] == t[j] {
                return Some(format!("s_{i} = t_{j}"));
            }
            if i < j && adj[s[i]][t[j]] {
                return Some(format!("s_{i} ~ t_{j}"));
            }
        }
        if !adj[s[i]][t[i]] {
            return Some(format!("s_{i} !~ t_{i}"));
        }
    }
    None
}

pub fn eigenvalues_desc(g: &Graph) -> Vec<f64> {
    let n = g.n();
    let m = DMatrix::from_fn(n, n, |i, j| if g.adjacent(i, j) { 1.0 } else { 0.0 });
    let mut ev: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
    ev.sort_by(|a, b| b.total_cmp(a));
    ev
}

/// `(d, λ, λ_min)` from an independent eigensolver.
pub fn spectral_triple(g: &Graph) -> (f64, f64, f64) {
    let ev = eigenvalues_desc(g);
    let lambda = ev[1..].iter().fold(0.0f64, |m, x| m.max(x.abs()));
    (ev[0], lambda, *ev.last().unwrap())
}

/// Ordered adjacent pairs `(u, w)` with `u ∈ U`, `w ∈ W`.
pub fn edge_pairs(adj: &[Vec<bool>], u: &[bool], w: &[bool]) -> usize {
    let n = adj.len();
    (0..n)
        .filter(|&a| u[a])
        .map(|a| (0..n).filter(|&b| w[b] && adj[a][b]).count())
        .sum()
}

/// `Φ(a, b)` for `k` by trying every pair of subsets.
pub fn phi_oracle(k: usize, a: usize, b: usize) -> u64 {
    let mut best = 0;
    for am in subsets_of_size(k, a) {
        for bm in subsets_of_size(k, b) {
            let count: u32 = (0..k)
                .filter(|&i| am >> i & 1 == 1)
                .map(|i| (bm >> (i + 1)).count_ones())
                .sum();
            best = best.max(count as u64);
        }
    }
    best
}
