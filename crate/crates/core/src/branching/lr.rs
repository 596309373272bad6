//! Littlewood-Richardson coefficients by skew-tableau enumeration.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::partitions::Partition;

type Key = (Vec<usize>, Vec<usize>, Vec<usize>);

fn cache() -> &'static RwLock<HashMap<Key, u64>> {
    static CACHE: OnceLock<RwLock<HashMap<Key, u64>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `c^λ_{μν}`: LR tableaux of shape `λ/μ` and content `ν`.
///
/// Results are memoized; the cache never changes a value.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.weight() != mu.weight() + nu.weight() || !lambda.contains(mu) || !lambda.contains(nu) {
        return 0;
    }
    let key = (lambda.parts().to_vec(), mu.parts().to_vec(), nu.parts().to_vec());
    if let Some(&v) = cache().read().expect("lr cache poisoned").get(&key) {
        return v;
    }
    let v = lr_uncached(lambda, mu, nu);
    cache().write().expect("lr cache poisoned").insert(key, v);
    v
}

/// Same count without touching the cache.
pub fn lr_uncached(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.weight() != mu.weight() + nu.weight() || !lambda.contains(mu) {
        return 0;
    }
    // Cells in reverse reading order: rows top to bottom, each right to left.
    let mut cells = Vec::new();
    for i in 0..lambda.length() {
        for j in (mu.part(i)..lambda.part(i)).rev() {
            cells.push((i, j));
        }
    }
    let mut grid: Vec<Vec<usize>> = (0..lambda.length()).map(|i| vec![0; lambda.part(i)]).collect();
    let mut counts = vec![0usize; nu.length() + 1];
    fill(0, &cells, mu, nu, &mut grid, &mut counts)
}

fn fill(
    k: usize,
    cells: &[(usize, usize)],
    mu: &Partition,
    nu: &Partition,
    grid: &mut Vec<Vec<usize>>,
    counts: &mut Vec<usize>,
) -> u64 {
    if k == cells.len() {
        return 1;
    }
    let (i, j) = cells[k];
    // Row weakly increasing: bounded above by the entry to the right.
    let hi = if j + 1 < grid[i].len() { grid[i][j + 1] } else { nu.length() };
    // Column strictly increasing: bounded below by the entry above.
    let lo = if i > 0 && j >= mu.part(i - 1) { grid[i - 1][j] + 1 } else { 1 };
    let mut total = 0;
    for v in lo..=hi {
        if counts[v] >= nu.part(v - 1) {
            continue;
        }
        if v > 1 && counts[v] + 1 > counts[v - 1] {
            continue;
        }
        counts[v] += 1;
        grid[i][j] = v;
        total += fill(k + 1, cells, mu, nu, grid, counts);
        grid[i][j] = 0;
        counts[v] -= 1;
    }
    total
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions_of_size(n: usize) -> Vec<Partition> {
    fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition::new(cur.clone()).expect("decreasing"));
            return;
        }
        for x in (1..=rem.min(max)).rev() {
            cur.push(x);
            go(rem - x, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}
