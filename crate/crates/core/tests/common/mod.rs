//! Oracles shared by the integration tests. None of them call into the
//! decomposition code they are used to check.

#![allow(dead_code)]

use vzlef_core::partitions::Partition;

/// Existence of integers `x_1 ≥ … ≥ x_p`, `y_1 ≤ … ≤ y_q` with
/// `λ_i = #{j : y_j < x_i}` and `μ_i = #{j : y_j ≤ x_i}`, decided by
/// Bellman-Ford on the difference constraints.
pub fn feasible_x(lambda: &Partition, mu: &Partition, p: usize, q: usize) -> bool {
    let n = p + q;
    let y = |j: usize| p + j;
    // Edge (b, a, c) encodes v_a ≤ v_b + c.
    let mut edges: Vec<(usize, usize, i64)> = Vec::new();
    for i in 0..p.saturating_sub(1) {
        edges.push((i, i + 1, 0));
    }
    for j in 0..q.saturating_sub(1) {
        edges.push((y(j + 1), y(j), 0));
    }
    for i in 0..p {
        for j in 0..q {
            if j < lambda.part(i) {
                edges.push((i, y(j), -1));
            } else if j < mu.part(i) {
                edges.push((y(j), i, 0));
                edges.push((i, y(j), 0));
            } else {
                edges.push((y(j), i, -1));
            }
        }
    }
    let mut dist = vec![0i64; n];
    for _ in 0..n {
        let mut changed = false;
        for &(b, a, c) in &edges {
            if dist[b] + c < dist[a] {
                dist[a] = dist[b] + c;
                changed = true;
            }
        }
        if !changed {
            return true;
        }
    }
    edges.iter().all(|&(b, a, c)| dist[b] + c >= dist[a])
}

/// Every partition in the box, by brute force over all row vectors.
pub fn box_partitions(p: usize, q: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let total = (q + 1).pow(p as u32);
    for code in 0..total {
        let mut c = code;
        let mut v = Vec::with_capacity(p);
        for _ in 0..p {
            v.push(c % (q + 1));
            c /= q + 1;
        }
        if v.windows(2).all(|w| w[0] >= w[1]) {
            out.push(Partition::new(v).unwrap());
        }
    }
    out
}

pub fn part(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}
