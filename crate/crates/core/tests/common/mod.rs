//! Plain exhaustive oracles. They share nothing with the library beyond
//! reading adjacency through `has_edge`.

#![allow(dead_code)]

use tough_core::Graph;

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    (0..g.n()).map(|u| (0..g.n()).map(|v| g.has_edge(u, v)).collect()).collect()
}

/// Components of the graph with the vertices in `removed` (a bitmask) deleted.
pub fn components_after(adj: &[Vec<bool>], removed: u64) -> usize {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut count = 0;
    for start in 0..n {
        if removed >> start & 1 == 1 || seen[start] {
            continue;
        }
        count += 1;
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(u) = stack.pop() {
            for v in 0..n {
                if adj[u][v] && removed >> v & 1 == 0 && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
    }
    count
}

/// Minimum |S| / ω(G − S) over all S with ω ≥ 2, as an unreduced pair;
/// `None` when no such S exists.
pub fn toughness(g: &Graph) -> Option<(u64, u64)> {
    let adj = adjacency(g);
    let n = adj.len();
    let mut best: Option<(u64, u64)> = None;
    for s in 0..(1u64 << n) {
        let omega = components_after(&adj, s) as u64;
        if omega < 2 {
            continue;
        }
        let size = s.count_ones() as u64;
        if best.is_none_or(|(p, q)| size * q < p * omega) {
            best = Some((size, omega));
        }
    }
    best
}

pub fn independence_number(g: &Graph) -> usize {
    let adj = adjacency(g);
    let n = adj.len();
    (0..(1u64 << n))
        .filter(|&s| {
            (0..n).all(|u| (0..n).all(|v| !(s >> u & 1 == 1 && s >> v & 1 == 1 && adj[u][v])))
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Smallest number of vertices whose removal disconnects the graph or leaves a
/// single vertex.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let adj = adjacency(g);
    let n = adj.len();
    (0..(1u64 << n))
        .filter(|&s| {
            let left = n - s.count_ones() as usize;
            left <= 1 || components_after(&adj, s) >= 2
        })
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

pub fn laplacian(g: &Graph) -> Vec<Vec<f64>> {
    let adj = adjacency(g);
    let n = adj.len();
    (0..n)
        .map(|u| {
            (0..n)
                .map(|v| {
                    if u == v {
                        adj[u].iter().filter(|&&e| e).count() as f64
                    } else if adj[u][v] {
                        -1.0
                    } else {
                        0.0
                    }
                })
                .collect()
        })
        .collect()
}

fn matmul(a: &[Vec<f64>], b: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

/// Largest relative gap between `Σ λᵢᵏ` and `trace(Mᵏ)` for `k = 1..=n`.
/// The first n power sums determine the multiset of eigenvalues.
pub fn power_sum_residual(m: &[Vec<f64>], eigs: &[f64]) -> f64 {
    let n = m.len();
    let mut power = m.to_vec();
    let mut worst: f64 = 0.0;
    for k in 1..=n {
        let trace: f64 = (0..n).map(|i| power[i][i]).sum();
        let sum: f64 = eigs.iter().map(|l| l.powi(k as i32)).sum();
        worst = worst.max((trace - sum).abs() / (1.0 + trace.abs()));
        power = matmul(&power, m);
    }
    worst
}
