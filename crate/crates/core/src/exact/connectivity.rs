use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConnectivityCertificate {
    pub kappa: usize,
    /// A minimum separator; `None` for complete graphs (κ = n − 1).
    pub separator: Option<VertexSet>,
}

/// Vertex connectivity of a connected graph via vertex-split unit-capacity
/// max flow.
///
/// Fix a minimum-degree vertex `v`. A minimum separator either misses `v`,
/// and then separates `v` from some non-neighbour, or contains `v`, and then
/// (being minimum) separates two non-adjacent neighbours of `v`. Scanning both
/// families of pairs therefore finds κ.
pub fn vertex_connectivity(g: &Graph) -> Result<ConnectivityCertificate> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    if g.is_complete() {
        return Ok(ConnectivityCertificate {
            kappa: n - 1,
            separator: None,
        });
    }

    let v = (0..n).min_by_key(|&v| (g.degree(v), v)).expect("n >= 1");
    let mut pairs: Vec<(usize, usize)> = (g.vertices() - g.neighbors(v) - VertexSet::singleton(v))
        .iter()
        .map(|w| (v, w))
        .collect();
    let nbrs = g.neighbors(v).to_vec();
    for (i, &x) in nbrs.iter().enumerate() {
        for &y in &nbrs[i + 1..] {
            if !g.has_edge(x, y) {
                pairs.push((x, y));
            }
        }
    }

    let mut network = SplitNetwork::new(g);
    let mut best: Option<VertexSet> = None;
    for (s, t) in pairs {
        let separator = network.min_separator(s, t);
        if best.is_none_or(|b| separator.len() < b.len()) {
            best = Some(separator);
        }
    }
    let separator = best.expect("a non-complete graph has a non-adjacent pair");
    Ok(ConnectivityCertificate {
        kappa: separator.len(),
        separator: Some(separator),
    })
}

/// Each vertex `u` becomes `in(u) = 2u -> out(u) = 2u + 1` with capacity 1;
/// each edge `uv` becomes `out(u) -> in(v)` and `out(v) -> in(u)` with
/// capacity `n`, which no flow can saturate.
struct SplitNetwork {
    nodes: usize,
    base: Vec<i32>,
    residual: Vec<i32>,
    n: usize,
}

impl SplitNetwork {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let nodes = 2 * n;
        let mut base = vec![0; nodes * nodes];
        for u in 0..n {
            base[(2 * u) * nodes + 2 * u + 1] = 1;
            for w in g.neighbors(u) {
                base[(2 * u + 1) * nodes + 2 * w] = n as i32;
            }
        }
        SplitNetwork {
            nodes,
            residual: base.clone(),
            base,
            n,
        }
    }

    /// Minimum vertex set separating non-adjacent `s` and `t`.
    fn min_separator(&mut self, s: usize, t: usize) -> VertexSet {
        self.residual.copy_from_slice(&self.base);
        let big = self.n as i32;
        self.residual[(2 * s) * self.nodes + 2 * s + 1] = big;
        self.residual[(2 * t) * self.nodes + 2 * t + 1] = big;
        let source = 2 * s + 1;
        let sink = 2 * t;

        while let Some(parent) = self.bfs(source, Some(sink)) {
            let mut node = sink;
            while node != source {
                let prev = parent[node];
                self.residual[prev * self.nodes + node] -= 1;
                self.residual[node * self.nodes + prev] += 1;
                node = prev;
            }
        }

        let reached = self.bfs_reach(source);
        (0..self.n)
            .filter(|&u| reached[2 * u] && !reached[2 * u + 1])
            .collect()
    }

    fn bfs(&self, source: usize, sink: Option<usize>) -> Option<Vec<usize>> {
        let mut parent = vec![usize::MAX; self.nodes];
        parent[source] = source;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for w in 0..self.nodes {
                if parent[w] == usize::MAX && self.residual[u * self.nodes + w] > 0 {
                    parent[w] = u;
                    if Some(w) == sink {
                        return Some(parent);
                    }
                    queue.push_back(w);
                }
            }
        }
        sink.is_none().then_some(parent)
    }

    fn bfs_reach(&self, source: usize) -> Vec<bool> {
        self.bfs(source, None)
            .expect("reachability search always returns")
            .into_iter()
            .map(|p| p != usize::MAX)
            .collect()
    }
}
