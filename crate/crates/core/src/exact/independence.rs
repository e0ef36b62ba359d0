use serde::Serialize;

use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndependenceCertificate {
    pub alpha: usize,
    pub witness: VertexSet,
}

/// Exact independence number by branch and bound.
///
/// Branches on a vertex of maximum degree inside the candidate set; a greedy
/// clique cover of the candidates bounds how many more vertices can join.
pub fn independence_number(g: &Graph) -> IndependenceCertificate {
    let mut search = Search {
        rows: g.rows(),
        best: greedy(g),
    };
    search.run(g.vertices().bits(), 0);
    IndependenceCertificate {
        alpha: search.best.count_ones() as usize,
        witness: VertexSet::from_bits(search.best),
    }
}

/// Min-degree greedy independent set, used as the initial incumbent.
fn greedy(g: &Graph) -> u64 {
    let rows = g.rows();
    let mut cand = g.vertices().bits();
    let mut chosen = 0u64;
    while cand != 0 {
        let v = VertexSet::from_bits(cand).iter()
            .min_by_key(|&v| (rows[v] & cand).count_ones())
            .expect("nonempty");
        chosen |= 1 << v;
        cand &= !(rows[v] | 1 << v);
    }
    chosen
}

struct Search<'a> {
    rows: &'a [u64],
    best: u64,
}

impl Search<'_> {
    fn run(&mut self, cand: u64, current: u64) {
        let size = current.count_ones();
        if cand == 0 {
            if size > self.best.count_ones() {
                self.best = current;
            }
            return;
        }
        if size + self.clique_cover(cand) <= self.best.count_ones() {
            return;
        }
        let (v, deg) = VertexSet::from_bits(cand).iter()
            .map(|v| (v, (self.rows[v] & cand).count_ones()))
            .max_by_key(|&(v, d)| (d, std::cmp::Reverse(v)))
            .expect("nonempty");
        if deg == 0 {
            // Remaining candidates are pairwise non-adjacent.
            self.run(0, current | cand);
            return;
        }
        self.run(cand & !(self.rows[v] | 1 << v), current | 1 << v);
        self.run(cand & !(1 << v), current);
    }

    /// Number of cliques in a greedy cover of `cand`; bounds α(G[cand]).
    fn clique_cover(&self, mut cand: u64) -> u32 {
        let mut cliques = 0;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= !(1 << v);
            let mut extend = cand & self.rows[v];
            while extend != 0 {
                let u = extend.trailing_zeros() as usize;
                cand &= !(1 << u);
                extend &= self.rows[u];
            }
            cliques += 1;
        }
        cliques
    }
}
