use serde::Serialize;

use super::{combinations, Ratio, Tau};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Optimal cut for τ(G) = |S| / ω(G − S).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ToughnessCertificate {
    pub cut: VertexSet,
    pub omega: usize,
    pub infinite: bool,
}

impl ToughnessCertificate {
    pub fn tau_num(&self) -> usize {
        self.cut.len()
    }

    pub fn tau_den(&self) -> usize {
        self.omega
    }

    pub fn tau(&self) -> Tau {
        if self.infinite {
            Tau::Infinite
        } else {
            Tau::Finite(Ratio::new(self.tau_num() as u64, self.omega as u64))
        }
    }
}

/// Exact toughness of a connected graph.
///
/// Cut sizes are scanned upward and, within a size, masks in increasing
/// numeric order; only strict improvements replace the incumbent, so the
/// certificate is the smallest-mask cut among minimum-ratio cuts of minimum
/// size. Since ω(G − S) ≤ n − |S|, no cut of size s can beat the incumbent
/// once s / (n − s) reaches it.
pub fn toughness(g: &Graph) -> Result<ToughnessCertificate> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.is_complete() {
        return Ok(ToughnessCertificate {
            cut: VertexSet::EMPTY,
            omega: 1,
            infinite: true,
        });
    }

    let n = g.n();
    let mut best: Option<(Ratio, VertexSet, usize)> = None;
    for size in 1..=n - 2 {
        if let Some((ratio, _, _)) = best {
            if Ratio::new(size as u64, (n - size) as u64) >= ratio {
                break;
            }
        }
        for mask in combinations(n, size) {
            let cut = VertexSet::from_bits(mask);
            let omega = g.component_count(cut);
            if omega < 2 {
                continue;
            }
            let ratio = Ratio::new(size as u64, omega as u64);
            if best.is_none_or(|(b, _, _)| ratio < b) {
                best = Some((ratio, cut, omega));
            }
        }
    }

    let (_, cut, omega) = best.expect("a non-complete connected graph has a cut set");
    Ok(ToughnessCertificate {
        cut,
        omega,
        infinite: false,
    })
}
