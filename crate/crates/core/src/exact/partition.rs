use crate::error::{Error, Result};
use crate::graph::{ComponentPartition, VertexSet};

/// Indices (ascending) of a sub-multiset of `sizes` summing to `target`.
///
/// Requires positive sizes with `Σ sizes ≤ 2p − 1`, under which every target
/// in `0..=Σ sizes` is reachable. Inputs outside that regime are refused even
/// if a solution happens to exist.
pub fn subset_with_sum(sizes: &[usize], target: usize) -> Result<Vec<usize>> {
    let p = sizes.len();
    let total: usize = sizes.iter().sum();
    if sizes.contains(&0) {
        return Err(Error::Precondition("sizes must be positive".into()));
    }
    if total + 1 > 2 * p {
        return Err(Error::Precondition(format!(
            "sum of sizes {total} exceeds 2p - 1 for p = {p}"
        )));
    }
    if target > total {
        return Err(Error::Precondition(format!("target {target} exceeds sum {total}")));
    }

    // reachable[i][t]: some subset of sizes[i..] sums to t.
    let mut reachable = vec![vec![false; total + 1]; p + 1];
    reachable[p][0] = true;
    for i in (0..p).rev() {
        for t in 0..=total {
            reachable[i][t] =
                reachable[i + 1][t] || (t >= sizes[i] && reachable[i + 1][t - sizes[i]]);
        }
    }
    if !reachable[0][target] {
        // Unreachable under the precondition; kept as an error rather than a panic.
        return Err(Error::Precondition(format!("no subset sums to {target}")));
    }

    let mut chosen = Vec::new();
    let mut rest = target;
    for (i, &size) in sizes.iter().enumerate() {
        if rest >= size && reachable[i + 1][rest - size] {
            chosen.push(i);
            rest -= size;
        }
    }
    Ok(chosen)
}

/// Splits the blocks of `partition` into two groups `R`, `T`, each covering at
/// least `omega` vertices.
///
/// Requires exactly `omega ≥ 2` blocks, `|U| ≥ 2ω + 1` vertices in total, and
/// the blocks other than the largest covering at least `ω` vertices (so not
/// all of them are singletons). Since both sides are unions of whole blocks,
/// no edge of the underlying graph joins `R` and `T`.
pub fn balanced_component_split(
    partition: &ComponentPartition,
    omega: usize,
) -> Result<(VertexSet, VertexSet)> {
    let blocks = partition.blocks();
    let sizes = partition.sizes();
    if omega < 2 || blocks.len() != omega {
        return Err(Error::Precondition(format!(
            "expected {omega} >= 2 blocks, found {}",
            blocks.len()
        )));
    }
    let total: usize = sizes.iter().sum();
    if total < 2 * omega + 1 {
        return Err(Error::Precondition(format!(
            "blocks cover {total} vertices, need at least 2ω + 1 = {}",
            2 * omega + 1
        )));
    }
    let largest = sizes[omega - 1];
    let smaller = &sizes[..omega - 1];
    let smaller_total: usize = smaller.iter().sum();
    if smaller_total < omega {
        return Err(Error::Precondition(format!(
            "blocks other than the largest cover {smaller_total} < ω = {omega} vertices"
        )));
    }

    let union_of = |idx: &mut dyn Iterator<Item = usize>| {
        idx.fold(VertexSet::EMPTY, |acc, i| acc | blocks[i])
    };

    if largest >= omega {
        let r = union_of(&mut (0..omega - 1));
        return Ok((r, blocks[omega - 1]));
    }

    // Here 3 ≤ |U_ω| ≤ ω − 1. Pick smaller blocks worth exactly ℓ = ω − |U_ω|
    // (after truncating them to total 2ω − 3 when needed) to join U_ω.
    let ell = omega - largest;
    let budget = 2 * omega - 3;
    let weights: Vec<usize> = if smaller_total <= budget {
        smaller.to_vec()
    } else {
        let mut extra = budget - (omega - 1);
        smaller
            .iter()
            .map(|&s| {
                let add = (s - 1).min(extra);
                extra -= add;
                1 + add
            })
            .collect()
    };
    let picked = subset_with_sum(&weights, ell)?;
    let r = union_of(&mut picked.iter().copied()) | blocks[omega - 1];
    let t = partition.union() - r;
    Ok((r, t))
}
