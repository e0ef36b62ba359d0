//! The extremal family `H ∨ (n−δ)K₁` for the Laplacian toughness bounds, and
//! the join structure forced when the algebraic connectivity equals κ.

use serde::Serialize;

use crate::bounds::{BoundReport, Tolerances};
use crate::error::{Error, Result};
use crate::exact::{combinations, vertex_connectivity};
use crate::graph::{Graph, VertexSet};
use crate::spectra::{laplacian_spectrum, spectral_summary};

/// Certificate that `G ≅ H ∨ (n−δ)K₁`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExtremalWitness {
    #[serde(serialize_with = "graph6")]
    pub base_h: Graph,
    /// The `(n−δ)K₁` side.
    pub independent_part: VertexSet,
    pub delta: usize,
    /// μ_{δ−1}(H) ≥ 2δ − n (vacuous when δ = 1).
    pub eigen_condition_ok: bool,
}

fn graph6<S: serde::Serializer>(g: &Graph, serializer: S) -> std::result::Result<S::Ok, S::Error> {
    let text = crate::io::write_graph6(g).map_err(serde::ser::Error::custom)?;
    serializer.serialize_str(&text)
}

/// `H ∨ (n − |H|)K₁`, with `H` on labels `0..|H|`.
pub fn build_extremal(h: &Graph, n: usize) -> Result<Graph> {
    let delta = h.n();
    if delta < 1 || delta + 2 > n {
        return Err(Error::Precondition(format!(
            "need 1 <= |H| <= n - 2, got |H| = {delta}, n = {n}"
        )));
    }
    h.join(&Graph::empty(n - delta)?)
}

/// μ_{k−1}(H) ≥ 2k − n − ε for `k = |H|`, where μ_{k−1} is the second-smallest
/// Laplacian eigenvalue of `H`. A one-vertex `H` has no such eigenvalue and
/// the condition holds vacuously.
pub fn eigen_condition(h: &Graph, n: usize, tol: Tolerances) -> Result<bool> {
    let k = h.n();
    if k == 0 {
        return Err(Error::TooFewVertices { required: 1, actual: 0 });
    }
    if k == 1 {
        return Ok(true);
    }
    let mu = laplacian_spectrum(h)?;
    Ok(mu[k - 2] >= 2.0 * k as f64 - n as f64 - tol.equality)
}

fn require_connected_noncomplete(g: &Graph) -> Result<()> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.is_complete() {
        return Err(Error::Precondition("graph is complete".into()));
    }
    Ok(())
}

/// Recognizes `G ≅ H ∨ (n−δ)K₁` with δ = δ(G).
///
/// In such a graph each vertex `v` of the `K₁` side has `V ∖ N(v)` equal to
/// that side, so scanning the candidates `V ∖ N(v)` is complete. Among valid
/// candidates the first (by label of `v`) whose `H` satisfies the eigenvalue
/// condition is returned, falling back to the first valid candidate.
pub fn detect_join_form(g: &Graph, tol: Tolerances) -> Result<Option<ExtremalWitness>> {
    require_connected_noncomplete(g)?;
    let n = g.n();
    let min_d = g.min_degree();
    if !(1..=n - 2).contains(&min_d) {
        return Ok(None);
    }
    let mut fallback = None;
    for v in 0..n {
        if g.degree(v) != min_d {
            continue;
        }
        let nbrs = g.neighbors(v);
        let side = g.vertices() - nbrs;
        if !g.is_independent(side) || side.iter().any(|u| g.neighbors(u) != nbrs) {
            continue;
        }
        let base_h = g.induced_subgraph(nbrs)?;
        let eigen_condition_ok = eigen_condition(&base_h, n, tol)?;
        let witness = ExtremalWitness {
            base_h,
            independent_part: side,
            delta: min_d,
            eigen_condition_ok,
        };
        if eigen_condition_ok {
            return Ok(Some(witness));
        }
        fallback.get_or_insert(witness);
    }
    Ok(fallback)
}

/// Whether each Laplacian toughness bound is attained, whether the graph has
/// the extremal structure, and whether those agree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EqualityVerdict {
    pub spectral_radius_equality: bool,
    pub algebraic_connectivity_equality: bool,
    pub structural: bool,
    pub consistent: bool,
}

impl EqualityVerdict {
    pub fn new(report: &BoundReport, witness: Option<&ExtremalWitness>) -> Self {
        let structural = witness.is_some_and(|w| w.eigen_condition_ok);
        let a = report.equality_spectral_radius;
        let b = report.equality_algebraic_connectivity;
        EqualityVerdict {
            spectral_radius_equality: a,
            algebraic_connectivity_equality: b,
            structural,
            consistent: a == structural && b == structural,
        }
    }
}

pub fn equality_case_verdict(g: &Graph, tol: Tolerances) -> Result<EqualityVerdict> {
    require_connected_noncomplete(g)?;
    let report = BoundReport::compute(g, tol)?;
    let witness = detect_join_form(g, tol)?;
    Ok(EqualityVerdict::new(&report, witness.as_ref()))
}

/// For a graph with μ_{n−1} = κ, checks that every minimum separator `S`
/// satisfies `G = G[S] ∨ (G − S)` and μ_{κ−1}(G[S]) ≥ 2κ − n.
pub fn fiedler_structure_check(g: &Graph, tol: Tolerances) -> Result<bool> {
    require_connected_noncomplete(g)?;
    let n = g.n();
    let kappa = vertex_connectivity(g)?.kappa;
    let a = spectral_summary(g)?.algebraic_connectivity();
    if (a - kappa as f64).abs() > tol.equality {
        return Err(Error::Precondition(format!(
            "algebraic connectivity {a} differs from κ = {kappa}"
        )));
    }
    for mask in combinations(n, kappa) {
        let cut = VertexSet::from_bits(mask);
        if g.component_count(cut) < 2 {
            continue;
        }
        let rest = g.vertices() - cut;
        if cut.iter().any(|v| !rest.is_subset(g.neighbors(v))) {
            return Ok(false);
        }
        if !eigen_condition(&g.induced_subgraph(cut)?, n, tol)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Builds `G₁ ∨ G₂` for disconnected `G₂` and `G₁` meeting the eigenvalue
/// condition, and checks μ_{n−1} = κ = |G₁| on the result.
pub fn fiedler_converse_check(g1: &Graph, g2: &Graph, tol: Tolerances) -> Result<bool> {
    if g2.is_connected() || g2.n() < 2 {
        return Err(Error::Precondition("second graph must be disconnected".into()));
    }
    let joined = g1.join(g2)?;
    let k = g1.n();
    if !eigen_condition(g1, joined.n(), tol)? {
        return Err(Error::Precondition("first graph fails the eigenvalue condition".into()));
    }
    let a = spectral_summary(&joined)?.algebraic_connectivity();
    let kappa = vertex_connectivity(&joined)?.kappa;
    Ok(kappa == k && (a - k as f64).abs() <= tol.equality)
}
