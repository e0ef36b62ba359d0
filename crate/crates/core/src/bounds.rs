//! Spectral and degree-based lower bounds on toughness, upper bounds on the
//! independence number, the irregular expander mixing inequality, and the
//! per-graph [`BoundReport`].
//!
//! Notation: n vertices, m edges, Δ / δ maximum / minimum degree, μ₁ the
//! Laplacian spectral radius, μ_{n−1} the algebraic connectivity and
//! ξ = max(|1 − ξ₁|, |1 − ξ_{n−1}|) from the normalized Laplacian spectrum.

use std::io::Write;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{Tau, ToughnessCertificate};
use crate::graph::{Graph, VertexSet};
use crate::spectra::SpectralSummary;

/// Default slack for inequality checks.
pub const EPS_SLACK: f64 = 1e-7;
/// Default tolerance for declaring a bound attained.
pub const EPS_EQUALITY: f64 = 1e-7;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Tolerances {
    pub slack: f64,
    pub equality: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            slack: EPS_SLACK,
            equality: EPS_EQUALITY,
        }
    }
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.n() < 2 {
        return Err(Error::TooFewVertices { required: 2, actual: g.n() });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

fn require_edge(g: &Graph) -> Result<()> {
    if g.m() == 0 {
        return Err(Error::Precondition("graph has no edges".into()));
    }
    Ok(())
}

/// `a / b`, with `+∞` when `b` is zero.
fn ratio_or_inf(a: f64, b: f64) -> f64 {
    if b == 0.0 {
        f64::INFINITY
    } else {
        a / b
    }
}

/// The three degree/normalized-spectrum lower bounds on τ.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DegreeSpectralTerms {
    /// 1 / Δ.
    pub inv_max_degree: f64,
    /// (Δ + δ) / (Δ n).
    pub degree_ratio: f64,
    /// δ(ξ + 1) / (Δ ξ) − 2, or `+∞` if ξ = 0.
    pub normalized_spectral: f64,
    /// ξ came out as exactly zero.
    pub xi_anomaly: bool,
}

impl DegreeSpectralTerms {
    pub fn max(&self) -> f64 {
        self.inv_max_degree
            .max(self.degree_ratio)
            .max(self.normalized_spectral)
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.inv_max_degree, self.degree_ratio, self.normalized_spectral]
    }
}

/// τ ≥ max{1/Δ, (Δ+δ)/(Δn), δ(ξ+1)/(Δξ) − 2} for connected `g`.
pub fn degree_spectral_terms(g: &Graph, s: &SpectralSummary) -> Result<DegreeSpectralTerms> {
    require_connected(g)?;
    let n = g.n() as f64;
    let max_d = g.max_degree() as f64;
    let min_d = g.min_degree() as f64;
    let xi = s.xi;
    let xi_anomaly = xi == 0.0;
    let normalized_spectral = if xi_anomaly {
        f64::INFINITY
    } else {
        min_d * (xi + 1.0) / (max_d * xi) - 2.0
    };
    Ok(DegreeSpectralTerms {
        inv_max_degree: 1.0 / max_d,
        degree_ratio: (max_d + min_d) / (max_d * n),
        normalized_spectral,
        xi_anomaly,
    })
}

/// The two Laplacian lower bounds on τ.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LaplacianBounds {
    /// μ₁ μ_{n−1} / (n (μ₁ − δ)).
    pub spectral_radius: f64,
    /// μ_{n−1} / (μ₁ − μ_{n−1}).
    pub algebraic_connectivity: f64,
}

/// Both Laplacian toughness bounds; complete graphs get `+∞` for both.
pub fn laplacian_bounds(g: &Graph, s: &SpectralSummary) -> Result<LaplacianBounds> {
    require_connected(g)?;
    if g.is_complete() {
        return Ok(LaplacianBounds {
            spectral_radius: f64::INFINITY,
            algebraic_connectivity: f64::INFINITY,
        });
    }
    let n = g.n() as f64;
    let mu1 = s.mu1();
    let a = s.algebraic_connectivity();
    let min_d = g.min_degree() as f64;
    Ok(LaplacianBounds {
        spectral_radius: ratio_or_inf(mu1 * a, n * (mu1 - min_d)),
        algebraic_connectivity: ratio_or_inf(a, mu1 - a),
    })
}

/// Classical bounds for connected d-regular graphs, with λ = max(|λ₂|, |λₙ|).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RegularBounds {
    /// d/λ − 1.
    pub brouwer: f64,
    /// d/λ − 2 (holds strictly).
    pub brouwer_strict: f64,
    /// (d² / (dλ + λ²) − 1) / 3 (holds strictly).
    pub alon: f64,
}

/// `None` unless `g` is connected and regular of degree at least 1.
pub fn regular_bounds(g: &Graph, s: &SpectralSummary) -> Option<RegularBounds> {
    let d = g.regular_degree().filter(|&d| d >= 1)? as f64;
    if !g.is_connected() {
        return None;
    }
    let lambda = s.lambda_reg?;
    let ratio = ratio_or_inf(d, lambda);
    Some(RegularBounds {
        brouwer: ratio - 1.0,
        brouwer_strict: ratio - 2.0,
        alon: (ratio_or_inf(d * d, d * lambda + lambda * lambda) - 1.0) / 3.0,
    })
}

/// τ/(τ+1) · μ₁, an upper bound on μ_{n−1}. For τ = ∞ this is μ₁.
pub fn fiedler_cap(s: &SpectralSummary, tau: Tau) -> f64 {
    match tau {
        Tau::Finite(r) => r.num as f64 / (r.num + r.den) as f64 * s.mu1(),
        Tau::Infinite => s.mu1(),
    }
}

/// Both sides of the irregular expander mixing inequality.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MixingGap {
    /// |e_{X,Y} − ν_X ν_Y / ν_V|.
    pub lhs: f64,
    /// ξ √(ν_X ν_Y (1 − ν_X/ν_V)(1 − ν_Y/ν_V)).
    pub rhs: f64,
    /// |2 e_X − ν_X² / ν_V|.
    pub lhs_single: f64,
    /// ξ ν_X (1 − ν_X/ν_V).
    pub rhs_single: f64,
}

pub fn mixing_gap(g: &Graph, x: VertexSet, y: VertexSet, s: &SpectralSummary) -> Result<MixingGap> {
    require_edge(g)?;
    if !g.contains_set(x) || !g.contains_set(y) {
        return Err(Error::Precondition("vertex set exceeds the graph".into()));
    }
    let vol_v = (2 * g.m()) as f64;
    let vol_x = g.volume(x) as f64;
    let vol_y = g.volume(y) as f64;
    let e_xy = g.edge_boundary(x, y) as f64;
    let e_xx = g.edge_boundary(x, x) as f64;
    let fx = 1.0 - vol_x / vol_v;
    let fy = 1.0 - vol_y / vol_v;
    Ok(MixingGap {
        lhs: (e_xy - vol_x * vol_y / vol_v).abs(),
        rhs: s.xi * (vol_x * vol_y * fx * fy).max(0.0).sqrt(),
        lhs_single: (e_xx - vol_x * vol_x / vol_v).abs(),
        rhs_single: s.xi * vol_x * fx,
    })
}

/// Three upper bounds on the independence number.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IndependenceBounds {
    /// n Δ / (Δ + δ).
    pub degree_ratio: f64,
    /// 2 m ξ / (δ (ξ + 1)); `+∞` when δ = 0.
    pub normalized_spectral: f64,
    /// n (μ₁ − δ) / μ₁.
    pub laplacian_radius: f64,
}

impl IndependenceBounds {
    pub fn as_array(&self) -> [f64; 3] {
        [self.degree_ratio, self.normalized_spectral, self.laplacian_radius]
    }
}

pub fn independence_upper_bounds(g: &Graph, s: &SpectralSummary) -> Result<IndependenceBounds> {
    require_edge(g)?;
    let n = g.n() as f64;
    let m = g.m() as f64;
    let max_d = g.max_degree() as f64;
    let min_d = g.min_degree() as f64;
    let mu1 = s.mu1();
    Ok(IndependenceBounds {
        degree_ratio: n * max_d / (max_d + min_d),
        normalized_spectral: ratio_or_inf(2.0 * m * s.xi, min_d * (s.xi + 1.0)),
        laplacian_radius: n * (mu1 - min_d) / mu1,
    })
}

/// For an independent `i` attaining n(μ₁ − δ)/μ₁, checks that the edges
/// between `i` and its complement form a (δ, μ₁ − δ)-semiregular bipartite
/// graph.
pub fn semiregular_equality_check(
    g: &Graph,
    i: VertexSet,
    s: &SpectralSummary,
    tol: Tolerances,
) -> Result<bool> {
    if !g.contains_set(i) || !g.is_independent(i) {
        return Err(Error::Precondition("set is not independent".into()));
    }
    let bound = independence_upper_bounds(g, s)?.laplacian_radius;
    if (i.len() as f64 - bound).abs() > tol.equality {
        return Err(Error::Precondition(format!(
            "|I| = {} does not attain the bound {bound}",
            i.len()
        )));
    }
    let min_d = g.min_degree();
    let other = s.mu1() - min_d as f64;
    let other_degree = other.round();
    if (other - other_degree).abs() > 1e-6 || other_degree < 0.0 {
        return Ok(false);
    }
    let rest = g.vertices() - i;
    Ok(i.iter().all(|v| g.degree(v) == min_d)
        && rest
            .iter()
            .all(|v| (g.neighbors(v) & i).len() == other_degree as usize))
}

/// Size cap on the smaller side and floor on the separator for a cut split.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CutPartitionBounds {
    /// (μ₁ − μ_{n−1}) / (2μ₁) · n, an upper bound on |X|.
    pub size_cap: f64,
    /// 2μ_{n−1} / (μ₁ − μ_{n−1}) · |X|, a lower bound on |S|.
    pub separator_floor: f64,
}

/// Bounds for a separator `cut` whose remainder is split into `x`, `y` with no
/// edges between them and `|x| ≤ |y|`.
pub fn cut_partition_bounds(
    g: &Graph,
    cut: VertexSet,
    x: VertexSet,
    y: VertexSet,
    spec: &SpectralSummary,
) -> Result<CutPartitionBounds> {
    require_connected(g)?;
    if g.is_complete() {
        return Err(Error::Precondition("complete graphs have no cut sets".into()));
    }
    let fail = |msg: &str| Err(Error::Precondition(msg.into()));
    if !g.contains_set(cut | x | y) {
        return fail("vertex set exceeds the graph");
    }
    if !x.is_disjoint(y) || !cut.is_disjoint(x | y) || (x | y) != g.vertices() - cut {
        return fail("X and Y must partition V \\ S");
    }
    if x.is_empty() {
        return fail("X must be nonempty");
    }
    if x.len() > y.len() {
        return fail("|X| must not exceed |Y|");
    }
    if g.edge_boundary(x, y) != 0 {
        return fail("X and Y must not be adjacent");
    }
    let n = g.n() as f64;
    let mu1 = spec.mu1();
    let a = spec.algebraic_connectivity();
    Ok(CutPartitionBounds {
        size_cap: (mu1 - a) / (2.0 * mu1) * n,
        separator_floor: 2.0 * a / (mu1 - a) * x.len() as f64,
    })
}

pub(crate) fn real<S: Serializer>(value: &f64, serializer: S) -> std::result::Result<S::Ok, S::Error> {
    if value.is_finite() {
        serializer.serialize_f64(*value)
    } else if value.is_nan() {
        serializer.serialize_str("nan")
    } else if *value > 0.0 {
        serializer.serialize_str("inf")
    } else {
        serializer.serialize_str("-inf")
    }
}

fn optional_real<S: Serializer>(
    value: &Option<f64>,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    match value {
        Some(v) => real(v, serializer),
        None => serializer.serialize_none(),
    }
}

fn display<T: std::fmt::Display, S: Serializer>(
    value: &T,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_str(value)
}

/// Every bound for one connected graph. Field order is the JSON-lines and
/// CSV column order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    #[serde(serialize_with = "display")]
    pub tau: Tau,
    #[serde(serialize_with = "real")]
    pub xi: f64,
    #[serde(serialize_with = "real")]
    pub mu1: f64,
    #[serde(serialize_with = "real")]
    pub algebraic_connectivity: f64,
    #[serde(serialize_with = "real")]
    pub inv_max_degree: f64,
    #[serde(serialize_with = "real")]
    pub degree_ratio_term: f64,
    #[serde(serialize_with = "real")]
    pub normalized_spectral_term: f64,
    #[serde(serialize_with = "real")]
    pub spectral_radius_bound: f64,
    #[serde(serialize_with = "real")]
    pub algebraic_connectivity_bound: f64,
    #[serde(serialize_with = "optional_real")]
    pub regular_brouwer: Option<f64>,
    #[serde(serialize_with = "optional_real")]
    pub regular_brouwer_strict: Option<f64>,
    #[serde(serialize_with = "optional_real")]
    pub regular_alon: Option<f64>,
    #[serde(serialize_with = "real")]
    pub fiedler_cap: f64,
    pub equality_spectral_radius: bool,
    pub equality_algebraic_connectivity: bool,
    pub xi_anomaly: bool,
}

/// CSV header, in column order.
pub const CSV_COLUMNS: [&str; 21] = [
    "graph_id",
    "n",
    "m",
    "min_degree",
    "max_degree",
    "tau",
    "xi",
    "mu1",
    "algebraic_connectivity",
    "inv_max_degree",
    "degree_ratio_term",
    "normalized_spectral_term",
    "spectral_radius_bound",
    "algebraic_connectivity_bound",
    "regular_brouwer",
    "regular_brouwer_strict",
    "regular_alon",
    "fiedler_cap",
    "equality_spectral_radius",
    "equality_algebraic_connectivity",
    "xi_anomaly",
];

impl BoundReport {
    /// Assembles the report from already computed spectra and toughness.
    pub fn from_parts(
        g: &Graph,
        spectra: &SpectralSummary,
        tough: &ToughnessCertificate,
        tol: Tolerances,
    ) -> Result<Self> {
        let terms = degree_spectral_terms(g, spectra)?;
        let lap = laplacian_bounds(g, spectra)?;
        let regular = regular_bounds(g, spectra);
        let tau = tough.tau();
        let attained = |value: f64| match tau {
            Tau::Finite(r) => (r.to_f64() - value).abs() <= tol.equality,
            Tau::Infinite => false,
        };
        Ok(BoundReport {
            graph_id: crate::io::write_graph6(g)?,
            n: g.n(),
            m: g.m(),
            min_degree: g.min_degree(),
            max_degree: g.max_degree(),
            tau,
            xi: spectra.xi,
            mu1: spectra.mu1(),
            algebraic_connectivity: spectra.algebraic_connectivity(),
            inv_max_degree: terms.inv_max_degree,
            degree_ratio_term: terms.degree_ratio,
            normalized_spectral_term: terms.normalized_spectral,
            spectral_radius_bound: lap.spectral_radius,
            algebraic_connectivity_bound: lap.algebraic_connectivity,
            regular_brouwer: regular.map(|r| r.brouwer),
            regular_brouwer_strict: regular.map(|r| r.brouwer_strict),
            regular_alon: regular.map(|r| r.alon),
            fiedler_cap: fiedler_cap(spectra, tau),
            equality_spectral_radius: attained(lap.spectral_radius),
            equality_algebraic_connectivity: attained(lap.algebraic_connectivity),
            xi_anomaly: terms.xi_anomaly,
        })
    }

    /// Computes spectra and exact toughness, then assembles the report.
    pub fn compute(g: &Graph, tol: Tolerances) -> Result<Self> {
        require_connected(g)?;
        let spectra = crate::spectra::spectral_summary(g)?;
        let tough = crate::exact::toughness(g)?;
        Self::from_parts(g, &spectra, &tough, tol)
    }

    /// Every lower bound on τ carried by the report, with its name.
    pub fn lower_bounds(&self) -> Vec<(&'static str, f64)> {
        let mut out = vec![
            ("inv_max_degree", self.inv_max_degree),
            ("degree_ratio_term", self.degree_ratio_term),
            ("normalized_spectral_term", self.normalized_spectral_term),
            ("spectral_radius_bound", self.spectral_radius_bound),
            ("algebraic_connectivity_bound", self.algebraic_connectivity_bound),
        ];
        out.extend(self.regular_brouwer.map(|v| ("regular_brouwer", v)));
        out.extend(self.regular_brouwer_strict.map(|v| ("regular_brouwer_strict", v)));
        out.extend(self.regular_alon.map(|v| ("regular_alon", v)));
        out
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Writes reports as CSV with a header row in [`CSV_COLUMNS`] order.
pub fn write_csv<W: Write>(reports: &[BoundReport], out: W) -> Result<(), csv::Error> {
    let mut writer = csv::Writer::from_writer(out);
    for report in reports {
        writer.serialize(report)?;
    }
    writer.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{independence_number, toughness, Ratio};
    use crate::spectra::spectral_summary;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-9
    }

    fn setup(g: &Graph) -> SpectralSummary {
        spectral_summary(g).unwrap()
    }

    #[test]
    fn degree_spectral_examples() {
        let p = Graph::petersen();
        let t = degree_spectral_terms(&p, &setup(&p)).unwrap();
        assert!(close(t.inv_max_degree, 1.0 / 3.0) && close(t.degree_ratio, 0.2));
        assert!(close(t.normalized_spectral, 0.5) && close(t.max(), 0.5));

        let p3 = Graph::path(3).unwrap();
        let t = degree_spectral_terms(&p3, &setup(&p3)).unwrap();
        assert!(close(t.inv_max_degree, 0.5) && close(t.degree_ratio, 0.5));
        assert!(close(t.normalized_spectral, -1.0));

        let c4 = Graph::cycle(4).unwrap();
        let t = degree_spectral_terms(&c4, &setup(&c4)).unwrap();
        assert_eq!(t.as_array().map(|v| (v * 1e9).round() / 1e9), [0.5, 0.5, 0.0]);
        assert!(!t.xi_anomaly);
    }

    #[test]
    fn laplacian_bound_examples() {
        let c4 = Graph::cycle(4).unwrap();
        let b = laplacian_bounds(&c4, &setup(&c4)).unwrap();
        assert!(close(b.spectral_radius, 1.0) && close(b.algebraic_connectivity, 1.0));

        let star = Graph::star(3).unwrap();
        let b = laplacian_bounds(&star, &setup(&star)).unwrap();
        assert!(close(b.spectral_radius, 1.0 / 3.0) && close(b.algebraic_connectivity, 1.0 / 3.0));

        let p = Graph::petersen();
        let b = laplacian_bounds(&p, &setup(&p)).unwrap();
        assert!(close(b.spectral_radius, 0.5) && close(b.algebraic_connectivity, 2.0 / 3.0));

        let k4 = Graph::complete(4).unwrap();
        let b = laplacian_bounds(&k4, &setup(&k4)).unwrap();
        assert!(b.spectral_radius.is_infinite() && b.algebraic_connectivity.is_infinite());
    }

    #[test]
    fn regular_bound_examples() {
        let p = Graph::petersen();
        let r = regular_bounds(&p, &setup(&p)).unwrap();
        assert!(close(r.brouwer, 0.5) && close(r.brouwer_strict, -0.5) && close(r.alon, -1.0 / 30.0));

        // d = 3, λ = 1: (9 / (3 + 1) − 1) / 3 = 5/12.
        let k4 = Graph::complete(4).unwrap();
        let r = regular_bounds(&k4, &setup(&k4)).unwrap();
        assert!(close(r.brouwer, 2.0) && close(r.brouwer_strict, 1.0) && close(r.alon, 5.0 / 12.0));

        let c4 = Graph::cycle(4).unwrap();
        let r = regular_bounds(&c4, &setup(&c4)).unwrap();
        assert!(close(r.brouwer, 0.0) && close(r.brouwer_strict, -1.0) && close(r.alon, -1.0 / 6.0));

        let star = Graph::star(3).unwrap();
        assert_eq!(regular_bounds(&star, &setup(&star)), None);
    }

    #[test]
    fn fiedler_cap_examples() {
        let p = Graph::petersen();
        assert!(close(fiedler_cap(&setup(&p), Tau::Finite(Ratio::new(4, 3))), 20.0 / 7.0));
        let c4 = Graph::cycle(4).unwrap();
        assert!(close(fiedler_cap(&setup(&c4), Tau::Finite(Ratio::new(1, 1))), 2.0));
        let star = Graph::star(3).unwrap();
        assert!(close(fiedler_cap(&setup(&star), Tau::Finite(Ratio::new(1, 3))), 1.0));
    }

    #[test]
    fn mixing_examples() {
        let c4 = Graph::cycle(4).unwrap();
        let s = setup(&c4);
        let gap = mixing_gap(&c4, VertexSet::singleton(0), VertexSet::singleton(2), &s).unwrap();
        assert!(close(gap.lhs, 0.5) && close(gap.rhs, 1.5));
        let all = c4.vertices();
        let gap = mixing_gap(&c4, all, all, &s).unwrap();
        assert!(close(gap.lhs, 0.0) && close(gap.rhs, 0.0));

        let p = Graph::petersen();
        let s = setup(&p);
        let indep = independence_number(&p).witness;
        let gap = mixing_gap(&p, indep, indep, &s).unwrap();
        assert!((gap.lhs_single - 4.8).abs() < 1e-8 && (gap.rhs_single - 4.8).abs() < 1e-8);

        assert!(mixing_gap(&Graph::empty(3).unwrap(), VertexSet::EMPTY, VertexSet::EMPTY, &s).is_err());
    }

    #[test]
    fn independence_bound_examples() {
        let p = Graph::petersen();
        let b = independence_upper_bounds(&p, &setup(&p)).unwrap();
        assert!(close(b.degree_ratio, 5.0) && close(b.normalized_spectral, 4.0) && close(b.laplacian_radius, 4.0));

        let c4 = Graph::cycle(4).unwrap();
        let b = independence_upper_bounds(&c4, &setup(&c4)).unwrap();
        assert!(b.as_array().iter().all(|&v| close(v, 2.0)));

        let k4 = Graph::complete(4).unwrap();
        let b = independence_upper_bounds(&k4, &setup(&k4)).unwrap();
        assert!(close(b.degree_ratio, 2.0) && close(b.normalized_spectral, 1.0) && close(b.laplacian_radius, 1.0));

        let iso = Graph::complete(2).unwrap().disjoint_union(&Graph::empty(1).unwrap()).unwrap();
        let b = independence_upper_bounds(&iso, &setup(&iso)).unwrap();
        assert!(b.normalized_spectral.is_infinite());
    }

    #[test]
    fn semiregular_examples() {
        let tol = Tolerances::default();
        let p = Graph::petersen();
        let indep = independence_number(&p).witness;
        assert!(semiregular_equality_check(&p, indep, &setup(&p), tol).unwrap());

        let c4 = Graph::cycle(4).unwrap();
        let i: VertexSet = [0, 2].into_iter().collect();
        assert!(semiregular_equality_check(&c4, i, &setup(&c4), tol).unwrap());

        let star = Graph::star(3).unwrap();
        let leaves: VertexSet = [1, 2, 3].into_iter().collect();
        assert!(semiregular_equality_check(&star, leaves, &setup(&star), tol).unwrap());

        let edge: VertexSet = [0, 1].into_iter().collect();
        assert!(semiregular_equality_check(&c4, edge, &setup(&c4), tol).is_err());
        assert!(semiregular_equality_check(&c4, VertexSet::singleton(0), &setup(&c4), tol).is_err());
    }

    #[test]
    fn cut_partition_examples() {
        let set = |v: &[usize]| v.iter().copied().collect::<VertexSet>();
        let c4 = Graph::cycle(4).unwrap();
        let b = cut_partition_bounds(&c4, set(&[0, 2]), set(&[1]), set(&[3]), &setup(&c4)).unwrap();
        assert!(close(b.size_cap, 1.0) && close(b.separator_floor, 2.0));

        let star = Graph::star(3).unwrap();
        let b = cut_partition_bounds(&star, set(&[0]), set(&[1]), set(&[2, 3]), &setup(&star)).unwrap();
        assert!(close(b.size_cap, 1.5) && close(b.separator_floor, 2.0 / 3.0));
        assert!(cut_partition_bounds(&star, set(&[0]), set(&[2, 3]), set(&[1]), &setup(&star)).is_err());
        assert!(cut_partition_bounds(&star, set(&[]), set(&[0]), set(&[1, 2, 3]), &setup(&star)).is_err());

        let p = Graph::petersen();
        let cert = toughness(&p).unwrap();
        let parts = p.components(cert.cut).unwrap();
        let x = parts.blocks()[0];
        let y = parts.union() - x;
        let b = cut_partition_bounds(&p, cert.cut, x, y, &setup(&p)).unwrap();
        assert!(close(b.size_cap, 3.0) && close(b.separator_floor, 4.0 / 3.0 * x.len() as f64));
    }

    #[test]
    fn reports_serialize_in_column_order() {
        let c4 = Graph::cycle(4).unwrap();
        let report = BoundReport::compute(&c4, Tolerances::default()).unwrap();
        assert!(report.equality_spectral_radius && report.equality_algebraic_connectivity);
        let json = report.to_json_line();
        assert!(json.starts_with(r#"{"graph_id":"Cl","n":4,"m":4,"min_degree":2,"max_degree":2,"tau":"1/1""#));

        let k4 = Graph::complete(4).unwrap();
        let report = BoundReport::compute(&k4, Tolerances::default()).unwrap();
        assert!(report.to_json_line().contains(r#""tau":"inf""#));
        assert!(report.to_json_line().contains(r#""spectral_radius_bound":"inf""#));

        let mut buf = Vec::new();
        write_csv(&[report], &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let header: Vec<&str> = text.lines().next().unwrap().split(',').collect();
        assert_eq!(header, CSV_COLUMNS.to_vec());
    }
}
