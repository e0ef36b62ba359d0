//! Adjacency, Laplacian and normalized Laplacian spectra.
//!
//! All spectra are returned in descending order, so `laplacian_eigs[0]` is
//! μ₁ and `laplacian_eigs[n - 2]` is the algebraic connectivity μ_{n−1}.

mod jacobi;

use serde::Serialize;

pub use jacobi::{symmetric_eigenvalues, Matrix, MAX_SWEEPS};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Tolerance for the trailing zero of a Laplacian spectrum passed to
/// [`join_laplacian_spectrum`].
const ZERO_TOLERANCE: f64 = 1e-8;

pub fn adjacency_matrix(g: &Graph) -> Matrix {
    Matrix::from_fn(g.n(), |u, v| if g.has_edge(u, v) { 1.0 } else { 0.0 })
}

pub fn laplacian_matrix(g: &Graph) -> Matrix {
    Matrix::from_fn(g.n(), |u, v| {
        if u == v {
            g.degree(u) as f64
        } else if g.has_edge(u, v) {
            -1.0
        } else {
            0.0
        }
    })
}

/// D^{-1/2} L D^{-1/2}, with rows and columns of isolated vertices zeroed.
pub fn normalized_laplacian_matrix(g: &Graph) -> Matrix {
    let inv_sqrt: Vec<f64> = (0..g.n())
        .map(|v| match g.degree(v) {
            0 => 0.0,
            d => 1.0 / (d as f64).sqrt(),
        })
        .collect();
    let lap = laplacian_matrix(g);
    Matrix::from_fn(g.n(), |u, v| inv_sqrt[u] * lap.get(u, v) * inv_sqrt[v])
}

fn spectrum_of(g: &Graph, m: Matrix) -> Result<Vec<f64>> {
    if g.n() == 0 {
        return Err(Error::TooFewVertices { required: 1, actual: 0 });
    }
    symmetric_eigenvalues(&m)
}

pub fn adjacency_spectrum(g: &Graph) -> Result<Vec<f64>> {
    spectrum_of(g, adjacency_matrix(g))
}

pub fn laplacian_spectrum(g: &Graph) -> Result<Vec<f64>> {
    spectrum_of(g, laplacian_matrix(g))
}

pub fn normalized_laplacian_spectrum(g: &Graph) -> Result<Vec<f64>> {
    spectrum_of(g, normalized_laplacian_matrix(g))
}

/// The three spectra of a graph and the derived quantities used by the
/// toughness bounds.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralSummary {
    pub adjacency_eigs: Vec<f64>,
    pub laplacian_eigs: Vec<f64>,
    pub normalized_eigs: Vec<f64>,
    /// ξ = max(|1 − ξ₁|, |1 − ξ_{n−1}|).
    pub xi: f64,
    /// λ = max(|λ₂|, |λₙ|), present only for regular graphs.
    pub lambda_reg: Option<f64>,
}

impl SpectralSummary {
    pub fn n(&self) -> usize {
        self.laplacian_eigs.len()
    }

    /// Laplacian spectral radius μ₁.
    pub fn mu1(&self) -> f64 {
        self.laplacian_eigs[0]
    }

    /// Algebraic connectivity μ_{n−1}.
    pub fn algebraic_connectivity(&self) -> f64 {
        self.laplacian_eigs[self.n() - 2]
    }

    pub fn xi1(&self) -> f64 {
        self.normalized_eigs[0]
    }

    pub fn xi_second_smallest(&self) -> f64 {
        self.normalized_eigs[self.n() - 2]
    }
}

pub fn spectral_summary(g: &Graph) -> Result<SpectralSummary> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooFewVertices { required: 2, actual: n });
    }
    let adjacency_eigs = adjacency_spectrum(g)?;
    let laplacian_eigs = laplacian_spectrum(g)?;
    let normalized_eigs = normalized_laplacian_spectrum(g)?;
    let xi = (1.0 - normalized_eigs[0])
        .abs()
        .max((1.0 - normalized_eigs[n - 2]).abs());
    let lambda_reg = g
        .regular_degree()
        .map(|_| adjacency_eigs[1].abs().max(adjacency_eigs[n - 1].abs()));
    Ok(SpectralSummary {
        adjacency_eigs,
        laplacian_eigs,
        normalized_eigs,
        xi,
        lambda_reg,
    })
}

/// Laplacian spectrum of `G ∨ H` from the spectra of `G` and `H`:
/// `{n+n'} ∪ {μᵢ(G)+n' : i<n} ∪ {n+μⱼ(H) : j<n'} ∪ {0}`.
pub fn join_laplacian_spectrum(
    mu_g: &[f64],
    mu_h: &[f64],
    n_g: usize,
    n_h: usize,
) -> Result<Vec<f64>> {
    for (mu, n) in [(mu_g, n_g), (mu_h, n_h)] {
        if n == 0 || mu.len() != n {
            return Err(Error::MalformedSpectrum("length does not match the vertex count"));
        }
        if mu.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::MalformedSpectrum("eigenvalues are not descending"));
        }
        if mu[n - 1].abs() > ZERO_TOLERANCE {
            return Err(Error::MalformedSpectrum("smallest Laplacian eigenvalue is not 0"));
        }
    }
    let mut out = Vec::with_capacity(n_g + n_h);
    out.push((n_g + n_h) as f64);
    out.extend(mu_g[..n_g - 1].iter().map(|mu| mu + n_h as f64));
    out.extend(mu_h[..n_h - 1].iter().map(|mu| mu + n_g as f64));
    out.push(0.0);
    out.sort_by(|a, b| b.total_cmp(a));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(actual: &[f64], expected: &[f64], tol: f64) {
        assert_eq!(actual.len(), expected.len(), "{actual:?}");
        for (a, e) in actual.iter().zip(expected) {
            assert!((a - e).abs() <= tol, "{actual:?} vs {expected:?}");
        }
    }

    fn repeat(pairs: &[(f64, usize)]) -> Vec<f64> {
        pairs.iter().flat_map(|&(x, k)| std::iter::repeat_n(x, k)).collect()
    }

    #[test]
    fn petersen_spectra() {
        let p = Graph::petersen();
        assert_close(&adjacency_spectrum(&p).unwrap(), &repeat(&[(3.0, 1), (1.0, 5), (-2.0, 4)]), 1e-10);
        assert_close(&laplacian_spectrum(&p).unwrap(), &repeat(&[(5.0, 4), (2.0, 5), (0.0, 1)]), 1e-10);
        assert_close(
            &normalized_laplacian_spectrum(&p).unwrap(),
            &repeat(&[(5.0 / 3.0, 4), (2.0 / 3.0, 5), (0.0, 1)]),
            1e-10,
        );
    }

    #[test]
    fn laplacian_examples() {
        assert_close(&laplacian_spectrum(&Graph::complete(4).unwrap()).unwrap(), &[4.0, 4.0, 4.0, 0.0], 1e-10);
        assert_close(&laplacian_spectrum(&Graph::star(3).unwrap()).unwrap(), &[4.0, 1.0, 1.0, 0.0], 1e-10);
    }

    #[test]
    fn normalized_examples() {
        let c4 = Graph::cycle(4).unwrap();
        assert_close(&normalized_laplacian_spectrum(&c4).unwrap(), &[2.0, 1.0, 1.0, 0.0], 1e-10);
        let k1_k2 = Graph::empty(1).unwrap().disjoint_union(&Graph::complete(2).unwrap()).unwrap();
        let m = normalized_laplacian_matrix(&k1_k2);
        assert!((0..3).all(|j| m.get(0, j) == 0.0 && m.get(j, 0) == 0.0));
        assert_close(&normalized_laplacian_spectrum(&k1_k2).unwrap(), &[2.0, 0.0, 0.0], 1e-10);
    }

    #[test]
    fn summaries() {
        let s = spectral_summary(&Graph::petersen()).unwrap();
        assert!((s.xi - 2.0 / 3.0).abs() < 1e-10);
        assert!((s.lambda_reg.unwrap() - 2.0).abs() < 1e-10);
        assert!((s.mu1() - 5.0).abs() < 1e-10);
        assert!((s.algebraic_connectivity() - 2.0).abs() < 1e-10);

        let s = spectral_summary(&Graph::cycle(4).unwrap()).unwrap();
        assert!((s.xi - 1.0).abs() < 1e-10);
        assert!((s.lambda_reg.unwrap() - 2.0).abs() < 1e-10);

        let s = spectral_summary(&Graph::complete(4).unwrap()).unwrap();
        assert!((s.xi - 1.0 / 3.0).abs() < 1e-10);
        assert!((s.lambda_reg.unwrap() - 1.0).abs() < 1e-10);

        assert_eq!(spectral_summary(&Graph::star(3).unwrap()).unwrap().lambda_reg, None);
        assert!(spectral_summary(&Graph::empty(1).unwrap()).is_err());
    }

    #[test]
    fn join_formula_examples() {
        assert_eq!(join_laplacian_spectrum(&[0.0], &[0.0], 1, 1).unwrap(), vec![2.0, 0.0]);
        let k2 = [2.0, 0.0];
        let e3 = [0.0, 0.0, 0.0];
        assert_eq!(join_laplacian_spectrum(&k2, &e3, 2, 3).unwrap(), vec![5.0, 5.0, 2.0, 2.0, 0.0]);
        let numeric = laplacian_spectrum(&Graph::complete(2).unwrap().join(&Graph::empty(3).unwrap()).unwrap()).unwrap();
        assert_close(&numeric, &[5.0, 5.0, 2.0, 2.0, 0.0], 1e-10);

        let e2 = [0.0, 0.0];
        let joined = join_laplacian_spectrum(&e2, &e2, 2, 2).unwrap();
        assert_eq!(joined, vec![4.0, 2.0, 2.0, 0.0]);
        assert_close(&laplacian_spectrum(&Graph::cycle(4).unwrap()).unwrap(), &joined, 1e-10);
    }

    #[test]
    fn join_formula_rejects_malformed_input() {
        assert!(join_laplacian_spectrum(&[0.0, 2.0], &[0.0], 2, 1).is_err());
        assert!(join_laplacian_spectrum(&[2.0, 1.0], &[0.0], 2, 1).is_err());
        assert!(join_laplacian_spectrum(&[2.0, 0.0], &[0.0], 3, 1).is_err());
        assert!(join_laplacian_spectrum(&[], &[0.0], 0, 1).is_err());
    }
}
