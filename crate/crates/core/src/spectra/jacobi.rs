//! Cyclic Jacobi diagonalization for small dense symmetric matrices.

use crate::error::{Error, Result};

/// Sweep budget before giving up.
pub const MAX_SWEEPS: usize = 100;

/// Convergence target relative to the initial Frobenius norm.
pub const RELATIVE_TOLERANCE: f64 = 1e-12;

/// Inputs with `|a_ij - a_ji|` above this are rejected.
pub const SYMMETRY_TOLERANCE: f64 = 1e-12;

/// Dense square matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    dim: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(dim: usize) -> Self {
        Matrix {
            dim,
            data: vec![0.0; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| if i == j { 1.0 } else { 0.0 })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m.data[i * dim + j] = f(i, j);
            }
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::Precondition("matrix is not square".into()));
        }
        Ok(Self::from_fn(dim, |i, j| rows[i][j]))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.dim + j]
    }

    fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.dim + j] = value;
    }

    fn frobenius(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    fn off_diagonal(&self) -> f64 {
        let mut sum = 0.0;
        for i in 0..self.dim {
            for j in 0..self.dim {
                if i != j {
                    sum += self.get(i, j).powi(2);
                }
            }
        }
        sum.sqrt()
    }

    fn check_symmetric(&self) -> Result<()> {
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                if (self.get(i, j) - self.get(j, i)).abs() > SYMMETRY_TOLERANCE {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(())
    }
}

/// Eigenvalues of a real symmetric matrix, sorted descending.
pub fn symmetric_eigenvalues(m: &Matrix) -> Result<Vec<f64>> {
    if m.dim == 0 {
        return Err(Error::Precondition("matrix dimension must be at least 1".into()));
    }
    m.check_symmetric()?;
    let n = m.dim;
    // Work on the exactly symmetrized copy so rotations preserve symmetry.
    let mut a = Matrix::from_fn(n, |i, j| 0.5 * (m.get(i, j) + m.get(j, i)));
    let threshold = RELATIVE_TOLERANCE * a.frobenius() + 1e-300;

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if a.off_diagonal() <= threshold {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, p, q);
            }
        }
    }
    if !converged && a.off_diagonal() > threshold {
        return Err(Error::NoConvergence(MAX_SWEEPS));
    }

    let mut eigs: Vec<f64> = (0..n).map(|i| a.get(i, i)).collect();
    eigs.sort_by(|x, y| y.total_cmp(x));
    Ok(eigs)
}

/// One Jacobi rotation annihilating `a[p][q]`.
fn rotate(a: &mut Matrix, p: usize, q: usize) {
    let apq = a.get(p, q);
    if apq == 0.0 {
        return;
    }
    let app = a.get(p, p);
    let aqq = a.get(q, q);
    let theta = (aqq - app) / (2.0 * apq);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    for k in 0..a.dim {
        if k == p || k == q {
            continue;
        }
        let akp = a.get(k, p);
        let akq = a.get(k, q);
        let new_kp = c * akp - s * akq;
        let new_kq = s * akp + c * akq;
        a.set(k, p, new_kp);
        a.set(p, k, new_kp);
        a.set(k, q, new_kq);
        a.set(q, k, new_kq);
    }
    a.set(p, p, app - t * apq);
    a.set(q, q, aqq + t * apq);
    a.set(p, q, 0.0);
    a.set(q, p, 0.0);
}
