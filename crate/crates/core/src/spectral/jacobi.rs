//! Cyclic Jacobi diagonalization of real symmetric matrices.

use serde::Serialize;

use super::matrix::HamiltonianMatrix;
use crate::error::SpectralError;

pub const DEFAULT_TOLERANCE: f64 = 1e-12;
pub const MAX_SWEEPS: usize = 100;

/// Eigenvalues in ascending order, optionally with unit eigenvectors.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Spectrum {
    pub size: usize,
    pub eigenvalues: Vec<f64>,
    /// `eigenvectors[k]` holds the Fock coefficients `A_m` of level `k`.
    pub eigenvectors: Option<Vec<Vec<f64>>>,
    /// `max_k ‖H v_k − E_k v_k‖₂`, present with eigenvectors.
    pub residual: Option<f64>,
    pub sweeps: usize,
}

impl Spectrum {
    /// Keeps the lowest `levels` entries.
    pub fn truncate(&mut self, levels: usize) {
        self.eigenvalues.truncate(levels);
        if let Some(vectors) = &mut self.eigenvectors {
            vectors.truncate(levels);
        }
    }
}

/// All eigenvalues, ascending.
pub fn eigenvalues(matrix: &HamiltonianMatrix, tol: f64) -> Result<Spectrum, SpectralError> {
    diagonalize(matrix, tol, false, MAX_SWEEPS)
}

/// Eigenvalues with sign-normalized eigenvectors and the residual bound.
pub fn eigenpairs(matrix: &HamiltonianMatrix, tol: f64) -> Result<Spectrum, SpectralError> {
    diagonalize(matrix, tol, true, MAX_SWEEPS)
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for r in 0..n {
        for c in 0..n {
            if r != c {
                sum += a[r * n + c] * a[r * n + c];
            }
        }
    }
    sum.sqrt()
}

fn diagonalize(
    matrix: &HamiltonianMatrix,
    tol: f64,
    vectors: bool,
    max_sweeps: usize,
) -> Result<Spectrum, SpectralError> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(SpectralError::InvalidTolerance(tol));
    }
    let n = matrix.size();
    let mut a = matrix.entries().to_vec();
    let mut v = if vectors {
        let mut id = vec![0.0; n * n];
        (0..n).for_each(|i| id[i * n + i] = 1.0);
        Some(id)
    } else {
        None
    };

    let threshold = tol * matrix.frobenius_norm();
    let mut sweeps = 0;
    let mut off = off_diagonal_norm(&a, n);
    while off >= threshold && off > 0.0 {
        if sweeps == max_sweeps {
            return Err(SpectralError::NonConvergence { sweeps, off_norm: off });
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, v.as_deref_mut(), n, p, q);
            }
        }
        sweeps += 1;
        off = off_diagonal_norm(&a, n);
    }

    let mut order: Vec<usize> = (0..n).collect();
    // stable: ties keep solver order
    order.sort_by(|&i, &j| a[i * n + i].total_cmp(&a[j * n + j]));
    let eigenvalues: Vec<f64> = order.iter().map(|&i| a[i * n + i]).collect();

    let (eigenvectors, residual) = match v {
        None => (None, None),
        Some(v) => {
            let mut columns: Vec<Vec<f64>> = order.iter().map(|&k| (0..n).map(|r| v[r * n + k]).collect()).collect();
            for column in &mut columns {
                normalize_sign(column);
            }
            let residual = columns
                .iter()
                .zip(&eigenvalues)
                .map(|(x, &e)| {
                    matrix.mul_vec(x).iter().zip(x).map(|(hx, xi)| (hx - e * xi).powi(2)).sum::<f64>().sqrt()
                })
                .fold(0.0, f64::max);
            (Some(columns), Some(residual))
        }
    };

    Ok(Spectrum { size: n, eigenvalues, eigenvectors, residual, sweeps })
}

/// Annihilates `a[p][q]` with the symmetric Schur rotation.
fn rotate(a: &mut [f64], v: Option<&mut [f64]>, n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let tau = (aqq - app) / (2.0 * apq);
    let t = if tau >= 0.0 { 1.0 / (tau + (1.0 + tau * tau).sqrt()) } else { -1.0 / (-tau + (1.0 + tau * tau).sqrt()) };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        let new_kp = c * akp - s * akq;
        let new_kq = s * akp + c * akq;
        a[k * n + p] = new_kp;
        a[p * n + k] = new_kp;
        a[k * n + q] = new_kq;
        a[q * n + k] = new_kq;
    }
    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;

    if let Some(v) = v {
        for k in 0..n {
            let vkp = v[k * n + p];
            let vkq = v[k * n + q];
            v[k * n + p] = c * vkp - s * vkq;
            v[k * n + q] = s * vkp + c * vkq;
        }
    }
}

/// Flips the vector so its largest-magnitude component is positive.
fn normalize_sign(x: &mut [f64]) {
    let pivot = x
        .iter()
        .copied()
        .enumerate()
        .fold((0, 0.0f64), |best, (i, xi)| if xi.abs() > best.1.abs() { (i, xi) } else { best });
    if pivot.1 < 0.0 {
        x.iter_mut().for_each(|xi| *xi = -*xi);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense(n: usize, f: impl Fn(usize, usize) -> f64) -> HamiltonianMatrix {
        HamiltonianMatrix::from_upper(n, f)
    }

    #[test]
    fn diagonal_input_is_exact() {
        let m = dense(3, |r, c| if r == c { [2.5, 0.5, 1.5][r] } else { 0.0 });
        let s = eigenvalues(&m, DEFAULT_TOLERANCE).unwrap();
        assert_eq!(s.eigenvalues, vec![0.5, 1.5, 2.5]);
        assert_eq!(s.sweeps, 0);
    }

    #[test]
    fn two_by_two() {
        // [[2, 1], [1, 2]] → 1, 3
        let m = dense(2, |r, c| if r == c { 2.0 } else { 1.0 });
        let s = eigenpairs(&m, DEFAULT_TOLERANCE).unwrap();
        assert!((s.eigenvalues[0] - 1.0).abs() < 1e-15);
        assert!((s.eigenvalues[1] - 3.0).abs() < 1e-15);
        let v = &s.eigenvectors.as_ref().unwrap()[1];
        assert!((v[0] - v[1]).abs() < 1e-15 && v[0] > 0.0);
    }

    #[test]
    fn tridiagonal_laplacian() {
        // eigenvalues 2 − 2cos(kπ/(n+1))
        let n = 12;
        let m = dense(n, |r, c| match c - r {
            0 => 2.0,
            1 => -1.0,
            _ => 0.0,
        });
        let s = eigenpairs(&m, DEFAULT_TOLERANCE).unwrap();
        for (k, e) in s.eigenvalues.iter().enumerate() {
            let exact = 2.0 - 2.0 * ((k + 1) as f64 * std::f64::consts::PI / (n + 1) as f64).cos();
            assert!((e - exact).abs() < 1e-13, "{k}: {e} vs {exact}");
        }
        assert!(s.residual.unwrap() < 1e-12);
        for v in s.eigenvectors.unwrap() {
            let norm: f64 = v.iter().map(|x| x * x).sum();
            assert!((norm - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn degenerate_and_zero() {
        let zero = dense(4, |_, _| 0.0);
        assert_eq!(eigenvalues(&zero, 1e-12).unwrap().eigenvalues, vec![0.0; 4]);
        let m = dense(3, |r, c| if r == c { 1.0 } else { 0.0 });
        assert_eq!(eigenvalues(&m, 1e-12).unwrap().eigenvalues, vec![1.0; 3]);
    }

    #[test]
    fn sweep_cap_reports_off_norm() {
        let m = dense(6, |r, c| 1.0 / (1 + r + c) as f64);
        match diagonalize(&m, 1e-15, false, 1) {
            Err(SpectralError::NonConvergence { sweeps: 1, off_norm }) => assert!(off_norm > 0.0),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn invalid_tolerance() {
        let m = dense(1, |_, _| 1.0);
        assert_eq!(eigenvalues(&m, 0.0), Err(SpectralError::InvalidTolerance(0.0)));
        assert!(eigenvalues(&m, f64::NAN).is_err());
    }
}
