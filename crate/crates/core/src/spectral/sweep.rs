use rayon::prelude::*;
use serde::Serialize;

use super::jacobi::{eigenvalues, Spectrum};
use super::matrix::build_matrix;
use crate::algebra::OperatorPolynomial;
use crate::error::SpectralError;

/// Lowest eigenvalues for a series of truncation sizes.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConvergenceTable {
    pub levels: usize,
    pub spectra: Vec<Spectrum>,
}

impl ConvergenceTable {
    pub fn sizes(&self) -> Vec<usize> {
        self.spectra.iter().map(|s| s.size).collect()
    }

    /// Level `k` across all sizes.
    pub fn level(&self, k: usize) -> Vec<f64> {
        self.spectra.iter().map(|s| s.eigenvalues[k]).collect()
    }
}

/// Diagonalizes `op` at every size (concurrently) and keeps the lowest `levels`.
pub fn convergence_sweep(
    op: &OperatorPolynomial,
    sizes: &[usize],
    levels: usize,
    tol: f64,
) -> Result<ConvergenceTable, SpectralError> {
    if sizes.is_empty() || sizes[0] == 0 || sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(SpectralError::InvalidSizes);
    }
    if levels == 0 || levels > sizes[0] {
        return Err(SpectralError::TooManyLevels { levels, size: sizes[0] });
    }
    let spectra = sizes
        .par_iter()
        .map(|&n| {
            let mut spectrum = eigenvalues(&build_matrix(op, n)?, tol)?;
            spectrum.truncate(levels);
            Ok(spectrum)
        })
        .collect::<Result<Vec<_>, SpectralError>>()?;
    Ok(ConvergenceTable { levels, spectra })
}
