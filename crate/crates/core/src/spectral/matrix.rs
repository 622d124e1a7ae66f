use serde::Serialize;

use crate::algebra::OperatorPolynomial;
use crate::error::SpectralError;

/// Relative size of an imaginary part that still counts as cancellation noise.
const IMAGINARY_TOLERANCE: f64 = 1e-14;

/// `n!/(n−k)!` as a product of `k` factors, never forming a factorial.
fn falling_factorial(n: usize, k: u32) -> f64 {
    (0..k as usize).map(|t| (n - t) as f64).product()
}

/// `⟨m|op|n⟩` in the Fock basis of the operator's frequency.
///
/// Monomial `a†^i a^j` contributes `√(n!/(n−j)!) · √(m!/(m−i)!)` when
/// `m = n − j + i`. Fails if the summed imaginary part does not cancel.
pub fn matrix_element(op: &OperatorPolynomial, m: usize, n: usize) -> Result<f64, SpectralError> {
    let sqrt_radicand = op.sqrt_radicand_f64();
    let mut re = 0.0;
    let mut im = 0.0;
    let mut scale: f64 = 0.0;
    for (monomial, coefficient) in op.terms() {
        let j = monomial.lower as usize;
        let i = monomial.raise as usize;
        if n < j || n - j + i != m {
            continue;
        }
        // one square root of the integer product keeps diagonal elements exact
        let weight = (falling_factorial(n, monomial.lower) * falling_factorial(m, monomial.raise)).sqrt();
        let (c_re, c_im) = coefficient.to_f64(sqrt_radicand);
        re += c_re * weight;
        im += c_im * weight;
        scale += c_re.hypot(c_im) * weight;
    }
    if im.abs() > IMAGINARY_TOLERANCE * scale.max(1.0) {
        return Err(SpectralError::ImaginaryResidue { row: m, col: n, residue: im });
    }
    Ok(re)
}

/// Real symmetric truncation of an operator to the Fock states `|0⟩..|N−1⟩`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HamiltonianMatrix {
    size: usize,
    entries: Vec<f64>,
    bandwidth: usize,
}

impl HamiltonianMatrix {
    /// Builds from row-major entries, mirroring the upper triangle.
    pub fn from_upper(size: usize, upper: impl Fn(usize, usize) -> f64) -> Self {
        let mut entries = vec![0.0; size * size];
        let mut bandwidth = 0;
        for r in 0..size {
            for c in r..size {
                let v = upper(r, c);
                entries[r * size + c] = v;
                entries[c * size + r] = v;
                if v != 0.0 {
                    bandwidth = bandwidth.max(c - r);
                }
            }
        }
        Self { size, entries, bandwidth }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Smallest `b` with all entries zero for `|row − col| > b`.
    pub fn bandwidth(&self) -> usize {
        self.bandwidth
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.entries[row * self.size + col]
    }

    pub fn row(&self, row: usize) -> &[f64] {
        &self.entries[row * self.size..(row + 1) * self.size]
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        (0..self.size).map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    /// Principal submatrix on the given basis indices, in the given order.
    pub fn principal(&self, indices: &[usize]) -> Self {
        Self::from_upper(indices.len(), |r, c| self.get(indices[r], indices[c]))
    }
}

/// Truncated Fock-basis matrix of a Hermitian operator.
pub fn build_matrix(op: &OperatorPolynomial, size: usize) -> Result<HamiltonianMatrix, SpectralError> {
    if size == 0 {
        return Err(SpectralError::EmptyBasis);
    }
    if !op.is_hermitian() {
        return Err(SpectralError::NonHermitian);
    }
    let band = op.max_shift() as usize;
    let mut upper = vec![0.0; size * size];
    for m in 0..size {
        for n in m..size.min(m + band + 1) {
            upper[m * size + n] = matrix_element(op, m, n)?;
        }
    }
    Ok(HamiltonianMatrix::from_upper(size, |r, c| upper[r * size + c]))
}
