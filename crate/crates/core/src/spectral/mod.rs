//! Truncated Fock-basis diagonalization.

mod jacobi;
mod matrix;
mod sweep;

pub use jacobi::{eigenpairs, eigenvalues, Spectrum, DEFAULT_TOLERANCE, MAX_SWEEPS};
pub use matrix::{build_matrix, matrix_element, HamiltonianMatrix};
pub use sweep::{convergence_sweep, ConvergenceTable};
