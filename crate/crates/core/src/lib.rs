//! Quantum Hamiltonians for polynomial nonlinear oscillators.
//!
//! An equation `x'' + f(x) + F(x', x) = 0` is integrated into a potential,
//! quantized with `x = (a + a†)/√(2w)` and `p = i√(w/2)(a† − a)`, and
//! normal-ordered exactly. The resulting ladder-operator polynomial feeds two
//! independent energy calculations: second-order perturbation theory with the
//! number-conserving part as the unperturbed Hamiltonian, and diagonalization
//! of the Hamiltonian truncated to the lowest `N` Fock states.
//!
//! ```
//! use ladder_core::{algebra::{preset_hamiltonian, Preset}, rational::{integer, ratio}};
//! use ladder_core::spectral::{build_matrix, eigenvalues, DEFAULT_TOLERANCE};
//!
//! let h = preset_hamiltonian(Preset::VelocityCoupled, &ratio(1, 10), &integer(1)).unwrap();
//! let spectrum = eigenvalues(&build_matrix(&h, 39).unwrap(), DEFAULT_TOLERANCE).unwrap();
//! assert!((spectrum.eigenvalues[0] - 0.506029038).abs() < 5e-9);
//! ```

pub mod algebra;
pub mod error;
pub mod ode;
pub mod perturbation;
pub mod rational;
pub mod reproduce;
pub mod spectral;

pub use algebra::{
    build_hamiltonian, normal_order, preset_hamiltonian, Coefficient, Ladder, LadderMonomial, OperatorPolynomial,
    OrderingConvention, PhaseSpacePolynomial, Preset,
};
pub use error::{AlgebraError, Error, ParseError, PerturbationError, Result, SpectralError};
pub use ode::{parse_ode, parse_ode_with_frequency, PolynomialODE};
pub use perturbation::{pt_energy, split_diagonal, PTResult};
pub use rational::{ComplexRational, Rational};
pub use spectral::{build_matrix, convergence_sweep, eigenpairs, eigenvalues, HamiltonianMatrix, Spectrum};
