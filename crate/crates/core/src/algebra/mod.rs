//! Exact bosonic ladder-operator algebra.

mod coefficient;
mod hamiltonian;
mod monomial;
mod phase;
mod polynomial;
mod quantize;

pub use coefficient::Coefficient;
pub use hamiltonian::{build_hamiltonian, preset_hamiltonian, Preset};
pub use monomial::{Ladder, LadderMonomial};
pub use phase::{apply_ordering, build_potential, OrderingConvention, PhaseSpacePolynomial, PhaseTerm};
pub use polynomial::{normal_order, OperatorPolynomial};
pub use quantize::{momentum, position, quantize_momentum, quantize_position};

/// True iff `coeff(i, j) = conj(coeff(j, i))` for every stored monomial.
pub fn hermitian_check(op: &OperatorPolynomial) -> bool {
    op.is_hermitian()
}
