//! Shared inputs for the benchmarks.

use ladder_core::rational::{integer, ratio};
use ladder_core::{preset_hamiltonian, OperatorPolynomial, Preset};

/// Preset Hamiltonian at the tabulated coupling λ = 1/10.
pub fn table_preset(preset: Preset) -> OperatorPolynomial {
    preset_hamiltonian(preset, &ratio(1, 10), &integer(1)).expect("presets are defined at w = 1")
}

/// An equation exercising every quantization path.
pub const MIXED_ODE: &str = "x'' + x + 1/10*x^3 + 3/10*(x')^2*x^2 + 1/20*(x')^4 = 0";
