//! Second-order Rayleigh–Schrödinger perturbation theory with the
//! number-conserving part of the Hamiltonian as the unperturbed operator.
//!
//! Splitting `H = H0 + H1` with `H0` the monomials `a†^i a^i` makes `H0`
//! diagonal in the Fock basis, so `E⁽⁰⁾_n = ⟨n|H0|n⟩` already contains the
//! coupling-dependent shifts and `E⁽¹⁾_n = ⟨n|H1|n⟩` vanishes identically. The
//! second-order sum is finite because `H1` only connects levels within its
//! bandwidth.

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::OperatorPolynomial;
use crate::error::PerturbationError;
use crate::rational::{integer, ratio, to_f64, Rational};
use crate::spectral::matrix_element;

/// Energy of one level through second order.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PTResult {
    pub level: usize,
    pub e0: f64,
    pub e1: f64,
    pub e2: f64,
    pub total: f64,
}

/// `(H0, H1)`: number-conserving monomials and the remainder.
pub fn split_diagonal(op: &OperatorPolynomial) -> (OperatorPolynomial, OperatorPolynomial) {
    let (diagonal, off): (Vec<_>, Vec<_>) =
        op.terms().map(|(m, c)| (*m, c.clone())).partition(|(m, _)| m.is_diagonal());
    (
        OperatorPolynomial::from_terms(op.frequency().clone(), diagonal),
        OperatorPolynomial::from_terms(op.frequency().clone(), off),
    )
}

/// `E_n` through second order, summing intermediate states below `basis_cut`.
///
/// `basis_cut` must exceed `level + degree(op)` so that every state coupled to
/// `level` is included.
pub fn pt_energy(op: &OperatorPolynomial, level: usize, basis_cut: usize) -> Result<PTResult, PerturbationError> {
    let required = level + op.degree() as usize;
    if basis_cut <= required {
        return Err(PerturbationError::BasisTooSmall { basis_cut, level, required });
    }
    let (h0, h1) = split_diagonal(op);
    let e0 = matrix_element(&h0, level, level)?;
    let e1 = matrix_element(&h1, level, level)?;

    let reach = h1.max_shift() as usize;
    let lo = level.saturating_sub(reach);
    let hi = (level + reach).min(basis_cut - 1);
    let mut e2 = 0.0;
    for m in lo..=hi {
        if m == level {
            continue;
        }
        let coupling = matrix_element(&h1, m, level)?;
        if coupling == 0.0 {
            continue;
        }
        let e0_m = matrix_element(&h0, m, m)?;
        let gap = e0 - e0_m;
        if gap.abs() <= 1e-12 * e0.abs().max(1.0) {
            return Err(PerturbationError::Degenerate { level, partner: m, energy: e0 });
        }
        e2 += coupling * coupling / gap;
    }

    Ok(PTResult { level, e0, e1, e2, total: e0 + e1 + e2 })
}

/// Ground-state second-order shift of the `eq12` preset at `w = 1`:
/// `−3λ² / (32 (4 + 5λ/2))`. Returns NaN at the pole `λ = −8/5`.
pub fn closed_form_e2_eq12(lambda: &Rational) -> f64 {
    let denominator = integer(32) * (integer(4) + lambda * ratio(5, 2));
    if denominator.is_zero() {
        return f64::NAN;
    }
    to_f64(&(-(integer(3) * lambda * lambda) / denominator))
}

/// Companion unperturbed ground energy `1/2 + λ/16`.
pub fn closed_form_e0_eq12(lambda: &Rational) -> f64 {
    to_f64(&(ratio(1, 2) + lambda / integer(16)))
}
