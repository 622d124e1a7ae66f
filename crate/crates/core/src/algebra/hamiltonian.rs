use std::fmt;
use std::str::FromStr;

use num_traits::One;
use serde::{Deserialize, Serialize};

use super::phase::{apply_ordering, build_potential, OrderingConvention};
use super::polynomial::OperatorPolynomial;
use super::quantize::quantize_momentum;
use crate::error::AlgebraError;
use crate::ode::PolynomialODE;
use crate::rational::{integer, Rational};

/// `H = p²/2 + V`, with `V` quantized under `ordering`.
pub fn build_hamiltonian(
    ode: &PolynomialODE,
    ordering: OrderingConvention,
    allow_non_hermitian: bool,
) -> Result<OperatorPolynomial, AlgebraError> {
    let w = ode.frequency();
    let kinetic = quantize_momentum(2, w).scale_rational(&Rational::new(1.into(), 2.into()));
    let potential = apply_ordering(&build_potential(ode).with_ordering(ordering), w, allow_non_hermitian)?;
    Ok(&kinetic + &potential)
}

/// Closed-form Hamiltonians used as numerical ground truth.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Preset {
    /// Harmonic force with velocity coupling `λ x'² x`; CLI name `eq12`.
    VelocityCoupled,
    /// Adds the cubic force `λ x³`, fixed at `w = 1`; CLI name `eq13`.
    CubicVelocityCoupled,
}

impl Preset {
    pub const ALL: [Preset; 2] = [Preset::VelocityCoupled, Preset::CubicVelocityCoupled];

    pub fn name(self) -> &'static str {
        match self {
            Preset::VelocityCoupled => "eq12",
            Preset::CubicVelocityCoupled => "eq13",
        }
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Preset {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "eq12" => Ok(Preset::VelocityCoupled),
            "eq13" => Ok(Preset::CubicVelocityCoupled),
            other => Err(AlgebraError::UnsupportedPreset(other.to_string())),
        }
    }
}

/// The preset Hamiltonian at coupling `lambda` and frequency `frequency`.
///
/// * `eq12`: `(w/2)(2a†a+1) + λ/16 + (λ/16)(2a†²a² + 4a†a) − (λ/16)(a†⁴ + a⁴)`
/// * `eq13`: `(1/2)(2a†a+1) + λ/4 + (λ/2)(a†²a² + 2a†a) + (λ/8)(2a†³a + 2a†a³ + 3a² + 3a†²)`
pub fn preset_hamiltonian(
    preset: Preset,
    lambda: &Rational,
    frequency: &Rational,
) -> Result<OperatorPolynomial, AlgebraError> {
    let l = |n: i64, d: i64| lambda * Rational::new(n.into(), d.into());
    let terms = match preset {
        Preset::VelocityCoupled => {
            let w = frequency;
            vec![
                ((0, 0), w / integer(2) + l(1, 16)),
                ((1, 1), w + l(4, 16)),
                ((2, 2), l(2, 16)),
                ((4, 0), -l(1, 16)),
                ((0, 4), -l(1, 16)),
            ]
        }
        Preset::CubicVelocityCoupled => {
            if !frequency.is_one() {
                return Err(AlgebraError::PresetFrequency { preset: preset.name() });
            }
            vec![
                ((0, 0), Rational::new(1.into(), 2.into()) + l(1, 4)),
                ((1, 1), Rational::one() + l(2, 2)),
                ((2, 2), l(1, 2)),
                ((3, 1), l(2, 8)),
                ((1, 3), l(2, 8)),
                ((0, 2), l(3, 8)),
                ((2, 0), l(3, 8)),
            ]
        }
    };
    Ok(OperatorPolynomial::from_rational_terms(frequency.clone(), terms))
}
