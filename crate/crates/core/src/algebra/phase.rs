use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::polynomial::OperatorPolynomial;
use super::quantize::{momentum, position};
use crate::error::AlgebraError;
use crate::ode::PolynomialODE;
use crate::rational::{format_rational, integer, Rational};

/// How a classical monomial `p^k x^m` becomes an operator.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrderingConvention {
    /// Average over every distinct interleaving of the `k` momentum and `m` position factors.
    WeylFull,
    /// `(P^k X^m + X^m P^k) / 2`.
    #[default]
    Sym2,
    /// Marks a Hamiltonian taken verbatim from a preset; not a quantization rule.
    Preset,
}

impl OrderingConvention {
    pub fn name(self) -> &'static str {
        match self {
            OrderingConvention::WeylFull => "weyl-full",
            OrderingConvention::Sym2 => "sym2",
            OrderingConvention::Preset => "preset",
        }
    }
}

impl fmt::Display for OrderingConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OrderingConvention {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "weyl-full" | "weyl" => Ok(OrderingConvention::WeylFull),
            "sym2" => Ok(OrderingConvention::Sym2),
            "preset" => Ok(OrderingConvention::Preset),
            other => Err(format!("unknown ordering `{other}` (expected sym2 or weyl-full)")),
        }
    }
}

/// One classical term `coefficient · p^p_power · x^x_power`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhaseTerm {
    pub coefficient: Rational,
    pub x_power: u32,
    pub p_power: u32,
}

/// Classical potential with velocity replaced by the symbol `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhaseSpacePolynomial {
    // keyed by (x_power, p_power)
    terms: BTreeMap<(u32, u32), Rational>,
    ordering: OrderingConvention,
}

impl PhaseSpacePolynomial {
    pub fn new(terms: impl IntoIterator<Item = PhaseTerm>, ordering: OrderingConvention) -> Self {
        let mut map = BTreeMap::new();
        for t in terms {
            *map.entry((t.x_power, t.p_power)).or_insert_with(Rational::zero) += t.coefficient;
        }
        map.retain(|_, c: &mut Rational| !c.is_zero());
        Self { terms: map, ordering }
    }

    pub fn terms(&self) -> Vec<PhaseTerm> {
        self.terms
            .iter()
            .map(|(&(x_power, p_power), c)| PhaseTerm { coefficient: c.clone(), x_power, p_power })
            .collect()
    }

    /// Coefficient of `p^p_power x^x_power`, if present.
    pub fn coefficient(&self, x_power: u32, p_power: u32) -> Option<&Rational> {
        self.terms.get(&(x_power, p_power))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn ordering(&self) -> OrderingConvention {
        self.ordering
    }

    pub fn with_ordering(mut self, ordering: OrderingConvention) -> Self {
        self.ordering = ordering;
        self
    }
}

impl fmt::Display for PhaseSpacePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.terms.iter().map(|(&(m, k), c)| format!("{}*p^{k}*x^{m}", format_rational(c))).collect();
        write!(f, "[{}] {}", self.ordering, parts.join(" + "))
    }
}

/// `V = ∫ [f(x) + F(p, x)] dx` with `p` held constant; the kinetic `p²/2` is not included.
///
/// The result carries the default `sym2` ordering annotation.
pub fn build_potential(ode: &PolynomialODE) -> PhaseSpacePolynomial {
    let force = ode.alphas().iter().map(|(&l, alpha)| PhaseTerm {
        coefficient: alpha / integer(i64::from(l) + 1),
        x_power: l + 1,
        p_power: 0,
    });
    let coupling = ode.lambdas().iter().map(|(&(k, m), lambda)| PhaseTerm {
        coefficient: lambda / integer(i64::from(m) + 1),
        x_power: m + 1,
        p_power: k,
    });
    PhaseSpacePolynomial::new(force.chain(coupling), OrderingConvention::default())
}

/// Quantizes a phase-space polynomial with its ordering annotation.
///
/// Terms with an odd momentum power are refused unless `allow_non_hermitian`
/// is set; they quantize to operators with imaginary Fock matrix elements.
pub fn apply_ordering(
    phase: &PhaseSpacePolynomial,
    frequency: &Rational,
    allow_non_hermitian: bool,
) -> Result<OperatorPolynomial, AlgebraError> {
    let ordering = phase.ordering();
    if ordering == OrderingConvention::Preset {
        return Err(AlgebraError::UnsupportedOrdering(ordering.name()));
    }
    let x = position(frequency);
    let p = momentum(frequency);
    let mut total = OperatorPolynomial::zero(frequency.clone());

    for (&(m, k), c) in &phase.terms {
        if k % 2 == 1 && !allow_non_hermitian {
            return Err(AlgebraError::NonHermitianResult(format!(
                "term {}*p^{k}*x^{m} has an odd velocity power",
                format_rational(c)
            )));
        }
        let operator = if k == 0 {
            x.pow(m)
        } else if m == 0 {
            p.pow(k)
        } else {
            match ordering {
                OrderingConvention::Sym2 => {
                    let pk = p.pow(k);
                    let xm = x.pow(m);
                    (&pk.multiply(&xm) + &xm.multiply(&pk)).scale_rational(&Rational::new(1.into(), 2.into()))
                }
                OrderingConvention::WeylFull => weyl_symmetrize(&x, &p, m, k),
                OrderingConvention::Preset => unreachable!(),
            }
        };
        total = &total + &operator.scale_rational(c);
    }

    if !allow_non_hermitian && !total.is_hermitian() {
        return Err(AlgebraError::NonHermitianResult(format!("quantized potential under {ordering} ordering")));
    }
    Ok(total)
}

/// Mean of `F_1 ⋯ F_{m+k}` over all arrangements of `m` copies of `x` and `k` of `p`.
fn weyl_symmetrize(x: &OperatorPolynomial, p: &OperatorPolynomial, m: u32, k: u32) -> OperatorPolynomial {
    let length = m + k;
    let mut total = OperatorPolynomial::zero(x.frequency().clone());
    let mut count: i64 = 0;
    // each bit set marks a momentum slot
    for mask in 0u64..(1u64 << length) {
        if mask.count_ones() != k {
            continue;
        }
        let product = (0..length).fold(OperatorPolynomial::identity(x.frequency().clone()), |acc, slot| {
            if mask >> slot & 1 == 1 {
                acc.multiply(p)
            } else {
                acc.multiply(x)
            }
        });
        total = &total + &product;
        count += 1;
    }
    total.scale_rational(&Rational::new(1.into(), count.into()))
}
