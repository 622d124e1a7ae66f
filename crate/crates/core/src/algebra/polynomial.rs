use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::coefficient::Coefficient;
use super::monomial::{Ladder, LadderMonomial};
use crate::rational::{integer, rational_sqrt, to_f64, Rational};

/// Normal-ordered polynomial in `a†` and `a` with exact coefficients.
///
/// Every polynomial is tied to the oscillator frequency `w` of the Fock basis
/// it was quantized in; coefficients live in `Q(i)(√(2w))`. Combining
/// polynomials of different frequencies panics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorPolynomial {
    frequency: Rational,
    radicand: Rational,
    sqrt_radicand: Option<Rational>,
    terms: BTreeMap<LadderMonomial, Coefficient>,
}

impl OperatorPolynomial {
    pub fn zero(frequency: Rational) -> Self {
        assert!(frequency > Rational::zero(), "frequency must be positive");
        let radicand = &frequency * integer(2);
        let sqrt_radicand = rational_sqrt(&radicand);
        Self { frequency, radicand, sqrt_radicand, terms: BTreeMap::new() }
    }

    pub fn identity(frequency: Rational) -> Self {
        Self::monomial(frequency, LadderMonomial::IDENTITY, Coefficient::one())
    }

    pub fn monomial(frequency: Rational, monomial: LadderMonomial, coefficient: Coefficient) -> Self {
        let mut out = Self::zero(frequency);
        out.add_term(monomial, coefficient);
        out
    }

    pub fn from_terms(frequency: Rational, terms: impl IntoIterator<Item = (LadderMonomial, Coefficient)>) -> Self {
        let mut out = Self::zero(frequency);
        for (monomial, coefficient) in terms {
            out.add_term(monomial, coefficient);
        }
        out
    }

    /// Convenience for real rational coefficients keyed by `(raise, lower)`.
    pub fn from_rational_terms(frequency: Rational, terms: impl IntoIterator<Item = ((u32, u32), Rational)>) -> Self {
        Self::from_terms(
            frequency,
            terms.into_iter().map(|((i, j), c)| (LadderMonomial::new(i, j), Coefficient::from(c))),
        )
    }

    pub fn frequency(&self) -> &Rational {
        &self.frequency
    }

    /// `2w`, the square of the surd carried by coefficients.
    pub fn radicand(&self) -> &Rational {
        &self.radicand
    }

    pub fn sqrt_radicand_f64(&self) -> f64 {
        to_f64(&self.radicand).sqrt()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LadderMonomial, &Coefficient)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, monomial: LadderMonomial) -> Option<&Coefficient> {
        self.terms.get(&monomial)
    }

    /// Coefficient of `a†^raise a^lower` when it is a real rational.
    pub fn rational_coefficient(&self, raise: u32, lower: u32) -> Option<Rational> {
        let c = self.terms.get(&LadderMonomial::new(raise, lower))?;
        (c.surd.is_zero() && c.rational.is_real()).then(|| c.rational.re.clone())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest `raise + lower` among stored monomials.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// Largest `|raise - lower|`, i.e. the Fock-basis bandwidth.
    pub fn max_shift(&self) -> u32 {
        self.terms.keys().map(|m| m.shift().unsigned_abs() as u32).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, monomial: LadderMonomial, mut coefficient: Coefficient) {
        if let Some(root) = &self.sqrt_radicand {
            coefficient.fold(root);
        }
        if coefficient.is_zero() {
            return;
        }
        match self.terms.entry(monomial) {
            Entry::Vacant(slot) => {
                slot.insert(coefficient);
            }
            Entry::Occupied(mut slot) => {
                slot.get_mut().add_assign(&coefficient);
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn scale(&self, factor: &Coefficient) -> Self {
        let mut out = Self::zero(self.frequency.clone());
        for (m, c) in &self.terms {
            out.add_term(*m, c.mul(factor, &self.radicand));
        }
        out
    }

    pub fn scale_rational(&self, factor: &Rational) -> Self {
        self.scale(&Coefficient::from_rational(factor.clone()))
    }

    /// Hermitian conjugate: `(i, j) → (j, i)` with conjugated coefficients.
    pub fn adjoint(&self) -> Self {
        Self::from_terms(self.frequency.clone(), self.terms.iter().map(|(m, c)| (m.adjoint(), c.conj())))
    }

    /// True iff `coeff(i, j) = conj(coeff(j, i))` for every stored monomial.
    pub fn is_hermitian(&self) -> bool {
        self.terms.iter().all(|(m, c)| self.terms.get(&m.adjoint()).is_some_and(|d| *d == c.conj()))
    }

    /// Normal-ordered product `self · rhs`.
    pub fn multiply(&self, rhs: &Self) -> Self {
        self.assert_compatible(rhs);
        let mut out = Self::zero(self.frequency.clone());
        for (left, lc) in &self.terms {
            for (right, rc) in &rhs.terms {
                let product = lc.mul(rc, &self.radicand);
                for (monomial, multiplicity) in monomial_product(*left, *right) {
                    out.add_term(monomial, product.scale(&Rational::from_integer(multiplicity)));
                }
            }
        }
        out
    }

    /// `self^power` by repeated multiplication.
    pub fn pow(&self, power: u32) -> Self {
        let mut out = Self::identity(self.frequency.clone());
        for _ in 0..power {
            out = out.multiply(self);
        }
        out
    }

    /// Canonical text: one `coeff * adag^i a^j` line per term.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (m, c) in &self.terms {
            let coeff = c.render(&self.radicand);
            if *m == LadderMonomial::IDENTITY {
                out.push_str(&coeff);
            } else {
                out.push_str(&format!("{coeff} * {m}"));
            }
            out.push('\n');
        }
        out
    }

    fn assert_compatible(&self, other: &Self) {
        assert_eq!(self.frequency, other.frequency, "operator polynomials quantized at different frequencies");
    }
}

/// Normal-ordered expansion of `(a†^i a^j)(a†^k a^l)`:
/// `Σ_r C(j,r) C(k,r) r! a†^{i+k-r} a^{j+l-r}`.
fn monomial_product(left: LadderMonomial, right: LadderMonomial) -> Vec<(LadderMonomial, BigInt)> {
    let j = left.lower;
    let k = right.raise;
    let mut out = Vec::with_capacity(j.min(k) as usize + 1);
    let mut weight = BigInt::one();
    for r in 0..=j.min(k) {
        if r > 0 {
            // C(j,r) C(k,r) r! = C(j,r-1) C(k,r-1) (r-1)! · (j-r+1)(k-r+1)/r
            weight = weight * BigInt::from(j - r + 1) * BigInt::from(k - r + 1) / BigInt::from(r);
        }
        out.push((LadderMonomial::new(left.raise + k - r, j - r + right.lower), weight.clone()));
    }
    out
}

/// Normal-orders `scalar · word` by exhaustive rewriting `a a† → a† a + 1`.
///
/// This route never uses the closed-form product rule of
/// [`OperatorPolynomial::multiply`].
pub fn normal_order(word: &[Ladder], scalar: &Coefficient, frequency: Rational) -> OperatorPolynomial {
    let mut pending: BTreeMap<Vec<Ladder>, BigInt> = BTreeMap::new();
    pending.insert(word.to_vec(), BigInt::one());
    let mut out = OperatorPolynomial::zero(frequency);

    while let Some((current, multiplicity)) = pending.pop_first() {
        match current.windows(2).position(|w| w == [Ladder::Lower, Ladder::Raise]) {
            None => {
                let raise = current.iter().filter(|&&f| f == Ladder::Raise).count() as u32;
                let lower = current.len() as u32 - raise;
                out.add_term(LadderMonomial::new(raise, lower), scalar.scale(&Rational::from_integer(multiplicity)));
            }
            Some(at) => {
                let mut swapped = current.clone();
                swapped.swap(at, at + 1);
                *pending.entry(swapped).or_insert_with(BigInt::zero) += &multiplicity;
                let mut contracted = current;
                contracted.drain(at..at + 2);
                *pending.entry(contracted).or_insert_with(BigInt::zero) += &multiplicity;
            }
        }
    }
    out
}

impl Add for &OperatorPolynomial {
    type Output = OperatorPolynomial;
    fn add(self, rhs: &OperatorPolynomial) -> OperatorPolynomial {
        self.assert_compatible(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &OperatorPolynomial {
    type Output = OperatorPolynomial;
    fn sub(self, rhs: &OperatorPolynomial) -> OperatorPolynomial {
        self.assert_compatible(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.neg());
        }
        out
    }
}

impl Neg for &OperatorPolynomial {
    type Output = OperatorPolynomial;
    fn neg(self) -> OperatorPolynomial {
        OperatorPolynomial::from_terms(self.frequency.clone(), self.terms.iter().map(|(m, c)| (*m, c.neg())))
    }
}

impl Mul for &OperatorPolynomial {
    type Output = OperatorPolynomial;
    fn mul(self, rhs: &OperatorPolynomial) -> OperatorPolynomial {
        self.multiply(rhs)
    }
}

impl fmt::Display for OperatorPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{integer, ComplexRational};

    fn one() -> Rational {
        integer(1)
    }

    fn real_terms(op: &OperatorPolynomial) -> Vec<((u32, u32), Rational)> {
        op.terms()
            .map(|(m, c)| {
                assert!(c.surd.is_zero() && c.rational.is_real());
                ((m.raise, m.lower), c.rational.re.clone())
            })
            .collect()
    }

    fn word_op(word: &[Ladder]) -> OperatorPolynomial {
        normal_order(word, &Coefficient::one(), one())
    }

    #[test]
    fn commutator_rewrite() {
        let op = word_op(&[Ladder::Lower, Ladder::Raise]);
        assert_eq!(real_terms(&op), vec![((0, 0), integer(1)), ((1, 1), integer(1))]);
    }

    #[test]
    fn sum_squared() {
        // (a + a†)² summed over the four words
        let mut total = OperatorPolynomial::zero(one());
        for w in [
            [Ladder::Lower, Ladder::Lower],
            [Ladder::Lower, Ladder::Raise],
            [Ladder::Raise, Ladder::Lower],
            [Ladder::Raise, Ladder::Raise],
        ] {
            total = &total + &word_op(&w);
        }
        assert_eq!(
            real_terms(&total),
            vec![((0, 0), integer(1)), ((0, 2), integer(1)), ((1, 1), integer(2)), ((2, 0), integer(1))]
        );
    }

    #[test]
    fn multiply_matches_rewrite() {
        let a = OperatorPolynomial::from_rational_terms(one(), [((0, 1), one())]);
        let adag = OperatorPolynomial::from_rational_terms(one(), [((1, 0), one())]);
        assert_eq!(a.multiply(&adag), word_op(&[Ladder::Lower, Ladder::Raise]));
        let id = OperatorPolynomial::identity(one());
        assert_eq!(id.multiply(&a), a);

        let word = [Ladder::Lower, Ladder::Lower, Ladder::Raise, Ladder::Lower, Ladder::Raise, Ladder::Raise];
        let product = word.iter().fold(id, |acc, f| match f {
            Ladder::Lower => acc.multiply(&a),
            Ladder::Raise => acc.multiply(&adag),
        });
        assert_eq!(product, word_op(&word));
    }

    #[test]
    fn hermiticity_predicate() {
        let lone = OperatorPolynomial::from_rational_terms(one(), [((1, 0), one())]);
        assert!(!lone.is_hermitian());
        assert!((&lone + &lone.adjoint()).is_hermitian());
        let twisted = OperatorPolynomial::from_terms(
            one(),
            [
                (LadderMonomial::new(2, 0), Coefficient::from(ComplexRational::i())),
                (LadderMonomial::new(0, 2), Coefficient::from(ComplexRational::i())),
            ],
        );
        assert!(!twisted.is_hermitian());
    }

    #[test]
    fn perfect_square_radicand_folds() {
        // w = 2 ⇒ √(2w) = 2
        let op = OperatorPolynomial::monomial(
            integer(2),
            LadderMonomial::IDENTITY,
            Coefficient::surd_multiple(ComplexRational::real(integer(3))),
        );
        assert_eq!(op.rational_coefficient(0, 0), Some(integer(6)));
    }

    #[test]
    fn render_lines() {
        let op = OperatorPolynomial::from_rational_terms(
            one(),
            [
                ((0, 0), Rational::new(1.into(), 2.into())),
                ((1, 1), one()),
                ((4, 0), Rational::new((-1).into(), 160.into())),
            ],
        );
        assert_eq!(op.render(), "1/2\n1 * adag^1 a^1\n-1/160 * adag^4\n");
    }

    #[test]
    #[should_panic(expected = "different frequencies")]
    fn mismatched_frequencies_panic() {
        let _ = &OperatorPolynomial::identity(integer(1)) + &OperatorPolynomial::identity(integer(2));
    }
}
