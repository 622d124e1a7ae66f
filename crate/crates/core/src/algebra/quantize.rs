//! Position and momentum in terms of ladder operators:
//! `x = (a + a†)/√(2w)` and `p = i√(w/2)(a† − a)`.

use num_traits::{One, Zero};

use super::coefficient::Coefficient;
use super::monomial::LadderMonomial;
use super::polynomial::OperatorPolynomial;
use crate::rational::{integer, ComplexRational, Rational};

/// `x` itself: both ladder terms carry `√(2w)/(2w)`.
pub fn position(frequency: &Rational) -> OperatorPolynomial {
    let weight = Coefficient::surd_multiple(ComplexRational::real((frequency * integer(2)).recip()));
    OperatorPolynomial::from_terms(
        frequency.clone(),
        [(LadderMonomial::new(1, 0), weight.clone()), (LadderMonomial::new(0, 1), weight)],
    )
}

/// `p` itself: `a†` carries `i√(2w)/2` and `a` carries `-i√(2w)/2`.
pub fn momentum(frequency: &Rational) -> OperatorPolynomial {
    let half = Rational::one() / integer(2);
    let up = Coefficient::surd_multiple(ComplexRational::new(Rational::zero(), half.clone()));
    let down = Coefficient::surd_multiple(ComplexRational::new(Rational::zero(), -half));
    OperatorPolynomial::from_terms(
        frequency.clone(),
        [(LadderMonomial::new(1, 0), up), (LadderMonomial::new(0, 1), down)],
    )
}

/// Normal-ordered `x^power`.
pub fn quantize_position(power: u32, frequency: &Rational) -> OperatorPolynomial {
    position(frequency).pow(power)
}

/// Normal-ordered `p^power`; real for even powers.
pub fn quantize_momentum(power: u32, frequency: &Rational) -> OperatorPolynomial {
    momentum(frequency).pow(power)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn real(op: &OperatorPolynomial) -> Vec<((u32, u32), Rational)> {
        op.terms()
            .map(|(m, c)| {
                assert!(c.surd.is_zero() && c.rational.is_real(), "{c}");
                ((m.raise, m.lower), c.rational.re.clone())
            })
            .collect()
    }

    #[test]
    fn zeroth_powers_are_identity() {
        let w = integer(1);
        assert_eq!(quantize_position(0, &w), OperatorPolynomial::identity(w.clone()));
        assert_eq!(quantize_momentum(0, &w), OperatorPolynomial::identity(w));
    }

    #[test]
    fn position_squared() {
        let x2 = quantize_position(2, &integer(1));
        assert_eq!(
            real(&x2),
            vec![((0, 0), ratio(1, 2)), ((0, 2), ratio(1, 2)), ((1, 1), integer(1)), ((2, 0), ratio(1, 2))]
        );
        let x = position(&integer(1));
        assert_eq!(x.multiply(&x), x2);
    }

    #[test]
    fn position_fourth_constant() {
        let x4 = quantize_position(4, &integer(1));
        assert_eq!(x4.rational_coefficient(0, 0), Some(ratio(3, 4)));
        assert_eq!(x4.rational_coefficient(2, 2), Some(ratio(6, 4)));
    }

    #[test]
    fn momentum_squared() {
        let p2 = quantize_momentum(2, &integer(1));
        assert_eq!(
            real(&p2),
            vec![((0, 0), ratio(1, 2)), ((0, 2), ratio(-1, 2)), ((1, 1), integer(1)), ((2, 0), ratio(-1, 2))]
        );
        assert!(p2.is_hermitian());
        assert!(quantize_momentum(2, &ratio(3, 7)).is_hermitian());
    }

    #[test]
    fn momentum_first_power_carries_surd() {
        let p = quantize_momentum(1, &integer(1));
        let up = p.coefficient(LadderMonomial::new(1, 0)).unwrap();
        assert!(up.rational.is_zero());
        assert_eq!(up.surd, ComplexRational::imaginary(ratio(1, 2)));
        let down = p.coefficient(LadderMonomial::new(0, 1)).unwrap();
        assert_eq!(down.surd, ComplexRational::imaginary(ratio(-1, 2)));
        assert_eq!(p.render(), "-1/2*i*sqrt(2) * a^1\n1/2*i*sqrt(2) * adag^1\n");
    }

    #[test]
    fn frequency_scaling() {
        // x² scales as 1/w, p² as w
        let w = ratio(5, 3);
        let x2 = quantize_position(2, &w);
        assert_eq!(x2.rational_coefficient(1, 1), Some(w.recip()));
        let p2 = quantize_momentum(2, &w);
        assert_eq!(p2.rational_coefficient(1, 1), Some(w.clone()));
    }
}
