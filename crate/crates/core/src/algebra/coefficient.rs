use std::fmt;

use num_traits::Zero;

use crate::rational::{format_rational, to_f64, ComplexRational, Rational};

/// Exact coefficient `rational + surd·√(2w)`.
///
/// Quantizing `x` and `p` introduces `(2w)^{±1/2}`; every even power reduces to
/// a rational multiple of `(2w)^n`, so a coefficient is always an element of
/// `Q(i)(√(2w))`. The radicand `2w` lives on the owning polynomial and is
/// passed in where multiplication needs it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coefficient {
    pub rational: ComplexRational,
    pub surd: ComplexRational,
}

impl Coefficient {
    pub fn new(rational: ComplexRational, surd: ComplexRational) -> Self {
        Self { rational, surd }
    }

    pub fn from_rational(value: Rational) -> Self {
        Self::from_complex(ComplexRational::real(value))
    }

    pub fn from_complex(value: ComplexRational) -> Self {
        Self { rational: value, surd: ComplexRational::zero() }
    }

    /// `value · √(2w)`.
    pub fn surd_multiple(value: ComplexRational) -> Self {
        Self { rational: ComplexRational::zero(), surd: value }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::from_integer(1.into()))
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.surd.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self { rational: self.rational.conj(), surd: self.surd.conj() }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self { rational: &self.rational + &other.rational, surd: &self.surd + &other.surd }
    }

    pub fn add_assign(&mut self, other: &Self) {
        self.rational += &other.rational;
        self.surd += &other.surd;
    }

    pub fn neg(&self) -> Self {
        Self { rational: -self.rational.clone(), surd: -self.surd.clone() }
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self { rational: self.rational.scale(factor), surd: self.surd.scale(factor) }
    }

    /// Product in `Q(i)(√r)` with `r = radicand`.
    pub fn mul(&self, other: &Self, radicand: &Rational) -> Self {
        let cross = &self.surd * &other.surd;
        Self {
            rational: &(&self.rational * &other.rational) + &cross.scale(radicand),
            surd: &(&self.rational * &other.surd) + &(&self.surd * &other.rational),
        }
    }

    /// Moves the surd part into the rational part when `√radicand` is rational.
    pub fn fold(&mut self, sqrt_radicand: &Rational) {
        if !self.surd.is_zero() {
            let surd = std::mem::replace(&mut self.surd, ComplexRational::zero());
            self.rational += &surd.scale(sqrt_radicand);
        }
    }

    /// Complex double value for a given `√radicand`.
    pub fn to_f64(&self, sqrt_radicand: f64) -> (f64, f64) {
        let (r_re, r_im) = self.rational.to_f64();
        let (s_re, s_im) = self.surd.to_f64();
        (r_re + s_re * sqrt_radicand, r_im + s_im * sqrt_radicand)
    }

    /// Real double value; the imaginary part is ignored.
    pub fn real_f64(&self, sqrt_radicand: f64) -> f64 {
        to_f64(&self.rational.re) + to_f64(&self.surd.re) * sqrt_radicand
    }

    /// Renders with the radicand spelled out, e.g. `1/2*sqrt(2)`.
    pub fn render(&self, radicand: &Rational) -> String {
        let surd = || format!("{}*sqrt({})", self.surd, format_rational(radicand));
        match (self.rational.is_zero(), self.surd.is_zero()) {
            (_, true) => self.rational.to_string(),
            (true, false) => surd(),
            (false, false) => format!("({} + {})", self.rational, surd()),
        }
    }
}

impl From<Rational> for Coefficient {
    fn from(value: Rational) -> Self {
        Self::from_rational(value)
    }
}

impl From<ComplexRational> for Coefficient {
    fn from(value: ComplexRational) -> Self {
        Self::from_complex(value)
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.surd.is_zero() {
            write!(f, "{}", self.rational)
        } else {
            write!(f, "({} + {}*sqrt(2w))", self.rational, self.surd)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{integer, ratio};

    #[test]
    fn surd_arithmetic() {
        // (1 + √2)(1 - √2) = -1 with radicand 2
        let a = Coefficient::new(ComplexRational::real(integer(1)), ComplexRational::real(integer(1)));
        let b = Coefficient::new(ComplexRational::real(integer(1)), ComplexRational::real(integer(-1)));
        assert_eq!(a.mul(&b, &integer(2)), Coefficient::from_rational(integer(-1)));

        let mut c = Coefficient::surd_multiple(ComplexRational::real(ratio(1, 3)));
        c.fold(&integer(3));
        assert_eq!(c, Coefficient::from_rational(integer(1)));
    }

    #[test]
    fn renders_exactly() {
        let c = Coefficient::surd_multiple(ComplexRational::imaginary(ratio(1, 2)));
        assert_eq!(c.render(&integer(2)), "1/2*i*sqrt(2)");
        assert_eq!(Coefficient::from_rational(ratio(-1, 160)).render(&integer(2)), "-1/160");
    }
}
