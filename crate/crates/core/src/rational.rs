//! Exact rational and complex-rational scalars.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;

/// Builds `num / den` as an exact rational.
///
/// Panics if `den` is zero.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn integer(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Returns the exact square root of `value` when it is the square of a rational.
pub fn rational_sqrt(value: &Rational) -> Option<Rational> {
    if value.is_negative() {
        return None;
    }
    let num = value.numer();
    let den = value.denom();
    let num_root = num.sqrt();
    let den_root = den.sqrt();
    if &(&num_root * &num_root) == num && &(&den_root * &den_root) == den {
        Some(Rational::new(num_root, den_root))
    } else {
        None
    }
}

pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or_else(|| {
        // Extreme magnitudes: fall back to a scaled quotient.
        let n = value.numer().to_f64().unwrap_or(f64::NAN);
        let d = value.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Parses `[-]int`, `[-]int/int` or `[-]decimal` exactly.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text.strip_prefix('+').unwrap_or(text)),
    };
    let value = if let Some((num, den)) = body.split_once('/') {
        let num: BigInt = num.trim().parse().ok()?;
        let den: BigInt = den.trim().parse().ok()?;
        if den.is_zero() || num.is_negative() || den.is_negative() {
            return None;
        }
        Rational::new(num, den)
    } else {
        let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
        if whole.is_empty() && frac.is_empty() {
            return None;
        }
        if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
            return None;
        }
        let numer: BigInt = format!("{whole}{frac}").parse().ok()?;
        Rational::new(numer, BigInt::from(10).pow(frac.len() as u32))
    };
    Some(if negative { -value } else { value })
}

/// Formats a rational as `p` or `p/q`.
pub fn format_rational(value: &Rational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Exact complex number with rational real and imaginary parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ComplexRational {
    pub re: Rational,
    pub im: Rational,
}

impl ComplexRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Self { re, im: Rational::zero() }
    }

    pub fn imaginary(im: Rational) -> Self {
        Self { re: Rational::zero(), im }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::imaginary(Rational::one())
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self { re: &self.re * factor, im: &self.im * factor }
    }

    /// `(re, im)` rounded to doubles.
    pub fn to_f64(&self) -> (f64, f64) {
        (to_f64(&self.re), to_f64(&self.im))
    }
}

impl Zero for ComplexRational {
    fn zero() -> Self {
        Self { re: Rational::zero(), im: Rational::zero() }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for ComplexRational {
    fn one() -> Self {
        Self::real(Rational::one())
    }
}

impl From<Rational> for ComplexRational {
    fn from(re: Rational) -> Self {
        Self::real(re)
    }
}

impl Add for ComplexRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl<'a> Add<&'a ComplexRational> for &'a ComplexRational {
    type Output = ComplexRational;
    fn add(self, rhs: &ComplexRational) -> ComplexRational {
        ComplexRational { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl AddAssign<&ComplexRational> for ComplexRational {
    fn add_assign(&mut self, rhs: &ComplexRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl Sub for ComplexRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl Neg for ComplexRational {
    type Output = Self;
    fn neg(self) -> Self {
        Self { re: -self.re, im: -self.im }
    }
}

impl Mul for ComplexRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<'a> Mul<&'a ComplexRational> for &'a ComplexRational {
    type Output = ComplexRational;
    fn mul(self, rhs: &ComplexRational) -> ComplexRational {
        ComplexRational { re: &self.re * &rhs.re - &self.im * &rhs.im, im: &self.re * &rhs.im + &self.im * &rhs.re }
    }
}

impl fmt::Display for ComplexRational {
    /// `re`, `im*i`, or `(re + im*i)`; a negative imaginary part is printed as `- |im|*i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", format_rational(&self.re)),
            (true, false) => write!(f, "{}*i", format_rational(&self.im)),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(f, "({} {} {}*i)", format_rational(&self.re), sign, format_rational(&self.im.abs()))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perfect_square_roots() {
        assert_eq!(rational_sqrt(&ratio(9, 4)), Some(ratio(3, 2)));
        assert_eq!(rational_sqrt(&integer(1)), Some(integer(1)));
        assert_eq!(rational_sqrt(&integer(0)), Some(integer(0)));
        assert_eq!(rational_sqrt(&integer(2)), None);
        assert_eq!(rational_sqrt(&ratio(1, 8)), None);
        assert_eq!(rational_sqrt(&integer(-4)), None);
    }

    #[test]
    fn complex_product_and_conjugate() {
        let z = ComplexRational::new(integer(1), integer(2));
        let w = ComplexRational::new(integer(3), integer(-1));
        assert_eq!(&z * &w, ComplexRational::new(integer(5), integer(5)));
        assert_eq!(&ComplexRational::i() * &ComplexRational::i(), -ComplexRational::one());
        assert_eq!(z.conj().im, integer(-2));
    }

    #[test]
    fn parses_literals() {
        assert_eq!(parse_rational("0.1"), Some(ratio(1, 10)));
        assert_eq!(parse_rational("-7/3"), Some(ratio(-7, 3)));
        assert_eq!(parse_rational("2"), Some(integer(2)));
        assert_eq!(parse_rational(".5"), Some(ratio(1, 2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("1e-3"), None);
        assert_eq!(parse_rational(""), None);
        assert_eq!(parse_rational("-"), None);
    }

    #[test]
    fn display_forms() {
        assert_eq!(ComplexRational::real(ratio(-1, 160)).to_string(), "-1/160");
        assert_eq!(ComplexRational::imaginary(ratio(1, 2)).to_string(), "1/2*i");
        assert_eq!(ComplexRational::new(integer(1), ratio(-3, 4)).to_string(), "(1 - 3/4*i)");
    }
}
