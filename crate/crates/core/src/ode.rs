//! Polynomial oscillator equations `x'' + f(x) + F(x', x) = 0`.
//!
//! The accepted surface syntax, whitespace-insensitive:
//!
//! ```text
//! equation := term (("+"|"-") term)* "=" "0"
//! term     := [coeff "*"] factor ("*" factor)* | coeff
//! factor   := "x''" | "(x')" ["^" int] | "x'" ["^" int] | "x" ["^" int]
//! coeff    := decimal | int | int "/" int
//! ```
//!
//! A leading sign on the first term is allowed. Exactly one `x''` factor may
//! appear, alone in its term; the equation is normalized so that it carries
//! coefficient 1. Repeated terms are summed.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::ParseError;
use crate::rational::{format_rational, rational_sqrt, Rational};

/// Canonical coefficients of `x'' + Σ α_l x^l + Σ λ_{k,m} (x')^k x^m = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialODE {
    alphas: BTreeMap<u32, Rational>,
    lambdas: BTreeMap<(u32, u32), Rational>,
    frequency: Rational,
}

impl PolynomialODE {
    /// Builds a canonical equation. Zero coefficients are dropped; `lambdas`
    /// keyed by `(velocity_power, position_power)` with velocity power 0 are
    /// folded into `alphas`.
    pub fn new(
        alphas: impl IntoIterator<Item = (u32, Rational)>,
        lambdas: impl IntoIterator<Item = ((u32, u32), Rational)>,
        frequency: Rational,
    ) -> Result<Self, ParseError> {
        if !frequency.is_positive() {
            return Err(ParseError::InvalidFrequency);
        }
        let mut ode = Self { alphas: BTreeMap::new(), lambdas: BTreeMap::new(), frequency };
        for (l, c) in alphas {
            *ode.alphas.entry(l).or_insert_with(Rational::zero) += c;
        }
        for ((k, m), c) in lambdas {
            if k == 0 {
                *ode.alphas.entry(m).or_insert_with(Rational::zero) += c;
            } else {
                *ode.lambdas.entry((k, m)).or_insert_with(Rational::zero) += c;
            }
        }
        ode.alphas.retain(|_, c| !c.is_zero());
        ode.lambdas.retain(|_, c| !c.is_zero());
        Ok(ode)
    }

    /// `f(x) = Σ α_l x^l`, keyed by `l`.
    pub fn alphas(&self) -> &BTreeMap<u32, Rational> {
        &self.alphas
    }

    /// `F(x', x) = Σ λ_{k,m} (x')^k x^m`, keyed by `(k, m)`.
    pub fn lambdas(&self) -> &BTreeMap<(u32, u32), Rational> {
        &self.lambdas
    }

    pub fn frequency(&self) -> &Rational {
        &self.frequency
    }

    pub fn with_frequency(mut self, frequency: Rational) -> Result<Self, ParseError> {
        if !frequency.is_positive() {
            return Err(ParseError::InvalidFrequency);
        }
        self.frequency = frequency;
        Ok(self)
    }

    /// Canonical text form, accepted back by [`parse_ode`].
    pub fn render(&self) -> String {
        let mut out = String::from("x''");
        let terms =
            self.alphas.iter().map(|(&l, c)| (c, 0, l)).chain(self.lambdas.iter().map(|(&(k, m), c)| (c, k, m)));
        for (coeff, k, m) in terms {
            out.push_str(if coeff.is_negative() { " - " } else { " + " });
            let magnitude = coeff.abs();
            let mut factors = Vec::new();
            if k > 0 {
                factors.push(power("(x')", k));
            }
            if m > 0 {
                factors.push(power("x", m));
            }
            if factors.is_empty() {
                out.push_str(&format_rational(&magnitude));
            } else {
                if !magnitude.is_one() {
                    out.push_str(&format_rational(&magnitude));
                    out.push('*');
                }
                out.push_str(&factors.join("*"));
            }
        }
        out.push_str(" = 0");
        out
    }
}

fn power(base: &str, exponent: u32) -> String {
    if exponent == 1 {
        base.to_string()
    } else {
        format!("{base}^{exponent}")
    }
}

impl fmt::Display for PolynomialODE {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Parses an equation, inferring `w = √α₁` when that root is rational and
/// defaulting to `w = 1` otherwise.
pub fn parse_ode(source: &str) -> Result<PolynomialODE, ParseError> {
    parse_ode_with_frequency(source, None)
}

/// Parses an equation; an explicit `frequency` overrides inference and leaves
/// `α₁` untouched.
pub fn parse_ode_with_frequency(source: &str, frequency: Option<Rational>) -> Result<PolynomialODE, ParseError> {
    let tokens = Lexer::new(source).tokenize()?;
    let raw = Parser { tokens: &tokens, pos: 0 }.equation()?;

    let frequency = match frequency {
        Some(w) if !w.is_positive() => return Err(ParseError::InvalidFrequency),
        Some(w) => w,
        None => raw_linear_coefficient(&raw)
            .and_then(|a1| rational_sqrt(&a1))
            .filter(|w| w.is_positive())
            .unwrap_or_else(Rational::one),
    };

    let scale = raw.acceleration.recip();
    let alphas = raw.alphas.into_iter().map(|(l, c)| (l, c * &scale));
    let lambdas = raw.lambdas.into_iter().map(|(key, c)| (key, c * &scale));
    PolynomialODE::new(alphas, lambdas, frequency)
}

fn raw_linear_coefficient(raw: &RawEquation) -> Option<Rational> {
    raw.alphas.get(&1).map(|c| c / &raw.acceleration)
}

#[derive(Clone, Debug, PartialEq)]
enum TokenKind {
    Number(Rational),
    Position,
    Velocity,
    Acceleration,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Equals,
    Ident(String),
    Eof,
}

#[derive(Clone, Debug)]
struct Token {
    kind: TokenKind,
    line: usize,
    column: usize,
    /// Source spelling, kept to tell `3` from `3.0` after `^`.
    text: String,
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Lexer<'a> {
    fn new(source: &'a str) -> Self {
        Self { chars: source.chars().peekable(), line: 1, column: 1 }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn tokenize(mut self) -> Result<Vec<Token>, ParseError> {
        let mut tokens = Vec::new();
        loop {
            while self.chars.peek().is_some_and(|c| c.is_whitespace()) {
                self.bump();
            }
            let (line, column) = (self.line, self.column);
            let Some(&c) = self.chars.peek() else {
                tokens.push(Token { kind: TokenKind::Eof, line, column, text: String::new() });
                return Ok(tokens);
            };
            let (kind, text) = if c.is_ascii_digit() || c == '.' {
                self.number(line, column)?
            } else if c.is_alphabetic() || c == '_' {
                self.word()
            } else {
                self.bump();
                let kind = match c {
                    '+' => TokenKind::Plus,
                    '-' | '\u{2212}' => TokenKind::Minus,
                    '*' => TokenKind::Star,
                    '/' => TokenKind::Slash,
                    '^' => TokenKind::Caret,
                    '(' => TokenKind::LParen,
                    ')' => TokenKind::RParen,
                    '=' => TokenKind::Equals,
                    other => {
                        return Err(ParseError::Syntax {
                            line,
                            column,
                            message: format!("unexpected character `{other}`"),
                        })
                    }
                };
                (kind, c.to_string())
            };
            tokens.push(Token { kind, line, column, text });
        }
    }

    fn number(&mut self, line: usize, column: usize) -> Result<(TokenKind, String), ParseError> {
        let mut text = String::new();
        while let Some(&c) = self.chars.peek() {
            if c.is_ascii_digit() || c == '.' {
                text.push(c);
                self.bump();
            } else {
                break;
            }
        }
        let value = parse_decimal(&text).ok_or_else(|| ParseError::Syntax {
            line,
            column,
            message: format!("malformed number `{text}`"),
        })?;
        Ok((TokenKind::Number(value), text))
    }

    fn word(&mut self) -> (TokenKind, String) {
        let mut text = String::new();
        while let Some(&c) = self.chars.peek() {
            if c.is_alphanumeric() || c == '_' {
                text.push(c);
                self.bump();
            } else {
                break;
            }
        }
        if text != "x" {
            return (TokenKind::Ident(text.clone()), text);
        }
        let mut primes = 0;
        while self.chars.peek() == Some(&'\'') {
            self.bump();
            primes += 1;
        }
        text.extend(std::iter::repeat_n('\'', primes));
        let kind = match primes {
            0 => TokenKind::Position,
            1 => TokenKind::Velocity,
            2 => TokenKind::Acceleration,
            _ => TokenKind::Ident(text.clone()),
        };
        (kind, text)
    }
}

/// Exact value of a decimal literal such as `12`, `0.1` or `.25`.
fn parse_decimal(text: &str) -> Option<Rational> {
    let (whole, frac) = match text.split_once('.') {
        Some((w, f)) => (w, f),
        None => (text, ""),
    };
    if (whole.is_empty() && frac.is_empty()) || frac.contains('.') {
        return None;
    }
    let digits = format!("{whole}{frac}");
    let numer: BigInt = digits.parse().ok()?;
    let denom = BigInt::from(10u32).pow(frac.len() as u32);
    Some(Rational::new(numer, denom))
}

#[derive(Default)]
struct RawEquation {
    acceleration: Rational,
    alphas: BTreeMap<u32, Rational>,
    lambdas: BTreeMap<(u32, u32), Rational>,
}

struct Parser<'t> {
    tokens: &'t [Token],
    pos: usize,
}

#[derive(Default)]
struct Term {
    coefficient: Option<Rational>,
    position: u32,
    velocity: u32,
    acceleration: Option<(usize, usize)>,
    factor_count: usize,
}

impl<'t> Parser<'t> {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn next(&mut self) -> &Token {
        let token = &self.tokens[self.pos];
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        token
    }

    fn syntax<T>(&self, token: &Token, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax { line: token.line, column: token.column, message: message.into() })
    }

    fn non_polynomial<T>(&self, token: &Token, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::NonPolynomial { line: token.line, column: token.column, message: message.into() })
    }

    fn equation(&mut self) -> Result<RawEquation, ParseError> {
        let mut raw = RawEquation::default();
        let mut seen_acceleration: Option<(usize, usize)> = None;
        let mut sign = match self.peek().kind {
            TokenKind::Minus => {
                self.next();
                -Rational::one()
            }
            TokenKind::Plus => {
                self.next();
                Rational::one()
            }
            _ => Rational::one(),
        };
        loop {
            let term = self.term()?;
            let coefficient = sign * term.coefficient.clone().unwrap_or_else(Rational::one);
            if let Some((line, column)) = term.acceleration {
                if seen_acceleration.is_some() {
                    return Err(ParseError::Acceleration { line, column, message: "appears more than once".into() });
                }
                if term.factor_count > 1 {
                    return Err(ParseError::Acceleration { line, column, message: "must be alone in its term".into() });
                }
                seen_acceleration = Some((line, column));
                raw.acceleration = coefficient;
            } else if term.velocity == 0 {
                *raw.alphas.entry(term.position).or_insert_with(Rational::zero) += coefficient;
            } else {
                *raw.lambdas.entry((term.velocity, term.position)).or_insert_with(Rational::zero) += coefficient;
            }

            let token = self.next().clone();
            match token.kind {
                TokenKind::Plus => sign = Rational::one(),
                TokenKind::Minus => sign = -Rational::one(),
                TokenKind::Equals => break,
                TokenKind::Eof => return self.syntax(&token, "expected `= 0`"),
                _ => return self.syntax(&token, format!("unexpected `{}`", token.text)),
            }
        }

        let rhs = self.next().clone();
        match rhs.kind {
            TokenKind::Number(ref v) if v.is_zero() => {}
            TokenKind::Eof => return self.syntax(&rhs, "expected `0` after `=`"),
            _ => return self.syntax(&rhs, "right-hand side must be 0"),
        }
        let end = self.next().clone();
        if end.kind != TokenKind::Eof {
            return self.syntax(&end, format!("unexpected `{}` after `= 0`", end.text));
        }

        match seen_acceleration {
            None => Err(ParseError::MissingAcceleration),
            Some((line, column)) if raw.acceleration.is_zero() => {
                Err(ParseError::Acceleration { line, column, message: "coefficient is zero".into() })
            }
            Some(_) => Ok(raw),
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let mut term = Term::default();
        loop {
            self.item(&mut term)?;
            if self.peek().kind == TokenKind::Star {
                self.next();
            } else {
                return Ok(term);
            }
        }
    }

    fn item(&mut self, term: &mut Term) -> Result<(), ParseError> {
        let token = self.next().clone();
        match token.kind.clone() {
            TokenKind::Number(value) => {
                let value = if self.peek().kind == TokenKind::Slash {
                    self.next();
                    let denom_token = self.next().clone();
                    match denom_token.kind {
                        TokenKind::Number(d) if !d.is_zero() => value / d,
                        TokenKind::Number(_) => return self.syntax(&denom_token, "division by zero"),
                        TokenKind::Position | TokenKind::Velocity | TokenKind::LParen => {
                            return self.non_polynomial(&denom_token, "division by a variable")
                        }
                        _ => return self.syntax(&denom_token, "expected a denominator"),
                    }
                } else {
                    value
                };
                term.coefficient = Some(term.coefficient.take().unwrap_or_else(Rational::one) * value);
            }
            TokenKind::Position => {
                term.position = checked_add(term.position, self.exponent()?, &token)?;
                term.factor_count += 1;
            }
            TokenKind::Velocity => {
                term.velocity = checked_add(term.velocity, self.exponent()?, &token)?;
                term.factor_count += 1;
            }
            TokenKind::Acceleration => {
                if self.peek().kind == TokenKind::Caret {
                    return Err(ParseError::Acceleration {
                        line: token.line,
                        column: token.column,
                        message: "must appear linearly".into(),
                    });
                }
                if term.acceleration.is_some() {
                    return Err(ParseError::Acceleration {
                        line: token.line,
                        column: token.column,
                        message: "appears more than once".into(),
                    });
                }
                term.acceleration = Some((token.line, token.column));
                term.factor_count += 1;
            }
            TokenKind::LParen => {
                let inner = self.next().clone();
                if inner.kind != TokenKind::Velocity {
                    return self.syntax(&inner, "only `(x')` may be parenthesized");
                }
                let close = self.next().clone();
                if close.kind != TokenKind::RParen {
                    return self.syntax(&close, "expected `)`");
                }
                term.velocity = checked_add(term.velocity, self.exponent()?, &token)?;
                term.factor_count += 1;
            }
            TokenKind::Ident(name) => {
                return self.non_polynomial(&token, format!("unsupported symbol `{name}`"));
            }
            TokenKind::Eof => return self.syntax(&token, "unexpected end of input"),
            _ => return self.syntax(&token, format!("unexpected `{}`", token.text)),
        }
        if self.peek().kind == TokenKind::Slash && !matches!(token.kind, TokenKind::Number(_)) {
            let slash = self.peek().clone();
            return self.non_polynomial(&slash, "division by a variable expression");
        }
        Ok(())
    }

    fn exponent(&mut self) -> Result<u32, ParseError> {
        if self.peek().kind != TokenKind::Caret {
            return Ok(1);
        }
        self.next();
        let token = self.next().clone();
        match token.kind {
            TokenKind::Number(ref v) if v.is_integer() && !token.text.contains('.') => {
                u32::try_from(v.numer()).or_else(|_| self.syntax(&token, "exponent too large"))
            }
            TokenKind::Number(_) | TokenKind::Minus => {
                self.non_polynomial(&token, "exponent must be a non-negative integer")
            }
            TokenKind::Position | TokenKind::Velocity | TokenKind::Ident(_) | TokenKind::LParen => {
                self.non_polynomial(&token, "variable exponent")
            }
            _ => self.syntax(&token, "expected an integer exponent"),
        }
    }
}

fn checked_add(a: u32, b: u32, token: &Token) -> Result<u32, ParseError> {
    a.checked_add(b).ok_or_else(|| ParseError::Syntax {
        line: token.line,
        column: token.column,
        message: "exponent too large".into(),
    })
}
