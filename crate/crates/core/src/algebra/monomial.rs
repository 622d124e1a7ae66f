use std::cmp::Ordering;
use std::fmt;

/// The normal-ordered product `a†^raise a^lower`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LadderMonomial {
    pub raise: u32,
    pub lower: u32,
}

impl LadderMonomial {
    pub const IDENTITY: Self = Self { raise: 0, lower: 0 };

    pub const fn new(raise: u32, lower: u32) -> Self {
        Self { raise, lower }
    }

    pub const fn degree(self) -> u32 {
        self.raise + self.lower
    }

    pub const fn adjoint(self) -> Self {
        Self { raise: self.lower, lower: self.raise }
    }

    /// Number-conserving monomials are diagonal in the Fock basis.
    pub const fn is_diagonal(self) -> bool {
        self.raise == self.lower
    }

    /// Change in occupation number, `raise - lower`.
    pub fn shift(self) -> i64 {
        i64::from(self.raise) - i64::from(self.lower)
    }
}

// Canonical order: total degree first, then the power of a†.
impl Ord for LadderMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree(), self.raise).cmp(&(other.degree(), other.raise))
    }
}

impl PartialOrd for LadderMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LadderMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.raise, self.lower) {
            (0, 0) => f.write_str("1"),
            (i, 0) => write!(f, "adag^{i}"),
            (0, j) => write!(f, "a^{j}"),
            (i, j) => write!(f, "adag^{i} a^{j}"),
        }
    }
}

/// One atomic factor of a ladder word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ladder {
    /// `a`
    Lower,
    /// `a†`
    Raise,
}

impl Ladder {
    pub fn adjoint(self) -> Self {
        match self {
            Ladder::Lower => Ladder::Raise,
            Ladder::Raise => Ladder::Lower,
        }
    }
}
