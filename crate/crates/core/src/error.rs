use thiserror::Error;

/// Diagnostic produced while reading an oscillator equation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("non-polynomial construct at line {line}, column {column}: {message}")]
    NonPolynomial { line: usize, column: usize, message: String },
    #[error("equation has no x'' term")]
    MissingAcceleration,
    #[error("x'' term at line {line}, column {column}: {message}")]
    Acceleration { line: usize, column: usize, message: String },
    #[error("frequency must be a positive rational")]
    InvalidFrequency,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("operator is not Hermitian: {0}")]
    NonHermitianResult(String),
    #[error("unsupported preset `{0}` (expected eq12 or eq13)")]
    UnsupportedPreset(String),
    #[error("preset {preset} is only defined for w = 1")]
    PresetFrequency { preset: &'static str },
    #[error("ordering `{0}` cannot quantize a phase-space polynomial")]
    UnsupportedOrdering(&'static str),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("operator is not Hermitian")]
    NonHermitian,
    #[error("matrix element <{row}|H|{col}> has imaginary part {residue:e}")]
    ImaginaryResidue { row: usize, col: usize, residue: f64 },
    #[error("basis size must be at least 1")]
    EmptyBasis,
    #[error("tolerance must be positive, got {0}")]
    InvalidTolerance(f64),
    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NonConvergence { sweeps: usize, off_norm: f64 },
    #[error("sizes must be ascending and positive")]
    InvalidSizes,
    #[error("requested {levels} levels but the smallest basis has {size} states")]
    TooManyLevels { levels: usize, size: usize },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PerturbationError {
    #[error("degenerate unperturbed levels {level} and {partner} (E0 = {energy}) are coupled")]
    Degenerate { level: usize, partner: usize, energy: f64 },
    #[error("basis cut {basis_cut} too small for level {level} (need more than {required})")]
    BasisTooSmall { basis_cut: usize, level: usize, required: usize },
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

/// Union of every failure the library reports.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Perturbation(#[from] PerturbationError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
