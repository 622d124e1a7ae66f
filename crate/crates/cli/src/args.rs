use clap::{Args, Parser, Subcommand, ValueEnum};
use ladder_core::rational::parse_rational;
use ladder_core::{OrderingConvention, Preset, Rational};

#[derive(Debug, Parser)]
#[command(name = "ladder", version, about = "Ladder-operator Hamiltonians and spectra of polynomial oscillators")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the normal-ordered Hamiltonian.
    Derive(DeriveArgs),
    /// Second-order perturbative energies.
    Pt(PtArgs),
    /// Lowest eigenvalues of truncated Fock-basis matrices.
    Diag(DiagArgs),
    /// Recompute a reference table and compare cell by cell.
    Reproduce(ReproduceArgs),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct SourceArgs {
    /// Oscillator equation, e.g. "x'' + x + 0.1*(x')^2*x = 0".
    #[arg(long, conflicts_with = "preset", required_unless_present = "preset")]
    pub ode: Option<String>,
    /// Closed-form Hamiltonian.
    #[arg(long, value_parser = parse_preset)]
    pub preset: Option<Preset>,
    /// Coupling for presets (integer, p/q or decimal).
    #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
    pub lambda: Option<Rational>,
    /// Oscillator frequency of the Fock basis.
    #[arg(long, value_parser = parse_positive_rational)]
    pub w: Option<Rational>,
    /// Operator ordering for velocity-dependent terms.
    #[arg(long, default_value = "sym2", value_parser = parse_ordering)]
    pub ordering: OrderingConvention,
    /// Keep Hamiltonians with odd velocity powers.
    #[arg(long)]
    pub allow_non_hermitian: bool,
}

#[derive(Debug, Args)]
pub struct DeriveArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct PtArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    /// Number of levels, starting from the ground state.
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
    pub levels: u32,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct DiagArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    /// Ascending basis sizes.
    #[arg(long, value_delimiter = ',', default_value = "9,19,29,39")]
    pub sizes: Vec<usize>,
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
    pub levels: u32,
    /// Relative off-diagonal norm at which Jacobi sweeps stop.
    #[arg(long, default_value_t = ladder_core::spectral::DEFAULT_TOLERANCE)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ReproduceArgs {
    /// Table number: 1 (perturbation), 2 (eq12 spectrum), 3 (eq13 spectrum).
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    pub table: u8,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

fn parse_preset(s: &str) -> Result<Preset, String> {
    s.parse().map_err(|e: ladder_core::AlgebraError| e.to_string())
}

fn parse_ordering(s: &str) -> Result<OrderingConvention, String> {
    match s.parse()? {
        OrderingConvention::Preset => Err("`preset` is not a quantization rule".into()),
        ordering => Ok(ordering),
    }
}

fn parse_rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).ok_or_else(|| format!("`{s}` is not an integer, fraction or decimal"))
}

fn parse_positive_rational(s: &str) -> Result<Rational, String> {
    let value = parse_rational_arg(s)?;
    if value > Rational::from_integer(0.into()) {
        Ok(value)
    } else {
        Err("must be positive".into())
    }
}
