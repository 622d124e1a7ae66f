use std::fmt::Write as _;

use ladder_core::reproduce::{reproduce, table_lambda, Table};
use ladder_core::{
    build_hamiltonian, convergence_sweep, parse_ode_with_frequency, preset_hamiltonian, pt_energy, Error,
    OperatorPolynomial, PerturbationError, SpectralError,
};
use serde::Serialize;

use crate::args::{DeriveArgs, DiagArgs, Format, PtArgs, ReproduceArgs, SourceArgs};

/// Failure with the process exit code it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match &err {
            Error::Parse(_) | Error::Algebra(_) => 2,
            Error::Spectral(e) | Error::Perturbation(PerturbationError::Spectral(e)) => spectral_code(e),
            Error::Perturbation(PerturbationError::BasisTooSmall { .. }) => 2,
            Error::Perturbation(_) => 3,
        };
        Failure { code, message: err.to_string() }
    }
}

impl From<SpectralError> for Failure {
    fn from(err: SpectralError) -> Self {
        Error::from(err).into()
    }
}

impl From<PerturbationError> for Failure {
    fn from(err: PerturbationError) -> Self {
        Error::from(err).into()
    }
}

fn spectral_code(err: &SpectralError) -> u8 {
    match err {
        SpectralError::EmptyBasis
        | SpectralError::InvalidTolerance(_)
        | SpectralError::InvalidSizes
        | SpectralError::TooManyLevels { .. } => 2,
        _ => 3,
    }
}

/// Output text plus the exit code to finish with.
pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

impl From<String> for Outcome {
    fn from(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

fn hamiltonian(source: &SourceArgs) -> Result<OperatorPolynomial, Failure> {
    match (&source.ode, source.preset) {
        (Some(text), None) => {
            if source.lambda.is_some() {
                return Err(Failure::usage("--lambda only applies to --preset; put couplings in the equation"));
            }
            let ode = parse_ode_with_frequency(text, source.w.clone()).map_err(Error::from)?;
            Ok(build_hamiltonian(&ode, source.ordering, source.allow_non_hermitian).map_err(Error::from)?)
        }
        (None, Some(preset)) => {
            let lambda = source.lambda.clone().unwrap_or_else(table_lambda);
            let w = source.w.clone().unwrap_or_else(|| ladder_core::rational::integer(1));
            Ok(preset_hamiltonian(preset, &lambda, &w).map_err(Error::from)?)
        }
        _ => Err(Failure::usage("exactly one of --ode or --preset is required")),
    }
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable output");
    text.push('\n');
    text
}

#[derive(Serialize)]
struct TermRow {
    raise: u32,
    lower: u32,
    coefficient: String,
}

pub fn derive(args: &DeriveArgs) -> Result<Outcome, Failure> {
    let h = hamiltonian(&args.source)?;
    let rows: Vec<TermRow> = h
        .terms()
        .map(|(m, c)| TermRow { raise: m.raise, lower: m.lower, coefficient: c.render(h.radicand()) })
        .collect();
    Ok(match args.format {
        Format::Table => h.render(),
        Format::Csv => {
            let mut out = String::from("raise,lower,coefficient\n");
            for r in &rows {
                writeln!(out, "{},{},{}", r.raise, r.lower, r.coefficient).unwrap();
            }
            out
        }
        Format::Json => json(&rows),
    }
    .into())
}

pub fn pt(args: &PtArgs) -> Result<Outcome, Failure> {
    if args.levels > 2 {
        eprintln!("warning: second-order estimates above n = 1 are not validated against reference data");
    }
    let h = hamiltonian(&args.source)?;
    let results = (0..args.levels as usize)
        .map(|n| pt_energy(&h, n, n + h.degree() as usize + 1))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(match args.format {
        Format::Table => {
            let mut out = format!("{:>3} {:>12} {:>12} {:>12} {:>12}\n", "n", "E0", "E1", "E2", "total");
            for r in &results {
                writeln!(out, "{:>3} {:>12.6} {:>12.6} {:>12.6} {:>12.6}", r.level, r.e0, r.e1, r.e2, r.total).unwrap();
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("n,e0,e1,e2,total\n");
            for r in &results {
                writeln!(out, "{},{:?},{:?},{:?},{:?}", r.level, r.e0, r.e1, r.e2, r.total).unwrap();
            }
            out
        }
        Format::Json => json(&results),
    }
    .into())
}

#[derive(Serialize)]
struct DiagJson<'a> {
    sizes: Vec<usize>,
    levels: Vec<Vec<f64>>,
    sweeps: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ordering: Option<&'a str>,
}

pub fn diag(args: &DiagArgs) -> Result<Outcome, Failure> {
    let h = hamiltonian(&args.source)?;
    let table = convergence_sweep(&h, &args.sizes, args.levels as usize, args.tol)?;
    let sizes = table.sizes();
    let levels: Vec<Vec<f64>> = (0..table.levels).map(|k| table.level(k)).collect();
    Ok(match args.format {
        Format::Table => {
            let mut out = format!("{:>3}", "n");
            for n in &sizes {
                write!(out, " {:>14}", format!("N={n}")).unwrap();
            }
            out.push('\n');
            for (k, row) in levels.iter().enumerate() {
                write!(out, "{k:>3}").unwrap();
                for e in row {
                    write!(out, " {e:>14.9}").unwrap();
                }
                out.push('\n');
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("n,size,energy\n");
            for (k, row) in levels.iter().enumerate() {
                for (size, e) in sizes.iter().zip(row) {
                    writeln!(out, "{k},{size},{e:?}").unwrap();
                }
            }
            out
        }
        Format::Json => json(&DiagJson {
            sizes,
            levels,
            sweeps: table.spectra.iter().map(|s| s.sweeps).collect(),
            ordering: args.source.ode.as_ref().map(|_| args.source.ordering.name()),
        }),
    }
    .into())
}

pub fn reproduce_table(args: &ReproduceArgs) -> Result<Outcome, Failure> {
    let table = Table::from_number(args.table).ok_or_else(|| Failure::usage("table must be 1, 2 or 3"))?;
    let report = reproduce(table)?;
    let code = if report.all_passed() { 0 } else { 1 };
    let stdout = match args.format {
        Format::Json => json(&report),
        Format::Csv => {
            let mut out = String::from("cell,printed,computed,agreement\n");
            for c in &report.cells {
                let agreement = serde_json::to_value(c.agreement).unwrap();
                writeln!(out, "{},{},{:?},{}", c.label, c.printed, c.computed, agreement.as_str().unwrap()).unwrap();
            }
            out
        }
        Format::Table => {
            let mut out = String::new();
            for c in &report.cells {
                let status = if c.passed() { "PASS" } else { "FAIL" };
                writeln!(
                    out,
                    "{status} {:<24} printed {:>12} computed {:>16.12} ({:?})",
                    c.label, c.printed, c.computed, c.agreement
                )
                .unwrap();
            }
            writeln!(out, "{}/{} PASS", report.passed(), report.cells.len()).unwrap();
            out
        }
    };
    Ok(Outcome { stdout, code })
}
