//! Published reference values and the comparison rules used to check them.
//!
//! Perturbative cells are printed with heterogeneous widths, some truncated
//! rather than rounded, and totals are sums of the printed parts; a cell
//! matches when the computed value lies within one unit of the last printed
//! digit, and the report records whether plain rounding alone would have
//! matched. Spectral cells are compared with an absolute tolerance.

use serde::Serialize;

use crate::algebra::{preset_hamiltonian, Preset};
use crate::error::Result;
use crate::perturbation::pt_energy;
use crate::rational::{integer, ratio};
use crate::spectral::{convergence_sweep, DEFAULT_TOLERANCE};

/// Absolute tolerance for spectral cells printed with nine decimals.
pub const SPECTRAL_TOLERANCE: f64 = 5e-9;

/// Truncation sizes of the spectral tables.
pub const TABLE_SIZES: [usize; 4] = [9, 19, 29, 39];

/// Coupling used by every published table.
pub fn table_lambda() -> crate::Rational {
    ratio(1, 10)
}

/// `(preset, level, [e0, e1, e2, total])` as printed.
pub const PERTURBATION_TABLE: [(Preset, usize, [&str; 4]); 4] = [
    (Preset::VelocityCoupled, 0, ["0.50625", "0", "-0.000220", "0.50603"]),
    (Preset::VelocityCoupled, 1, ["1.53125", "0", "-0.001077", "1.530173"]),
    (Preset::CubicVelocityCoupled, 0, ["0.525", "0", "-0.001222", "0.523778"]),
    (Preset::CubicVelocityCoupled, 1, ["1.625", "0", "-0.009375", "1.615625"]),
];

/// Lowest five levels (rows) at sizes 9, 19, 29, 39 (columns) for `eq12`.
pub const VELOCITY_COUPLED_SPECTRUM: [[&str; 4]; 5] = [
    ["0.506029039", "0.506029038", "0.506029038", "0.506029038"],
    ["1.530172680", "1.530169441", "1.530169441", "1.530169441"],
    ["2.578092128", "2.578076954", "2.578076954", "2.578076954"],
    ["3.649049855", "3.648997679", "3.648997673", "3.648997673"],
    ["4.742400314", "4.742253427", "4.742253401", "4.742253401"],
];

/// Lowest five levels at sizes 9, 19, 29, 39 for `eq13`.
pub const CUBIC_SPECTRUM: [[&str; 4]; 5] = [
    ["0.523767849", "0.523767849", "0.523767849", "0.523767849"],
    ["1.615478755", "1.615478611", "1.615478611", "1.615478611"],
    ["2.791344321", "2.791342192", "2.791342192", "2.791342192"],
    ["4.044414426", "4.044094127", "4.044094126", "4.044094126"],
    ["5.369741578", "5.368297477", "5.368297470", "5.368297469"],
];

/// Which published table to regenerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Table {
    /// Perturbative energies of the two lowest levels of both presets.
    Perturbation,
    /// Diagonalization of `eq12`.
    VelocityCoupledSpectrum,
    /// Diagonalization of `eq13`.
    CubicSpectrum,
}

impl Table {
    pub fn from_number(n: u8) -> Option<Self> {
        match n {
            1 => Some(Table::Perturbation),
            2 => Some(Table::VelocityCoupledSpectrum),
            3 => Some(Table::CubicSpectrum),
            _ => None,
        }
    }

    pub fn number(self) -> u8 {
        match self {
            Table::Perturbation => 1,
            Table::VelocityCoupledSpectrum => 2,
            Table::CubicSpectrum => 3,
        }
    }
}

/// How a perturbative cell matched its printed value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Agreement {
    Rounded,
    Truncated,
    WithinLastDigit,
    WithinTolerance,
    Mismatch,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Cell {
    pub label: String,
    pub printed: &'static str,
    pub expected: f64,
    pub computed: f64,
    pub agreement: Agreement,
}

impl Cell {
    pub fn passed(&self) -> bool {
        self.agreement != Agreement::Mismatch
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub table: Table,
    pub cells: Vec<Cell>,
}

impl Report {
    pub fn passed(&self) -> usize {
        self.cells.iter().filter(|c| c.passed()).count()
    }

    pub fn all_passed(&self) -> bool {
        self.passed() == self.cells.len()
    }
}

fn decimals(printed: &str) -> usize {
    printed.split_once('.').map_or(0, |(_, frac)| frac.len())
}

fn format_fixed(value: f64, digits: usize) -> String {
    let s = format!("{value:.digits$}");
    // "-0.000" prints as "0.000" in the tables
    if s.starts_with('-') && s[1..].chars().all(|c| c == '0' || c == '.') {
        s[1..].to_string()
    } else {
        s
    }
}

fn truncate_fixed(value: f64, digits: usize) -> String {
    let scale = 10f64.powi(digits as i32);
    format_fixed((value * scale).trunc() / scale, digits)
}

/// Compares a value against a printed decimal at its printed precision.
pub fn compare_printed(computed: f64, printed: &str) -> Agreement {
    let digits = decimals(printed);
    let expected: f64 = printed.parse().expect("reference values are valid decimals");
    if format_fixed(computed, digits) == printed {
        Agreement::Rounded
    } else if truncate_fixed(computed, digits) == printed {
        Agreement::Truncated
    } else if (computed - expected).abs() < 10f64.powi(-(digits as i32)) {
        Agreement::WithinLastDigit
    } else {
        Agreement::Mismatch
    }
}

pub fn compare_tolerance(computed: f64, printed: &str, tolerance: f64) -> Agreement {
    let expected: f64 = printed.parse().expect("reference values are valid decimals");
    if (computed - expected).abs() <= tolerance {
        Agreement::WithinTolerance
    } else {
        Agreement::Mismatch
    }
}

/// Recomputes a table and compares every printed cell.
pub fn reproduce(table: Table) -> Result<Report> {
    let lambda = table_lambda();
    let w = integer(1);
    let cells = match table {
        Table::Perturbation => {
            let mut cells = Vec::new();
            for (preset, level, printed) in PERTURBATION_TABLE {
                let h = preset_hamiltonian(preset, &lambda, &w)?;
                let r = pt_energy(&h, level, level + h.degree() as usize + 1)?;
                let names = ["E0", "E1", "E2", "E"];
                for ((name, value), printed) in names.iter().zip([r.e0, r.e1, r.e2, r.total]).zip(printed) {
                    cells.push(Cell {
                        label: format!("{preset} n={level} {name}"),
                        printed,
                        expected: printed.parse().expect("valid decimal"),
                        computed: value,
                        agreement: compare_printed(value, printed),
                    });
                }
            }
            cells
        }
        Table::VelocityCoupledSpectrum | Table::CubicSpectrum => {
            let (preset, reference) = if table == Table::VelocityCoupledSpectrum {
                (Preset::VelocityCoupled, &VELOCITY_COUPLED_SPECTRUM)
            } else {
                (Preset::CubicVelocityCoupled, &CUBIC_SPECTRUM)
            };
            let h = preset_hamiltonian(preset, &lambda, &w)?;
            let sweep = convergence_sweep(&h, &TABLE_SIZES, reference.len(), DEFAULT_TOLERANCE)?;
            let mut cells = Vec::new();
            for (level, row) in reference.iter().enumerate() {
                for (spectrum, printed) in sweep.spectra.iter().zip(row) {
                    let value = spectrum.eigenvalues[level];
                    cells.push(Cell {
                        label: format!("{preset} n={level} N={}", spectrum.size),
                        printed,
                        expected: printed.parse().expect("valid decimal"),
                        computed: value,
                        agreement: compare_tolerance(value, printed, SPECTRAL_TOLERANCE),
                    });
                }
            }
            cells
        }
    };
    Ok(Report { table, cells })
}
