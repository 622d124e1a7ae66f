use ladder_core::reproduce::{reproduce, Agreement, Table};

#[test]
fn perturbation_table_matches() {
    let report = reproduce(Table::Perturbation).unwrap();
    assert_eq!(report.cells.len(), 16);
    assert!(report.all_passed(), "{:#?}", report.cells.iter().filter(|c| !c.passed()).collect::<Vec<_>>());
}

#[test]
fn velocity_coupled_spectrum_matches() {
    let report = reproduce(Table::VelocityCoupledSpectrum).unwrap();
    assert_eq!(report.cells.len(), 20);
    assert!(report.all_passed());
}

#[test]
fn cubic_spectrum_mismatches_are_the_known_five() {
    // these printed cells disagree with the exact truncated spectrum
    let report = reproduce(Table::CubicSpectrum).unwrap();
    let failing: Vec<&str> =
        report.cells.iter().filter(|c| c.agreement == Agreement::Mismatch).map(|c| c.label.as_str()).collect();
    assert_eq!(failing.len(), 5, "{failing:?}");
    for c in report.cells.iter().filter(|c| c.agreement == Agreement::Mismatch) {
        assert!((c.computed - c.expected).abs() < 2e-7);
    }
}

#[test]
#[ignore = "five printed cubic-spectrum cells are inconsistent with the Hamiltonian; see README"]
fn cubic_spectrum_matches() {
    assert!(reproduce(Table::CubicSpectrum).unwrap().all_passed());
}
