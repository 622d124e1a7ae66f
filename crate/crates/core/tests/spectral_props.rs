use ladder_core::algebra::{preset_hamiltonian, OperatorPolynomial, Preset};
use ladder_core::rational::{integer, ratio};
use ladder_core::spectral::{build_matrix, eigenpairs, eigenvalues, matrix_element, DEFAULT_TOLERANCE};

fn preset(p: Preset) -> OperatorPolynomial {
    preset_hamiltonian(p, &ratio(1, 10), &integer(1)).unwrap()
}

#[test]
fn harmonic_spectrum_is_exact() {
    let h = preset_hamiltonian(Preset::VelocityCoupled, &integer(0), &integer(1)).unwrap();
    for n in [1, 5, 39, 101] {
        let s = eigenvalues(&build_matrix(&h, n).unwrap(), DEFAULT_TOLERANCE).unwrap();
        for (k, e) in s.eigenvalues.iter().enumerate() {
            assert!((e - (k as f64 + 0.5)).abs() < 1e-12);
        }
    }
}

#[test]
fn residuals_and_normalization() {
    for p in Preset::ALL {
        let m = build_matrix(&preset(p), 39).unwrap();
        let s = eigenpairs(&m, DEFAULT_TOLERANCE).unwrap();
        assert!(s.residual.unwrap() <= 1e-9 * m.frobenius_norm(), "{p}: {:?}", s.residual);
        for v in s.eigenvectors.as_ref().unwrap() {
            let norm: f64 = v.iter().map(|x| x * x).sum();
            assert!((norm - 1.0).abs() < 1e-12);
            let pivot = v.iter().copied().fold(0.0f64, |b, x| if x.abs() > b.abs() { x } else { b });
            assert!(pivot > 0.0);
        }
        assert!(s.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
        // eigenvalue-only and eigenvector runs see the same rotations
        assert_eq!(eigenvalues(&m, DEFAULT_TOLERANCE).unwrap().eigenvalues, s.eigenvalues);
    }
}

#[test]
fn velocity_coupled_ground_state_vector_is_sector_zero() {
    // the ground state lives in the m ≡ 0 (mod 4) sector
    let s = eigenpairs(&build_matrix(&preset(Preset::VelocityCoupled), 39).unwrap(), DEFAULT_TOLERANCE).unwrap();
    let v = &s.eigenvectors.unwrap()[0];
    for (m, a) in v.iter().enumerate() {
        if m % 4 != 0 {
            assert!(a.abs() < 1e-12);
        }
    }
    assert!(v[0] > 0.99);
}

#[test]
fn interlacing_with_basis_growth() {
    for p in Preset::ALL {
        let h = preset(p);
        let mut previous: Option<Vec<f64>> = None;
        for n in (6..=60).step_by(2) {
            let s = eigenvalues(&build_matrix(&h, n).unwrap(), DEFAULT_TOLERANCE).unwrap();
            if let Some(prev) = &previous {
                for (k, (old, new)) in prev.iter().zip(&s.eigenvalues).enumerate() {
                    assert!(*new <= old + 1e-12 * old.abs().max(1.0), "{p} N={n} k={k}: {new} > {old}");
                }
            }
            previous = Some(s.eigenvalues);
        }
    }
}

#[test]
fn band_zeroes() {
    for (p, allowed) in [(Preset::VelocityCoupled, 4), (Preset::CubicVelocityCoupled, 2)] {
        let h = preset(p);
        for m in 0usize..50 {
            for n in 0usize..50 {
                let d = m.abs_diff(n);
                if d != 0 && d != allowed {
                    assert_eq!(matrix_element(&h, m, n).unwrap(), 0.0, "{p} ({m},{n})");
                }
            }
        }
    }
}

#[test]
fn sector_decoupling() {
    let h = preset(Preset::VelocityCoupled);
    let n = 39;
    let full = build_matrix(&h, n).unwrap();
    let whole = eigenvalues(&full, DEFAULT_TOLERANCE).unwrap().eigenvalues;
    let mut union = Vec::new();
    for residue in 0..4 {
        let indices: Vec<usize> = (residue..n).step_by(4).collect();
        let block = full.principal(&indices);
        union.extend(eigenvalues(&block, DEFAULT_TOLERANCE).unwrap().eigenvalues);
    }
    union.sort_by(f64::total_cmp);
    assert_eq!(union.len(), whole.len());
    for (a, b) in union.iter().zip(&whole) {
        assert!((a - b).abs() < 1e-10);
    }
}

#[test]
fn deterministic_output() {
    let m = build_matrix(&preset(Preset::CubicVelocityCoupled), 29).unwrap();
    let a = eigenpairs(&m, DEFAULT_TOLERANCE).unwrap();
    let b = eigenpairs(&m, DEFAULT_TOLERANCE).unwrap();
    assert_eq!(a, b);
}
