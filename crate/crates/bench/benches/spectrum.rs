use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use ladder_bench::{table_preset, MIXED_ODE};
use ladder_core::algebra::{normal_order, Coefficient, Ladder};
use ladder_core::rational::integer;
use ladder_core::reproduce::TABLE_SIZES;
use ladder_core::spectral::DEFAULT_TOLERANCE;
use ladder_core::{
    build_hamiltonian, build_matrix, convergence_sweep, eigenpairs, eigenvalues, parse_ode, pt_energy,
    OrderingConvention, Preset,
};

fn algebra(c: &mut Criterion) {
    let word: Vec<Ladder> = (0..8).map(|k| if k % 2 == 0 { Ladder::Lower } else { Ladder::Raise }).collect();
    c.bench_function("normal_order alternating word of 8", |b| {
        b.iter(|| normal_order(black_box(&word), &Coefficient::one(), integer(1)))
    });
    let ode = parse_ode(MIXED_ODE).unwrap();
    for ordering in [OrderingConvention::Sym2, OrderingConvention::WeylFull] {
        c.bench_with_input(BenchmarkId::new("build_hamiltonian", ordering), &ordering, |b, &o| {
            b.iter(|| build_hamiltonian(black_box(&ode), o, false).unwrap())
        });
    }
}

fn spectra(c: &mut Criterion) {
    for preset in Preset::ALL {
        let h = table_preset(preset);
        c.bench_with_input(BenchmarkId::new("build_matrix N=39", preset), &h, |b, h| {
            b.iter(|| build_matrix(black_box(h), 39).unwrap())
        });
        let m = build_matrix(&h, 39).unwrap();
        c.bench_with_input(BenchmarkId::new("jacobi eigenvalues N=39", preset), &m, |b, m| {
            b.iter(|| eigenvalues(black_box(m), DEFAULT_TOLERANCE).unwrap())
        });
        c.bench_with_input(BenchmarkId::new("jacobi eigenpairs N=39", preset), &m, |b, m| {
            b.iter(|| eigenpairs(black_box(m), DEFAULT_TOLERANCE).unwrap())
        });
        c.bench_with_input(BenchmarkId::new("convergence sweep", preset), &h, |b, h| {
            b.iter(|| convergence_sweep(black_box(h), &TABLE_SIZES, 5, DEFAULT_TOLERANCE).unwrap())
        });
        c.bench_with_input(BenchmarkId::new("pt_energy n=0..2", preset), &h, |b, h| {
            b.iter(|| (0..2).map(|n| pt_energy(black_box(h), n, n + 5).unwrap().total).sum::<f64>())
        });
    }
}

criterion_group!(benches, algebra, spectra);
criterion_main!(benches);
