use criterion::{black_box, criterion_group, criterion_main, Criterion};

use hookline_core::perm::PermClass;
use hookline_core::poly::{a_poly, maj_poly, q_binomial, APolyMethod};
use hookline_core::verify::run_suite;

fn bench_polynomials(c: &mut Criterion) {
    let mut group = c.benchmark_group("poly");
    group.bench_function("q_binomial_30_15", |b| {
        b.iter(|| q_binomial(black_box(30), black_box(15)).unwrap())
    });
    group.bench_function("a_poly_recurrence_12", |b| {
        b.iter(|| a_poly(black_box(12), 12, APolyMethod::Recurrence).unwrap())
    });
    group.bench_function("a_poly_direct_12", |b| {
        b.iter(|| a_poly(black_box(12), 12, APolyMethod::Direct).unwrap())
    });
    group.bench_function("maj_poly_i321_n14", |b| {
        b.iter(|| maj_poly(PermClass::I321, black_box(14)).unwrap())
    });
    group.finish();
}

fn bench_verification(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    group.bench_function("main_theorem_n10", |b| {
        b.iter(|| {
            let report = run_suite("main-theorem", black_box(10)).unwrap();
            assert!(report.passed());
        })
    });
    group.finish();
}

criterion_group!(benches, bench_polynomials, bench_verification);
criterion_main!(benches);
