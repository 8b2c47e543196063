use criterion::{black_box, criterion_group, criterion_main, Criterion};

use hookline_core::partition::{enumerate_in_box, psi_inverse, BoxSpec};
use hookline_core::path::{enumerate_paths, rho, xi, PathKind};
use hookline_core::perm::{enumerate, Backend, PermClass};

fn bench_class_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    group.bench_function("i321_structural_n12", |b| {
        b.iter(|| {
            enumerate(PermClass::I321, black_box(12), Backend::Structural)
                .unwrap()
                .count()
        })
    });
    group.bench_function("s321_structural_n9", |b| {
        b.iter(|| {
            enumerate(PermClass::S321, black_box(9), Backend::Structural)
                .unwrap()
                .count()
        })
    });
    group.bench_function("i321_brute_n8", |b| {
        b.iter(|| {
            enumerate(PermClass::I321, black_box(8), Backend::Brute)
                .unwrap()
                .count()
        })
    });
    group.bench_function("prefix_paths_n14", |b| {
        b.iter(|| enumerate_paths(PathKind::Prefix, black_box(14)).count())
    });
    group.finish();
}

fn bench_bijection_pipeline(c: &mut Criterion) {
    let mut group = c.benchmark_group("pipeline");
    group.bench_function("psi_inv_xi_rho_single_n40", |b| {
        let perm = hookline_bench::sample_involution(40);
        b.iter(|| psi_inverse(&xi(&rho(black_box(&perm)).unwrap()).unwrap()).unwrap())
    });
    group.bench_function("psi_inv_xi_rho_over_i321_n12", |b| {
        let members: Vec<_> = enumerate(PermClass::I321, 12, Backend::Structural)
            .unwrap()
            .collect();
        b.iter(|| {
            members
                .iter()
                .map(|p| psi_inverse(&xi(&rho(p).unwrap()).unwrap()).unwrap().size())
                .sum::<usize>()
        })
    });
    group.bench_function("hook_decomposition_box_n14", |b| {
        let spec = BoxSpec::new(14);
        let partitions: Vec<_> = enumerate_in_box(&spec).collect();
        b.iter(|| {
            partitions
                .iter()
                .map(|l| l.hook_decomposition().sum())
                .sum::<usize>()
        })
    });
    group.finish();
}

criterion_group!(benches, bench_class_enumeration, bench_bijection_pipeline);
criterion_main!(benches);
