use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use homlie::cochain::Complex;
use homlie::exactnum::int;
use homlie::fixtures;
use homlie::rmatrix::{cybe_sum_with, Multivector};
use homlie::structures::adjoint_rep;
use homlie::Exec;

const MODES: [(&str, Exec); 2] = [
    ("sequential", Exec::Sequential),
    ("parallel", Exec::Parallel),
];

fn coboundary(c: &mut Criterion) {
    let complex = Complex::new(adjoint_rep(&fixtures::a2_semidirect(), 1));
    let mut group = c.benchmark_group("coboundary_matrix_deg2");
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| black_box(complex.coboundary_matrix_with(exec, 2).unwrap()))
        });
    }
    group.finish();
}

fn cohomology(c: &mut Criterion) {
    let complex = Complex::new(adjoint_rep(&fixtures::a2_semidirect(), 0));
    let mut group = c.benchmark_group("cohomology_deg2");
    group.sample_size(20);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| black_box(complex.cohomology_dim_with(exec, 2)))
        });
    }
    group.finish();
}

fn triple_sum(c: &mut Criterion) {
    let g = fixtures::a2_semidirect();
    let r = Multivector::two(4, [((0, 1), int(1)), ((1, 3), int(2)), ((2, 3), int(-1))]).unwrap();
    let mut group = c.benchmark_group("cybe_sum");
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| black_box(cybe_sum_with(exec, &g, &r).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, coboundary, cohomology, triple_sum);
criterion_main!(benches);
