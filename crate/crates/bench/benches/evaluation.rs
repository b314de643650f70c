use std::hint::black_box;

use bateman::{
    bateman_k, bateman_k_gen, derivative_nu, havelock_h, ki, laplace_subject, run_suite, FunctionId, GenParams,
    QuadConfig,
};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn closed_forms(c: &mut Criterion) {
    let cfg = QuadConfig::default();
    let mut g = c.benchmark_group("closed");
    g.bench_function("k_even_12", |b| {
        b.iter(|| bateman_k(black_box(12.0), black_box(2.5), &cfg))
    });
    g.bench_function("k_odd_7", |b| {
        b.iter(|| bateman_k(black_box(7.0), black_box(2.5), &cfg))
    });
    g.bench_function("h_even_6", |b| {
        b.iter(|| havelock_h(black_box(6.0), black_box(2.5), &cfg))
    });
    g.bench_function("ki_10", |b| b.iter(|| ki(black_box(10u32), black_box(2.5), &cfg)));
    g.finish();
}

fn quadrature(c: &mut Criterion) {
    let cfg = QuadConfig::default();
    let mut g = c.benchmark_group("quadrature");
    for x in [0.5, 2.0, 8.0] {
        g.bench_with_input(BenchmarkId::new("k_1.3", x), &x, |b, &x| {
            b.iter(|| bateman_k(1.3, black_box(x), &cfg))
        });
        g.bench_with_input(BenchmarkId::new("h_1.3", x), &x, |b, &x| {
            b.iter(|| havelock_h(1.3, black_box(x), &cfg))
        });
    }
    let p = GenParams::new(0.7, 1.5, 0.5).unwrap();
    g.bench_function("kgen", |b| b.iter(|| bateman_k_gen(p, black_box(1.0), &cfg)));
    g.bench_function("dk_dnu", |b| {
        b.iter(|| derivative_nu(FunctionId::BatemanK, black_box(2.5), 1.0, 1, &cfg))
    });
    g.bench_function("laplace_h0", |b| {
        b.iter(|| laplace_subject("eq53_h0", black_box(2.0), &[], &cfg))
    });
    g.finish();
}

fn suite(c: &mut Criterion) {
    let cfg = QuadConfig::default();
    let mut g = c.benchmark_group("suite");
    g.sample_size(10);
    g.bench_function("eq3x", |b| b.iter(|| run_suite(Some("(3"), &cfg, 1)));
    g.finish();
}

criterion_group!(benches, closed_forms, quadrature, suite);
criterion_main!(benches);
