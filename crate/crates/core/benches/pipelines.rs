//! Parallel vs sequential timings for the data-parallel kernels.
//!
//! With the default `parallel` feature each kernel runs twice: on rayon's
//! global pool and inside a one-thread pool. Build with
//! `--no-default-features` to time the plain sequential fallback.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use sigma_triples::checks::check_wreath_conjugacy;
use sigma_triples::numtheory::bound_check;
use sigma_triples::permgroup::triples_centralizer;
use sigma_triples::pipeline::{coeffs_classes, coeffs_classes_product_form, coeffs_product};
use sigma_triples::Caps;

type Kernel = (&'static str, fn());

fn kernels() -> Vec<Kernel> {
    vec![
        ("coeffs_classes/60", || {
            coeffs_classes(60);
        }),
        ("triples_centralizer/7", || {
            triples_centralizer(7, &Caps::default()).unwrap();
        }),
        ("bound_check/100000", || {
            bound_check(100_000).unwrap();
        }),
        ("wreath_conjugacy/W(6,3)", || {
            check_wreath_conjugacy(6, 3, 2000).unwrap();
        }),
    ]
}

#[cfg(feature = "parallel")]
fn modes() -> Vec<(&'static str, Option<rayon::ThreadPool>)> {
    let single = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    vec![("parallel", None), ("single-thread", Some(single))]
}

#[cfg(not(feature = "parallel"))]
fn modes() -> Vec<(&'static str, Option<()>)> {
    vec![("sequential", None)]
}

fn bench_kernels(c: &mut Criterion) {
    let mut group = c.benchmark_group("kernels");
    group.sample_size(10);
    for (name, kernel) in kernels() {
        for (mode, pool) in modes() {
            group.bench_function(BenchmarkId::new(name, mode), |b| match &pool {
                #[cfg(feature = "parallel")]
                Some(p) => b.iter(|| p.install(kernel)),
                #[cfg(not(feature = "parallel"))]
                Some(()) => b.iter(kernel),
                None => b.iter(kernel),
            });
        }
    }
    group.finish();
}

fn bench_series(c: &mut Criterion) {
    let mut group = c.benchmark_group("series");
    group.sample_size(10);
    for order in [60usize, 120] {
        group.bench_with_input(BenchmarkId::new("coeffs_product", order), &order, |b, &n| {
            b.iter(|| coeffs_product(n))
        });
        group.bench_with_input(BenchmarkId::new("classes_product_form", order), &order, |b, &n| {
            b.iter(|| coeffs_classes_product_form(n))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_kernels, bench_series);
criterion_main!(benches);
