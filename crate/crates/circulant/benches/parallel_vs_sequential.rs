//! Criterion benches comparing the data-parallel sweeps against a
//! single-worker baseline.

use circulant::cospectral::search_ncsc;
use circulant::par::with_workers;
use circulant::prime::verify_sc_implies_iso;
use circulant::spectra::{inertia, power_sums};
use circulant::CirculantGraph;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

fn bench_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("search_ncsc_n16_s2");
    group.sample_size(10);
    group.bench_function(BenchmarkId::new("workers", 1), |b| {
        b.iter(|| with_workers(Some(1), || search_ncsc(black_box(16), 2, u64::MAX).unwrap()))
    });
    #[cfg(feature = "parallel")]
    group.bench_function(BenchmarkId::new("workers", "auto"), |b| {
        b.iter(|| with_workers(None, || search_ncsc(black_box(16), 2, u64::MAX).unwrap()))
    });
    group.finish();
}

fn bench_prime_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("sc_implies_iso_p13");
    group.sample_size(10);
    group.bench_function(BenchmarkId::new("workers", 1), |b| {
        b.iter(|| with_workers(Some(1), || verify_sc_implies_iso(black_box(13)).unwrap()))
    });
    #[cfg(feature = "parallel")]
    group.bench_function(BenchmarkId::new("workers", "auto"), |b| {
        b.iter(|| with_workers(None, || verify_sc_implies_iso(black_box(13)).unwrap()))
    });
    group.finish();
}

fn bench_kernels(c: &mut Criterion) {
    // The sequential heart of every sweep: exact power sums and certified
    // inertia for one graph.
    let g = CirculantGraph::from_generators(60, &(1..=10).collect::<Vec<_>>()).unwrap();
    c.bench_function("power_sums_n60_to_120", |b| {
        b.iter(|| power_sums(black_box(&g), 120))
    });
    c.bench_function("inertia_n60", |b| b.iter(|| inertia(black_box(&g)).unwrap()));
}

criterion_group!(benches, bench_search, bench_prime_sweep, bench_kernels);
criterion_main!(benches);
