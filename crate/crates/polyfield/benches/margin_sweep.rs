//! Parallel-vs-sequential comparison of the exact dissipativity sweep. Each
//! sample is an independent exact-arithmetic margin evaluation, so the sweep
//! scales close to linearly with worker count.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use workpool::ExecMode;

fn bench_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("margin_sweep");
    group.sample_size(10);
    for &count in &[16usize, 48] {
        group.bench_with_input(
            BenchmarkId::new("sequential", count),
            &count,
            |b, &count| {
                b.iter(|| {
                    black_box(polyfield::margin_sweep(
                        7,
                        count,
                        5,
                        ExecMode::Sequential,
                    ))
                })
            },
        );
        group.bench_with_input(BenchmarkId::new("parallel", count), &count, |b, &count| {
            b.iter(|| black_box(polyfield::margin_sweep(7, count, 5, ExecMode::Parallel)))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_sweep);
criterion_main!(benches);
