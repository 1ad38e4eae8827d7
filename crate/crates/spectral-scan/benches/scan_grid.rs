//! Sequential vs. parallel throughput of the half-plane classification grid.

use criterion::{criterion_group, criterion_main, Criterion};
use recurrence::classify::ClassifyConfig;
use spectral_scan::scan::{scan_halfplane, GridSpec};
use std::hint::black_box;
use workpool::ExecMode;

fn bench_scan(c: &mut Criterion) {
    let grid = GridSpec {
        ell_max: 2,
        re_min: 0.0,
        re_max: 3.0,
        im_min: -1.0,
        im_max: 1.0,
        step: 0.5,
    };
    let cfg = ClassifyConfig {
        n_cap: 1000,
        ..ClassifyConfig::default()
    };
    let mut group = c.benchmark_group("scan_grid");
    group.sample_size(10);
    group.bench_function("sequential", |b| {
        b.iter(|| scan_halfplane(black_box(grid), &cfg, ExecMode::Sequential))
    });
    group.bench_function("parallel", |b| {
        b.iter(|| scan_halfplane(black_box(grid), &cfg, ExecMode::Parallel))
    });
    group.finish();
}

criterion_group!(benches, bench_scan);
criterion_main!(benches);
