use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use findom_core::par;
use findom_core::verdicts::{scan_nakayama, ScanPredicate, ScanRegion};
use findom_core::SeriesKind;

fn scans(c: &mut Criterion) {
    let region = ScanRegion {
        n_min: 1,
        n_max: 6,
        max_entry: None,
        kinds: vec![SeriesKind::Linear, SeriesKind::Cyclic],
    };
    let many = par::default_workers().max(2);
    let mut g = c.benchmark_group("scan-combined");
    g.sample_size(10);
    for workers in [1, many] {
        g.bench_with_input(BenchmarkId::from_parameter(workers), &workers, |b, &w| {
            b.iter(|| black_box(scan_nakayama(ScanPredicate::Combined, &region, w)))
        });
    }
    g.finish();
}

criterion_group!(benches, scans);
criterion_main!(benches);
