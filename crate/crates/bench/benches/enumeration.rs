use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use lwd_bench::fixtures;
use lwd_core::{local_weight_distribution, weight_distribution, NeighborTester, SweepOptions};

fn bench_sweeps(c: &mut Criterion) {
    let opts = SweepOptions::default();
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    for (name, code) in fixtures() {
        group.bench_function(format!("{name}/weights"), |b| {
            b.iter(|| weight_distribution(black_box(&code), &opts).unwrap())
        });
        group.bench_function(format!("{name}/lwd-brute"), |b| {
            b.iter(|| local_weight_distribution(black_box(&code), false, &opts).unwrap())
        });
        group.bench_function(format!("{name}/lwd-shortcuts"), |b| {
            b.iter(|| local_weight_distribution(black_box(&code), true, &opts).unwrap())
        });
    }
    group.finish();
}

fn bench_neighbor_test(c: &mut Criterion) {
    for (name, code) in fixtures() {
        let tester = NeighborTester::new(&code).unwrap();
        let words: Vec<_> = lwd_core::enumerate_codewords(code.generator(), Default::default())
            .unwrap()
            .skip(1)
            .take(4096)
            .collect();
        c.bench_function(&format!("neighbor-test/{name}"), |b| {
            b.iter(|| {
                words
                    .iter()
                    .filter(|w| tester.is_neighbor(black_box(w)))
                    .count()
            })
        });
    }
}

criterion_group!(benches, bench_sweeps, bench_neighbor_test);
criterion_main!(benches);
