use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use corona_core::catalog::search_equienergetic;
use corona_core::par::Execution;
use corona_core::verify::{run_verify_suite, SuiteConfig};

const MODES: [(&str, Execution); 2] = [
    ("parallel", Execution::Parallel),
    ("sequential", Execution::Sequential),
];

fn verify_suite(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_suite");
    group.sample_size(10);
    for (name, execution) in MODES {
        let cfg = SuiteConfig {
            n1_max: 8,
            n2_max: 6,
            pairs: 400,
            execution,
            ..SuiteConfig::default()
        };
        group.bench_with_input(BenchmarkId::new(name, cfg.pairs), &cfg, |b, cfg| {
            b.iter(|| run_verify_suite(cfg))
        });
    }
    group.finish();
}

fn equienergetic_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("equienergetic_search");
    group.sample_size(10);
    for (name, execution) in MODES {
        group.bench_with_input(BenchmarkId::new(name, 10), &execution, |b, &exec| {
            b.iter(|| search_equienergetic(10, exec))
        });
    }
    group.finish();
}

criterion_group!(benches, verify_suite, equienergetic_search);
criterion_main!(benches);
