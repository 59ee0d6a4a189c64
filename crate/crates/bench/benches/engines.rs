use bklab_bench::BenchJob;
use bklab_core::engine::{main_term_grid, EngineConfig, EngineKind};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn engines(c: &mut Criterion) {
    let mut group = c.benchmark_group("main_term");
    group.sample_size(10);
    // 128 -> 32 keeps the naive engine in the millisecond range.
    let job = BenchJob::new(129, 33, 10.0);
    let q = job.potential().unwrap();
    let out = job.output_grid().unwrap();
    for engine in [EngineKind::Naive, EngineKind::Separable, EngineKind::Spectral] {
        let cfg = EngineConfig::new(engine);
        group.bench_with_input(BenchmarkId::from_parameter(engine.name()), &cfg, |b, cfg| {
            b.iter(|| main_term_grid(&q, job.lambda, &out, cfg).unwrap())
        });
    }
    group.finish();
}

fn spectral_scaling(c: &mut Criterion) {
    let mut group = c.benchmark_group("spectral_input_size");
    group.sample_size(10);
    for n in [257, 513, 1025] {
        let job = BenchJob::new(n, 65, 40.0);
        let q = job.potential().unwrap();
        let out = job.output_grid().unwrap();
        let cfg = EngineConfig::new(EngineKind::Spectral);
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, _| {
            b.iter(|| main_term_grid(&q, job.lambda, &out, &cfg).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, engines, spectral_scaling);
criterion_main!(benches);
