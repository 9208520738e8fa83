//! Full verification run, data-parallel against sequential sweeps.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use clifford_spinor::verify::{run, Execution, RunConfig, Suite};

fn sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    for samples in [200, 1000] {
        for execution in [Execution::Sequential, Execution::Parallel] {
            let cfg = RunConfig::default().with_samples(samples).with_execution(execution);
            let name = format!("{execution:?}").to_lowercase();
            group.bench_with_input(BenchmarkId::new(name, samples), &cfg, |b, cfg| b.iter(|| run(cfg, &Suite::ALL)));
        }
    }
    group.finish();
}

criterion_group!(benches, sweeps);
criterion_main!(benches);
