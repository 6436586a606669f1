use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rootvec::{HypothesisSpace, Measure};
use rootvec_cli::run_check;

fn bench_check(c: &mut Criterion) {
    let mut group = c.benchmark_group("run_check");
    group.sample_size(10);
    for n in [3, 6, 20] {
        let s = HypothesisSpace::new((0..n).map(|i| format!("a{i}"))).unwrap();
        let m = Measure::new(&s, (1..=n).map(|i| i as f64).collect()).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, _| {
            b.iter(|| run_check(&m, 20, 0))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_check);
criterion_main!(benches);
