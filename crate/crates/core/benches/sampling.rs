use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use skewloci::exact::SkewMatrix;
use skewloci::lie::{catalog, rank_stratification_histogram};
use skewloci::strata::{rank_profile, search_constant_rank, SkewLinearSpace};
use skewloci::Execution;

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn profile(c: &mut Criterion) {
    let basis = (0..4)
        .map(|k| {
            let upper: Vec<i64> = (0..28).map(|t| ((t * 7 + k * 3) % 7) as i64 - 3).collect();
            SkewMatrix::from_upper_ints(8, &upper).unwrap()
        })
        .collect();
    let u = SkewLinearSpace::new(8, basis).unwrap();
    let mut group = c.benchmark_group("rank_profile_n8_m4");
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| rank_profile(&u, 1, 400, exec))
        });
    }
    group.finish();
}

fn histogram(c: &mut Criterion) {
    let sl3 = catalog::sl3();
    let mut group = c.benchmark_group("orbit_histogram_sl3");
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| rank_stratification_histogram(&sl3, 1, 2000, exec))
        });
    }
    group.finish();
}

fn search(c: &mut Criterion) {
    let mut group = c.benchmark_group("search_n5_r4_m4");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| search_constant_rank(5, 4, 4, 0, 40, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, profile, histogram, search);
criterion_main!(benches);
