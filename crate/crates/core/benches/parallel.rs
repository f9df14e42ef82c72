use bezout_core::batch::{reduce_batch, Execution};
use bezout_core::conditions::stable_range_sweep;
use bezout_core::matrices::Matrix;
use bezout_core::rings::{Integers, Ring};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn batch(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mats: Vec<Matrix<Integers>> = (0..256)
        .map(|_| {
            let entries = (0..16).map(|_| Integers.sample(&mut rng, 1000)).collect();
            Matrix::new(Integers, 4, 4, entries).unwrap()
        })
        .collect();
    let mut group = c.benchmark_group("reduce_batch_4x4");
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| reduce_batch(exec, &mats))
        });
    }
    group.finish();
}

fn sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("stable_range_sweep_2_200");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| stable_range_sweep(exec, 2, 200).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, batch, sweep);
criterion_main!(benches);
