use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use coverlat::lattice::enumerate_sublattices;
use coverlat::sweep::{random_lattices, verify_all, SweepConfig};
use coverlat::Exec;

const MODES: [(&str, Exec); 2] = [
    ("sequential", Exec::Sequential),
    ("parallel", Exec::Parallel),
];

fn enumerate(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_sublattices_n4");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| enumerate_sublattices(4, exec).unwrap())
        });
    }
    group.finish();
}

fn exhaustive_sweep(c: &mut Criterion) {
    let lattices = enumerate_sublattices(4, Exec::default()).unwrap();
    let cfg = SweepConfig::default();
    let mut group = c.benchmark_group("verify_exhaustive_n4");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| verify_all(&lattices, &cfg, exec))
        });
    }
    group.finish();
}

fn random_sweep(c: &mut Criterion) {
    let cfg = SweepConfig::default();
    let mut group = c.benchmark_group("verify_random_200");
    group.sample_size(10);
    for n in [5, 6] {
        let lattices = random_lattices(n, 200, 7).unwrap();
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, n), &lattices, |b, l| {
                b.iter(|| verify_all(l, &cfg, exec))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, enumerate, exhaustive_sweep, random_sweep);
criterion_main!(benches);
