use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sbl_core::{build_arrangement, decompose, Catalog, Regime, SpaceId};

fn arrangement(c: &mut Criterion) {
    let mut g = c.benchmark_group("arrangement");
    for r in Regime::ALL {
        let cat = Catalog::builtin(SpaceId::default_for(r));
        g.bench_with_input(BenchmarkId::from_parameter(r), &cat, |b, cat| {
            b.iter(|| build_arrangement(cat).unwrap())
        });
    }
    g.finish();
}

fn verify(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify");
    g.sample_size(10);
    for r in Regime::ALL {
        let cat = Catalog::builtin(SpaceId::default_for(r));
        g.bench_with_input(BenchmarkId::from_parameter(r), &cat, |b, cat| {
            b.iter(|| decompose(cat).unwrap().report())
        });
    }
    g.finish();
}

criterion_group!(benches, arrangement, verify);
criterion_main!(benches);
