//! Criterion benchmarks comparing the sequential path with the parallel one.
//!
//! With the default `parallel` feature the run-suite benchmarks appear twice,
//! once pinned to a single rayon worker and once on all available cores; the
//! single-worker numbers are the honest sequential baseline. Building with
//! `--no-default-features` benches the rayon-free fallback instead.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use bernid::identity::{run_suite, IdentityId, SuiteOptions};
use bernid::sequences::SequenceCache;

fn bench_sequences(c: &mut Criterion) {
    c.bench_function("bernoulli_numbers_to_200", |b| {
        b.iter(|| {
            let mut cache = SequenceCache::new();
            cache.ensure_bernoulli(200);
            black_box(cache.bernoulli(200).clone())
        })
    });
    c.bench_function("euler_polys_to_60", |b| {
        b.iter(|| {
            let mut cache = SequenceCache::new();
            cache.ensure_euler_polys(60);
            black_box(cache.epoly(60).degree())
        })
    });
    c.bench_function("bernoulli_egf_order_100", |b| {
        b.iter(|| black_box(bernid::series::bernoulli_egf(100).coeff(100).clone()))
    });
}

fn suite_workload(ids: &[IdentityId], n_max: u32) -> bool {
    let mut cache = SequenceCache::new();
    let options = SuiteOptions {
        n_max: Some(n_max),
        ..Default::default()
    };
    run_suite(&mut cache, ids, &options).all_equal()
}

fn bench_suite(c: &mut Criterion) {
    let cases: [(&str, Vec<IdentityId>, u32); 3] = [
        ("eq1_sweep_80", vec![IdentityId::Eq1], 80),
        ("lemma4_sweep_16", vec![IdentityId::Lemma4], 16),
        (
            "scalar_block_60",
            vec![
                IdentityId::Eq1Restated,
                IdentityId::Eq2,
                IdentityId::Eq3,
                IdentityId::RewriteH,
                IdentityId::RewriteL,
            ],
            60,
        ),
    ];

    for (name, ids, n_max) in &cases {
        #[cfg(feature = "parallel")]
        {
            let single = rayon::ThreadPoolBuilder::new()
                .num_threads(1)
                .build()
                .expect("pool");
            c.bench_function(&format!("{name}/workers-1"), |b| {
                b.iter(|| single.install(|| black_box(suite_workload(ids, *n_max))))
            });
            c.bench_function(&format!("{name}/workers-all"), |b| {
                b.iter(|| black_box(suite_workload(ids, *n_max)))
            });
        }
        #[cfg(not(feature = "parallel"))]
        c.bench_function(&format!("{name}/sequential"), |b| {
            b.iter(|| black_box(suite_workload(ids, *n_max)))
        });
    }
}

criterion_group!(benches, bench_sequences, bench_suite);
criterion_main!(benches);
