use criterion::{criterion_group, criterion_main, Criterion};

use golden_core::decode::lemma::{search_lemma_4d, SearchConfig};
use golden_core::decode::{verify_lemma_120cell, verify_lemma_2d};
use golden_core::group::build_120cell_skeleton;

fn lemmas(c: &mut Criterion) {
    let mut group = c.benchmark_group("lemmas");
    group.sample_size(10);
    group.bench_function("plane", |b| b.iter(|| verify_lemma_2d().unwrap()));
    group.bench_function("skeleton_120cell", |b| b.iter(|| build_120cell_skeleton().unwrap()));
    group.bench_function("lemma_120cell", |b| b.iter(|| verify_lemma_120cell().unwrap()));
    group.bench_function("search4d_depth2", |b| {
        b.iter(|| search_lemma_4d(SearchConfig { max_len: 2, budget: 1_000 }).unwrap())
    });
    group.finish();
}

criterion_group!(benches, lemmas);
criterion_main!(benches);
