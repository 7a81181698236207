use criterion::{black_box, criterion_group, criterion_main, BatchSize, Criterion};

use golden_bench::toric_context;
use golden_core::code::{build_toric_code, gf2_rank};
use golden_core::decode::{run_trial, NoiseModel, Pauli};
use golden_core::group::{enumerate_group, toric_group, Tessellation};
use golden_core::PrincipalIdeal;

fn construction(c: &mut Criterion) {
    c.bench_function("toric_group_p32", |b| b.iter(|| toric_group(black_box(32)).unwrap()));
    let g = toric_group(32).unwrap();
    c.bench_function("tessellation_p32", |b| b.iter(|| Tessellation::from_group(black_box(&g))));
    c.bench_function("toric_code_p16", |b| b.iter(|| build_toric_code(black_box(16)).unwrap()));
    // Inadmissible ideals fail during generator reduction; this times
    // that check.
    c.bench_function("reject_ideal_2", |b| {
        b.iter(|| enumerate_group(&PrincipalIdeal::from_int(2).unwrap()).is_err())
    });
}

fn rank(c: &mut Criterion) {
    let code = build_toric_code(24).unwrap();
    c.bench_function("gf2_rank_toric_p24", |b| b.iter(|| gf2_rank(black_box(&code.hx), None)));
}

fn decoding(c: &mut Criterion) {
    let ctx = toric_context(16);
    let mut trial = 0u64;
    for pauli in [Pauli::Z, Pauli::X] {
        c.bench_function(&format!("decode_toric_p16_{pauli}_w3"), |b| {
            b.iter_batched(
                || {
                    trial += 1;
                    trial
                },
                |t| run_trial(&ctx, pauli, NoiseModel::FixedWeight(3), 1, t),
                BatchSize::SmallInput,
            )
        });
    }
}

criterion_group!(benches, construction, rank, decoding);
criterion_main!(benches);
