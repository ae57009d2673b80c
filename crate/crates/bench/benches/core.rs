use std::hint::black_box;

use braidsig::lissajous::{percentage_row, Eligibility};
use braidsig::seifert_signature_oracle;
use braidsig::signature::gg_signature;
use braidsig::walks::{hitting_table, GenMeasure, MatrixPredicate};
use braidsig_bench::alternating_word;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn walk(c: &mut Criterion) {
    let mu = GenMeasure::uniform_generators(3).unwrap();
    let mut g = c.benchmark_group("exact_walk_z11");
    g.sample_size(10);
    for steps in [8usize, 12] {
        g.bench_with_input(BenchmarkId::from_parameter(steps), &steps, |b, &k| {
            b.iter(|| hitting_table(&mu, &MatrixPredicate::Z11, black_box(k)).unwrap())
        });
    }
    g.finish();
}

fn signatures(c: &mut Criterion) {
    let mut g = c.benchmark_group("signature");
    for k in [16usize, 48] {
        let w = alternating_word(k);
        g.bench_with_input(BenchmarkId::new("meyer", w.len()), &w, |b, w| {
            b.iter(|| gg_signature(black_box(w)).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("seifert", w.len()), &w, |b, w| {
            b.iter(|| seifert_signature_oracle(black_box(w)))
        });
    }
    g.finish();
}

fn lissajous(c: &mut Criterion) {
    let mut g = c.benchmark_group("percentage_row");
    g.sample_size(10);
    for q in [41u64, 101] {
        g.bench_with_input(BenchmarkId::from_parameter(q), &q, |b, &q| {
            b.iter(|| percentage_row(black_box(q), Eligibility::FullRange).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, walk, signatures, lissajous);
criterion_main!(benches);
