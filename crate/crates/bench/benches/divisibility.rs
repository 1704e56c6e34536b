use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use pdiv_core::divisibility::{certify_minimal, is_divisible, Minimality};
use pdiv_core::io::{canonical_code, enumerate_graphs, pattern};
use pdiv_core::perfection::is_perfect;
use pdiv_core::{CorpusFilter, Limits, PatternName, Scheme};

fn certification(c: &mut Criterion) {
    let limits = Limits::default();
    let groetzsch = pattern(PatternName::Groetzsch).unwrap();
    let c7 = pattern(PatternName::C7).unwrap();
    c.bench_function("groetzsch_mnpd", |b| {
        b.iter(|| certify_minimal(black_box(&groetzsch), Minimality::Mnpd, &limits).unwrap())
    });
    c.bench_function("c7_pwd_bounded_3", |b| {
        b.iter(|| is_divisible(black_box(&c7), &Scheme::PwdBounded(3), &limits).unwrap())
    });
}

fn corpus(c: &mut Criterion) {
    let limits = Limits::default();
    let graphs = enumerate_graphs(6, CorpusFilter::default()).unwrap();
    let mut group = c.benchmark_group("all_graphs_n6");
    group.sample_size(20);
    group.bench_function("pd", |b| {
        b.iter(|| graphs.iter().filter(|g| is_divisible(g, &Scheme::Pd, &limits).unwrap().verdict).count())
    });
    group.bench_function("perfection", |b| {
        b.iter(|| graphs.iter().filter(|g| is_perfect(g, None).unwrap().perfect).count())
    });
    group.bench_function("canonical_code", |b| {
        b.iter(|| graphs.iter().map(canonical_code).count())
    });
    group.finish();
    let mut group = c.benchmark_group("enumeration");
    group.sample_size(10);
    group.bench_function("n7", |b| b.iter(|| enumerate_graphs(7, CorpusFilter::default()).unwrap().len()));
    group.finish();
}

criterion_group!(benches, certification, corpus);
criterion_main!(benches);
