use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use skewcode::classify::enumerate_ideals;
use skewcode::duality::{brute_dual, InnerProductKind};
use skewcode_bench::{dense, f3_skew, f4_frobenius};

fn skew_arithmetic(c: &mut Criterion) {
    let ctx = f3_skew(6);
    let sk = ctx.skew();
    let f = dense(&ctx, 24);
    let g = dense(&ctx, 12);
    c.bench_function("skew_mul 24x12", |b| {
        b.iter(|| sk.mul(black_box(&f), black_box(&g)))
    });
    let prod = sk.mul(&f, &g);
    c.bench_function("right_divmod 35/12", |b| {
        b.iter(|| sk.right_divmod(black_box(&prod), black_box(&g)).unwrap())
    });
    c.bench_function("reduce mod x^6-1", |b| {
        b.iter(|| ctx.reduce(black_box(&prod)))
    });
}

fn exhaustive(c: &mut Criterion) {
    let small = f3_skew(2);
    c.bench_function("enumerate_ideals F3 n=2", |b| {
        b.iter(|| enumerate_ideals(black_box(&small)).unwrap())
    });
    let big = f4_frobenius();
    let mut group = c.benchmark_group("f4 n=4");
    group.sample_size(10);
    group.bench_function("enumerate_ideals", |b| {
        b.iter(|| enumerate_ideals(black_box(&big)).unwrap())
    });
    let span = big.span(&[dense(&big, 3)]).unwrap();
    group.bench_function("brute_dual", |b| {
        b.iter(|| brute_dual(&big, black_box(&span), InnerProductKind::Hermitian).unwrap())
    });
    group.finish();
}

criterion_group!(benches, skew_arithmetic, exhaustive);
criterion_main!(benches);
