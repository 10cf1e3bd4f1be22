use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rabu_bench::word;
use rabu_core::fixtures::{d1, d3};
use rabu_core::gwreath::{gwp_generate, GwpSpec};
use rabu_core::universal::{ball_order_formula, ball_stabilizer};
use rabu_core::{Ball, Caps};

fn words(c: &mut Criterion) {
    let d = d3();
    let mut g = c.benchmark_group("reduce");
    for len in [8, 32, 128] {
        let w = word(&d, len, 7);
        g.bench_with_input(BenchmarkId::from_parameter(len), &w, |b, w| b.iter(|| d.reduce(black_box(w)).unwrap()));
    }
    g.finish();

    let w = d.reduce(&word(&d, 12, 3)).unwrap();
    c.bench_function("position_poset", |b| b.iter(|| d.position_poset(black_box(&w)).unwrap()));
}

fn balls(c: &mut Criterion) {
    let caps = Caps::default();
    let mut g = c.benchmark_group("ball_build");
    for (name, d, r) in [("D1", d1(), 4), ("D3", d3(), 3)] {
        g.bench_function(BenchmarkId::new(name, r), |b| b.iter(|| Ball::build(&d, black_box(r), &caps).unwrap()));
    }
    g.finish();
}

fn orders(c: &mut Criterion) {
    let caps = Caps::default();
    let d = d3();
    let mut g = c.benchmark_group("ball_order");
    g.sample_size(10);
    g.bench_function("generated D3 n=2", |b| b.iter(|| ball_stabilizer(&d, black_box(2), &caps).unwrap().order()));
    g.bench_function("formula D3 n=6", |b| b.iter(|| ball_order_formula(&d, black_box(6)).unwrap()));
    g.finish();

    let w = d.parse_word("s t u").unwrap();
    let spec = GwpSpec::for_word(&d, &w).unwrap();
    c.bench_function("gwp_generate s t u", |b| b.iter(|| gwp_generate(black_box(&spec), caps.enumeration).unwrap().order()));
}

criterion_group!(benches, words, balls, orders);
criterion_main!(benches);
