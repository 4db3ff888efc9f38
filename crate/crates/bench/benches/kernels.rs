use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use shannon_bench::{empty_hex, hex_midgame, random_graph};
use shannon_core::census::{canonical_form, classify, enumerate_connected};
use shannon_core::detect::{fill_in, threatens, threatens_by_definition};
use shannon_core::figures;
use shannon_core::solver::solve_graph;
use shannon_core::{is_captured, Player, Position, Solver, VertexSet};

fn solver(c: &mut Criterion) {
    let mut group = c.benchmark_group("solver");
    let hex3 = empty_hex(3);
    group.bench_function("empty hex 3", |b| {
        b.iter(|| solve_graph(black_box(&hex3), Player::Short).unwrap())
    });
    let mid = hex_midgame();
    group.bench_function("hex 4 midgame, fresh table", |b| {
        b.iter_batched(
            Solver::new,
            |mut s| s.solve(&Position::new(mid.clone(), Player::Short).unwrap()),
            BatchSize::SmallInput,
        )
    });
    let f = figures::supporting_sets();
    let area = f.set(&["e", "f", "g", "h"]);
    group.bench_function("four-terminal local game", |b| {
        b.iter(|| is_captured(black_box(&f.graph), area).unwrap())
    });
    group.finish();
}

fn detectors(c: &mut Criterion) {
    let mut group = c.benchmark_group("detectors");
    let g = random_graph(24, 200, 7);
    group.bench_function("fill-in, 24 vertices", |b| b.iter(|| fill_in(black_box(&g)).unwrap()));
    let h = empty_hex(5);
    group.bench_function("fill-in, empty hex 5", |b| b.iter(|| fill_in(black_box(&h)).unwrap()));

    let small = random_graph(10, 350, 11);
    let a = VertexSet::from_iter([1, 2]);
    let t = VertexSet::from_iter([3, 4, 5]);
    group.bench_function("threat fast path", |b| {
        b.iter(|| threatens(black_box(&small), a, t).unwrap())
    });
    group.bench_function("threat by definition", |b| {
        b.iter(|| threatens_by_definition(black_box(&small), a, t).unwrap())
    });
    group.finish();
}

fn census(c: &mut Criterion) {
    let mut group = c.benchmark_group("census");
    let graphs = enumerate_connected(7).unwrap();
    group.bench_function("classify order 7", |b| {
        b.iter(|| graphs.iter().map(classify).filter(|p| p.transverse_and_triangle_free()).count())
    });
    let g = random_graph(10, 500, 3);
    group.bench_function("canonical form, 10 vertices", |b| {
        b.iter(|| canonical_form(black_box(&g)).unwrap())
    });
    group.sample_size(10);
    group.bench_function("enumerate order 7", |b| b.iter(|| enumerate_connected(7).unwrap()));
    group.finish();
}

criterion_group!(benches, solver, detectors, census);
criterion_main!(benches);
