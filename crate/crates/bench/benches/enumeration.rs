use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use dncount::canon::canonical_key;
use dncount::mutation_class::{d_mutation_class, BfsOptions};
use dncount::polygon::enumerate_triangulations;
use dncount::trees::enumerate_star_trees;
use dncount::Quiver;

fn canonical_keys(c: &mut Criterion) {
    let class = d_mutation_class(8, 0, &BfsOptions::default()).unwrap();
    let quivers: Vec<Quiver> = class.representatives().take(200).cloned().collect();
    c.bench_function("canonical_key/d8_x200", |b| {
        b.iter(|| {
            for q in &quivers {
                black_box(canonical_key(q));
            }
        })
    });
}

fn bfs(c: &mut Criterion) {
    let mut group = c.benchmark_group("mutation_class");
    group.sample_size(10);
    group.bench_function("d7_sequential", |b| {
        b.iter(|| {
            d_mutation_class(7, 0, &BfsOptions::default())
                .unwrap()
                .len()
        })
    });
    let par = BfsOptions {
        parallel: true,
        ..BfsOptions::default()
    };
    group.bench_function("d7_parallel", |b| {
        b.iter(|| d_mutation_class(7, 0, &par).unwrap().len())
    });
    group.finish();
}

fn triangulations(c: &mut Criterion) {
    let mut group = c.benchmark_group("triangulations");
    group.sample_size(10);
    group.bench_function("enumerate_n6", |b| {
        b.iter(|| enumerate_triangulations(6, 7).unwrap().len())
    });
    group.finish();
}

fn trees(c: &mut Criterion) {
    let mut group = c.benchmark_group("star_trees");
    group.sample_size(10);
    group.bench_function("enumerate_n10", |b| {
        b.iter(|| enumerate_star_trees(10, 12).unwrap().len())
    });
    group.finish();
}

criterion_group!(benches, canonical_keys, bfs, triangulations, trees);
criterion_main!(benches);
