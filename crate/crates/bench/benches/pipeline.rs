use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use fullerene_bench::{buckminster, buckminster_spiral};
use fullerene_core::facetgraph::induced_subgraph;
use fullerene_core::spectral::{char_poly, eigenvalues, newton_vector, DEFAULT_TOLERANCE};
use fullerene_core::{canonical_spiral, enumerate_isomers, wind, AdjacencyMatrix, GraphKind};

fn spirals(c: &mut Criterion) {
    let spiral = buckminster_spiral();
    let dual = buckminster();
    c.bench_function("wind C60", |b| b.iter(|| wind(black_box(&spiral)).unwrap()));
    c.bench_function("canonical spiral C60", |b| b.iter(|| canonical_spiral(black_box(&dual)).unwrap()));
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    group.bench_function("C40", |b| b.iter(|| enumerate_isomers(black_box(40), false).unwrap()));
    group.finish();
}

fn spectra(c: &mut Criterion) {
    let dual = buckminster();
    let t6 = AdjacencyMatrix::from_graph(induced_subgraph(&dual, GraphKind::Hexagon).graph());
    let t = AdjacencyMatrix::from_graph(induced_subgraph(&dual, GraphKind::Full).graph());
    c.bench_function("newton vector C60 T6 k<=24", |b| b.iter(|| newton_vector(black_box(&t6), 24).unwrap()));
    c.bench_function("newton vector C60 T6 k<=100", |b| b.iter(|| newton_vector(black_box(&t6), 100).unwrap()));
    c.bench_function("char poly C60 T", |b| b.iter(|| char_poly(black_box(&t))));
    c.bench_function("eigenvalues C60 T", |b| b.iter(|| eigenvalues(black_box(&t), DEFAULT_TOLERANCE).unwrap()));
}

criterion_group!(benches, spirals, spectra);
criterion_main!(benches);
