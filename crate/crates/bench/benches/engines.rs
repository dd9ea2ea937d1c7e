use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use num_bigint::BigInt;

use skewband_core::band::build_integer_matrix;
use skewband_core::det::determinant_poly_modular;
use skewband_core::graph::{cycle_count, GraphSpec};
use skewband_core::rank::{nullity_fraction_free, nullity_mod_p, smallest_admissible_prime};
use skewband_core::{build_line_graph, determinant_poly, BandMatrixSpec};

fn graph(c: &mut Criterion) {
    let mut g = c.benchmark_group("graph");
    let n: BigInt = format!("9{}", "7".repeat(999)).parse().unwrap();
    for k in [1_000u64, 100_000, 1_000_000] {
        g.bench_with_input(BenchmarkId::new("thousand_digit_n", k), &k, |b, &k| {
            b.iter(|| cycle_count(&GraphSpec::new(black_box(&n), k).unwrap()))
        });
    }
    g.finish();
}

fn line_graph(c: &mut Criterion) {
    let mut g = c.benchmark_group("line_graph");
    g.sample_size(10);
    for k in [100u64, 300, 1000] {
        g.bench_with_input(BenchmarkId::from_parameter(k), &k, |b, &k| {
            b.iter(|| build_line_graph(black_box(k)).unwrap())
        });
    }
    let lg = build_line_graph(1000).unwrap();
    g.bench_function("lookup_k1000", |b| {
        b.iter(|| lg.nullity_at(black_box(543_210)))
    });
    g.finish();
}

fn rank(c: &mut Criterion) {
    let mut g = c.benchmark_group("rank");
    g.sample_size(10);
    for (n, k) in [(100u64, 9u64), (420, 20)] {
        let m = build_integer_matrix(BandMatrixSpec::new(n, k).unwrap()).unwrap();
        let p = smallest_admissible_prime(k).unwrap();
        let id = format!("n{n}_k{k}");
        g.bench_function(BenchmarkId::new("mod_p", &id), |b| {
            b.iter(|| nullity_mod_p(&m, &p))
        });
        g.bench_function(BenchmarkId::new("fraction_free", &id), |b| {
            b.iter(|| nullity_fraction_free(&m))
        });
    }
    g.finish();
}

fn det_poly(c: &mut Criterion) {
    let mut g = c.benchmark_group("det_poly");
    g.sample_size(10);
    for n in [16u64, 40] {
        let spec = BandMatrixSpec::new(n, n / 3).unwrap();
        g.bench_with_input(BenchmarkId::new("exact", n), &spec, |b, &s| {
            b.iter(|| determinant_poly(s).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("modular", n), &spec, |b, &s| {
            b.iter(|| determinant_poly_modular(s).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, graph, line_graph, rank, det_poly);
criterion_main!(benches);
