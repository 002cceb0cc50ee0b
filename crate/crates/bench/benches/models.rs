use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use threetypes_bench::{binerve_of, squares};
use threetypes_core::corpus;
use threetypes_core::crossed::{cat2_from_crossed_square, check_crossed_square, check_two_crossed};
use threetypes_core::functors::{quadratic_from_square, quadratic_from_simplicial, two_crossed_from_square};
use threetypes_core::group::builtin::{dihedral, quaternion8};
use threetypes_core::group::is_isomorphic;
use threetypes_core::homotopy::homotopy_square;
use threetypes_core::simplicial::{codiagonal, explicit_codiagonal};

fn checkers(c: &mut Criterion) {
    let mut g = c.benchmark_group("check");
    for (name, s) in squares() {
        g.bench_with_input(BenchmarkId::new("crossed_square", name), &s, |b, s| {
            b.iter(|| check_crossed_square(black_box(s)))
        });
        let t = two_crossed_from_square(&s);
        g.bench_with_input(BenchmarkId::new("two_crossed", name), &t, |b, t| {
            b.iter(|| check_two_crossed(black_box(t)))
        });
    }
    g.finish();
}

fn functors(c: &mut Criterion) {
    let mut g = c.benchmark_group("functor");
    for (name, s) in squares() {
        g.bench_with_input(BenchmarkId::new("cat2", name), &s, |b, s| {
            b.iter(|| cat2_from_crossed_square(black_box(s)))
        });
        g.bench_with_input(BenchmarkId::new("quadratic", name), &s, |b, s| {
            b.iter(|| quadratic_from_square(black_box(s)))
        });
        g.bench_with_input(BenchmarkId::new("homotopy", name), &s, |b, s| {
            b.iter(|| homotopy_square(black_box(s)))
        });
    }
    let nerve = corpus::nerve_a3_s3(3);
    g.bench_function("quadratic_from_simplicial/nerve-a3-s3", |b| {
        b.iter(|| quadratic_from_simplicial(black_box(&nerve)))
    });
    g.finish();
}

fn codiagonals(c: &mut Criterion) {
    let mut g = c.benchmark_group("codiagonal");
    g.sample_size(10);
    for (name, s) in squares() {
        let bn = binerve_of(&s);
        g.bench_with_input(BenchmarkId::new("generic", name), &bn, |b, bn| {
            b.iter(|| codiagonal(black_box(bn)))
        });
        g.bench_with_input(BenchmarkId::new("explicit", name), &s, |b, s| {
            b.iter(|| explicit_codiagonal(black_box(s)))
        });
    }
    g.finish();
}

fn isomorphism(c: &mut Criterion) {
    let (d8, q8) = (dihedral(4), quaternion8());
    c.bench_function("is_isomorphic/d8-q8", |b| b.iter(|| is_isomorphic(black_box(&d8), black_box(&q8))));
}

criterion_group!(benches, checkers, functors, codiagonals, isomorphism);
criterion_main!(benches);
