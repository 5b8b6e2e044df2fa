use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use dstrig_bench::triangle_mix;
use dstrig_core::{
    build_triangle, fixtures, girard_area, girard_area_from_products, integrate_area, pseudo_angle,
    MinkVec3,
};

fn bench_pseudo_angle(c: &mut Criterion) {
    let u = MinkVec3::X;
    let v = MinkVec3::new(1f64.sinh(), 1f64.cosh(), 0.0);
    c.bench_function("pseudo_angle", |b| {
        b.iter(|| pseudo_angle(black_box(&u), black_box(&v)))
    });
}

fn bench_build(c: &mut Criterion) {
    let [p1, p2, p3] = fixtures::ch0_points();
    c.bench_function("build_triangle", |b| {
        b.iter(|| build_triangle(black_box(&p1), black_box(&p2), black_box(&p3)))
    });
}

fn bench_areas(c: &mut Criterion) {
    let tris = triangle_mix(25, 9);
    c.bench_function("girard_area/100", |b| {
        b.iter(|| {
            for t in &tris {
                black_box(girard_area(t).unwrap());
            }
        })
    });
    c.bench_function("girard_area_from_products/100", |b| {
        b.iter(|| {
            for t in &tris {
                black_box(girard_area_from_products(t).unwrap());
            }
        })
    });
}

fn bench_oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("integrate_area");
    group.sample_size(10);
    let tri = fixtures::sp0();
    for n in [16usize, 32, 64] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| integrate_area(black_box(&tri), n).unwrap())
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_pseudo_angle,
    bench_build,
    bench_areas,
    bench_oracle
);
criterion_main!(benches);
