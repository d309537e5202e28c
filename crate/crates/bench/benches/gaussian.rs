use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use wahlrank_core::{
    gamma_rank_with, normal_form, p1_gauss_rank, parse_poly, r_operator, Arithmetic, GaussianMaps, PlaneCurve,
};

fn polynomial_kernels(c: &mut Criterion) {
    let f = parse_poly("x^10 + y^10 + 1").unwrap();
    let p = parse_poly("x^3*y^2 + 2*x*y^4 - y^7").unwrap();
    c.bench_function("r_operator_m2_d10", |b| b.iter(|| r_operator(black_box(&p), &f, 2)));
    let big = r_operator(&p, &f, 2);
    c.bench_function("normal_form_d10", |b| b.iter(|| normal_form(black_box(&big), &f).unwrap()));
}

fn fermat_ranks(c: &mut Criterion) {
    let mut group = c.benchmark_group("fermat_rank");
    group.sample_size(10);
    for (d, k) in [(8, 1), (10, 1), (10, 2)] {
        let curve = PlaneCurve::fermat(d).unwrap();
        for (label, arithmetic) in [
            ("exact", Arithmetic::Exact),
            ("modular", Arithmetic::Modular(vec![1_000_003])),
        ] {
            group.bench_with_input(BenchmarkId::new(label, format!("d{d}_k{k}")), &k, |b, &k| {
                b.iter(|| {
                    let mut maps = GaussianMaps::new(&curve);
                    gamma_rank_with(&mut maps, k, &arithmetic).unwrap().rank
                })
            });
        }
    }
    group.finish();
}

fn generic_rank(c: &mut Criterion) {
    let curve = PlaneCurve::new(
        parse_poly("x^8 + y^8 + 1 + x^3*y^4 - 2*x^5*y + x*y").unwrap(),
        Default::default(),
    )
    .unwrap();
    let mut group = c.benchmark_group("generic_octic");
    group.sample_size(10);
    group.bench_function("exact_k1", |b| {
        b.iter(|| gamma_rank_with(&mut GaussianMaps::new(&curve), 1, &Arithmetic::Exact).unwrap().rank)
    });
    group.finish();
}

fn p1_sweep(c: &mut Criterion) {
    c.bench_function("p1_rank_8_8_3", |b| b.iter(|| p1_gauss_rank(black_box(8), 8, 3)));
}

criterion_group!(benches, polynomial_kernels, fermat_ranks, generic_rank, p1_sweep);
criterion_main!(benches);
