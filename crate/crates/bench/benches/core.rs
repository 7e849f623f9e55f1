use std::f64::consts::PI;
use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use num_complex::Complex64;
use summa_core::identity_catalog::verify_all;
use summa_core::quadrature::{integrate_oscillatory_semiinf, OscillatoryKernel};
use summa_core::special_functions::{
    cosine_integral, digamma, hurwitz_zeta, log_barnes_g, stieltjes_gamma,
};
use summa_core::summation_engines::{abel_plana, poisson_semiinf, Analytic};

fn special_functions(c: &mut Criterion) {
    c.bench_function("Ci(7.3)", |b| b.iter(|| cosine_integral(black_box(7.3))));
    c.bench_function("psi(0.37)", |b| b.iter(|| digamma(black_box(0.37))));
    c.bench_function("zeta(-1.5, 0.25)", |b| {
        b.iter(|| hurwitz_zeta(black_box(-1.5), black_box(0.25)))
    });
    c.bench_function("log G(2.5)", |b| b.iter(|| log_barnes_g(black_box(2.5))));
    c.bench_function("gamma_1(0.5)", |b| {
        b.iter(|| stieltjes_gamma(1, black_box(0.5)))
    });
}

fn quadrature(c: &mut Criterion) {
    let f = |u: f64| digamma(1.0 + u).map_or(f64::NAN, |d| d.value) - u.ln();
    c.bench_function("oscillatory psi(1+u) - log u", |b| {
        b.iter(|| integrate_oscillatory_semiinf(f, OscillatoryKernel::cosine(2.0 * PI), 0.0, 1e-9))
    });
}

fn engines(c: &mut Criterion) {
    c.bench_function("poisson e^-x", |b| {
        b.iter(|| poisson_semiinf(|x: f64| (-x).exp(), 256, 1e-10))
    });
    c.bench_function("abel-plana e^-z", |b| {
        b.iter(|| abel_plana(&Analytic(|z: Complex64| (-z).exp()), 1e-10))
    });
}

fn catalog(c: &mut Criterion) {
    let mut g = c.benchmark_group("catalog");
    g.sample_size(10);
    g.bench_function("verify all, serial", |b| b.iter(|| verify_all(None, false)));
    g.bench_function("verify all, parallel", |b| {
        b.iter(|| verify_all(None, true))
    });
    g.finish();
}

criterion_group!(benches, special_functions, quadrature, engines, catalog);
criterion_main!(benches);
