use std::f64::consts::PI;
use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use hlz_core::identitylab::{assignment, verify};
use hlz_core::lerch::{phi, EvalConfig};
use hlz_core::numkernel::{hyp2f1, log_gamma};
use hlz_core::quadrature::tanh_sinh;
use num_complex::Complex64;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn lerch(cr: &mut Criterion) {
    let cfg = EvalConfig::default();
    let mut group = cr.benchmark_group("phi");
    group.bench_function("inner_disc_sweep_1000", |b| {
        b.iter(|| {
            (0..1000).fold(c(0.0, 0.0), |acc, i| {
                let z = Complex64::from_polar(0.7, -PI + 2.0 * PI * (i as f64 + 0.5) / 1000.0);
                acc + phi(black_box(z), c(2.0, 0.0), c(1.5, 0.0), &cfg).unwrap().value
            })
        })
    });
    group.bench_function("unit_circle_sweep_100", |b| {
        b.iter(|| {
            (0..100).fold(c(0.0, 0.0), |acc, i| {
                let z = Complex64::from_polar(1.0, -PI + 2.0 * PI * (i as f64 + 0.5) / 100.0);
                acc + phi(black_box(z), c(3.0, 0.0), c(1.5, 0.0), &cfg).unwrap().value
            })
        })
    });
    group.bench_function("shifted_negative_a", |b| {
        b.iter(|| phi(black_box(c(0.4, 0.5)), c(2.5, -1.0), c(-3.3, 0.7), &cfg).unwrap())
    });
    group.finish();
}

fn kernels(cr: &mut Criterion) {
    cr.bench_function("log_gamma", |b| b.iter(|| log_gamma(black_box(c(3.7, -2.2))).unwrap()));
    cr.bench_function("log_gamma_reflected", |b| b.iter(|| log_gamma(black_box(c(-4.3, 1.1))).unwrap()));
    cr.bench_function("hyp2f1", |b| {
        b.iter(|| hyp2f1(black_box(c(1.5, 0.2)), c(-0.7, 0.0), c(2.5, 0.0), c(0.6, 0.3)).unwrap())
    });
    cr.bench_function("tanh_sinh_log_singularity", |b| {
        b.iter(|| tanh_sinh(|x| c(x.ln(), x.sqrt()), black_box(0.0), 1.0, 1e-13).unwrap())
    });
}

fn identities(cr: &mut Criterion) {
    let p = assignment([("n", c(3.0, 0.0)), ("m", c(0.7, 0.0)), ("a", c(3.2, 0.0)), ("k", c(2.0, 0.0))]);
    cr.bench_function("verify_ex2_1_order_3", |b| b.iter(|| verify("ex2_1", black_box(&p), 1e-10).unwrap()));
    let q = assignment([("y", c(1.5, 0.0)), ("a", c(0.3, 0.0)), ("b", c(0.25, 0.0))]);
    cr.bench_function("verify_ex3_4", |b| b.iter(|| verify("ex3_4", black_box(&q), 1e-10).unwrap()));
}

criterion_group!(benches, lerch, kernels, identities);
criterion_main!(benches);
