use std::f64::consts::PI;

use num_complex::Complex64;

use super::QuadResult;
use crate::error::{Error, Result};

const MAX_POINTS: usize = 128;

/// Nodes and weights of the `n`-point Gauss-Legendre rule on `[-1, 1]`,
/// by Newton iteration on the Legendre recurrence.
pub fn gauss_legendre_nodes(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            let (p, pm1) = if n == 1 { (x, 1.0) } else { (p1, p0) };
            dp = n as f64 * (x * p - pm1) / (x * x - 1.0);
            let dx = p / dp;
            x -= dx;
            if dx.abs() <= 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

fn apply<F>(f: &F, lo: f64, hi: f64, n: usize) -> Complex64
where
    F: Fn(f64) -> Complex64,
{
    let (nodes, weights) = gauss_legendre_nodes(n);
    let half = 0.5 * (hi - lo);
    let mid = 0.5 * (hi + lo);
    nodes.iter().zip(&weights).map(|(&x, &w)| f(mid + half * x) * w).sum::<Complex64>() * half
}

/// Fixed-order Gauss-Legendre quadrature. The error estimate is the
/// difference from the rule with half as many points.
pub fn gauss_legendre<F>(f: F, lo: f64, hi: f64, npoints: usize) -> Result<QuadResult>
where
    F: Fn(f64) -> Complex64,
{
    if !(2..=MAX_POINTS).contains(&npoints) {
        return Err(Error::InvalidConfig(format!("npoints must be in 2..=128, got {npoints}")));
    }
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::Domain(format!("gauss_legendre needs finite lo < hi, got [{lo}, {hi}]")));
    }
    let value = apply(&f, lo, hi, npoints);
    let coarse = apply(&f, lo, hi, npoints / 2);
    Ok(QuadResult {
        value,
        err_estimate: (value - coarse).norm(),
        evaluations: npoints + npoints / 2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_sum_to_two_and_nodes_are_symmetric() {
        for n in [2, 3, 7, 16, 64, 128] {
            let (x, w) = gauss_legendre_nodes(n);
            assert!((w.iter().sum::<f64>() - 2.0).abs() < 1e-13, "n = {n}");
            for i in 0..n {
                assert!((x[i] + x[n - 1 - i]).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn two_point_rule_is_exact_for_cubics() {
        let r = gauss_legendre(|x| Complex64::new(x * x * x, 0.0), 0.0, 1.0, 2).unwrap();
        assert!((r.value.re - 0.25).abs() < 1e-16);
    }

    #[test]
    fn exact_for_degree_2n_minus_1() {
        // n points integrate x^(2n-1) on [0,1] to 1/(2n)
        for n in [4usize, 10, 32] {
            let r = gauss_legendre(|x| Complex64::new(x.powi(2 * n as i32 - 1), 0.0), 0.0, 1.0, n).unwrap();
            assert!((r.value.re - 1.0 / (2 * n) as f64).abs() < 1e-14, "n = {n}");
        }
    }

    #[test]
    fn cosine() {
        let r = gauss_legendre(|x| Complex64::new(x.cos(), 0.0), 0.0, 1.0, 16).unwrap();
        assert!((r.value.re - 1f64.sin()).abs() < 1e-15);
        assert!(r.err_estimate < 1e-12);
    }

    #[test]
    fn rejects_bad_point_counts() {
        let f = |_x: f64| Complex64::new(1.0, 0.0);
        assert!(gauss_legendre(f, 0.0, 1.0, 1).is_err());
        assert!(gauss_legendre(f, 0.0, 1.0, 129).is_err());
    }

    #[test]
    fn agrees_with_tanh_sinh_on_smooth_integrands() {
        let f = |x: f64| Complex64::new(1.0 / (1.0 + x * x), (2.0 * x).sin());
        let g = gauss_legendre(f, 0.0, 1.0, 32).unwrap();
        let t = crate::quadrature::tanh_sinh(f, 0.0, 1.0, 1e-14).unwrap();
        assert!((g.value - t.value).norm() <= g.err_estimate + t.err_estimate + 1e-15);
    }
}
