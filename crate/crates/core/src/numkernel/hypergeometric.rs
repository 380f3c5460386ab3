use num_complex::Complex64;

use super::gamma::is_gamma_pole;
use super::sum::CompensatedSum;
use crate::error::{Error, Result};

/// Outcome of a truncated power series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesSum {
    pub value: Complex64,
    pub err_estimate: f64,
    pub terms: usize,
}

const DEFAULT_REL_TOL: f64 = 1e-15;
const DEFAULT_MAX_TERMS: usize = 200_000;
const CONSECUTIVE_SMALL: usize = 3;

/// Gauss hypergeometric function inside the unit disc, default tolerances.
pub fn hyp2f1(
    alpha: Complex64,
    beta: Complex64,
    gamma: Complex64,
    x: Complex64,
) -> Result<Complex64> {
    hyp2f1_series(alpha, beta, gamma, x, DEFAULT_REL_TOL, DEFAULT_MAX_TERMS).map(|s| s.value)
}

/// Gauss series `sum (alpha)_m (beta)_m / ((gamma)_m m!) x^m`.
///
/// Summation stops once three consecutive terms fall below
/// `rel_tol * |partial|`. The error estimate bounds the geometric tail
/// following the last term.
pub fn hyp2f1_series(
    alpha: Complex64,
    beta: Complex64,
    gamma: Complex64,
    x: Complex64,
    rel_tol: f64,
    max_terms: usize,
) -> Result<SeriesSum> {
    let modulus = x.norm();
    if !(modulus < 1.0) {
        return Err(Error::Domain(format!("2F1 series needs |x| < 1, got |x| = {modulus}")));
    }
    if is_gamma_pole(gamma) {
        return Err(Error::PoleArgument(gamma));
    }

    let mut sum = CompensatedSum::new();
    let mut term = Complex64::new(1.0, 0.0);
    let mut small_run = 0;
    for m in 0..max_terms {
        sum.add(term);
        let partial = sum.value().norm();
        if term.norm() <= rel_tol * partial {
            small_run += 1;
            if small_run >= CONSECUTIVE_SMALL {
                let tail = term.norm() * modulus / (1.0 - modulus);
                return Ok(SeriesSum {
                    value: sum.value(),
                    err_estimate: tail + f64::EPSILON * sum.abs_sum(),
                    terms: m + 1,
                });
            }
        } else {
            small_run = 0;
        }
        let mf = m as f64;
        term *= (alpha + mf) * (beta + mf) / ((gamma + mf) * (mf + 1.0)) * x;
    }
    Err(Error::NoConvergence {
        terms: max_terms,
        err_estimate: term.norm() / (1.0 - modulus),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// Independent brute force: each term rebuilt from scratch with
    /// explicit rising factorials and factorials.
    fn brute_force(a: Complex64, b: Complex64, g: Complex64, x: Complex64, n: usize) -> Complex64 {
        let mut total = c(0.0, 0.0);
        for m in 0..n {
            let mut t = c(1.0, 0.0);
            for i in 0..m {
                t *= (a + i as f64) * (b + i as f64) / ((g + i as f64) * (i as f64 + 1.0));
            }
            total += t * x.powu(m as u32);
        }
        total
    }

    #[test]
    fn zero_argument_is_one() {
        assert_eq!(hyp2f1(c(1.3, 0.2), c(-0.5, 0.0), c(2.5, 0.0), c(0.0, 0.0)).unwrap(), c(1.0, 0.0));
    }

    #[test]
    fn reduces_to_logarithm() {
        let v = hyp2f1(c(1.0, 0.0), c(1.0, 0.0), c(2.0, 0.0), c(0.5, 0.0)).unwrap();
        let expected = 2.0 * std::f64::consts::LN_2;
        assert!((v - c(expected, 0.0)).norm() < 1e-14);
        let bf = brute_force(c(1.0, 0.0), c(1.0, 0.0), c(2.0, 0.0), c(0.5, 0.0), 10_000);
        assert!((bf - c(expected, 0.0)).norm() < 1e-13);
    }

    #[test]
    fn hurwitz_integral_weight_matches_brute_force() {
        // 2F1(k, 1/u; 1 + 1/u; -1/a) with k = 2, u = 2, a = 5
        let (k, u, a) = (2.0, 2.0, 5.0);
        let args = (c(k, 0.0), c(1.0 / u, 0.0), c(1.0 + 1.0 / u, 0.0), c(-1.0 / a, 0.0));
        let v = hyp2f1(args.0, args.1, args.2, args.3).unwrap();
        let bf = brute_force(args.0, args.1, args.2, args.3, 200);
        assert!((v - bf).norm() <= 1e-13 * bf.norm());
    }

    #[test]
    fn errors() {
        let one = c(1.0, 0.0);
        assert!(matches!(hyp2f1(one, one, one, c(1.0, 0.0)), Err(Error::Domain(_))));
        assert!(matches!(hyp2f1(one, one, c(-2.0, 0.0), c(0.5, 0.0)), Err(Error::PoleArgument(_))));
        let r = hyp2f1_series(one, one, c(2.0, 0.0), c(0.999, 0.0), 1e-15, 20);
        assert!(matches!(r, Err(Error::NoConvergence { terms: 20, .. })));
    }

    #[test]
    fn terminating_series_is_a_polynomial() {
        // 2F1(-2, b; c; x) = 1 - 2 b x / c + b (b+1) x^2 / (c (c+1))
        let (b, g, x) = (c(0.7, 0.3), c(1.9, 0.0), c(0.4, -0.2));
        let v = hyp2f1(c(-2.0, 0.0), b, g, x).unwrap();
        let expected = 1.0 - 2.0 * b * x / g + b * (b + 1.0) * x * x / (g * (g + 1.0));
        assert!((v - expected).norm() < 1e-15);
    }

    #[test]
    fn symmetric_in_numerator_parameters() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_0003);
        for _ in 0..100 {
            let a = c(rng.gen_range(-3.0..3.0), rng.gen_range(-1.0..1.0));
            let b = c(rng.gen_range(-3.0..3.0), rng.gen_range(-1.0..1.0));
            let g = c(rng.gen_range(0.5..4.0), rng.gen_range(-1.0..1.0));
            let r = rng.gen_range(0.0..0.8);
            let t = rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI);
            let x = Complex64::from_polar(r, t);
            let ab = hyp2f1(a, b, g, x).unwrap();
            let ba = hyp2f1(b, a, g, x).unwrap();
            assert!((ab - ba).norm() <= 1e-13 * ab.norm().max(1.0), "{a} {b} {g} {x}");
        }
    }
}
