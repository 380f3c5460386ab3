use num_complex::Complex64;

use super::{check_disc, check_finite, check_shifted, neg_power, EvalConfig, Method, PhiResult, Scheme};
use crate::error::{Error, Result};
use crate::numkernel::{bernoulli_over_factorial, binomial, clog, CompensatedSum};
use crate::quadrature::exp_sinh;

const BASE_HEAD: usize = 10;
const MAX_CORRECTIONS: usize = 30;
const QUAD_NOISE_TOL: f64 = 16.0 * f64::EPSILON;

/// Euler-Maclaurin evaluation with `f(x) = e^{lambda x} (x + a)^-s`,
/// `lambda = log z`; `Re(a) >= 1`.
///
/// The head `n < N` is summed directly. The tail integral runs along the
/// ray on which `e^{lambda x}` decays fastest and is done by exp-sinh
/// quadrature. Endpoint derivatives come from the Leibniz rule. Accurate
/// for `z` near 1, including the unit circle, as long as `|log z|` is well
/// below `2 pi`.
pub fn phi_euler_maclaurin(z: Complex64, s: Complex64, a: Complex64, cfg: &EvalConfig) -> Result<PhiResult> {
    check_finite(z, s, a)?;
    check_disc(z)?;
    check_shifted(a)?;
    let lambda = clog(z)?;
    let head_len = BASE_HEAD + s.norm().ceil() as usize;
    if head_len > cfg.max_terms() {
        return Err(Error::NoConvergence { terms: cfg.max_terms(), err_estimate: f64::INFINITY });
    }
    let big_n = head_len as f64;

    let mut total = CompensatedSum::new();
    let mut zn = Complex64::new(1.0, 0.0);
    for n in 0..head_len {
        total.add(zn * neg_power(a + n as f64, s));
        zn *= z;
    }
    // zn = z^N = e^{lambda N}
    let x0 = a + big_n;

    let dir = -lambda.norm() / lambda;
    let decay = lambda.norm();
    let scale = 1.0 / (decay + 1.0 / x0.norm());
    // The integral may be much larger than Phi itself; aim the quadrature at
    // the size of the head, and stop once level differences reach noise.
    let target = 0.05 * cfg.rel_tol() * (1.0 + total.value().norm());
    let integral = exp_sinh(
        |t| {
            let x = x0 + dir * t;
            neg_power(x, s) * (-decay * t).exp()
        },
        scale,
        QUAD_NOISE_TOL,
        target / zn.norm().max(f64::MIN_POSITIVE),
    )?;
    total.add(zn * dir * integral.value);

    let mut derivs = Vec::with_capacity(2 * MAX_CORRECTIONS);
    derivs.push(neg_power(x0, s));
    for i in 1..2 * MAX_CORRECTIONS {
        let next = derivs[i - 1] * (-s - (i - 1) as f64) / x0;
        derivs.push(next);
    }
    total.add(0.5 * zn * derivs[0]);

    // Corrections shrink roughly like (|lambda| / 2 pi)^2j until the
    // asymptotic series turns; stop at the tolerance or at the turn.
    let mut last = f64::INFINITY;
    for j in 1..=MAX_CORRECTIONS {
        let m = 2 * j - 1;
        let mut lambda_pow = Complex64::new(1.0, 0.0);
        let mut leibniz = Complex64::new(0.0, 0.0);
        for i in (0..=m).rev() {
            leibniz += binomial(m as u64, i as i64) * lambda_pow * derivs[i];
            lambda_pow *= lambda;
        }
        let correction = -bernoulli_over_factorial(j) * zn * leibniz;
        let size = correction.norm();
        if size > last {
            break;
        }
        total.add(correction);
        last = size;
        if size <= 0.01 * cfg.rel_tol() * total.value().norm() {
            break;
        }
    }

    let value = total.value();
    let quad_err = zn.norm() * integral.err_estimate;
    // Level differences below the accumulated rounding of the nodes are noise.
    let quad_noise = f64::EPSILON * (integral.evaluations as f64).sqrt() * (zn * integral.value).norm();
    let rounding = f64::EPSILON * total.abs_sum() + quad_err.min(quad_noise);
    Ok(PhiResult {
        value,
        err_estimate: last + quad_err + f64::EPSILON * total.abs_sum(),
        rounding,
        terms_used: head_len + integral.evaluations,
        method: Method::Accelerated,
        scheme: Scheme::EulerMaclaurin,
    })
}
