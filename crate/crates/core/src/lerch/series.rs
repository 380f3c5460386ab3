use num_complex::Complex64;

use super::{check_disc, check_finite, check_shifted, neg_power, EvalConfig, Method, PhiResult, Scheme};
use crate::error::{Error, Result};
use crate::numkernel::CompensatedSum;

const CONSECUTIVE_SMALL: usize = 3;

/// Plain partial sums of the defining series; `Re(a) >= 1`.
///
/// Inside the disc the remaining tail after term `n` is bounded by
/// `|t_n| q / (1 - q)` with `q` the larger of `|z|` and the last observed
/// term ratio. On the unit circle (`Re(s) > 1` only) the bound is
/// `|t_n| (n + Re a) / (Re(s) - 1)`. Summation stops once the bound drops
/// below `rel_tol * |partial|` for three consecutive terms.
pub fn phi_direct(z: Complex64, s: Complex64, a: Complex64, cfg: &EvalConfig) -> Result<PhiResult> {
    check_finite(z, s, a)?;
    check_disc(z)?;
    check_shifted(a)?;
    let modulus = z.norm();
    let on_circle = modulus >= 1.0 - 4.0 * f64::EPSILON;
    if on_circle && s.re <= 1.0 {
        return Err(Error::Domain(format!("direct summation on |z| = 1 needs Re(s) > 1, got s = {s}")));
    }

    let mut sum = CompensatedSum::new();
    let mut zn = Complex64::new(1.0, 0.0);
    let mut prev_norm = f64::INFINITY;
    let mut small_run = 0;
    let mut bound = f64::INFINITY;
    for n in 0..cfg.max_terms() {
        let term = zn * neg_power(a + n as f64, s);
        sum.add(term);
        let t = term.norm();
        bound = if on_circle {
            t * (n as f64 + a.re) / (s.re - 1.0)
        } else {
            let q = modulus.max(if prev_norm > 0.0 { t / prev_norm } else { 0.0 });
            if q < 1.0 {
                t * q / (1.0 - q)
            } else {
                f64::INFINITY
            }
        };
        if t == 0.0 && modulus == 0.0 {
            bound = 0.0;
        }
        prev_norm = t;
        if bound <= cfg.rel_tol() * sum.value().norm() {
            small_run += 1;
            if small_run >= CONSECUTIVE_SMALL || modulus == 0.0 {
                let method = Method::Direct;
                return Ok(PhiResult {
                    value: sum.value(),
                    err_estimate: bound + f64::EPSILON * sum.abs_sum(),
                    rounding: f64::EPSILON * sum.abs_sum(),
                    terms_used: n + 1,
                    method,
                    scheme: Scheme::Series,
                });
            }
        } else {
            small_run = 0;
        }
        zn *= z;
    }
    Err(Error::NoConvergence { terms: cfg.max_terms(), err_estimate: bound })
}
