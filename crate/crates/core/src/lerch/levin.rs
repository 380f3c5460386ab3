use num_complex::Complex64;

use super::{check_disc, check_finite, check_shifted, neg_power, EvalConfig, Method, PhiResult, Scheme};
use crate::error::{Error, Result};
use crate::numkernel::binomial;

/// Levin u-transform of the partial sums `S_j = sum_{n<=j} t_n` with
/// remainder estimates `(j + 1) t_j`; `Re(a) >= 1`.
///
/// The error estimate is the difference between the transforms of the top
/// two orders plus the rounding floor of the raw terms.
pub fn phi_levin(z: Complex64, s: Complex64, a: Complex64, cfg: &EvalConfig) -> Result<PhiResult> {
    check_finite(z, s, a)?;
    check_disc(z)?;
    check_shifted(a)?;
    let order = cfg.levin_order();
    let mut terms = Vec::with_capacity(order + 1);
    let mut partial = Vec::with_capacity(order + 1);
    let mut zn = Complex64::new(1.0, 0.0);
    let mut acc = Complex64::new(0.0, 0.0);
    let mut abs_sum = 0.0;
    for n in 0..=order {
        let t = zn * neg_power(a + n as f64, s);
        if t.norm() == 0.0 {
            return Err(Error::Domain("Levin transform needs non-vanishing terms".into()));
        }
        acc += t;
        abs_sum += t.norm();
        terms.push(t);
        partial.push(acc);
        zn *= z;
    }

    let transform = |k: usize| -> Complex64 {
        let mut num = Complex64::new(0.0, 0.0);
        let mut den = Complex64::new(0.0, 0.0);
        let top = (k + 1) as f64;
        for j in 0..=k {
            let ratio = ((j + 1) as f64 / top).powi(k as i32 - 1);
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            let c = sign * binomial(k as u64, j as i64) * ratio;
            let omega = terms[j] * (j + 1) as f64;
            num += partial[j] * c / omega;
            den += c / omega;
        }
        num / den
    };
    let value = transform(order);
    let previous = transform(order - 1);
    if !(value.re.is_finite() && value.im.is_finite()) {
        return Err(Error::NoConvergence { terms: order + 1, err_estimate: f64::INFINITY });
    }
    Ok(PhiResult {
        value,
        err_estimate: (value - previous).norm() + f64::EPSILON * abs_sum,
        rounding: f64::EPSILON * abs_sum,
        terms_used: order + 1,
        method: Method::Accelerated,
        scheme: Scheme::LevinU,
    })
}
