use num_complex::Complex64;

use super::neg_power;
use crate::error::{Error, Result};
use crate::numkernel::{bernoulli_over_factorial, is_finite, CompensatedSum};

const REL_TOL: f64 = 1e-14;
const CORRECTIONS: usize = 12;

/// Hurwitz zeta `sum_{n>=0} (n + a)^-s` for `Re(s) > 1`, `Re(a) > 0`, by
/// Euler-Maclaurin with the closed-form tail integral.
pub fn hurwitz_zeta(s: Complex64, a: Complex64) -> Result<Complex64> {
    if !is_finite(s) || !is_finite(a) || s.re <= 1.0 || a.re <= 0.0 {
        return Err(Error::Domain(format!("hurwitz_zeta needs Re(s) > 1 and Re(a) > 0, got s = {s}, a = {a}")));
    }
    let mut head_len = 16 + s.norm().ceil() as usize;
    loop {
        let (value, err) = euler_maclaurin(s, a, head_len);
        if err <= REL_TOL * value.norm() || head_len > 1 << 16 {
            return Ok(value);
        }
        head_len *= 2;
    }
}

fn euler_maclaurin(s: Complex64, a: Complex64, head_len: usize) -> (Complex64, f64) {
    let mut total = CompensatedSum::new();
    for n in (0..head_len).rev() {
        total.add(neg_power(a + n as f64, s));
    }
    let x = a + head_len as f64;
    let power = neg_power(x, s);
    total.add(power * x / (s - 1.0));
    total.add(0.5 * power);
    // f^(m)(x) = (-1)^m (s)_m x^(-s-m); odd m gives -(s)_m x^(-s-m)
    let mut rising = s;
    let mut deriv_power = power / x;
    let mut last = 0.0;
    for j in 1..=CORRECTIONS {
        let correction = bernoulli_over_factorial(j) * rising * deriv_power;
        total.add(correction);
        last = correction.norm();
        let m = (2 * j - 1) as f64;
        rising *= (s + m) * (s + m + 1.0);
        deriv_power /= x * x;
    }
    (total.value(), last + f64::EPSILON * total.abs_sum())
}
