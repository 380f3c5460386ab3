use num_complex::Complex64;

use super::gamma::log_gamma;
use crate::error::Result;

/// Rising factorial `x (x+1) ... (x+n-1)` by direct multiplication.
///
/// Exactly zero whenever some factor vanishes.
pub fn pochhammer_int(x: Complex64, n: u32) -> Complex64 {
    (0..n).fold(Complex64::new(1.0, 0.0), |acc, i| acc * (x + i as f64))
}

/// `ln Gamma(x + lam) - ln Gamma(x)`; zero for `lam == 0`.
pub fn log_pochhammer_gen(x: Complex64, lam: Complex64) -> Result<Complex64> {
    if lam.re == 0.0 && lam.im == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    Ok(log_gamma(x + lam)? - log_gamma(x)?)
}

/// Generalized Pochhammer symbol `Gamma(x + lam) / Gamma(x)`.
pub fn pochhammer_gen(x: Complex64, lam: Complex64) -> Result<Complex64> {
    Ok(log_pochhammer_gen(x, lam)?.exp())
}

/// `n!` as a double; exact through `22!`.
pub fn factorial(n: u32) -> f64 {
    (2..=n).fold(1.0, |acc, k| acc * k as f64)
}

const EXACT_BINOMIAL_MAX_N: u64 = 60;

/// Exact binomial coefficient for `n <= 60`; `None` above that.
pub fn binomial_exact(n: u64, k: i64) -> Option<u64> {
    if n > EXACT_BINOMIAL_MAX_N {
        return None;
    }
    if k < 0 || k as u64 > n {
        return Some(0);
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc: u64 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) and stays below 2^64 for n <= 60.
        acc = acc * (n - i) / (i + 1);
    }
    Some(acc)
}

/// Binomial coefficient, zero outside `0 <= k <= n`.
///
/// Integer arithmetic through `n = 60`, rounded once to the nearest double;
/// the multiplicative floating form beyond.
pub fn binomial(n: u64, k: i64) -> f64 {
    if let Some(exact) = binomial_exact(n, k) {
        return exact as f64;
    }
    if k < 0 || k as u64 > n {
        return 0.0;
    }
    let k = (k as u64).min(n - k as u64);
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}
