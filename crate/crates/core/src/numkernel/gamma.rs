use std::f64::consts::PI;

use num_complex::Complex64;

use super::elementary::clog;
use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;

// g = 7, n = 9 Lanczos coefficients.
#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_741_780_329_736_406;

/// True for `w` in `{0, -1, -2, ...}`.
#[inline]
pub fn is_gamma_pole(w: Complex64) -> bool {
    w.im == 0.0 && w.re <= 0.0 && w.re.fract() == 0.0
}

/// A logarithm of `Gamma(w)`.
///
/// For `Re(w) >= 1/2` the value is the Lanczos expression, which is the
/// continuous branch on the right half-plane. Left of that line the reflection
/// formula is used; there only `exp(log_gamma(w)) == Gamma(w)` is promised,
/// not continuity of the imaginary part.
pub fn log_gamma(w: Complex64) -> Result<Complex64> {
    if is_gamma_pole(w) {
        return Err(Error::PoleArgument(w));
    }
    if !(w.re.is_finite() && w.im.is_finite()) {
        return Err(Error::Domain(format!("log_gamma of non-finite argument {w}")));
    }
    if w.re < 0.5 {
        let reflected = lanczos(Complex64::new(1.0, 0.0) - w)?;
        return Ok(Complex64::new(PI.ln(), 0.0) - log_sin_pi(w)? - reflected);
    }
    lanczos(w)
}

fn lanczos(w: Complex64) -> Result<Complex64> {
    let w = w - 1.0;
    let mut series = Complex64::new(LANCZOS_COEFFS[0], 0.0);
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        series += c / (w + i as f64);
    }
    let t = w + LANCZOS_G + 0.5;
    Ok(HALF_LN_TWO_PI + (w + 0.5) * clog(t)? - t + clog(series)?)
}

/// A logarithm of `sin(pi w)`, stable for large `|Im w|`.
fn log_sin_pi(w: Complex64) -> Result<Complex64> {
    // sin(pi w) is 2-periodic in Re(w); reduce to keep the argument small.
    let shift = 2.0 * (w.re / 2.0).round();
    let w = Complex64::new(w.re - shift, w.im);
    if w.im.abs() < 30.0 {
        return clog((PI * w).sin());
    }
    // sin(pi w) = (e^{i pi w} - e^{-i pi w}) / 2i; one exponential dominates.
    let i_pi_w = Complex64::new(0.0, PI) * w;
    let half = Complex64::new(0.5f64.ln(), 0.0);
    if w.im > 0.0 {
        Ok(half + Complex64::new(0.0, PI / 2.0) - i_pi_w)
    } else {
        Ok(half - Complex64::new(0.0, PI / 2.0) + i_pi_w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// Gamma(w) for small positive integers by direct factorial.
    fn factorial_oracle(n: u32) -> f64 {
        (1..n).map(f64::from).product()
    }

    /// Product-form oracle: Gamma(w) = lim n! n^w / (w (w+1) ... (w+n)).
    fn gauss_product_ln_gamma(w: f64, n: u32) -> f64 {
        let mut acc = (w * (n as f64).ln()) - w.ln();
        for k in 1..=n {
            let k = k as f64;
            acc += k.ln() - (w + k).ln();
        }
        acc
    }

    #[test]
    fn examples() {
        assert!(log_gamma(c(1.0, 0.0)).unwrap().norm() < 1e-15);
        assert!((log_gamma(c(5.0, 0.0)).unwrap() - c(24f64.ln(), 0.0)).norm() < 1e-14);
        let half = log_gamma(c(0.5, 0.0)).unwrap();
        assert!((half.re - 0.572_364_942_924_700_1).abs() < 1e-15);
        assert!(half.im.abs() < 1e-15);
        // Product form converges like O(1/n); 2e6 factors give ~1e-7.
        let oracle = gauss_product_ln_gamma(0.5, 2_000_000);
        assert!((half.re - oracle).abs() < 1e-6);
    }

    #[test]
    fn matches_factorials_of_lanczos_validation_points() {
        for n in 1..=20u32 {
            let l = log_gamma(c(n as f64, 0.0)).unwrap();
            let expected = factorial_oracle(n).ln();
            assert!((l.re - expected).abs() <= 1e-13 * expected.abs().max(1.0), "n = {n}");
        }
    }

    #[test]
    fn reflection_region_reproduces_gamma() {
        // Gamma(-0.5) = -2 sqrt(pi)
        let l = log_gamma(c(-0.5, 0.0)).unwrap();
        let g = l.exp();
        assert!((g - c(-2.0 * PI.sqrt(), 0.0)).norm() < 1e-13);
        // Gamma(-2.5) = -8 sqrt(pi) / 15
        let g = log_gamma(c(-2.5, 0.0)).unwrap().exp();
        assert!((g - c(-8.0 * PI.sqrt() / 15.0, 0.0)).norm() < 1e-13);
    }

    #[test]
    fn large_imaginary_part_does_not_overflow() {
        let w = c(-3.3, 80.0);
        let lhs = log_gamma(w + 1.0).unwrap() - log_gamma(w).unwrap();
        assert!((lhs.exp() - w).norm() <= 1e-11 * w.norm());
    }

    #[test]
    fn poles_are_rejected() {
        for p in [0.0, -1.0, -7.0] {
            assert!(matches!(log_gamma(c(p, 0.0)), Err(Error::PoleArgument(_))));
        }
        assert!(log_gamma(c(-1.0, 1e-300)).is_ok());
    }

    #[test]
    fn recurrence_on_right_half_plane() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_0002);
        for _ in 0..200 {
            let w = c(rng.gen_range(0.01..40.0), rng.gen_range(-40.0..40.0));
            let ratio = (log_gamma(w + 1.0).unwrap() - log_gamma(w).unwrap()).exp();
            assert!((ratio - w).norm() <= 1e-12 * w.norm(), "w = {w}");
        }
    }
}
