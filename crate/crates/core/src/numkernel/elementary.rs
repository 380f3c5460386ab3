use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// True when both components are finite.
#[inline]
pub fn is_finite(w: Complex64) -> bool {
    w.re.is_finite() && w.im.is_finite()
}

/// Principal argument in `(-pi, pi]`.
///
/// `atan2` returns `-pi` for a negative real axis point with a negative zero
/// imaginary part; that point is mapped to `+pi` so the cut is always
/// approached from above.
#[inline]
pub fn carg(w: Complex64) -> f64 {
    let arg = w.im.atan2(w.re);
    if arg <= -PI {
        PI
    } else {
        arg
    }
}

/// Principal logarithm `ln|w| + i Arg(w)`.
pub fn clog(w: Complex64) -> Result<Complex64> {
    if w.re == 0.0 && w.im == 0.0 {
        return Err(Error::ZeroArgument);
    }
    Ok(Complex64::new(ln_modulus(w), carg(w)))
}

/// `ln|w|`, keeping full relative accuracy for `w` close to 1 where
/// `|w|^2 - 1 = (re - 1)(re + 1) + im^2` is formed without cancellation.
fn ln_modulus(w: Complex64) -> f64 {
    let near_one = (w.re - 1.0) * (w.re + 1.0) + w.im * w.im;
    if near_one.abs() < 0.5 {
        0.5 * near_one.ln_1p()
    } else {
        w.norm().ln()
    }
}

#[inline]
pub fn cexp(w: Complex64) -> Complex64 {
    w.exp()
}

/// Principal power `exp(s * clog(w))`, with `0^s = 0` for `Re(s) > 0`.
pub fn cpow(w: Complex64, s: Complex64) -> Result<Complex64> {
    if w.re == 0.0 && w.im == 0.0 {
        return if s.re > 0.0 {
            Ok(Complex64::new(0.0, 0.0))
        } else {
            Err(Error::ZeroArgument)
        };
    }
    if s.im == 0.0 && w.im == 0.0 && w.re > 0.0 {
        return Ok(Complex64::new(w.re.powf(s.re), 0.0));
    }
    Ok((s * clog(w)?).exp())
}
