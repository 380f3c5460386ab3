//! The Hurwitz-Lerch zeta function `Phi(z, s, a) = sum_{n>=0} z^n (n+a)^-s`
//! for `|z| <= 1`, `z != 1`.
//!
//! Arguments with `Re(a) < 1` are first moved right by peeling off a finite
//! prefix of the series. The remaining tail is summed directly when `|z|`
//! is small, otherwise by an accelerated scheme: the Levin u-transform far
//! from `z = 1`, and an Euler-Maclaurin tail with a contour integral close
//! to it.

mod config;
mod euler_maclaurin;
mod hurwitz;
mod levin;
mod series;

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numkernel::{carg, cpow, is_finite, CompensatedSum};

pub use config::EvalConfig;
pub use euler_maclaurin::phi_euler_maclaurin;
pub use hurwitz::hurwitz_zeta;
pub use levin::phi_levin;
pub use series::phi_direct;

/// `z` closer than this to 1 is rejected.
pub const NEAR_ONE: f64 = 1e-6;
/// Slack on `|z| <= 1` for points built as `exp(i theta)` and similar.
const UNIT_SLACK: f64 = 4.0 * f64::EPSILON;
/// `|arg z|` at or above which the Levin transform is tried first.
const LEVIN_MIN_ARG: f64 = 1.5;

/// Which path produced a Phi value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Direct,
    Accelerated,
    ShiftedDirect,
    ShiftedAccelerated,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Direct => "direct",
            Method::Accelerated => "accelerated",
            Method::ShiftedDirect => "shifted_direct",
            Method::ShiftedAccelerated => "shifted_accelerated",
        }
    }

    fn shifted(self) -> Self {
        match self {
            Method::Direct => Method::ShiftedDirect,
            Method::Accelerated => Method::ShiftedAccelerated,
            other => other,
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Summation scheme behind a [`Method`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scheme {
    Series,
    LevinU,
    EulerMaclaurin,
}

impl Scheme {
    pub fn name(self) -> &'static str {
        match self {
            Scheme::Series => "series",
            Scheme::LevinU => "levin_u",
            Scheme::EulerMaclaurin => "euler_maclaurin",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhiResult {
    pub value: Complex64,
    pub err_estimate: f64,
    /// Part of `err_estimate` due to rounding in cancelling sums, which no
    /// number of extra terms can remove.
    pub rounding: f64,
    pub terms_used: usize,
    pub method: Method,
    pub scheme: Scheme,
}

impl PhiResult {
    /// Truncation error within `rel_tol * (1 + |value|)`.
    fn meets(&self, rel_tol: f64) -> bool {
        self.err_estimate - self.rounding <= rel_tol * (1.0 + self.value.norm())
    }
}

/// `(n + a)^-s` for `Re(n + a) > 0`.
#[inline]
pub(crate) fn neg_power(x: Complex64, s: Complex64) -> Complex64 {
    if x.im == 0.0 && s.im == 0.0 {
        Complex64::new(x.re.powf(-s.re), 0.0)
    } else {
        (-s * Complex64::new(x.norm().ln(), x.im.atan2(x.re))).exp()
    }
}

fn check_finite(z: Complex64, s: Complex64, a: Complex64) -> Result<()> {
    if is_finite(z) && is_finite(s) && is_finite(a) {
        Ok(())
    } else {
        Err(Error::Domain("non-finite argument".into()))
    }
}

pub(crate) fn check_disc(z: Complex64) -> Result<()> {
    if z.norm() > 1.0 + UNIT_SLACK {
        return Err(Error::Domain(format!("|z| = {} exceeds 1", z.norm())));
    }
    if (z - 1.0).norm() < NEAR_ONE {
        return Err(Error::Domain(format!("z = {z} is within {NEAR_ONE:e} of 1")));
    }
    Ok(())
}

fn check_shifted(a: Complex64) -> Result<()> {
    if a.re < 1.0 {
        return Err(Error::Domain(format!("Re(a) must be at least 1 here, got a = {a}")));
    }
    Ok(())
}

/// Smallest `m >= 0` with `Re(a) + m >= 1` and the exact prefix
/// `sum_{n<m} z^n (a+n)^-s`, so that
/// `Phi(z, s, a) = prefix + z^m Phi(z, s, a + m)`.
pub fn shift_normalize(z: Complex64, s: Complex64, a: Complex64) -> Result<(Complex64, u64)> {
    shift_normalize_sum(z, s, a).map(|(sum, m)| (sum.value(), m))
}

fn shift_normalize_sum(z: Complex64, s: Complex64, a: Complex64) -> Result<(CompensatedSum, u64)> {
    check_finite(z, s, a)?;
    if a.im == 0.0 && a.re <= 0.0 && a.re.fract() == 0.0 {
        return Err(Error::LatticePole { n: (-a.re) as u64 });
    }
    let m = if a.re >= 1.0 { 0.0 } else { (1.0 - a.re).ceil() };
    if m > 1e7 {
        return Err(Error::Domain(format!("Re(a) = {} is too far left to shift", a.re)));
    }
    let m = m as u64;
    let mut prefix = CompensatedSum::new();
    let mut zn = Complex64::new(1.0, 0.0);
    for n in 0..m {
        prefix.add(zn * cpow(a + n as f64, -s)?);
        zn *= z;
    }
    Ok((prefix, m))
}

/// Levin first for `|arg z| >= 1.5`, Euler-Maclaurin first otherwise; the
/// other scheme is tried when the first misses the tolerance.
pub fn phi_accelerated(z: Complex64, s: Complex64, a: Complex64, cfg: &EvalConfig) -> Result<PhiResult> {
    check_finite(z, s, a)?;
    check_disc(z)?;
    check_shifted(a)?;
    let levin_first = carg(z).abs() >= LEVIN_MIN_ARG;
    let schemes: [fn(Complex64, Complex64, Complex64, &EvalConfig) -> Result<PhiResult>; 2] =
        if levin_first { [phi_levin, phi_euler_maclaurin] } else { [phi_euler_maclaurin, phi_levin] };

    let mut best: Option<PhiResult> = None;
    let mut last_err = None;
    for scheme in schemes {
        match scheme(z, s, a, cfg) {
            Ok(r) if r.meets(cfg.rel_tol()) => return Ok(r),
            Ok(r) => {
                if best.map_or(true, |b| r.err_estimate < b.err_estimate) {
                    best = Some(r);
                }
            }
            Err(e) => last_err = Some(e),
        }
    }
    match (best, last_err) {
        (Some(b), _) => Err(Error::NoConvergence { terms: b.terms_used, err_estimate: b.err_estimate }),
        (None, Some(e)) => Err(e),
        (None, None) => unreachable!("at least one scheme ran"),
    }
}

/// `Phi(z, s, a)` for `|z| <= 1`, `z != 1`, `a` off the lattice `0, -1, -2, ...`.
pub fn phi(z: Complex64, s: Complex64, a: Complex64, cfg: &EvalConfig) -> Result<PhiResult> {
    check_finite(z, s, a)?;
    check_disc(z)?;
    let (prefix, m) = shift_normalize_sum(z, s, a)?;
    let shifted = a + m as f64;
    let tail = if z.norm() <= cfg.accel_modulus() {
        phi_direct(z, s, shifted, cfg)?
    } else {
        phi_accelerated(z, s, shifted, cfg)?
    };
    if m == 0 {
        return Ok(tail);
    }
    let zm = z.powu(m as u32);
    let mut total = prefix;
    total.add(zm * tail.value);
    let value = total.value();
    let prefix_rounding = f64::EPSILON * prefix.abs_sum();
    let err_estimate = zm.norm() * tail.err_estimate + prefix_rounding;
    // The tail already met the tolerance; the prefix adds only its rounding
    // floor, which can exceed rel_tol when its terms cancel.
    Ok(PhiResult {
        value,
        err_estimate,
        rounding: zm.norm() * tail.rounding + prefix_rounding,
        terms_used: tail.terms_used + m as usize,
        method: tail.method.shifted(),
        scheme: tail.scheme,
    })
}
