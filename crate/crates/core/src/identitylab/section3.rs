//! Power series in `x = (y-1) y^(-1-a)` with Gamma-ratio coefficients.

use num_complex::Complex64;

use super::model::{get, Assignment, EvalCtx};
use crate::error::{Error, Result};
use crate::numkernel::{clog, cpow, is_gamma_pole, log_gamma, CompensatedSum};

const SERIES_REL_TOL: f64 = 1e-17;
const SERIES_MAX_TERMS: usize = 1_000_000;
const CONSECUTIVE_SMALL: usize = 3;
/// `|omega| = 1` and `arg omega = 0` are accepted up to this much rounding.
const BOUNDARY_WIDTH: f64 = 1e-9;
const BOUNDARY_FIRST_CHECK: usize = 1024;
const BOUNDARY_MAX_TERMS: usize = 1 << 18;
const BOUNDARY_REL_TOL: f64 = 1e-12;
/// Slower decay than `k^-p` with this `p` is treated as non-convergent.
const BOUNDARY_MIN_DECAY: f64 = 1.2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(super) enum Coefficient {
    /// `Gamma((1+a)k) / ((k+1)! Gamma(1+ak))`, from `k = 1`.
    Mcclintoch,
    /// `Gamma((1+a)k) / ((k+2)! Gamma(1+ak))`, from `k = 1`.
    McclintochSecond,
    /// `(b-1)_{(1+a)k} / ((k+1)! (b)_{ak})`.
    ShiftedDown,
    /// `(b)_{(1+a)k} / ((k+1)! (b)_{ak})`.
    Plain,
    /// `(1+b)_{(1+a)k} / ((k+1)! (b)_{ak})`.
    ShiftedUp,
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// `x (1+a)^(1+a) / a^a`, the limit of the ratio of consecutive terms.
/// `w ln w` is taken as 0 at `w = 0`.
fn limit_ratio(y: Complex64, a: Complex64) -> Result<Complex64> {
    let x = (y - 1.0) * cpow(y, -(a + 1.0))?;
    let xlogx = |w: Complex64| -> Result<Complex64> {
        if w.norm() == 0.0 {
            Ok(c(0.0))
        } else {
            Ok(w * clog(w)?)
        }
    };
    Ok(x * (xlogx(a + 1.0)? - xlogx(a)?).exp())
}

/// Modulus of the limiting term ratio; the series converges geometrically
/// when this is below 1.
pub fn growth_ratio(y: Complex64, a: Complex64) -> Result<f64> {
    Ok(limit_ratio(y, a)?.norm())
}

/// `ln` of a Gamma ratio numerator over denominator; `None` when a
/// denominator Gamma has a pole, which makes the coefficient zero.
fn log_coefficient(kind: Coefficient, k: usize, a: Complex64, b: Complex64) -> Result<Option<Complex64>> {
    let kf = k as f64;
    let (num, den, fact) = match kind {
        Coefficient::Mcclintoch => ((1.0 + a) * kf, 1.0 + a * kf, kf + 2.0),
        Coefficient::McclintochSecond => ((1.0 + a) * kf, 1.0 + a * kf, kf + 3.0),
        Coefficient::ShiftedDown | Coefficient::Plain | Coefficient::ShiftedUp => {
            let base = match kind {
                Coefficient::ShiftedDown => b - 1.0,
                Coefficient::Plain => b,
                _ => b + 1.0,
            };
            if is_gamma_pole(b + a * kf) {
                return Ok(None);
            }
            let num = log_gamma(base + (1.0 + a) * kf)? - log_gamma(base)?;
            let den = log_gamma(b + a * kf)? - log_gamma(b)?;
            return Ok(Some(num - den - log_gamma(c(kf + 2.0))?));
        }
    };
    if is_gamma_pole(den) {
        return Ok(None);
    }
    Ok(Some(log_gamma(num)? - log_gamma(den)? - log_gamma(c(fact))?))
}

fn first_index(kind: Coefficient) -> usize {
    match kind {
        Coefficient::Mcclintoch | Coefficient::McclintochSecond => 1,
        _ => 0,
    }
}

/// How the series value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(super) enum Summation {
    Geometric,
    /// On the circle of convergence with a real limiting ratio: partial sums
    /// plus a fitted algebraic tail.
    Boundary,
    Fixed,
}

/// Sums the series for `kind`, adaptively or to exactly `fixed` terms.
pub(super) fn series_lhs(
    kind: Coefficient,
    y: Complex64,
    a: Complex64,
    b: Complex64,
    fixed: Option<usize>,
) -> Result<(Complex64, Summation)> {
    let omega = limit_ratio(y, a)?;
    let rho = omega.norm();
    let boundary = (rho - 1.0).abs() <= BOUNDARY_WIDTH && omega.arg().abs() <= BOUNDARY_WIDTH;
    if !(rho < 1.0) && !boundary {
        return Err(Error::Divergent(format!("term ratio tends to {rho:.6} >= 1")));
    }
    let x = (y - 1.0) * cpow(y, -(a + 1.0))?;
    let log_x = if x.norm() == 0.0 { None } else { Some(clog(x)?) };
    let term = |k: usize| -> Result<Complex64> {
        Ok(match (log_coefficient(kind, k, a, b)?, log_x) {
            (None, _) => c(0.0),
            (Some(lc), _) if k == 0 => lc.exp(),
            (Some(_), None) => c(0.0),
            (Some(lc), Some(lx)) => (lc + lx * k as f64).exp(),
        })
    };
    let k0 = first_index(kind);

    let mut sum = CompensatedSum::new();
    if let Some(count) = fixed {
        for k in k0..k0 + count {
            sum.add(term(k)?);
        }
        return Ok((sum.value(), Summation::Fixed));
    }
    if boundary {
        return boundary_sum(term, k0).map(|v| (v, Summation::Boundary));
    }

    let mut small_run = 0;
    for k in k0..k0 + SERIES_MAX_TERMS {
        let t = term(k)?;
        sum.add(t);
        // geometric tail beyond this term
        if t.norm() / (1.0 - rho) <= SERIES_REL_TOL * sum.value().norm().max(1e-300) {
            small_run += 1;
            if small_run >= CONSECUTIVE_SMALL {
                return Ok((sum.value(), Summation::Geometric));
            }
        } else {
            small_run = 0;
        }
    }
    Err(Error::NoConvergence { terms: SERIES_MAX_TERMS, err_estimate: f64::NAN })
}

/// Terms decaying like `k^-p`: adds `t_K (K/(p-1) - 1/2 + p/(12K))`, the
/// Euler-Maclaurin tail of a pure power, with `p` read off the last two
/// terms. `K` doubles until two corrected sums agree.
fn boundary_sum(term: impl Fn(usize) -> Result<Complex64>, k0: usize) -> Result<Complex64> {
    let mut sum = CompensatedSum::new();
    let mut previous_term = c(0.0);
    let mut checkpoint = BOUNDARY_FIRST_CHECK;
    let mut last: Option<Complex64> = None;
    for k in k0.. {
        let t = term(k)?;
        sum.add(t);
        if k + 1 - k0 == checkpoint {
            let kf = k as f64;
            let p = -(t / previous_term).ln().re / (kf / (kf - 1.0)).ln();
            if !(p > 1.0) {
                return Err(Error::Divergent(format!("terms decay like k^-{p:.3} on the boundary")));
            }
            if p <= BOUNDARY_MIN_DECAY {
                return Err(Error::NoConvergence { terms: checkpoint, err_estimate: f64::INFINITY });
            }
            let value = sum.value() + t * (kf / (p - 1.0) - 0.5 + p / (12.0 * kf));
            if let Some(prev) = last {
                let change = (value - prev).norm();
                if change <= BOUNDARY_REL_TOL * (1.0 + value.norm()) {
                    return Ok(value);
                }
                if checkpoint >= BOUNDARY_MAX_TERMS {
                    return Err(Error::NoConvergence { terms: checkpoint, err_estimate: change });
                }
            }
            last = Some(value);
            checkpoint *= 2;
        }
        previous_term = t;
    }
    unreachable!("the loop returns by BOUNDARY_MAX_TERMS")
}

fn lhs_with(kind: Coefficient, p: &Assignment, ctx: &mut EvalCtx) -> Result<Complex64> {
    let b = p.get("b").copied().unwrap_or(c(1.0));
    let (value, how) = series_lhs(kind, get(p, "y"), get(p, "a"), b, ctx.opts.fixed_terms)?;
    ctx.note(match how {
        Summation::Geometric => "series:geometric".to_string(),
        Summation::Boundary => "series:boundary algebraic tail".to_string(),
        Summation::Fixed => format!("series:fixed {} terms", ctx.opts.fixed_terms.unwrap_or(0)),
    });
    Ok(value)
}

pub(super) fn lhs_3_1(p: &Assignment, ctx: &mut EvalCtx) -> Result<Complex64> {
    lhs_with(Coefficient::Mcclintoch, p, ctx)
}

pub(super) fn lhs_3_2(p: &Assignment, ctx: &mut EvalCtx) -> Result<Complex64> {
    lhs_with(Coefficient::McclintochSecond, p, ctx)
}

pub(super) fn lhs_3_3(p: &Assignment, ctx: &mut EvalCtx) -> Result<Complex64> {
    lhs_with(Coefficient::ShiftedDown, p, ctx)
}

pub(super) fn lhs_3_4(p: &Assignment, ctx: &mut EvalCtx) -> Result<Complex64> {
    lhs_with(Coefficient::Plain, p, ctx)
}

pub(super) fn lhs_3_5(p: &Assignment, ctx: &mut EvalCtx) -> Result<Complex64> {
    lhs_with(Coefficient::ShiftedUp, p, ctx)
}

pub(super) fn rhs_3_1(p: &Assignment, _: &mut EvalCtx) -> Result<Complex64> {
    let (y, a) = (get(p, "y"), get(p, "a"));
    let l = clog(y)?;
    let num = -a + y + a * y - cpow(y, 1.0 + a)? - a * l - a * a * l + a * y * l + a * a * y * l;
    Ok(num / (a * (1.0 + a) * (y - 1.0)))
}

pub(super) fn rhs_3_2(p: &Assignment, _: &mut EvalCtx) -> Result<Complex64> {
    let (y, a) = (get(p, "y"), get(p, "a"));
    let l = clog(y)?;
    let ya = cpow(y, a)?;
    let y1a = cpow(y, 1.0 + a)?;
    let ym1 = y - 1.0;
    let num = cpow(y, 2.0 * (1.0 + a))? + 6.0 * a * a * ym1 * ym1
        - y * (4.0 - 3.0 * y - 4.0 * ya + 4.0 * y1a)
        - a * ym1 * (3.0 - 9.0 * y + 8.0 * y1a)
        + 2.0 * a * (1.0 + 3.0 * a + 2.0 * a * a) * ym1 * ym1 * l;
    Ok(num / (4.0 * a * (1.0 + a) * (1.0 + 2.0 * a) * ym1 * ym1))
}

pub(super) fn rhs_3_3(p: &Assignment, _: &mut EvalCtx) -> Result<Complex64> {
    let (y, a, b) = (get(p, "y"), get(p, "a"), get(p, "b"));
    let one_y = 1.0 - y;
    let first = -(1.0 - b) * cpow(y, 1.0 + a)? / ((1.0 + a - b) * (2.0 + a - b) * one_y);
    let second = cpow(y, b - 1.0)? * ((1.0 + a) / (2.0 + a - b) - a * y / (1.0 + a - b)) / one_y;
    Ok(first + second)
}

pub(super) fn rhs_3_4(p: &Assignment, _: &mut EvalCtx) -> Result<Complex64> {
    let (y, a, b) = (get(p, "y"), get(p, "a"), get(p, "b"));
    let one_y = 1.0 - y;
    Ok(-cpow(y, 1.0 + a)? / ((1.0 + a - b) * one_y) - cpow(y, b)? / ((b - 1.0 - a) * one_y))
}

pub(super) fn rhs_3_5(p: &Assignment, _: &mut EvalCtx) -> Result<Complex64> {
    let (y, a, b) = (get(p, "y"), get(p, "a"), get(p, "b"));
    let one_y = 1.0 - y;
    Ok(cpow(y, 1.0 + a)? / (b * one_y) + cpow(y, 1.0 + b)? / (b * (-1.0 + a * (y - 1.0)) * one_y))
}
