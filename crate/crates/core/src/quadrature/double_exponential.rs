use std::f64::consts::FRAC_PI_2;
use std::sync::OnceLock;

use num_complex::Complex64;

use super::QuadResult;
use crate::error::{Error, Result};
use crate::numkernel::is_finite;

/// Finest refinement level; the step is `2^-level`.
pub const MAX_LEVEL: u32 = 12;

const MIN_LEVEL: u32 = 3;
/// Beyond this `pi/2 sinh t` the tanh-sinh complement underflows.
const TANH_SINH_T_MAX: f64 = 6.1;
const EXP_SINH_T_MAX: f64 = 6.1;
/// Largest `t` for which `e^t` is comfortably finite.
const LOG_SUBSTITUTION_T_MAX: f64 = 700.0;

#[derive(Debug, Clone, Copy)]
struct Node {
    t: f64,
    /// Distance from the right endpoint of `[-1, 1]`, `1 - tanh(pi/2 sinh t)`.
    complement: f64,
    weight: f64,
}

/// Nodes with `t >= 0` added at each level. Level 0 holds the integers,
/// level `l > 0` the odd multiples of `2^-l`.
fn tanh_sinh_table() -> &'static [Vec<Node>] {
    static TABLE: OnceLock<Vec<Vec<Node>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        (0..=MAX_LEVEL)
            .map(|level| {
                let h = (-(level as f64)).exp2();
                let (start, step) = if level == 0 { (0, 1) } else { (1, 2) };
                (start..)
                    .step_by(step)
                    .map(|k| k as f64 * h)
                    .take_while(|&t| t <= TANH_SINH_T_MAX)
                    .map(|t| {
                        let v = FRAC_PI_2 * t.sinh();
                        let cv = v.cosh();
                        Node { t, complement: (-v).exp() / cv, weight: FRAC_PI_2 * t.cosh() / (cv * cv) }
                    })
                    .collect()
            })
            .collect()
    })
}

fn check(v: Complex64, x: f64) -> Result<Complex64> {
    if is_finite(v) {
        Ok(v)
    } else {
        Err(Error::Domain(format!("integrand is not finite at x = {x:e}")))
    }
}

/// Tanh-sinh quadrature of `f` over `[lo, hi]`.
///
/// Abscissae that round onto an endpoint are skipped, so `f` is never
/// evaluated at `lo` or `hi`.
pub fn tanh_sinh<F>(f: F, lo: f64, hi: f64, tol: f64) -> Result<QuadResult>
where
    F: Fn(f64) -> Complex64,
{
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::Domain(format!("tanh_sinh needs finite lo < hi, got [{lo}, {hi}]")));
    }
    let half = 0.5 * (hi - lo);
    let mut evaluations = 0;
    let mut level_sum = |nodes: &[Node]| -> Result<Complex64> {
        let mut acc = Complex64::new(0.0, 0.0);
        for node in nodes {
            let offset = half * node.complement;
            let left = lo + offset;
            let right = hi - offset;
            if node.t == 0.0 {
                let mid = lo + half;
                acc += check(f(mid), mid)? * node.weight;
                evaluations += 1;
                continue;
            }
            if left > lo && left < hi {
                acc += check(f(left), left)? * node.weight;
                evaluations += 1;
            }
            if right < hi && right > lo {
                acc += check(f(right), right)? * node.weight;
                evaluations += 1;
            }
        }
        Ok(acc)
    };

    let table = tanh_sinh_table();
    let mut raw = level_sum(&table[0])?;
    let mut estimate = raw * half;
    let mut err = f64::INFINITY;
    for level in 1..=MAX_LEVEL {
        let h = (-(level as f64)).exp2();
        raw += level_sum(&table[level as usize])?;
        let next = raw * half * h;
        err = (next - estimate).norm();
        estimate = next;
        if level >= MIN_LEVEL && err <= tol * (1.0 + estimate.norm()) {
            return Ok(QuadResult { value: estimate, err_estimate: err, evaluations });
        }
    }
    Err(Error::NoConvergence { terms: evaluations, err_estimate: err })
}

/// Exp-sinh quadrature of `f` over `(0, inf)` with abscissae
/// `x = scale * exp(pi/2 sinh t)`.
///
/// Refinement stops when successive levels differ by at most
/// `max(tol * (1 + |value|), abs_floor)`. Nodes where `f` underflows to
/// zero or cannot be evaluated past `x = 1e300` are dropped.
pub fn exp_sinh<F>(f: F, scale: f64, tol: f64, abs_floor: f64) -> Result<QuadResult>
where
    F: Fn(f64) -> Complex64,
{
    if !(scale > 0.0) || !scale.is_finite() {
        return Err(Error::Domain(format!("exp_sinh scale must be positive, got {scale}")));
    }
    let mut evaluations = 0;
    let mut level_sum = |level: u32| -> Result<Complex64> {
        let h = (-(level as f64)).exp2();
        let (start, step) = if level == 0 { (0i64, 1usize) } else { (1, 2) };
        let mut acc = Complex64::new(0.0, 0.0);
        for sign in [1.0, -1.0] {
            for k in (start..).step_by(step) {
                let t = sign * k as f64 * h;
                if sign < 0.0 && k == 0 {
                    continue;
                }
                if t.abs() > EXP_SINH_T_MAX {
                    break;
                }
                let e = (FRAC_PI_2 * t.sinh()).exp();
                let x = scale * e;
                if !(x > 0.0) || x > 1e300 {
                    break;
                }
                let v = f(x);
                evaluations += 1;
                let term = v * (scale * FRAC_PI_2 * t.cosh() * e);
                if !is_finite(term) {
                    if sign > 0.0 && x > 1e3 * scale {
                        break;
                    }
                    return Err(Error::Domain(format!("integrand is not finite at x = {x:e}")));
                }
                acc += term;
                if sign > 0.0 && t > 1.0 && term.norm() < 1e-300 {
                    break;
                }
            }
        }
        Ok(acc)
    };

    let mut raw = level_sum(0)?;
    let mut estimate = raw;
    let mut err = f64::INFINITY;
    for level in 1..=MAX_LEVEL {
        let h = (-(level as f64)).exp2();
        raw += level_sum(level)?;
        let next = raw * h;
        err = (next - estimate).norm();
        estimate = next;
        if level >= MIN_LEVEL && err <= (tol * (1.0 + estimate.norm())).max(abs_floor) {
            return Ok(QuadResult { value: estimate, err_estimate: err, evaluations });
        }
    }
    Err(Error::NoConvergence { terms: evaluations, err_estimate: err })
}

/// `int_0^inf f(x) dx`, split at `x = 1`.
///
/// `(0, 1]` uses tanh-sinh directly; `[1, inf)` is mapped by `x = e^t` and
/// integrated over `t in (0, inf)` with exp-sinh.
pub fn integrate_halfline<F>(f: F, tol: f64) -> Result<QuadResult>
where
    F: Fn(f64) -> Complex64,
{
    let inner = tanh_sinh(&f, 0.0, 1.0, tol)?;
    let outer = exp_sinh(
        |t| {
            if t > LOG_SUBSTITUTION_T_MAX {
                return Complex64::new(0.0, 0.0);
            }
            let x = t.exp();
            f(x) * x
        },
        1.0,
        tol,
        0.0,
    )?;
    Ok(QuadResult {
        value: inner.value + outer.value,
        err_estimate: inner.err_estimate + outer.err_estimate,
        evaluations: inner.evaluations + outer.evaluations,
    })
}
