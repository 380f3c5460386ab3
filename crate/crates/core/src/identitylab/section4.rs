//! Log-log integrals over the half-line and a `Phi` integral.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::model::{get, order, Assignment, EvalCtx};
use crate::error::{Error, Result};
use crate::numkernel::{
    binomial, clog, constant, cpow, factorial, hyp2f1, pochhammer_int, CompensatedSum, ConstantTag,
};
use crate::quadrature::{gauss_legendre, integrate_halfline};

/// Points used by the Gauss-Legendre rule for the `Phi` integral.
pub const PHI_INTEGRAL_POINTS: usize = 64;

const I: Complex64 = Complex64::new(0.0, 1.0);

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// `ln x + sign i theta`, the chosen reading of `log(e^{i theta} x)`.
fn shifted_log(x: f64, theta: f64, sign: f64) -> Complex64 {
    Complex64::new(x.ln(), sign * theta)
}

fn halfline(ctx: &mut EvalCtx, f: impl Fn(f64) -> Complex64) -> Result<Complex64> {
    ctx.note(format!("branch:{}", ctx.opts.branch));
    let r = integrate_halfline(f, ctx.opts.quad_tol)?;
    ctx.note(format!("quadrature:halfline evaluations={}", r.evaluations));
    Ok(r.value)
}

/// `x^p / (1 + x^q)` without overflow for large `x`.
fn damped_power(x: f64, p: f64, q: i32) -> f64 {
    if x <= 1.0 {
        x.powf(p) / (1.0 + x.powi(q))
    } else {
        x.powf(p - q as f64) / (x.powi(-q) + 1.0)
    }
}

/// `log(w)` where `w` never vanishes on the integration path.
fn log_nonzero(w: Complex64) -> Complex64 {
    clog(w).unwrap_or(Complex64::new(f64::NAN, f64::NAN))
}

pub(super) fn lhs_4_1(_: &Assignment, ctx: &mut EvalCtx) -> Result<Complex64> {
    let sign = ctx.opts.branch.sign();
    halfline(ctx, |x| {
        let l = shifted_log(x, PI, sign);
        l * log_nonzero(l) * damped_power(x, 1.5, 5)
    })
}

pub(super) fn rhs_4_1(_: &Assignment, _: &mut EvalCtx) -> Result<Complex64> {
    let glaisher = constant(ConstantTag::Glaisher);
    let inner = 3125.0 * glaisher.powi(12) / (16384.0 * 2f64.powf(1.0 / 3.0) * std::f64::consts::E * PI.powi(5));
    Ok(-PI * PI / 25.0 * (5.0 * PI / 2.0 + I * inner.ln()))
}

pub(super) fn lhs_4_2(_: &Assignment, ctx: &mut EvalCtx) -> Result<Complex64> {
    let sign = ctx.opts.branch.sign();
    halfline(ctx, |x| {
        let l = shifted_log(x, PI / 2.0, sign);
        l * l * log_nonzero(l) * damped_power(x, 4.0, 10)
    })
}

pub(super) fn rhs_4_2(_: &Assignment, _: &mut EvalCtx) -> Result<Complex64> {
    let apery = constant(ConstantTag::Apery);
    let inner = 25.0 * (7.0 * apery / (6.0 * PI * PI)).exp() / (4.0 * 2f64.powf(2.0 / 3.0) * PI * PI);
    Ok(3.0 / 250.0 * PI.powi(3) * (I * PI + inner.ln()))
}

pub(super) fn lhs_4_3(_: &Assignment, ctx: &mut EvalCtx) -> Result<Complex64> {
    let sign = ctx.opts.branch.sign();
    halfline(ctx, |x| {
        let l = shifted_log(x, PI, sign);
        l * log_nonzero(l) * damped_power(x, 1.0, 4)
    })
}

pub(super) fn rhs_4_3(_: &Assignment, _: &mut EvalCtx) -> Result<Complex64> {
    let catalan = constant(ConstantTag::Catalan);
    Ok(-PI / 8.0 * (2.0 * I * catalan + PI * (PI - I * (27.0 * PI * PI / 16.0).ln())))
}

/// Finite double sum with `b^{-k} 2F1(k, 1/u; 1+1/u; -1/b)` factors.
pub(super) fn lhs_4_4(p: &Assignment, _: &mut EvalCtx) -> Result<Complex64> {
    let (n, m, a, k, u) = (order(p), get(p, "m").re, get(p, "a"), get(p, "k"), get(p, "u").re);
    let inv_u = c(1.0 / u);
    let mut sum = CompensatedSum::new();
    for pp in 0..=n {
        let coeff = pochhammer_int(c(-(n as f64)), pp as u32).re * pochhammer_int(c(n as f64 + 1.0), pp as u32).re
            / factorial((2 * pp) as u32);
        for j in 0..=2 * pp {
            let shift = j as i64 - pp as i64;
            let b = a + shift as f64;
            let sign = if (j + pp) % 2 == 0 { 1.0 } else { -1.0 };
            let phase = Complex64::new(0.0, m * shift as f64).exp();
            let f = hyp2f1(k, inv_u, 1.0 + inv_u, -b.inv())?;
            sum.add(phase * cpow(b, -k)? * f * (binomial(2 * pp, j as i64) * coeff * sign));
        }
    }
    Ok(sum.value())
}

pub(super) fn rhs_4_4(p: &Assignment, ctx: &mut EvalCtx) -> Result<Complex64> {
    let (nf, m, a, k, u) = (order(p) as f64, get(p, "m").re, get(p, "a"), get(p, "k"), get(p, "u").re);
    let w = -Complex64::new(0.0, m).exp();
    let left = Complex64::new(0.0, -m * nf).exp();
    let right = Complex64::new(0.0, m * (1.0 + nf)).exp();
    let cfg = ctx.opts.phi;
    // The closure cannot return errors; remember the first one.
    let failure = std::cell::RefCell::new(None::<Error>);
    let methods = std::cell::RefCell::new(std::collections::BTreeSet::new());
    let r = gauss_legendre(
        |x| {
            let shift = x.powf(u);
            let eval = |aa: Complex64| match crate::lerch::phi(w, k, aa, &cfg) {
                Ok(r) => {
                    methods.borrow_mut().insert(format!("phi:{}/{}", r.method.name(), r.scheme.name()));
                    r.value
                }
                Err(e) => {
                    failure.borrow_mut().get_or_insert(e);
                    c(0.0)
                }
            };
            left * eval(a - nf + shift) + right * eval(1.0 + a + nf + shift)
        },
        0.0,
        1.0,
        PHI_INTEGRAL_POINTS,
    )?;
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    for m in methods.into_inner() {
        ctx.note(m);
    }
    ctx.note(format!("quadrature:gauss_legendre points={PHI_INTEGRAL_POINTS}"));
    Ok(r.value)
}
