//! Finite double sums equal to two-term combinations of `Phi`.

use num_complex::Complex64;

use super::model::{get, order, Assignment, EvalCtx};
use crate::error::Result;
use crate::numkernel::{binomial, cpow, factorial, pochhammer_int, CompensatedSum};

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

const I: Complex64 = Complex64::new(0.0, 1.0);

/// `(-1)^k` for an integer `k`.
fn sign(k: i64) -> f64 {
    if k.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// `(-1)^w` on the principal branch, `exp(i pi w)`.
fn neg_one_pow(w: Complex64) -> Complex64 {
    (I * std::f64::consts::PI * w).exp()
}

fn poch(x: i64, k: u64) -> f64 {
    pochhammer_int(c(x as f64), k as u32).re
}

struct Common {
    n: u64,
    nf: f64,
    z: Complex64,
    a: Complex64,
    s: Complex64,
}

fn common(p: &Assignment) -> Common {
    let n = order(p);
    Common { n, nf: n as f64, z: get(p, "z"), a: get(p, "a"), s: get(p, "s") }
}

/// `sum_p sum_{j<=2p} w(p, j) C(2p, j) (-n)_p (1+n)_p / (2p)!` shape shared
/// by the first four identities.
fn central_sum(n: u64, mut term: impl FnMut(i64, i64) -> Result<Complex64>) -> Result<Complex64> {
    let mut sum = CompensatedSum::new();
    for p in 0..=n {
        let coeff = poch(-(n as i64), p) * poch(n as i64 + 1, p) / factorial(2 * p as u32);
        for j in 0..=2 * p {
            let w = binomial(2 * p, j as i64) * coeff;
            sum.add(term(p as i64, j as i64)? * w);
        }
    }
    Ok(sum.value())
}

/// Odd-binomial shape `sum_{p<n} sum_{j<=2p+1} w(p, j) C(1+2p, j)
/// (1-n)_p (1+n)_p / Gamma(2+2p)`.
fn odd_sum(n: u64, mut term: impl FnMut(i64, i64) -> Result<Complex64>) -> Result<Complex64> {
    let mut sum = CompensatedSum::new();
    for p in 0..n {
        let coeff = poch(1 - n as i64, p) * poch(n as i64 + 1, p) / factorial(2 * p as u32 + 1);
        for j in 0..=2 * p + 1 {
            let w = binomial(2 * p + 1, j as i64) * coeff;
            sum.add(term(p as i64, j as i64)? * w);
        }
    }
    Ok(sum.value())
}

/// `sum_{p<=n} sum_{j<=2n-2p} w(p, j) C(2n-2p, j) (-2n)_{2p} / (p! (-2n)_p)`.
fn doubled_sum(n: u64, mut term: impl FnMut(i64, i64) -> Result<Complex64>) -> Result<Complex64> {
    let mut sum = CompensatedSum::new();
    let two_n = 2 * n as i64;
    for p in 0..=n {
        let coeff = poch(-two_n, 2 * p) / (factorial(p as u32) * poch(-two_n, p));
        let top = 2 * (n - p);
        for j in 0..=top {
            let w = binomial(top, j as i64) * coeff;
            sum.add(term(p as i64, j as i64)? * w);
        }
    }
    Ok(sum.value())
}

pub(super) fn lhs_2_1(p: &Assignment, _: &mut EvalCtx) -> Result<Complex64> {
    let (n, m, a, k) = (order(p), get(p, "m").re, get(p, "a"), get(p, "k"));
    central_sum(n, |p, j| {
        let phase = Complex64::new(0.0, m * (j - p) as f64).exp();
        Ok(cpow(a + (j - p) as f64, -k)? * phase * sign(j + p))
    })
}

pub(super) fn rhs_2_1(p: &Assignment, ctx: &mut EvalCtx) -> Result<Complex64> {
    let (nf, m, a, k) = (order(p) as f64, get(p, "m").re, get(p, "a"), get(p, "k"));
    let w = -Complex64::new(0.0, m).exp();
    Ok(Complex64::new(0.0, -m * nf).exp() * ctx.phi(w, k, a - nf)?
        + Complex64::new(0.0, m * (1.0 + nf)).exp() * ctx.phi(w, k, 1.0 + a + nf)?)
}

pub(super) fn lhs_2_2(p: &Assignment, _: &mut EvalCtx) -> Result<Complex64> {
    let Common { n, z, a, s, .. } = common(p);
    central_sum(n, |p, j| Ok(cpow(a + (j - p) as f64, -s)? * (z * (p - j) as f64).exp()))
}

pub(super) fn rhs_2_2(p: &Assignment, ctx: &mut EvalCtx) -> Result<Complex64> {
    let Common { n, nf, z, a, s } = common(p);
    let w = (-z).exp();
    let inner = ctx.phi(w, s, a - nf)? - (-(1.0 + 2.0 * nf) * z).exp() * ctx.phi(w, s, 1.0 + a + nf)?;
    Ok(sign(n as i64) * (nf * z).exp() * inner)
}

pub(super) fn lhs_2_3(p: &Assignment, _: &mut EvalCtx) -> Result<Complex64> {
    let Common { n, z, a, s, .. } = common(p);
    central_sum(n, |p, j| Ok(cpow(a + (j - p) as f64, s)? * (z * (j - p) as f64).exp()))
}

pub(super) fn rhs_2_3(p: &Assignment, ctx: &mut EvalCtx) -> Result<Complex64> {
    let Common { nf, z, a, s, .. } = common(p);
    let w = (-z).exp();
    let inner = (z + 2.0 * nf * z).exp() * ctx.phi(w, -s, -a - nf)? - ctx.phi(w, -s, 1.0 - a + nf)?;
    Ok(neg_one_pow(nf + s) * (-(1.0 + nf) * z).exp() * inner)
}

pub(super) fn lhs_2_4(p: &Assignment, _: &mut EvalCtx) -> Result<Complex64> {
    let Common { n, z, a, s, .. } = common(p);
    central_sum(n, |p, j| Ok(cpow(a + (j - p) as f64, -s)? * (z * (p - j) as f64).exp() * sign(p)))
}

pub(super) fn rhs_2_4(p: &Assignment, ctx: &mut EvalCtx) -> Result<Complex64> {
    let Common { nf, z, a, s, .. } = common(p);
    let w = -z.exp();
    let inner = ctx.phi(w, s, -a - nf)? + (z + 2.0 * nf * z).exp() * ctx.phi(w, s, 1.0 - a + nf)?;
    Ok(neg_one_pow(-s) * (-nf * z).exp() * inner)
}

pub(super) fn lhs_2_5(p: &Assignment, _: &mut EvalCtx) -> Result<Complex64> {
    let Common { n, z, a, s, .. } = common(p);
    odd_sum(n, |p, j| Ok(cpow(a + (j - p) as f64, -s)? * (I * z * (j - p) as f64).exp() * sign(j + p)))
}

pub(super) fn rhs_2_5(p: &Assignment, ctx: &mut EvalCtx) -> Result<Complex64> {
    let Common { nf, z, a, s, .. } = common(p);
    let w = -(I * z).exp();
    let inner = ctx.phi(w, s, 1.0 + a - nf)? - (2.0 * I * nf * z).exp() * ctx.phi(w, s, 1.0 + a + nf)?;
    Ok((-I * (nf - 1.0) * z).exp() * inner / nf)
}

pub(super) fn lhs_2_6(p: &Assignment, _: &mut EvalCtx) -> Result<Complex64> {
    let Common { n, z, a, s, .. } = common(p);
    odd_sum(n, |p, j| Ok(cpow(a + (j - p) as f64, -s)? * (z * (p - j) as f64).exp()))
}

pub(super) fn rhs_2_6(p: &Assignment, ctx: &mut EvalCtx) -> Result<Complex64> {
    let Common { n, nf, z, a, s } = common(p);
    let w = (-z).exp();
    let inner = (2.0 * nf * z).exp() * ctx.phi(w, s, 1.0 + a - nf)? - ctx.phi(w, s, 1.0 + a + nf)?;
    Ok(sign(1 + n as i64) * (-(1.0 + nf) * z).exp() * inner / nf)
}

pub(super) fn lhs_2_7(p: &Assignment, _: &mut EvalCtx) -> Result<Complex64> {
    let Common { n, z, a, s, .. } = common(p);
    odd_sum(n, |p, j| Ok(cpow(a + (j - p) as f64, -s)? * (z * (j - p) as f64).exp()))
}

pub(super) fn rhs_2_7(p: &Assignment, ctx: &mut EvalCtx) -> Result<Complex64> {
    let Common { nf, z, a, s, .. } = common(p);
    let w = (-z).exp();
    let inner = (2.0 * nf * z).exp() * ctx.phi(w, s, -a - nf)? - ctx.phi(w, s, -a + nf)?;
    Ok(neg_one_pow(1.0 + nf - s) * (-nf * z).exp() * inner / nf)
}

pub(super) fn lhs_2_8(p: &Assignment, _: &mut EvalCtx) -> Result<Complex64> {
    let Common { n, z, a, s, .. } = common(p);
    odd_sum(n, |p, j| Ok(cpow(a - (j - p) as f64, -s)? * (z * (p - j) as f64).exp() * sign(j + p)))
}

pub(super) fn rhs_2_8(p: &Assignment, ctx: &mut EvalCtx) -> Result<Complex64> {
    let Common { nf, z, a, s, .. } = common(p);
    let w = -(-z).exp();
    let inner = (2.0 * nf * z).exp() * ctx.phi(w, s, 1.0 - a - nf)? - ctx.phi(w, s, 1.0 - a + nf)?;
    Ok(neg_one_pow(-s) * (-(1.0 + nf) * z).exp() * inner / nf)
}

pub(super) fn lhs_2_9(p: &Assignment, _: &mut EvalCtx) -> Result<Complex64> {
    let Common { n, nf, z, a, s } = common(p);
    // e^{i (j+3p) pi} is the exact sign (-1)^{j+p}
    doubled_sum(n, |p, j| {
        Ok(cpow(a + j as f64 - nf + p as f64, -s)? * (-z * (j + p) as f64).exp() * sign(j + p))
    })
}

pub(super) fn rhs_2_9(p: &Assignment, ctx: &mut EvalCtx) -> Result<Complex64> {
    let Common { nf, z, a, s, .. } = common(p);
    let w = -(-z).exp();
    // e^{2 i n pi} = 1 for integer n
    Ok(ctx.phi(w, s, a - nf)? + (-(1.0 + 2.0 * nf) * z).exp() * ctx.phi(w, s, 1.0 + a + nf)?)
}

pub(super) fn lhs_2_10(p: &Assignment, _: &mut EvalCtx) -> Result<Complex64> {
    let Common { n, nf, z, a, s } = common(p);
    let mut sum = CompensatedSum::new();
    let base = 1 - 2 * n as i64;
    for p in 0..n {
        let coeff = poch(base, 2 * p) / (factorial(p as u32) * poch(base, p));
        let top = 2 * n - 2 * p - 1;
        for j in 0..=top {
            let (pi, ji) = (p as i64, j as i64);
            let w = binomial(top, ji) * coeff * sign(ji + pi);
            let power = cpow(a + ji as f64 - nf + pi as f64, -s)?;
            sum.add(power * (z * (ji + pi) as f64).exp() * w);
        }
    }
    Ok(sum.value())
}

pub(super) fn rhs_2_10(p: &Assignment, ctx: &mut EvalCtx) -> Result<Complex64> {
    let Common { nf, z, a, s, .. } = common(p);
    let w = -z.exp();
    Ok(ctx.phi(w, s, a - nf)? - (2.0 * nf * z).exp() * ctx.phi(w, s, a + nf)?)
}

/// `sum_{p<=n/2} sum_{j<=n-2p} w(p, j) C(n-2p, j) (-n)_{2p} / (p! (-n)_p)`.
fn halved_sum(n: u64, mut term: impl FnMut(i64, i64) -> Result<Complex64>) -> Result<Complex64> {
    let mut sum = CompensatedSum::new();
    for p in 0..=n / 2 {
        let coeff = poch(-(n as i64), 2 * p) / (factorial(p as u32) * poch(-(n as i64), p));
        let top = n - 2 * p;
        for j in 0..=top {
            let w = binomial(top, j as i64) * coeff;
            sum.add(term(p as i64, j as i64)? * w);
        }
    }
    Ok(sum.value())
}

pub(super) fn lhs_2_11(p: &Assignment, _: &mut EvalCtx) -> Result<Complex64> {
    let Common { n, z, a, s, .. } = common(p);
    halved_sum(n, |p, j| Ok(cpow(a + (j + p) as f64, -s)? * (-z * (j + p) as f64).exp()))
}

pub(super) fn rhs_2_11(p: &Assignment, ctx: &mut EvalCtx) -> Result<Complex64> {
    let Common { nf, z, a, s, .. } = common(p);
    let w = (-z).exp();
    Ok(ctx.phi(w, s, a)? - (-(1.0 + nf) * z).exp() * ctx.phi(w, s, 1.0 + a + nf)?)
}

pub(super) fn lhs_2_12(p: &Assignment, _: &mut EvalCtx) -> Result<Complex64> {
    let Common { n, z, a, s, .. } = common(p);
    halved_sum(n, |p, j| Ok(cpow(a + (j + p) as f64, -s)? * (z * (j + p) as f64).exp()))
}

pub(super) fn rhs_2_12(p: &Assignment, ctx: &mut EvalCtx) -> Result<Complex64> {
    let Common { nf, z, a, s, .. } = common(p);
    let w = (-z).exp();
    let inner = -ctx.phi(w, s, 1.0 - a)? + ((1.0 + nf) * z).exp() * ctx.phi(w, s, -a - nf)?;
    Ok(neg_one_pow(-s) * (-z).exp() * inner)
}

pub(super) fn lhs_2_13(p: &Assignment, _: &mut EvalCtx) -> Result<Complex64> {
    let Common { n, z, a, s, .. } = common(p);
    doubled_sum(n, |p, j| Ok(cpow(a - (j + p) as f64, -s)? * (-z * (j + p) as f64).exp() * sign(j + p)))
}

pub(super) fn rhs_2_13(p: &Assignment, ctx: &mut EvalCtx) -> Result<Complex64> {
    let Common { nf, z, a, s, .. } = common(p);
    let w = -(-z).exp();
    let inner = ctx.phi(w, s, -a)? + (-(1.0 + 2.0 * nf) * z).exp() * ctx.phi(w, s, 1.0 - a + 2.0 * nf)?;
    Ok(neg_one_pow(-s) * inner)
}
