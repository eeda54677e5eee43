//! Morita's p-adic gamma function at rationals with `p`-free denominator, and the
//! gamma-product identities built from it.
//!
//! `Gamma_p(n) = (-1)^n prod_{0<j<n, p∤j} j` for integers `n >= 1`, `Gamma_p(0) = 1`,
//! extended to `Z_p` by continuity. A value mod `p^K` depends only on the argument
//! mod `p^K`, so every evaluation reduces to an integer `n` in `[0, p^K)`.
//!
//! The partial product over `[0, n)` is assembled from the base-`p` digits of `n`:
//! a run of `p^m` consecutive integers starting at a multiple of `p^m` contributes
//! `F_m(o) = prod_{0<=j<p^m, p∤j} (o + j)`, and since `p^m | o` only the terms of
//! `F_m` of degree `k` with `k m < K` matter. `F_{m+1}(X)` is the product of the
//! `p` shifted copies `F_m(X + i p^m)`, so each `F_m` has at most `K` coefficients
//! and an evaluation costs `O(p K^2)` multiplications with no table of size `p^K`.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::FqField;
use crate::padic::{teichmueller, zp_from_rational, PrecisionContext, UnramifiedContext, ZpElement, ZqElement};
use crate::rational::{frac_floor, Rational};

/// Block polynomials for evaluating `Gamma_p` mod `p^K`.
#[derive(Clone, Debug)]
pub struct GammaCache {
    ctx: PrecisionContext,
    /// `blocks[m]` holds the low coefficients of `F_m` for `1 <= m < K`; index 0 is unused.
    blocks: Vec<Vec<u64>>,
}

impl GammaCache {
    pub fn new(ctx: PrecisionContext) -> Self {
        let k = ctx.k() as usize;
        let p = ctx.p();
        let len = |m: usize| (k - 1) / m + 1;
        let mut blocks = vec![Vec::new(); k.max(2)];
        if k >= 2 {
            let mut f1 = vec![1u64];
            for j in 1..p {
                f1 = mul_linear(&f1, j % ctx.modulus(), len(1), &ctx);
            }
            blocks[1] = f1;
            for m in 1..k - 1 {
                let shift_unit = p.pow(m as u32);
                let target = len(m + 1);
                let mut next = vec![1u64];
                for i in 0..p {
                    let mut shifted = taylor_shift(&blocks[m], ctx.reduce((i * shift_unit) as i128), &ctx);
                    shifted.truncate(target);
                    next = mul_truncated(&next, &shifted, target, &ctx);
                }
                blocks[m + 1] = next;
            }
        }
        GammaCache { ctx, blocks }
    }

    pub fn context(&self) -> PrecisionContext {
        self.ctx
    }

    /// `Gamma_p(n) mod p^K` for `0 <= n < p^K`.
    pub fn gamma_at(&self, n: u64) -> u64 {
        let ctx = &self.ctx;
        let p = ctx.p();
        let k = ctx.k();
        debug_assert!(n < ctx.modulus());
        let mut digits = Vec::with_capacity(k as usize);
        let mut rest = n;
        for _ in 0..k {
            digits.push(rest % p);
            rest /= p;
        }
        let mut acc = 1u64;
        let mut offset = 0u64;
        for m in (1..k as usize).rev() {
            let step = p.pow(m as u32);
            for _ in 0..digits[m] {
                acc = ctx.mul(acc, horner(&self.blocks[m], offset, ctx));
                offset += step;
            }
        }
        for i in 1..digits[0] {
            acc = ctx.mul(acc, offset + i);
        }
        if n % 2 == 1 {
            ctx.neg(acc)
        } else {
            acc
        }
    }

    /// `Gamma_p(num / den) mod p^K` for a machine-size fraction with `p ∤ den`.
    pub fn gamma_frac(&self, num: i128, den: u64) -> Result<u64> {
        let inv = self
            .ctx
            .inv(den % self.ctx.modulus())
            .ok_or_else(|| Error::DenominatorDivisibleByP(format!("{num}/{den}")))?;
        Ok(self.gamma_at(self.ctx.mul(self.ctx.reduce(num), inv)))
    }
}

fn mul_linear(f: &[u64], c: u64, len: usize, ctx: &PrecisionContext) -> Vec<u64> {
    // f * (X + c)
    let mut out = vec![0u64; (f.len() + 1).min(len)];
    for (i, &a) in f.iter().enumerate() {
        if i < out.len() {
            out[i] = ctx.add(out[i], ctx.mul(a, c));
        }
        if i + 1 < out.len() {
            out[i + 1] = ctx.add(out[i + 1], a);
        }
    }
    out
}

fn mul_truncated(a: &[u64], b: &[u64], len: usize, ctx: &PrecisionContext) -> Vec<u64> {
    let mut out = vec![0u64; (a.len() + b.len() - 1).min(len)];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            if i + j < out.len() {
                out[i + j] = ctx.add(out[i + j], ctx.mul(x, y));
            }
        }
    }
    out
}

/// Coefficients of `f(X + s)`.
fn taylor_shift(f: &[u64], s: u64, ctx: &PrecisionContext) -> Vec<u64> {
    let mut res: Vec<u64> = Vec::with_capacity(f.len());
    for &c in f.iter().rev() {
        // res <- res * (X + s) + c
        res.push(0);
        for i in (0..res.len()).rev() {
            let below = if i > 0 { res[i - 1] } else { 0 };
            res[i] = ctx.add(below, ctx.mul(res[i], s));
        }
        res[0] = ctx.add(res[0], c);
    }
    res
}

fn horner(f: &[u64], x: u64, ctx: &PrecisionContext) -> u64 {
    f.iter().rev().fold(0u64, |acc, &c| ctx.add(ctx.mul(acc, x), c))
}

/// `Gamma_p(x) mod p^K`, evaluated at the `n` in `[0, p^K)` with `n = x mod p^K`.
pub fn gamma_p(x: &Rational, cache: &GammaCache) -> Result<ZpElement> {
    let ctx = cache.context();
    let n = zp_from_rational(x, ctx)?;
    Ok(ZpElement::new(cache.gamma_at(n.residue()), ctx))
}

/// The sign in `Gamma_p(x) Gamma_p(1 - x) = (-1)^{l(x)}`, where `l(x)` is the
/// representative of `x mod p` in `{1, ..., p}`.
pub fn reflection_sign(x: &Rational, p: u64) -> Result<i64> {
    let ctx1 = PrecisionContext::new(p, 1)?;
    let r = zp_from_rational(x, ctx1)?.residue();
    let l = if r == 0 { p } else { r };
    Ok(if l % 2 == 0 { 1 } else { -1 })
}

/// Checks `Gamma_p(x) Gamma_p(1 - x) = (-1)^{l(x)}` mod `p^K`.
pub fn verify_reflection(x: &Rational, cache: &GammaCache) -> bool {
    let ctx = cache.context();
    let (Ok(a), Ok(b), Ok(sign)) = (
        gamma_p(x, cache),
        gamma_p(&(Rational::one() - x.clone()), cache),
        reflection_sign(x, ctx.p()),
    ) else {
        return false;
    };
    a.mul(&b).map(|prod| prod == ZpElement::from_i64(sign, ctx)).unwrap_or(false)
}

/// Both sides of a product identity in `Z_q / p^K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZqCheck {
    pub lhs: ZqElement,
    pub rhs: ZqElement,
}

impl ZqCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Both sides of an integer identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntCheck {
    pub lhs: i64,
    pub rhs: i64,
}

impl IntCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn check_cache(cache: &GammaCache, uctx: &Arc<UnramifiedContext>) -> Result<()> {
    if cache.context() != *uctx.base() {
        return Err(Error::ContextMismatch);
    }
    Ok(())
}

/// `Gamma_p(<num/den>)` with `den > 0`.
fn gamma_fract(cache: &GammaCache, num: i128, den: i128) -> Result<u64> {
    cache.gamma_frac(num.rem_euclid(den), den as u64)
}

/// The two gamma-product identities for `t` with `p ∤ t` and `0 <= j <= q - 2`:
///
/// `omega(t^{tj}) prod_i Gamma_p(<t p^i j/(q-1)>) prod_{h=1}^{t-1} Gamma_p(<h p^i/t>)
///   = prod_i prod_{h=0}^{t-1} Gamma_p(<p^i h/t + p^i j/(q-1)>)`
///
/// and the same with `omega(t^{-tj})`, `<-t p^i j/(q-1)>` on the left and
/// `<p^i (1+h)/t - p^i j/(q-1)>` on the right.
pub fn verify_lemma31(
    t: u64,
    j: u64,
    field: &FqField,
    uctx: &Arc<UnramifiedContext>,
    cache: &GammaCache,
) -> Result<[ZqCheck; 2]> {
    check_cache(cache, uctx)?;
    let p = field.p();
    let q = field.q();
    if t == 0 || t.is_multiple_of(p) {
        return Err(Error::InvalidParameter(format!("t = {t} must be a positive integer prime to p")));
    }
    if j > q - 2 {
        return Err(Error::InvalidParameter(format!("j = {j} is outside [0, q - 2]")));
    }
    let ctx = uctx.base();
    let n = (q - 1) as i128;
    let ti = t as i128;
    let ji = j as i128;
    let omega_t = teichmueller(field.from_i64(t as i64), field, uctx)?;
    let mut out = Vec::with_capacity(2);
    for sign in [1i128, -1] {
        let mut lhs = 1u64;
        let mut rhs = 1u64;
        for i in 0..field.r() {
            let pi = p.pow(i) as i128;
            // <s t p^i j/(q-1)>
            lhs = ctx.mul(lhs, gamma_fract(cache, sign * ti * pi * ji, n)?);
            for h in 1..ti {
                lhs = ctx.mul(lhs, gamma_fract(cache, h * pi, ti)?);
            }
            for h in 0..ti {
                // first:  p^i h/t + p^i j/(q-1)
                // second: p^i (1+h)/t - p^i j/(q-1)
                let num = if sign == 1 {
                    pi * h * n + pi * ji * ti
                } else {
                    pi * (1 + h) * n - pi * ji * ti
                };
                rhs = ctx.mul(rhs, gamma_fract(cache, num, ti * n)?);
            }
        }
        let e = (sign * ti * ji).rem_euclid(n) as u64;
        let lhs = omega_t.pow(e).scale(lhs);
        let rhs = ZqElement::from_coeffs(&[rhs], uctx)?;
        out.push(ZqCheck { lhs, rhs });
    }
    let second = out.pop().expect("two checks");
    let first = out.pop().expect("two checks");
    Ok([first, second])
}

/// `prod_i Gamma_p(<(1 - l/(q-1)) p^i>) Gamma_p(<l p^i/(q-1)>) = (-1)^r omega-bar^l(-1)`
/// for `0 < l < q - 1`.
pub fn verify_eq29(l: u64, field: &FqField, uctx: &Arc<UnramifiedContext>, cache: &GammaCache) -> Result<ZqCheck> {
    check_cache(cache, uctx)?;
    let q = field.q();
    if l == 0 || l >= q - 1 {
        return Err(Error::InvalidParameter(format!("l = {l} is outside (0, q - 1)")));
    }
    let ctx = uctx.base();
    let n = (q - 1) as i128;
    let li = l as i128;
    let mut prod = 1u64;
    for i in 0..field.r() {
        let pi = field.p().pow(i) as i128;
        prod = ctx.mul(prod, gamma_fract(cache, (n - li) * pi, n)?);
        prod = ctx.mul(prod, gamma_fract(cache, li * pi, n)?);
    }
    let minus_one = teichmueller(field.from_i64(-1), field, uctx)?;
    let mut rhs = minus_one.pow((n - li).rem_euclid(n) as u64);
    if field.r() % 2 == 1 {
        rhs = rhs.neg();
    }
    Ok(ZqCheck { lhs: ZqElement::from_coeffs(&[prod], uctx)?, rhs })
}

/// The floor identity
///
/// `floor(3x) + 3 floor(-x) - 3 floor(-2x) - floor(6x)
///   = -2 floor(<p^i/2> - x) - floor(<-p^i/6> + x) - floor(<-5p^i/6> + x)`
///
/// with `x = l p^i/(q-1)`, for `1 <= l <= q - 2`, `l != (q-1)/2`, `0 <= i < r`.
pub fn verify_lemma5(l: u64, i: u32, p: u64, r: u32) -> Result<IntCheck> {
    let q = p.pow(r);
    if l == 0 || l > q - 2 || 2 * l == q - 1 || i >= r {
        return Err(Error::InvalidParameter(format!("(l, i) = ({l}, {i}) is not admissible for q = {q}")));
    }
    let pi = Rational::from_integer(p.pow(i));
    let x = Rational::new(l * p.pow(i), q - 1);
    let fl = |y: Rational| -> i64 { frac_floor(&y).1.try_into().expect("small floor") };
    let fr = |y: Rational| -> Rational { frac_floor(&y).0 };
    let int = |n: i64| Rational::from_integer(n);
    let lhs = fl(int(3) * x.clone()) + 3 * fl(-x.clone()) - 3 * fl(int(-2) * x.clone()) - fl(int(6) * x.clone());
    let rhs = -2 * fl(fr(pi.clone() * Rational::new(1, 2)) - x.clone())
        - fl(fr(-pi.clone() * Rational::new(1, 6)) + x.clone())
        - fl(fr(-pi * Rational::new(5, 6)) + x);
    Ok(IntCheck { lhs, rhs })
}

/// Memo of `Gamma_p(<c/den>)` keyed by the numerator `c mod den`, for a fixed denominator.
#[derive(Debug)]
pub(crate) struct FracGammaMemo<'a> {
    cache: &'a GammaCache,
    den: u64,
    memo: HashMap<u64, u64>,
}

impl<'a> FracGammaMemo<'a> {
    pub(crate) fn new(cache: &'a GammaCache, den: u64) -> Self {
        FracGammaMemo { cache, den, memo: HashMap::new() }
    }

    /// `Gamma_p(<c/den>)`.
    pub(crate) fn get(&mut self, c: i128) -> Result<u64> {
        let key = c.rem_euclid(self.den as i128) as u64;
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        let v = self.cache.gamma_frac(key as i128, self.den)?;
        self.memo.insert(key, v);
        Ok(v)
    }
}
