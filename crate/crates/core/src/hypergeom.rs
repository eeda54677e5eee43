//! McCarthy's p-adic hypergeometric function
//!
//! `nGn[a; b | t]_q = -1/(q-1) sum_{j=0}^{q-2} (-1)^{jn} omega-bar^j(t)
//!     prod_{i,k} (-p)^{e(i,k,j)} Gamma_p(<(a_i - j/(q-1)) p^k>) / Gamma_p(<a_i p^k>)
//!                              * Gamma_p(<(-b_i + j/(q-1)) p^k>) / Gamma_p(<-b_i p^k>)`
//!
//! with `e(i,k,j) = -floor(<a_i p^k> - j p^k/(q-1)) - floor(<-b_i p^k> + j p^k/(q-1))`.
//!
//! Everything except `omega-bar^j(t)` is independent of `t`, so [`GFunction`]
//! computes the exponents and gamma ratios once per `(params, field, K)` and then
//! evaluates at any `t` in `O(q)` ring operations, or at every `t` at once.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::field::{FqElement, FqField};
use crate::gamma::{FracGammaMemo, GammaCache};
use crate::padic::{symmetric_lift, teichmueller, PadicNumber, PrecisionContext, UnramifiedContext, ZqElement};
use crate::rational::Rational;

/// The parameter lists `a_1..a_n; b_1..b_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GParams {
    a: Vec<Rational>,
    b: Vec<Rational>,
}

impl GParams {
    pub fn new(a: Vec<Rational>, b: Vec<Rational>) -> Result<Self> {
        if a.is_empty() || a.len() != b.len() {
            return Err(Error::InvalidParameter(format!(
                "parameter lists must be nonempty and of equal length (got {} and {})",
                a.len(),
                b.len()
            )));
        }
        Ok(GParams { a, b })
    }

    fn from_pairs(a: &[(i64, i64)], b: &[(i64, i64)]) -> Self {
        let r = |v: &[(i64, i64)]| v.iter().map(|&(n, d)| Rational::new(n, d)).collect();
        GParams { a: r(a), b: r(b) }
    }

    /// `[1/4, 3/4; 1/3, 2/3]`
    pub fn weierstrass() -> Self {
        Self::from_pairs(&[(1, 4), (3, 4)], &[(1, 3), (2, 3)])
    }

    /// `[1/2, 1/2; 1/6, 5/6]`
    pub fn hessian() -> Self {
        Self::from_pairs(&[(1, 2), (1, 2)], &[(1, 6), (5, 6)])
    }

    /// `[1/2, 1/2; 1/3, 2/3]`
    pub fn thirds() -> Self {
        Self::from_pairs(&[(1, 2), (1, 2)], &[(1, 3), (2, 3)])
    }

    /// `[1/2, 1/2; 1/4, 3/4]`
    pub fn quarters() -> Self {
        Self::from_pairs(&[(1, 2), (1, 2)], &[(1, 4), (3, 4)])
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self) -> &[Rational] {
        &self.a
    }

    pub fn b(&self) -> &[Rational] {
        &self.b
    }

    /// Fails unless every parameter lies in `Z_p`.
    pub fn check_prime(&self, p: u64) -> Result<()> {
        let pb = BigInt::from(p);
        for x in self.a.iter().chain(&self.b) {
            if x.denom().is_multiple_of(&pb) {
                return Err(Error::DenominatorDivisibleByP(x.to_string()));
            }
        }
        Ok(())
    }
}

impl FromStr for GParams {
    type Err = Error;

    /// Parses `"a1,a2;b1,b2"`.
    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .split_once(';')
            .ok_or_else(|| Error::InvalidParameter(format!("expected \"a1,...;b1,...\", got {s:?}")))?;
        let list = |part: &str| -> Result<Vec<Rational>> {
            part.split(',').map(|x| x.trim().parse::<Rational>()).collect()
        };
        GParams::new(list(a)?, list(b)?)
    }
}

impl fmt::Display for GParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Rational]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "{};{}", join(&self.a), join(&self.b))
    }
}

/// A fully specified `nGn[a; b | t]_q` at output precision `K`.
#[derive(Clone, Debug)]
pub struct GInstance {
    pub params: GParams,
    pub field: Arc<FqField>,
    pub uctx: Arc<UnramifiedContext>,
    pub t: FqElement,
}

impl GInstance {
    pub fn new(params: GParams, field: Arc<FqField>, uctx: Arc<UnramifiedContext>, t: FqElement) -> Result<Self> {
        if uctx.p() != field.p() || uctx.defining_poly() != field.defining_poly() {
            return Err(Error::ContextMismatch);
        }
        if t == field.zero() {
            return Err(Error::ZeroArgument);
        }
        params.check_prime(field.p())?;
        Ok(GInstance { params, field, uctx, t })
    }
}

/// The `t`-independent part of `nGn` for one parameter list over one field.
#[derive(Clone, Debug)]
pub struct GFunction {
    params: GParams,
    field: Arc<FqField>,
    /// Output precision.
    k: u32,
    /// `sum_{i,k} e(i,k,j)` for each `j`.
    valuations: Vec<i64>,
    v_min: i64,
    /// Working context at precision `K - v_min`.
    work: Arc<UnramifiedContext>,
    /// `(-1)^{jn + v_j}` times the gamma ratios, mod `p^(K - v_min)`.
    units: Vec<u64>,
}

/// Sum of the exponents `e(i,k,j)` over `i` and `k`, in exact integer arithmetic
/// over the common denominator `den` (a multiple of `q - 1` and of every parameter
/// denominator). `alpha[i] = a_i den`, `beta[i] = b_i den`.
fn exponent_sum(alpha: &[i128], beta: &[i128], j: i128, p: i128, r: u32, den: i128, q1: i128) -> i64 {
    let step = den / q1;
    let mut e = 0i128;
    for (al, be) in alpha.iter().zip(beta) {
        let mut pk = 1i128;
        for _ in 0..r {
            let a_frac = (al * pk).rem_euclid(den);
            let b_frac = (-be * pk).rem_euclid(den);
            let x = j * pk * step;
            e -= (a_frac - x).div_euclid(den);
            e -= (b_frac + x).div_euclid(den);
            pk *= p;
        }
    }
    e as i64
}

fn scaled_numerators(v: &[Rational], den: &BigInt) -> Vec<i128> {
    v.iter()
        .map(|x| (x.numer() * (den / x.denom())).to_i128().expect("parameter numerators fit in i128"))
        .collect()
}

impl GFunction {
    pub fn new(params: &GParams, field: &Arc<FqField>, k: u32) -> Result<Self> {
        params.check_prime(field.p())?;
        let p = field.p();
        let r = field.r();
        let q = field.q();
        let q1 = (q - 1) as i128;
        let n = params.n();

        let mut den_big = BigInt::from(q - 1);
        for x in params.a.iter().chain(&params.b) {
            den_big = den_big.lcm(x.denom());
        }
        let den = den_big
            .to_i128()
            .filter(|d| *d < 1 << 40)
            .ok_or_else(|| Error::InvalidParameter("parameter denominators are too large".into()))?;
        let alpha = scaled_numerators(&params.a, &den_big);
        let beta = scaled_numerators(&params.b, &den_big);

        let valuations: Vec<i64> =
            (0..q1).map(|j| exponent_sum(&alpha, &beta, j, p as i128, r, den, q1)).collect();
        let v_min = *valuations.iter().min().expect("q > 1");
        let n_work = (k as i64 - v_min) as u32;
        let ctx = PrecisionContext::new(p, n_work)?;
        let work = field.unramified(n_work)?;

        let cache = GammaCache::new(ctx);
        let mut memo = FracGammaMemo::new(&cache, den as u64);
        let step = den / q1;

        // j-independent denominators Gamma_p(<a_i p^k>) Gamma_p(<-b_i p^k>).
        let mut denom = 1u64;
        for (al, be) in alpha.iter().zip(&beta) {
            let mut pk = 1i128;
            for _ in 0..r {
                denom = ctx.mul(denom, memo.get(al * pk)?);
                denom = ctx.mul(denom, memo.get(-be * pk)?);
                pk *= p as i128;
            }
        }
        let denom_inv = ctx.inv(denom).expect("gamma values are units");

        let mut units = Vec::with_capacity(q1 as usize);
        for j in 0..q1 {
            let mut u = denom_inv;
            for (al, be) in alpha.iter().zip(&beta) {
                let mut pk = 1i128;
                for _ in 0..r {
                    u = ctx.mul(u, memo.get((al - j * step) * pk)?);
                    u = ctx.mul(u, memo.get((-be + j * step) * pk)?);
                    pk *= p as i128;
                }
            }
            let odd = (j * n as i128 + valuations[j as usize] as i128).rem_euclid(2) == 1;
            units.push(if odd { ctx.neg(u) } else { u });
        }

        Ok(GFunction { params: params.clone(), field: field.clone(), k, valuations, v_min, work, units })
    }

    pub fn params(&self) -> &GParams {
        &self.params
    }

    pub fn field(&self) -> &Arc<FqField> {
        &self.field
    }

    /// Output precision `K`.
    pub fn precision(&self) -> u32 {
        self.k
    }

    /// Precision of the internal accumulation, `K - v_min`.
    pub fn working_precision(&self) -> u32 {
        self.work.k()
    }

    /// Valuation of the `j`-th summand.
    pub fn term_valuation(&self, j: usize) -> i64 {
        self.valuations[j]
    }

    pub fn min_valuation(&self) -> i64 {
        self.v_min
    }

    /// `p^{v_j - v_min} u_j` mod `p^N`, zero when the shift exceeds the working precision.
    fn scaled_units(&self) -> Vec<u64> {
        let ctx = self.work.base();
        let n_work = ctx.k() as i64;
        self.units
            .iter()
            .zip(&self.valuations)
            .map(|(&u, &v)| {
                let shift = v - self.v_min;
                if shift >= n_work {
                    0
                } else {
                    ctx.mul(u, ctx.p_pow(shift as u32))
                }
            })
            .collect()
    }

    fn prefactor(&self) -> u64 {
        // -1/(q-1)
        let ctx = self.work.base();
        ctx.neg(ctx.inv(ctx.reduce((self.field.q() - 1) as i128)).expect("q - 1 is prime to p"))
    }

    fn finish(&self, acc: &ZqElement) -> Result<PadicNumber> {
        PadicNumber::from_zq(&acc.scale(self.prefactor()), self.v_min)
    }

    /// The `j`-th summand without the `-1/(q-1)` prefactor, known to `K` digits of
    /// relative precision.
    pub fn term(&self, t: FqElement, j: usize) -> Result<PadicNumber> {
        if j >= self.units.len() {
            return Err(Error::InvalidParameter(format!("j = {j} is outside [0, q - 2]")));
        }
        let out = self.field.unramified(self.k)?;
        let w = teichmueller(t, &self.field, &out)?;
        let q1 = self.field.q() - 1;
        let omega_bar_j = w.pow((q1 - j as u64 % q1) % q1);
        PadicNumber::from_unit(self.valuations[j], omega_bar_j.scale(self.units[j]))
    }

    /// `nGn[a; b | t]_q`, known modulo `p^K`.
    pub fn eval(&self, t: FqElement) -> Result<PadicNumber> {
        let w = teichmueller(t, &self.field, &self.work)?;
        let w_inv = w.pow(self.field.q() - 2);
        let coeffs = self.scaled_units();
        let ctx = self.work.base();
        if self.field.r() == 1 {
            let step = w_inv.coeffs()[0];
            let mut cur = 1u64;
            let mut acc = 0u64;
            for &c in &coeffs {
                acc = ctx.add(acc, ctx.mul(c, cur));
                cur = ctx.mul(cur, step);
            }
            return self.finish(&ZqElement::from_coeffs(&[acc], &self.work)?);
        }
        let mut cur = ZqElement::one(&self.work);
        let mut acc = ZqElement::zero(&self.work);
        for &c in &coeffs {
            if c != 0 {
                acc = acc.add(&cur.scale(c))?;
            }
            cur = cur.mul(&w_inv)?;
        }
        self.finish(&acc)
    }

    /// `nGn` at every nonzero `t`; entry `s` is the value at `g^s` for the field's generator `g`.
    pub fn eval_all(&self) -> Result<Vec<PadicNumber>> {
        let q1 = (self.field.q() - 1) as usize;
        let r = self.field.r() as usize;
        let ctx = *self.work.base();
        let w = teichmueller(self.field.generator(), &self.field, &self.work)?;
        // powers[e] = omega(g)^e, stored flat
        let mut powers = vec![0u64; q1 * r];
        let mut cur = ZqElement::one(&self.work);
        for e in 0..q1 {
            powers[e * r..(e + 1) * r].copy_from_slice(cur.coeffs());
            cur = cur.mul(&w)?;
        }
        let coeffs = self.scaled_units();
        let mut out = Vec::with_capacity(q1);
        let mut acc = vec![0u64; r];
        for s in 0..q1 {
            acc.iter_mut().for_each(|a| *a = 0);
            // omega-bar^j(g^s) = omega(g)^{-js}
            let mut e = 0usize;
            for &c in &coeffs {
                if c != 0 {
                    let pw = &powers[e * r..(e + 1) * r];
                    for (a, &x) in acc.iter_mut().zip(pw) {
                        *a = ctx.add(*a, ctx.mul(c, x));
                    }
                }
                e = if e < s { e + q1 - s } else { e - s };
            }
            out.push(self.finish(&ZqElement::from_coeffs(&acc, &self.work)?)?);
        }
        Ok(out)
    }
}

/// The `j`-th summand of the defining sum, without the `-1/(q-1)` prefactor.
pub fn g_term(inst: &GInstance, j: usize) -> Result<PadicNumber> {
    GFunction::new(&inst.params, &inst.field, inst.uctx.k())?.term(inst.t, j)
}

/// `nGn[a; b | t]_q` modulo `p^K` for the instance's precision `K`.
pub fn g_eval(inst: &GInstance) -> Result<PadicNumber> {
    GFunction::new(&inst.params, &inst.field, inst.uctx.k())?.eval(inst.t)
}

/// The integer in `[-bound, bound]` represented by `x`.
///
/// Every known digit is used: the higher `Z_q` coordinates must vanish modulo
/// `p^A` (`A` the absolute precision of `x`) and the constant coordinate's
/// symmetric lift modulo `p^A` must lie within the bound. Requires `p^A > 2 bound`.
pub fn recover_integer(x: &PadicNumber, bound: u64) -> Result<i64> {
    let avail = x.absolute_precision();
    let p = x.p() as u128;
    let mut needed = 0i64;
    let mut pe: u128 = 1;
    while pe <= 2 * bound as u128 {
        pe *= p;
        needed += 1;
    }
    if avail < needed {
        return Err(Error::BoundTooLargeForPrecision { bound, available: avail });
    }
    if x.valuation().is_some_and(|v| v < 0) {
        return Err(Error::NotAnInteger);
    }
    let z = x.to_zq(avail as u32)?;
    if z.coeffs()[1..].iter().any(|&c| c != 0) {
        return Err(Error::NotAnInteger);
    }
    let v = symmetric_lift(z.coeffs()[0], z.context().base().modulus());
    if v.unsigned_abs() > bound {
        return Err(Error::NoRepresentativeInBound { bound });
    }
    Ok(v)
}
