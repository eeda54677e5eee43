use std::fmt;
use std::sync::Arc;

use super::UnramifiedContext;
use crate::error::{Error, Result};
use crate::field::{FqElement, FqField};

/// An element of `Z_q / p^K` in the power basis `1, T, ..., T^{r-1}`.
#[derive(Clone, Debug)]
pub struct ZqElement {
    coeffs: Vec<u64>,
    ctx: Arc<UnramifiedContext>,
}

impl PartialEq for ZqElement {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && same_context(&self.ctx, &other.ctx)
    }
}

impl Eq for ZqElement {}

fn same_context(a: &Arc<UnramifiedContext>, b: &Arc<UnramifiedContext>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl ZqElement {
    /// Coefficients are reduced mod `p^K`; missing high coefficients are zero.
    pub fn from_coeffs(coeffs: &[u64], ctx: &Arc<UnramifiedContext>) -> Result<Self> {
        if coeffs.len() > ctx.r() {
            return Err(Error::InvalidParameter(format!(
                "{} coefficients for a degree-{} extension",
                coeffs.len(),
                ctx.r()
            )));
        }
        let m = ctx.base().modulus();
        let mut c: Vec<u64> = coeffs.iter().map(|&x| x % m).collect();
        c.resize(ctx.r(), 0);
        Ok(ZqElement { coeffs: c, ctx: ctx.clone() })
    }

    pub fn from_i64(x: i64, ctx: &Arc<UnramifiedContext>) -> Self {
        let mut coeffs = vec![0; ctx.r()];
        coeffs[0] = ctx.base().reduce(x as i128);
        ZqElement { coeffs, ctx: ctx.clone() }
    }

    pub fn zero(ctx: &Arc<UnramifiedContext>) -> Self {
        ZqElement { coeffs: vec![0; ctx.r()], ctx: ctx.clone() }
    }

    pub fn one(ctx: &Arc<UnramifiedContext>) -> Self {
        Self::from_i64(1, ctx)
    }

    /// The generator `T` of the power basis (`r >= 2`), or the element `-c_0` when `r = 1`.
    pub fn generator(ctx: &Arc<UnramifiedContext>) -> Self {
        if ctx.r() == 1 {
            let c0 = ctx.defining_poly()[0] as i64;
            return Self::from_i64(-c0, ctx);
        }
        let mut coeffs = vec![0; ctx.r()];
        coeffs[1] = 1;
        ZqElement { coeffs, ctx: ctx.clone() }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn context(&self) -> &Arc<UnramifiedContext> {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 % self.ctx.base().modulus() && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    /// True when every coordinate is divisible by `p`.
    pub fn vanishes_mod_p(&self) -> bool {
        let p = self.ctx.p();
        self.coeffs.iter().all(|&c| c % p == 0)
    }

    fn check(&self, rhs: &ZqElement) -> Result<()> {
        if same_context(&self.ctx, &rhs.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn add(&self, rhs: &ZqElement) -> Result<ZqElement> {
        self.check(rhs)?;
        let b = self.ctx.base();
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(&x, &y)| b.add(x, y)).collect();
        Ok(ZqElement { coeffs, ctx: self.ctx.clone() })
    }

    pub fn sub(&self, rhs: &ZqElement) -> Result<ZqElement> {
        self.check(rhs)?;
        let b = self.ctx.base();
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(&x, &y)| b.sub(x, y)).collect();
        Ok(ZqElement { coeffs, ctx: self.ctx.clone() })
    }

    pub fn neg(&self) -> ZqElement {
        let b = self.ctx.base();
        ZqElement { coeffs: self.coeffs.iter().map(|&x| b.neg(x)).collect(), ctx: self.ctx.clone() }
    }

    pub fn mul(&self, rhs: &ZqElement) -> Result<ZqElement> {
        self.check(rhs)?;
        Ok(ZqElement { coeffs: self.mul_coeffs(&rhs.coeffs), ctx: self.ctx.clone() })
    }

    /// Multiplies by a scalar residue of `Z/p^K`.
    pub fn scale(&self, s: u64) -> ZqElement {
        let b = self.ctx.base();
        let s = s % b.modulus();
        ZqElement { coeffs: self.coeffs.iter().map(|&x| b.mul(x, s)).collect(), ctx: self.ctx.clone() }
    }

    pub(crate) fn mul_coeffs(&self, rhs: &[u64]) -> Vec<u64> {
        let b = self.ctx.base();
        let r = self.ctx.r();
        if r == 1 {
            return vec![b.mul(self.coeffs[0], rhs[0])];
        }
        let mut prod = vec![0u64; 2 * r - 1];
        for (i, &x) in self.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in rhs.iter().enumerate() {
                prod[i + j] = b.add(prod[i + j], b.mul(x, y));
            }
        }
        // T^r = -(c_{r-1} T^{r-1} + ... + c_0)
        let f = self.ctx.defining_poly();
        for d in (r..2 * r - 1).rev() {
            let top = prod[d];
            if top == 0 {
                continue;
            }
            prod[d] = 0;
            for (i, &c) in f.iter().enumerate() {
                prod[d - r + i] = b.sub(prod[d - r + i], b.mul(top, c));
            }
        }
        prod.truncate(r);
        prod
    }

    pub fn pow(&self, mut e: u64) -> ZqElement {
        let mut acc = ZqElement::one(&self.ctx);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc.coeffs = acc.mul_coeffs(&base.coeffs);
            }
            e >>= 1;
            if e > 0 {
                base.coeffs = base.mul_coeffs(&base.coeffs);
            }
        }
        acc
    }

    /// Inverse of a unit: `x^(q-2)` is an inverse mod `p`, then Newton steps
    /// `y <- y (2 - x y)` double the number of correct digits.
    pub fn inv(&self) -> Result<ZqElement> {
        if self.vanishes_mod_p() {
            return Err(Error::NotAUnit);
        }
        let q = self.ctx.q();
        let mut y = self.pow(q - 2);
        let two = ZqElement::from_i64(2, &self.ctx);
        let mut correct = 1;
        while correct < self.ctx.k() {
            let xy = self.mul(&y)?;
            y = y.mul(&two.sub(&xy)?)?;
            correct *= 2;
        }
        Ok(y)
    }

    /// Reinterprets the residues in a compatible context. Going up in precision
    /// leaves the extra digits zero; going down truncates.
    pub fn to_context(&self, ctx: &Arc<UnramifiedContext>) -> Result<ZqElement> {
        if !self.ctx.is_compatible(ctx) {
            return Err(Error::ContextMismatch);
        }
        let m = ctx.base().modulus();
        Ok(ZqElement { coeffs: self.coeffs.iter().map(|&c| c % m).collect(), ctx: ctx.clone() })
    }
}

impl ZqElement {
    /// The same residues viewed at precision `k` (truncating or zero-extending).
    pub fn with_precision(&self, k: u32) -> Result<ZqElement> {
        if k == self.ctx.k() {
            return Ok(self.clone());
        }
        self.to_context(&self.ctx.with_precision(k)?)
    }

    /// Minimum valuation over the coordinates; `K` for zero.
    pub fn valuation(&self) -> u32 {
        let b = self.ctx.base();
        self.coeffs.iter().map(|&c| b.valuation(c)).min().unwrap_or(b.k())
    }

    /// Divides every coordinate by `p^e`; the caller guarantees divisibility.
    pub(crate) fn shift_down(&self, e: u32) -> Vec<u64> {
        let pe = self.ctx.p().pow(e);
        self.coeffs.iter().map(|&c| c / pe).collect()
    }
}

impl fmt::Display for ZqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.len() == 1 {
            return write!(f, "{}", self.coeffs[0]);
        }
        let parts: Vec<String> = self.coeffs.iter().map(u64::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Coefficient-wise lift of a field element into `Z_q / p^K`.
pub fn naive_lift(t: FqElement, field: &FqField, uctx: &Arc<UnramifiedContext>) -> Result<ZqElement> {
    if field.defining_poly() != uctx.defining_poly() || field.p() != uctx.p() {
        return Err(Error::ContextMismatch);
    }
    ZqElement::from_coeffs(&field.coeffs(t), uctx)
}

/// Teichmüller lift `omega(t)`: the unique `(q-1)`-th root of unity congruent to `t`.
///
/// Starting from the naive lift `z`, each map `z -> z^q` fixes `z mod p` and gains
/// one correct `p`-adic digit, so `K` iterations reach full precision.
pub fn teichmueller(t: FqElement, field: &FqField, uctx: &Arc<UnramifiedContext>) -> Result<ZqElement> {
    if t == field.zero() {
        return Err(Error::ZeroArgument);
    }
    let mut z = naive_lift(t, field, uctx)?;
    let q = uctx.q();
    for _ in 0..uctx.k() {
        z = z.pow(q);
    }
    Ok(z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::PrecisionContext;

    fn ctx(p: u64, r: u32, k: u32) -> (FqField, Arc<UnramifiedContext>) {
        let field = FqField::build(p, r).unwrap();
        let u = field.unramified(k).unwrap();
        (field, u)
    }

    #[test]
    fn ring_identities() {
        let (_, u) = ctx(5, 2, 3);
        let x = ZqElement::from_coeffs(&[17, 101], &u).unwrap();
        assert_eq!(x.mul(&ZqElement::one(&u)).unwrap(), x);
        assert!(x.add(&x.neg()).unwrap().is_zero());
        assert_eq!(x.pow(0), ZqElement::one(&u));
        assert_eq!(x.pow(1), x);
    }

    #[test]
    fn square_of_generator_reduces_by_defining_poly() {
        let (field, u) = ctx(7, 2, 3);
        let t = ZqElement::generator(&u);
        let t2 = t.mul(&t).unwrap();
        // Long division oracle: T^2 = f(T) - (c_1 T + c_0) for monic f = T^2 + c_1 T + c_0.
        let f = field.defining_poly();
        let m = u.base().modulus() as i64;
        let expected = [(-(f[0] as i64)).rem_euclid(m) as u64, (-(f[1] as i64)).rem_euclid(m) as u64];
        assert_eq!(t2.coeffs(), &expected);
    }

    #[test]
    fn inverse() {
        let base = PrecisionContext::new(7, 2).unwrap();
        let u = UnramifiedContext::new(base, vec![4]).unwrap();
        let three = ZqElement::from_i64(3, &u);
        assert_eq!(three.inv().unwrap().coeffs(), &[33]);
        assert_eq!(ZqElement::one(&u).inv().unwrap(), ZqElement::one(&u));
        assert_eq!(ZqElement::from_i64(14, &u).inv(), Err(Error::NotAUnit));

        let (_, u2) = ctx(5, 2, 4);
        for a in 0..25u64 {
            for b in [1u64, 7, 600] {
                let x = ZqElement::from_coeffs(&[a * 3 + b, a], &u2).unwrap();
                if x.vanishes_mod_p() {
                    continue;
                }
                assert!(x.mul(&x.inv().unwrap()).unwrap().is_one());
            }
        }
    }

    #[test]
    fn context_mismatch() {
        let (_, u) = ctx(5, 2, 3);
        let (_, v) = ctx(5, 2, 4);
        let x = ZqElement::one(&u);
        let y = ZqElement::one(&v);
        assert_eq!(x.mul(&y), Err(Error::ContextMismatch));
        assert_eq!(x.to_context(&v).unwrap(), y);
    }

    #[test]
    fn teichmueller_examples() {
        let (field, u) = ctx(7, 1, 3);
        assert!(teichmueller(field.one(), &field, &u).unwrap().is_one());
        let minus_one = teichmueller(field.from_i64(-1), &field, &u).unwrap();
        assert_eq!(minus_one.coeffs(), &[342]);
        // Exhaustive search oracle: x^6 = 1 mod 343 and x = 2 mod 7.
        let oracle: Vec<u64> =
            (0..343u64).filter(|&x| x % 7 == 2 && crate::arith::pow_mod(x, 6, 343) == 1).collect();
        assert_eq!(oracle.len(), 1);
        assert_eq!(teichmueller(field.from_i64(2), &field, &u).unwrap().coeffs(), &[oracle[0]]);
        assert_eq!(teichmueller(field.zero(), &field, &u), Err(Error::ZeroArgument));
    }

    #[test]
    fn teichmueller_is_root_of_unity_and_lifts_t() {
        for (p, r) in [(3, 1), (5, 1), (7, 1), (11, 1), (3, 2), (5, 2), (7, 2), (11, 2), (3, 3), (5, 3)] {
            for k in 1..=4 {
                let (field, u) = ctx(p, r, k);
                let q = field.q();
                for t in field.nonzero_elements() {
                    let w = teichmueller(t, &field, &u).unwrap();
                    assert!(w.pow(q - 1).is_one(), "p={p} r={r} k={k}");
                    let low: Vec<u64> = w.coeffs().iter().map(|c| c % p).collect();
                    assert_eq!(low, field.coeffs(t));
                }
            }
        }
    }

    #[test]
    fn teichmueller_is_multiplicative() {
        for (p, r) in [(5, 1), (7, 1), (3, 2), (5, 2), (7, 2), (3, 3)] {
            let (field, u) = ctx(p, r, 3);
            let lifts: Vec<ZqElement> =
                field.nonzero_elements().map(|t| teichmueller(t, &field, &u).unwrap()).collect();
            let all: Vec<FqElement> = field.nonzero_elements().collect();
            for (i, &s) in all.iter().enumerate() {
                for (j, &t) in all.iter().enumerate() {
                    let st = teichmueller(field.mul(s, t), &field, &u).unwrap();
                    assert_eq!(st, lifts[i].mul(&lifts[j]).unwrap());
                }
            }
        }
    }
}
