use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;

use super::{UnramifiedContext, ZqElement};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// An element `p^v * u` of `Q_q` known to finitely many digits.
///
/// For a nonzero value the unit `u` lives in a context whose precision is the
/// relative precision, so the value is known modulo `p^(v + rel)`. A zero records
/// only its absolute precision: it is known to vanish modulo `p^abs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadicNumber {
    valuation: i64,
    unit: ZqElement,
    exact_zero: bool,
}

impl PadicNumber {
    /// Zero known modulo `p^abs`.
    pub fn zero(abs: i64, uctx: &Arc<UnramifiedContext>) -> Self {
        PadicNumber { valuation: abs, unit: ZqElement::zero(uctx), exact_zero: true }
    }

    /// `p^valuation * unit`; the unit's context precision becomes the relative precision.
    pub fn from_unit(valuation: i64, unit: ZqElement) -> Result<Self> {
        if unit.vanishes_mod_p() {
            return Err(Error::NotAUnit);
        }
        Ok(PadicNumber { valuation, unit, exact_zero: false })
    }

    /// An element of `Z_q / p^K` scaled by `p^offset`, known modulo `p^(K + offset)`.
    pub fn from_zq(x: &ZqElement, offset: i64) -> Result<Self> {
        let k = x.context().k();
        if x.is_zero() {
            return Ok(Self::zero(k as i64 + offset, x.context()));
        }
        let w = x.valuation();
        let ctx = x.context().with_precision(k - w)?;
        let unit = ZqElement::from_coeffs(&x.shift_down(w), &ctx)?;
        Ok(PadicNumber { valuation: offset + w as i64, unit, exact_zero: false })
    }

    /// A rational with `K` digits of relative precision, where `K` is the context precision.
    pub fn from_rational(x: &Rational, uctx: &Arc<UnramifiedContext>) -> Result<Self> {
        if x.is_zero() {
            return Ok(Self::zero(uctx.k() as i64, uctx));
        }
        let p = BigInt::from(uctx.p());
        let (mut num, mut den) = (x.numer().clone(), x.denom().clone());
        let mut v = 0i64;
        while num.is_multiple_of(&p) {
            num /= &p;
            v += 1;
        }
        while den.is_multiple_of(&p) {
            den /= &p;
            v -= 1;
        }
        let u = super::zp_from_rational(&Rational::new(num, den), *uctx.base())?;
        let unit = ZqElement::from_coeffs(&[u.residue()], uctx)?;
        Ok(PadicNumber { valuation: v, unit, exact_zero: false })
    }

    pub fn from_integer(n: i64, uctx: &Arc<UnramifiedContext>) -> Result<Self> {
        Self::from_rational(&Rational::from_integer(n), uctx)
    }

    pub fn is_zero(&self) -> bool {
        self.exact_zero
    }

    /// Valuation of a nonzero value; `None` for zero.
    pub fn valuation(&self) -> Option<i64> {
        (!self.exact_zero).then_some(self.valuation)
    }

    pub fn unit(&self) -> Option<&ZqElement> {
        (!self.exact_zero).then_some(&self.unit)
    }

    pub fn relative_precision(&self) -> i64 {
        if self.exact_zero {
            0
        } else {
            self.unit.context().k() as i64
        }
    }

    /// The value is determined modulo `p^absolute_precision()`.
    pub fn absolute_precision(&self) -> i64 {
        if self.exact_zero {
            self.valuation
        } else {
            self.valuation + self.relative_precision()
        }
    }

    pub fn context(&self) -> &Arc<UnramifiedContext> {
        self.unit.context()
    }

    pub fn p(&self) -> u64 {
        self.unit.context().p()
    }

    /// Fails with `PrecisionExhausted` unless the value is known modulo `p^abs`.
    pub fn require_precision(&self, abs: i64) -> Result<()> {
        let available = self.absolute_precision();
        if available < abs {
            Err(Error::PrecisionExhausted { available, required: abs })
        } else {
            Ok(())
        }
    }

    pub fn neg(&self) -> PadicNumber {
        if self.exact_zero {
            return self.clone();
        }
        PadicNumber { valuation: self.valuation, unit: self.unit.neg(), exact_zero: false }
    }

    pub fn mul(&self, rhs: &PadicNumber) -> Result<PadicNumber> {
        if !self.context().is_compatible(rhs.context()) {
            return Err(Error::ContextMismatch);
        }
        match (self.exact_zero, rhs.exact_zero) {
            (true, true) => Ok(Self::zero(self.valuation + rhs.valuation, self.context())),
            (true, false) => Ok(Self::zero(self.valuation + rhs.valuation, self.context())),
            (false, true) => Ok(Self::zero(self.valuation + rhs.valuation, rhs.context())),
            (false, false) => {
                let rel = self.relative_precision().min(rhs.relative_precision()) as u32;
                let a = self.unit.with_precision(rel)?;
                let b = rhs.unit.with_precision(rel)?;
                Ok(PadicNumber {
                    valuation: self.valuation + rhs.valuation,
                    unit: a.mul(&b)?,
                    exact_zero: false,
                })
            }
        }
    }

    pub fn add(&self, rhs: &PadicNumber) -> Result<PadicNumber> {
        padic_sum(&[self.clone(), rhs.clone()])
    }

    pub fn sub(&self, rhs: &PadicNumber) -> Result<PadicNumber> {
        padic_sum(&[self.clone(), rhs.neg()])
    }

    /// Residues of `p^v * u` modulo `p^abs` in `Z_q`, for a value that is integral
    /// at that precision.
    pub fn to_zq(&self, abs: u32) -> Result<ZqElement> {
        self.require_precision(abs as i64)?;
        let ctx = self.context().with_precision(abs)?;
        if self.exact_zero || self.valuation >= abs as i64 {
            return Ok(ZqElement::zero(&ctx));
        }
        if self.valuation < 0 {
            return Err(Error::NotAnInteger);
        }
        let scaled = self.unit.with_precision(abs)?;
        Ok(scaled.scale(self.context().p().pow(self.valuation as u32)))
    }

    /// True when the value is known to vanish modulo `p^abs`.
    pub fn vanishes_mod(&self, abs: i64) -> bool {
        self.exact_zero || self.valuation >= abs
    }

    /// Equality modulo `p^abs`; both values must be known to that precision.
    pub fn eq_at(&self, rhs: &PadicNumber, abs: i64) -> Result<bool> {
        if !self.context().is_compatible(rhs.context()) {
            return Err(Error::ContextMismatch);
        }
        self.require_precision(abs)?;
        rhs.require_precision(abs)?;
        let (za, zb) = (self.vanishes_mod(abs), rhs.vanishes_mod(abs));
        if za || zb {
            return Ok(za && zb);
        }
        if self.valuation != rhs.valuation {
            return Ok(false);
        }
        let m = self.p().pow((abs - self.valuation) as u32);
        Ok(self.unit.coeffs().iter().zip(rhs.unit.coeffs()).all(|(a, b)| a % m == b % m))
    }

    /// Canonical text form modulo `p^abs`: `"v:d0.d1.d2"` with base-`p` digits of
    /// the unit low-first, one digit group per coordinate separated by `|`.
    /// A value vanishing modulo `p^abs` renders as `"inf:O(p^abs)"`.
    pub fn render(&self, abs: i64) -> Result<String> {
        self.require_precision(abs)?;
        if self.vanishes_mod(abs) {
            return Ok(format!("inf:O({}^{})", self.p(), abs));
        }
        let digits = (abs - self.valuation) as u32;
        let p = self.p();
        let unit = self.unit.with_precision(digits)?;
        let coords: Vec<String> = unit
            .coeffs()
            .iter()
            .map(|&c| {
                let mut c = c;
                let mut out = Vec::with_capacity(digits as usize);
                for _ in 0..digits {
                    out.push((c % p).to_string());
                    c /= p;
                }
                out.join(".")
            })
            .collect();
        Ok(format!("{}:{}", self.valuation, coords.join("|")))
    }
}

impl fmt::Display for PadicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.render(self.absolute_precision()) {
            Ok(s) => f.write_str(&s),
            Err(_) => write!(f, "O({}^{})", self.p(), self.absolute_precision()),
        }
    }
}

/// Sums p-adic numbers exactly.
///
/// All terms are rescaled to the minimum valuation, their units added modulo the
/// common precision, and any p-power in the total moved back into the valuation.
/// The result is known modulo `p^A` where `A` is the least absolute precision
/// among the terms. A total that vanishes at that precision is returned as zero;
/// callers that need digits check them with [`PadicNumber::require_precision`].
pub fn padic_sum(terms: &[PadicNumber]) -> Result<PadicNumber> {
    let first = terms.first().ok_or(Error::EmptySum)?;
    let uctx = first.context();
    for t in terms {
        if !t.context().is_compatible(uctx) {
            return Err(Error::ContextMismatch);
        }
    }
    let abs = terms.iter().map(PadicNumber::absolute_precision).min().expect("nonempty");
    let v_min = match terms.iter().filter_map(PadicNumber::valuation).min() {
        Some(v) => v,
        None => return Ok(PadicNumber::zero(abs, uctx)),
    };
    if v_min >= abs {
        return Ok(PadicNumber::zero(abs, uctx));
    }
    let n = (abs - v_min) as u32;
    let work = uctx.with_precision(n)?;
    let mut acc = ZqElement::zero(&work);
    for t in terms {
        let Some(v) = t.valuation() else { continue };
        let shift = (v - v_min) as u32;
        if shift >= n {
            continue;
        }
        let u = t.unit.to_context(&work)?;
        acc = acc.add(&u.scale(uctx.p().pow(shift)))?;
    }
    PadicNumber::from_zq(&acc, v_min)
}

/// Symmetric integer lift of a `Z_p` residue modulo `p^e`.
pub(crate) fn symmetric_lift(residue: u64, modulus: u64) -> i64 {
    let r = residue % modulus;
    if r > modulus / 2 {
        r as i64 - modulus as i64
    } else {
        r as i64
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::PrecisionContext;
    use proptest::prelude::*;

    fn ctx(p: u64, k: u32) -> Arc<UnramifiedContext> {
        UnramifiedContext::new(PrecisionContext::new(p, k).unwrap(), vec![primitive_root_poly(p)]).unwrap()
    }

    // Degree-one defining polynomial T + c whose root -c is a primitive root.
    fn primitive_root_poly(p: u64) -> u64 {
        (0..p).find(|&c| crate::field::poly::is_primitive(&[c], p)).unwrap()
    }

    fn num(v: i64, u: i64, u_ctx: &Arc<UnramifiedContext>) -> PadicNumber {
        PadicNumber::from_unit(v, ZqElement::from_i64(u, u_ctx)).unwrap()
    }

    #[test]
    fn singleton_sum() {
        let c = ctx(5, 4);
        let x = num(-2, 7, &c);
        assert_eq!(padic_sum(std::slice::from_ref(&x)).unwrap(), x);
    }

    #[test]
    fn cancellation_gives_zero() {
        let c = ctx(5, 4);
        let s = padic_sum(&[num(0, 1, &c), num(0, -1, &c)]).unwrap();
        assert!(s.is_zero());
        assert_eq!(s.absolute_precision(), 4);
    }

    #[test]
    fn mixed_valuations() {
        let c = ctx(5, 3);
        let s = padic_sum(&[num(-1, 1, &c), num(0, 3, &c)]).unwrap();
        // 1/5 + 3 = 16/5
        assert_eq!(s.valuation(), Some(-1));
        assert_eq!(s.absolute_precision(), 2);
        let oracle = PadicNumber::from_rational(&Rational::new(16, 5), &c).unwrap();
        assert!(s.eq_at(&oracle, 2).unwrap());
        assert_eq!(s.unit().unwrap().coeffs(), &[16]);
    }

    #[test]
    fn carries_into_valuation() {
        let c = ctx(5, 4);
        let s = padic_sum(&[num(0, 2, &c), num(0, 3, &c)]).unwrap();
        assert_eq!(s.valuation(), Some(1));
        assert_eq!(s.relative_precision(), 3);
        assert_eq!(s.render(4).unwrap(), "1:1.0.0");
    }

    #[test]
    fn exhausted_precision() {
        let c = ctx(5, 2);
        let zero = PadicNumber::zero(1, &c);
        let s = padic_sum(&[zero, num(3, 1, &c)]).unwrap();
        assert!(s.is_zero());
        assert!(matches!(s.require_precision(2), Err(Error::PrecisionExhausted { .. })));
        assert_eq!(padic_sum(&[]), Err(Error::EmptySum));
        assert!(matches!(num(0, 1, &c).render(3), Err(Error::PrecisionExhausted { .. })));
    }

    #[test]
    fn rendering() {
        let c = ctx(7, 3);
        assert_eq!(PadicNumber::from_integer(-1, &c).unwrap().render(3).unwrap(), "0:6.6.6");
        assert_eq!(PadicNumber::from_integer(49, &c).unwrap().render(3).unwrap(), "2:1");
        assert_eq!(PadicNumber::from_integer(343, &c).unwrap().render(3).unwrap(), "inf:O(7^3)");
        assert_eq!(PadicNumber::zero(3, &c).render(2).unwrap(), "inf:O(7^2)");
    }

    #[test]
    fn to_zq_roundtrip() {
        let c = ctx(7, 4);
        let x = PadicNumber::from_integer(-15, &c).unwrap();
        let z = x.to_zq(4).unwrap();
        assert_eq!(symmetric_lift(z.coeffs()[0], 7u64.pow(4)), -15);
        let y = PadicNumber::from_rational(&Rational::new(1, 7), &c).unwrap();
        assert_eq!(y.to_zq(3), Err(Error::NotAnInteger));
    }

    #[test]
    fn multiplication() {
        let c = ctx(5, 4);
        let a = PadicNumber::from_rational(&Rational::new(3, 25), &c).unwrap();
        let b = PadicNumber::from_integer(50, &c).unwrap();
        let prod = a.mul(&b).unwrap();
        assert!(prod.eq_at(&PadicNumber::from_integer(6, &c).unwrap(), 4).unwrap());
    }

    proptest! {
        #[test]
        fn sum_is_permutation_invariant(
            vals in proptest::collection::vec((-3i64..4, 1i64..10_000), 1..8),
            seed in any::<u64>(),
        ) {
            let c = ctx(5, 6);
            let terms: Vec<PadicNumber> = vals
                .iter()
                .filter(|(_, u)| u % 5 != 0)
                .map(|&(v, u)| num(v, u, &c))
                .collect();
            prop_assume!(!terms.is_empty());
            let mut shuffled = terms.clone();
            let len = shuffled.len();
            let mut s = seed;
            for i in (1..len).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                shuffled.swap(i, (s >> 33) as usize % (i + 1));
            }
            prop_assert_eq!(padic_sum(&terms), padic_sum(&shuffled));
        }

        #[test]
        fn sum_matches_rational_oracle(vals in proptest::collection::vec((-2i64..3, -500i64..500), 1..6)) {
            let c = ctx(7, 5);
            let mut terms = Vec::new();
            let mut exact = Rational::zero();
            for &(v, u) in &vals {
                if u % 7 == 0 {
                    continue;
                }
                let scale = if v >= 0 {
                    Rational::from_integer(7i64.pow(v as u32))
                } else {
                    Rational::new(1, 7i64.pow((-v) as u32))
                };
                exact = exact + scale * Rational::from_integer(u);
                terms.push(num(v, u, &c));
            }
            prop_assume!(!terms.is_empty());
            let s = padic_sum(&terms).unwrap();
            let abs = s.absolute_precision();
            let oracle = if exact.is_zero() {
                PadicNumber::zero(abs, &c)
            } else {
                PadicNumber::from_rational(&exact, &c).unwrap()
            };
            prop_assert!(s.eq_at(&oracle, abs.min(oracle.absolute_precision())).unwrap());
        }
    }
}
