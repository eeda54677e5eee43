use std::sync::Arc;

use crate::arith::{self, mul_mod};
use crate::error::{Error, Result};

/// Largest admissible working modulus. Residues stay below 2^62 so sums of two
/// residues never overflow a `u64`.
const MODULUS_LIMIT: u128 = 1 << 62;

/// An odd prime `p` together with a truncation level `K` (arithmetic mod `p^K`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrecisionContext {
    p: u64,
    k: u32,
    modulus: u64,
}

impl PrecisionContext {
    pub fn new(p: u64, k: u32) -> Result<Self> {
        if p == 2 || !arith::is_prime(p) {
            return Err(Error::CompositeP(p));
        }
        if k == 0 {
            return Err(Error::InvalidParameter("precision K must be at least 1".into()));
        }
        let mut modulus: u128 = 1;
        for _ in 0..k {
            modulus *= p as u128;
            if modulus >= MODULUS_LIMIT {
                return Err(Error::PrecisionTooLarge { p, k });
            }
        }
        Ok(PrecisionContext { p, k, modulus: modulus as u64 })
    }

    /// `max(5, ceil(log_p(20 q)) + r)`.
    pub fn default_precision(p: u64, r: u32) -> u32 {
        let target = 20 * (p as u128).pow(r);
        let mut e = 0;
        let mut pe: u128 = 1;
        while pe < target {
            pe *= p as u128;
            e += 1;
        }
        (e + r).max(5)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// `p^e`; `e` must not exceed `K`.
    pub fn p_pow(&self, e: u32) -> u64 {
        debug_assert!(e <= self.k);
        self.p.pow(e)
    }

    /// The same prime at a different precision.
    pub fn with_precision(&self, k: u32) -> Result<Self> {
        PrecisionContext::new(self.p, k)
    }

    #[inline]
    pub fn reduce(&self, x: i128) -> u64 {
        arith::reduce_signed(x, self.modulus)
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.modulus {
            s - self.modulus
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.modulus - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.modulus - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        mul_mod(a, b, self.modulus)
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        arith::pow_mod(a, e, self.modulus)
    }

    pub fn inv(&self, a: u64) -> Option<u64> {
        if a.is_multiple_of(self.p) {
            return None;
        }
        arith::inv_mod(a, self.modulus)
    }

    /// p-adic valuation of a residue, capped at `K` (zero has valuation `K`).
    pub fn valuation(&self, a: u64) -> u32 {
        let mut a = a % self.modulus;
        if a == 0 {
            return self.k;
        }
        let mut v = 0;
        while a.is_multiple_of(self.p) {
            a /= self.p;
            v += 1;
        }
        v
    }
}

/// The ring `Z_q / p^K`, realized as `(Z/p^K)[T] / f(T)` for a monic lift `f`
/// of a degree-`r` polynomial that is irreducible mod `p` and has a primitive
/// root in `F_q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnramifiedContext {
    base: PrecisionContext,
    r: usize,
    /// Low coefficients `c_0 .. c_{r-1}` of `f = T^r + c_{r-1} T^{r-1} + ... + c_0`,
    /// each in `[0, p)`.
    poly: Vec<u64>,
}

impl UnramifiedContext {
    /// Checks that `poly` is irreducible mod `p` with a primitive root.
    pub fn new(base: PrecisionContext, poly: Vec<u64>) -> Result<Arc<Self>> {
        let p = base.p();
        if poly.is_empty() || poly.iter().any(|&c| c >= p) {
            return Err(Error::InvalidParameter(
                "defining polynomial must have coefficients in [0, p)".into(),
            ));
        }
        if !crate::field::poly::is_primitive(&poly, p) {
            return Err(Error::InvalidParameter(format!(
                "defining polynomial {poly:?} is not irreducible with a primitive root mod {p}"
            )));
        }
        Ok(Arc::new(UnramifiedContext { r: poly.len(), base, poly }))
    }

    /// Skips the irreducibility check; the caller has already validated `poly`.
    pub(crate) fn from_verified(base: PrecisionContext, poly: Vec<u64>) -> Arc<Self> {
        Arc::new(UnramifiedContext { r: poly.len(), base, poly })
    }

    pub fn base(&self) -> &PrecisionContext {
        &self.base
    }

    pub fn p(&self) -> u64 {
        self.base.p()
    }

    pub fn k(&self) -> u32 {
        self.base.k()
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn q(&self) -> u64 {
        self.base.p().pow(self.r as u32)
    }

    pub fn defining_poly(&self) -> &[u64] {
        &self.poly
    }

    /// Same prime, degree and polynomial; precision may differ.
    pub fn is_compatible(&self, other: &UnramifiedContext) -> bool {
        self.base.p() == other.base.p() && self.poly == other.poly
    }

    pub fn with_precision(&self, k: u32) -> Result<Arc<Self>> {
        Ok(Self::from_verified(self.base.with_precision(k)?, self.poly.clone()))
    }
}
