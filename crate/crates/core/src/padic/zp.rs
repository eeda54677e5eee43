use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::PrecisionContext;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// An element of `Z_p / p^K`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ZpElement {
    residue: u64,
    ctx: PrecisionContext,
}

impl ZpElement {
    pub fn new(residue: u64, ctx: PrecisionContext) -> Self {
        ZpElement { residue: residue % ctx.modulus(), ctx }
    }

    pub fn from_i64(x: i64, ctx: PrecisionContext) -> Self {
        ZpElement { residue: ctx.reduce(x as i128), ctx }
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn context(&self) -> PrecisionContext {
        self.ctx
    }

    /// Symmetric representative in `(-p^K/2, p^K/2]`.
    pub fn signed(&self) -> i64 {
        let m = self.ctx.modulus();
        if self.residue > m / 2 {
            self.residue as i64 - m as i64
        } else {
            self.residue as i64
        }
    }

    pub fn mul(&self, rhs: &ZpElement) -> Result<ZpElement> {
        self.check(rhs)?;
        Ok(ZpElement { residue: self.ctx.mul(self.residue, rhs.residue), ctx: self.ctx })
    }

    pub fn add(&self, rhs: &ZpElement) -> Result<ZpElement> {
        self.check(rhs)?;
        Ok(ZpElement { residue: self.ctx.add(self.residue, rhs.residue), ctx: self.ctx })
    }

    pub fn neg(&self) -> ZpElement {
        ZpElement { residue: self.ctx.neg(self.residue), ctx: self.ctx }
    }

    pub fn inv(&self) -> Result<ZpElement> {
        let residue = self.ctx.inv(self.residue).ok_or(Error::NotAUnit)?;
        Ok(ZpElement { residue, ctx: self.ctx })
    }

    fn check(&self, rhs: &ZpElement) -> Result<()> {
        if self.ctx != rhs.ctx {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }
}

impl fmt::Display for ZpElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}^{}", self.residue, self.ctx.p(), self.ctx.k())
    }
}

/// Embeds a rational with `p`-free denominator into `Z_p / p^K`.
pub fn zp_from_rational(x: &Rational, ctx: PrecisionContext) -> Result<ZpElement> {
    let m = BigInt::from(ctx.modulus());
    let den = x.denom().mod_floor(&m).to_u64().expect("reduced below modulus");
    let inv = ctx
        .inv(den)
        .ok_or_else(|| Error::DenominatorDivisibleByP(x.to_string()))?;
    let num = x.numer().mod_floor(&m).to_u64().expect("reduced below modulus");
    Ok(ZpElement { residue: ctx.mul(num, inv), ctx })
}
