//! Both sides of each identity, evaluated over one field, plus the suite runner
//! and report writers built on top.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_integer::Roots;
use serde::{Serialize, Serializer};

use crate::curves::{self, count_weierstrass, cube, HessianCounter, HessianCurve, WeierstrassCurve};
use crate::error::{Error, Gate, Result};
use crate::field::{FqElement, FqField};
use crate::gamma::{self, GammaCache, IntCheck, ZqCheck};
use crate::gauss::FloatCheck;
use crate::hypergeom::{recover_integer, GFunction, GParams};
use crate::padic::{PadicNumber, PrecisionContext, UnramifiedContext};

mod report;
mod suite;

pub use report::{Format, Report, Summary, TheoremTally};
pub use suite::{run_suite, RangeSpec, Strategy, Suite};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Theorem {
    Mt1,
    Cor2_1,
    Cor2_2,
    Bs1_1,
    Bs1_2,
    Mc,
    Hessian,
    Lemma31,
    Lemma5,
    Eq29,
    GaussGk,
    GaussTheta,
    GaussDh,
    Ortho,
    Mt1Corrected,
    Cor2_1Corrected,
    Cor2_2Corrected,
    Bs1_2Corrected,
}

impl Theorem {
    pub const ALL: [Theorem; 18] = [
        Theorem::Mt1,
        Theorem::Cor2_1,
        Theorem::Cor2_2,
        Theorem::Bs1_1,
        Theorem::Bs1_2,
        Theorem::Mc,
        Theorem::Hessian,
        Theorem::Lemma31,
        Theorem::Lemma5,
        Theorem::Eq29,
        Theorem::GaussGk,
        Theorem::GaussTheta,
        Theorem::GaussDh,
        Theorem::Ortho,
        Theorem::Mt1Corrected,
        Theorem::Cor2_1Corrected,
        Theorem::Cor2_2Corrected,
        Theorem::Bs1_2Corrected,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::Mt1 => "MT1",
            Theorem::Cor2_1 => "COR2_1",
            Theorem::Cor2_2 => "COR2_2",
            Theorem::Bs1_1 => "BS1_1",
            Theorem::Bs1_2 => "BS1_2",
            Theorem::Mc => "MC",
            Theorem::Hessian => "HESSIAN",
            Theorem::Lemma31 => "LEMMA31",
            Theorem::Lemma5 => "LEMMA5",
            Theorem::Eq29 => "EQ29",
            Theorem::GaussGk => "GAUSS_GK",
            Theorem::GaussTheta => "GAUSS_THETA",
            Theorem::GaussDh => "GAUSS_DH",
            Theorem::Ortho => "ORTHO",
            Theorem::Mt1Corrected => "MT1_CORRECTED",
            Theorem::Cor2_1Corrected => "COR2_1_CORRECTED",
            Theorem::Cor2_2Corrected => "COR2_2_CORRECTED",
            Theorem::Bs1_2Corrected => "BS1_2_CORRECTED",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl Serialize for Theorem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

/// One evaluated instance of an identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyRecord {
    pub theorem: Theorem,
    pub p: u64,
    pub r: u32,
    #[serde(rename = "K")]
    pub k: u32,
    pub params: BTreeMap<String, String>,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
    pub elapsed_ms: u64,
}

/// `alpha = 5 - 6 phi(-3)` when `q = 1 mod 3`, else `1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AlphaValue {
    pub value: i64,
}

impl AlphaValue {
    pub fn compute(field: &FqField) -> Self {
        let value = if field.q() % 3 == 1 { 5 - 6 * field.phi(field.from_i64(-3)) } else { 1 };
        AlphaValue { value }
    }
}

/// Whether to evaluate an identity as printed or in its corrected form.
///
/// The corrected forms use `n = 54 (d^6 - 20 d^3 - 8)`, which makes
/// `y^2 = x^3 + m x + n` a model of the Hessian curve, and for the second branch of
/// the `(a, b)` identity the character `phi(-3 b h (3h^2 + a))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Form {
    Printed,
    Corrected,
}

/// The two sides of one instance.
#[derive(Clone, Debug)]
pub enum Sides {
    /// Compared modulo `p^precision`.
    Padic { lhs: PadicNumber, rhs: PadicNumber, precision: i64 },
    /// An enumerated count against a recovered integer.
    Integer { lhs: i64, rhs: Result<i64> },
    Float(FloatCheck),
}

impl Sides {
    pub fn pass(&self) -> bool {
        match self {
            Sides::Padic { lhs, rhs, precision } => lhs.eq_at(rhs, *precision).unwrap_or(false),
            Sides::Integer { lhs, rhs } => rhs.as_ref().is_ok_and(|v| v == lhs),
            Sides::Float(c) => c.holds(),
        }
    }

    pub fn swapped(self) -> Sides {
        match self {
            Sides::Padic { lhs, rhs, precision } => Sides::Padic { lhs: rhs, rhs: lhs, precision },
            Sides::Integer { lhs, rhs } => match rhs {
                Ok(v) => Sides::Integer { lhs: v, rhs: Ok(lhs) },
                Err(e) => Sides::Integer { lhs, rhs: Err(e) },
            },
            Sides::Float(c) => Sides::Float(FloatCheck { lhs: c.rhs, rhs: c.lhs, tol: c.tol }),
        }
    }

    /// Text forms of both sides.
    pub fn render(&self) -> (String, String) {
        let padic = |x: &PadicNumber, k: i64| x.render(k).unwrap_or_else(|e| format!("error: {e}"));
        match self {
            Sides::Padic { lhs, rhs, precision } => (padic(lhs, *precision), padic(rhs, *precision)),
            Sides::Integer { lhs, rhs } => (
                lhs.to_string(),
                match rhs {
                    Ok(v) => v.to_string(),
                    Err(e) => format!("error: {e}"),
                },
            ),
            Sides::Float(c) => (complex(c.lhs), complex(c.rhs)),
        }
    }
}

fn complex(z: num_complex::Complex64) -> String {
    format!("{:.9}{:+.9}i", z.re, z.im)
}

impl From<ZqCheck> for Sides {
    fn from(c: ZqCheck) -> Sides {
        let precision = c.lhs.context().k() as i64;
        let lift = |x| PadicNumber::from_zq(x, 0).expect("a Z_q element is a valid p-adic number");
        Sides::Padic { lhs: lift(&c.lhs), rhs: lift(&c.rhs), precision }
    }
}

impl From<IntCheck> for Sides {
    fn from(c: IntCheck) -> Sides {
        Sides::Integer { lhs: c.lhs, rhs: Ok(c.rhs) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Family {
    Weierstrass,
    Hessian,
    Thirds,
    Quarters,
}

impl Family {
    fn params(self) -> GParams {
        match self {
            Family::Weierstrass => GParams::weierstrass(),
            Family::Hessian => GParams::hessian(),
            Family::Thirds => GParams::thirds(),
            Family::Quarters => GParams::quarters(),
        }
    }
}

fn gate(fails: bool, g: Gate) -> Result<()> {
    if fails {
        Err(Error::PreconditionFailed(g))
    } else {
        Ok(())
    }
}

/// Evaluator for every identity over one field at one precision `K`.
///
/// The four hypergeometric families are precomputed lazily; a table of values at
/// every nonzero argument is built on first use by the scan-based checks.
#[derive(Debug)]
pub struct Verifier {
    field: Arc<FqField>,
    k: u32,
    out: Arc<UnramifiedContext>,
    allow_p5: bool,
    gfuns: [OnceLock<Result<GFunction>>; 4],
    tables: [OnceLock<Result<Vec<PadicNumber>>>; 4],
    gamma: OnceLock<Result<GammaCache>>,
    hessian_counter: OnceLock<HessianCounter>,
}

impl Verifier {
    /// Builds the default field of order `p^r`; `k = None` selects the default precision.
    pub fn new(p: u64, r: u32, k: Option<u32>) -> Result<Self> {
        Self::from_field(Arc::new(FqField::build(p, r)?), k)
    }

    pub fn from_field(field: Arc<FqField>, k: Option<u32>) -> Result<Self> {
        let k = k.unwrap_or_else(|| PrecisionContext::default_precision(field.p(), field.r()));
        let out = field.unramified(k)?;
        Ok(Verifier {
            field,
            k,
            out,
            allow_p5: false,
            gfuns: Default::default(),
            tables: Default::default(),
            gamma: OnceLock::new(),
            hessian_counter: OnceLock::new(),
        })
    }

    /// Lowers the Hessian prime gate from `p > 5` to `p > 3`.
    pub fn allow_p5(mut self, yes: bool) -> Self {
        self.allow_p5 = yes;
        self
    }

    pub fn field(&self) -> &Arc<FqField> {
        &self.field
    }

    pub fn precision(&self) -> u32 {
        self.k
    }

    pub fn alpha(&self) -> AlphaValue {
        AlphaValue::compute(&self.field)
    }

    fn gfunction(&self, fam: Family) -> Result<&GFunction> {
        self.gfuns[fam as usize]
            .get_or_init(|| GFunction::new(&fam.params(), &self.field, self.k))
            .as_ref()
            .map_err(Clone::clone)
    }

    fn table(&self, fam: Family) -> Result<&[PadicNumber]> {
        self.tables[fam as usize]
            .get_or_init(|| self.gfunction(fam)?.eval_all())
            .as_deref()
            .map_err(Clone::clone)
    }

    /// The family's value at `t != 0`, from the precomputed table.
    fn g(&self, fam: Family, t: FqElement) -> Result<PadicNumber> {
        let s = self.field.dlog(t).ok_or(Error::ZeroArgument)?;
        Ok(self.table(fam)?[s as usize].clone())
    }

    fn int(&self, n: i64) -> Result<PadicNumber> {
        if n == 0 {
            return Ok(PadicNumber::zero(self.k as i64, &self.out));
        }
        PadicNumber::from_integer(n, &self.out)
    }

    /// `c * x` for a small integer `c`.
    fn scaled(&self, c: i64, x: &PadicNumber) -> Result<PadicNumber> {
        match c {
            0 => self.int(0),
            1 => Ok(x.clone()),
            -1 => Ok(x.neg()),
            _ => self.int(c)?.mul(x),
        }
    }

    fn padic(&self, lhs: PadicNumber, rhs: PadicNumber) -> Sides {
        Sides::Padic { lhs, rhs, precision: self.k as i64 }
    }

    fn el(&self, n: i64) -> FqElement {
        self.field.from_i64(n)
    }

    /// The Hessian parameter's Weierstrass pair `(m, n)`, with the gates shared by
    /// the main theorem and its corollary. The printed form scales `n` by 27, the
    /// corrected form by 54.
    pub fn bridge(&self, d: FqElement, form: Form) -> Result<(FqElement, FqElement)> {
        let f = &*self.field;
        gate(f.p() <= 3, Gate::PrimeTooSmall)?;
        gate(d == f.zero(), Gate::DIsZero)?;
        gate(cube(d, f) == f.one(), Gate::DCubedIsOne)?;
        let (m, n) = match form {
            Form::Printed => curves::hessian_bridge(d, f),
            Form::Corrected => curves::hessian_weierstrass_model(d, f),
        };
        gate(m == f.zero(), Gate::MIsZero)?;
        gate(n == f.zero(), Gate::NIsZero)?;
        gate(self.weierstrass_argument(m, n)? == f.one(), Gate::ArgumentIsOne)?;
        Ok((m, n))
    }

    /// `-27 b^2 / (4 a^3)` for `a != 0`.
    fn weierstrass_argument(&self, a: FqElement, b: FqElement) -> Result<FqElement> {
        let f = &*self.field;
        let num = f.mul(self.el(-27), f.mul(b, b));
        f.div(num, f.mul(self.el(4), cube(a, f))).ok_or(Error::PreconditionFailed(Gate::AIsZero))
    }

    /// `q phi(-3d) 2G2[1/2, 1/2; 1/6, 5/6 | 1/d^3]`.
    fn hessian_side(&self, d: FqElement) -> Result<PadicNumber> {
        let f = &*self.field;
        let arg = f.inv(cube(d, f)).ok_or(Error::ZeroArgument)?;
        let g = self.g(Family::Hessian, arg)?;
        self.scaled(f.phi(f.mul(self.el(-3), d)), &self.int(f.q() as i64)?.mul(&g)?)
    }

    /// `alpha - q + phi(-3(8 + 92 d^3 + 35 d^6))`, the scalar part of the printed right sides.
    fn printed_scalar(&self, d: FqElement) -> Result<PadicNumber> {
        let f = &*self.field;
        let d3 = cube(d, f);
        let inner = f.add(f.add(self.el(8), f.mul(self.el(92), d3)), f.mul(self.el(35), f.mul(d3, d3)));
        self.int(self.alpha().value - f.q() as i64 + f.phi(f.mul(self.el(-3), inner)))
    }

    /// Main theorem: `q phi(-3d) G_H[1/d^3]` against
    /// `alpha - q + phi(-3(8 + 92 d^3 + 35 d^6)) + q phi(n) G_W[-27 n^2 / 4 m^3]`.
    /// The corrected form drops the scalar terms and uses `n` scaled by 54.
    pub fn mt1(&self, d: FqElement, form: Form) -> Result<Sides> {
        let f = &*self.field;
        let (m, n) = self.bridge(d, form)?;
        let lhs = self.hessian_side(d)?;
        let g = self.g(Family::Weierstrass, self.weierstrass_argument(m, n)?)?;
        let tail = self.scaled(f.phi(n), &self.int(f.q() as i64)?.mul(&g)?)?;
        let rhs = match form {
            Form::Printed => self.printed_scalar(d)?.add(&tail)?,
            Form::Corrected => tail,
        };
        Ok(self.padic(lhs, rhs))
    }

    /// Corollary: the main theorem's left side against `alpha - q + phi(-3(8 + 92 d^3 + 35 d^6))`
    /// plus `q phi(k^3 + m k + n) G_T[-(k^3 + m k + n) / 4k^3]` when `3k^2 + m = 0` (branch 1), or
    /// `q phi(-3h^2 - m) G_Q[4(3h^2 + m) / 9h^2]` when `h^3 + m h + n = 0` (branch 2).
    /// The corrected forms drop the scalar terms, use `n` scaled by 54, and in
    /// branch 2 the character `phi(-3h(3h^2 + m))`.
    pub fn cor2(&self, branch: u8, d: FqElement, aux: FqElement, form: Form) -> Result<Sides> {
        let f = &*self.field;
        let (m, n) = self.bridge(d, form)?;
        let (c, fam, arg) = self.branch_rhs(branch, m, n, aux)?;
        let chi = match (branch, form) {
            (1, _) => f.phi(c),
            (_, Form::Printed) => f.phi(f.neg(c)),
            (_, Form::Corrected) => f.phi(f.mul(f.mul(self.el(-3), aux), c)),
        };
        let lhs = self.hessian_side(d)?;
        let g = self.g(fam, arg)?;
        let tail = self.scaled(chi, &self.int(f.q() as i64)?.mul(&g)?)?;
        let rhs = match form {
            Form::Printed => self.printed_scalar(d)?.add(&tail)?,
            Form::Corrected => tail,
        };
        Ok(self.padic(lhs, rhs))
    }

    /// Branch data for `y^2 = x^3 + a x + b`: the branch equation and nondegeneracy
    /// gates, then `(c, family, argument)` where `c` is `k^3 + a k + b` (branch 1) or
    /// `3h^2 + a` (branch 2).
    fn branch_rhs(&self, branch: u8, a: FqElement, b: FqElement, aux: FqElement) -> Result<(FqElement, Family, FqElement)> {
        let f = &*self.field;
        let x2 = f.mul(aux, aux);
        let x3 = f.mul(x2, aux);
        match branch {
            1 => {
                gate(f.add(f.mul(self.el(3), x2), a) != f.zero(), Gate::BranchEquation)?;
                gate(aux == f.zero(), Gate::AuxIsZero)?;
                let c = f.add(f.add(x3, f.mul(a, aux)), b);
                gate(c == f.zero(), Gate::ArgumentIsZero)?;
                let den = f.mul(self.el(4), x3);
                let arg = f.div(f.neg(c), den).ok_or(Error::PreconditionFailed(Gate::BranchDenominator))?;
                Ok((c, Family::Thirds, arg))
            }
            2 => {
                gate(f.add(f.add(x3, f.mul(a, aux)), b) != f.zero(), Gate::BranchEquation)?;
                gate(aux == f.zero(), Gate::AuxIsZero)?;
                let c = f.add(f.mul(self.el(3), x2), a);
                gate(c == f.zero(), Gate::ArgumentIsZero)?;
                let den = f.mul(self.el(9), x2);
                let arg = f.div(f.mul(self.el(4), c), den).ok_or(Error::PreconditionFailed(Gate::BranchDenominator))?;
                Ok((c, Family::Quarters, arg))
            }
            _ => Err(Error::InvalidParameter(format!("branch {branch} is not 1 or 2"))),
        }
    }

    /// `G_W[-27 b^2 / 4a^3]` against `phi(b(k^3 + a k + b)) G_T[-(k^3 + a k + b) / 4k^3]`
    /// with `a = -3k^2` (branch 1), or `phi(-b(3h^2 + a)) G_Q[4(3h^2 + a) / 9h^2]` with
    /// `h^3 + a h + b = 0` (branch 2). The corrected branch 2 uses `phi(-3bh(3h^2 + a))`.
    pub fn bs1(&self, branch: u8, a: FqElement, b: FqElement, aux: FqElement, form: Form) -> Result<Sides> {
        let f = &*self.field;
        gate(f.p() <= 3, Gate::PrimeTooSmall)?;
        gate(a == f.zero(), Gate::AIsZero)?;
        gate(b == f.zero(), Gate::BIsZero)?;
        let t = self.weierstrass_argument(a, b)?;
        gate(t == f.one(), Gate::ArgumentIsOne)?;
        let (c, fam, arg) = self.branch_rhs(branch, a, b, aux)?;
        let chi = match (branch, form) {
            (1, _) => f.phi(f.mul(b, c)),
            (_, Form::Printed) => f.phi(f.neg(f.mul(b, c))),
            (_, Form::Corrected) => f.phi(f.mul(f.mul(self.el(-3), f.mul(b, aux)), c)),
        };
        let lhs = self.g(Family::Weierstrass, t)?;
        let rhs = self.scaled(chi, &self.g(fam, arg)?)?;
        Ok(self.padic(lhs, rhs))
    }

    /// Trace of Frobenius of `y^2 = x^3 + a x + b` by counting, against the integer
    /// recovered from `phi(b) q G_W[-27 b^2 / 4a^3]`.
    pub fn mc(&self, a: FqElement, b: FqElement) -> Result<Sides> {
        let f = &*self.field;
        gate(f.p() <= 3, Gate::PrimeTooSmall)?;
        let e = WeierstrassCurve::new(a, b, f).map_err(|_| Error::PreconditionFailed(Gate::Singular))?;
        gate(a == f.zero(), Gate::JIsZero)?;
        gate(b == f.zero(), Gate::JIs1728)?;
        let t = self.weierstrass_argument(a, b)?;
        let g = match self.tables[Family::Weierstrass as usize].get() {
            Some(_) => self.g(Family::Weierstrass, t)?,
            None => self.gfunction(Family::Weierstrass)?.eval(t)?,
        };
        let x = self.scaled(f.phi(b), &self.int(f.q() as i64)?.mul(&g)?)?;
        let lhs = count_weierstrass(&e, f).trace;
        Ok(Sides::Integer { lhs, rhs: recover_integer(&x, (4 * f.q()).sqrt()) })
    }

    /// Affine count of `x^3 + y^3 + 1 = 3axy` against
    /// `alpha - 1 + q - q phi(-3a) G_H[1/a^3]`, the last term recovered as an integer.
    pub fn hessian(&self, a: FqElement) -> Result<Sides> {
        let f = &*self.field;
        gate(f.p() <= if self.allow_p5 { 3 } else { 5 }, Gate::PrimeTooSmall)?;
        gate(a == f.zero(), Gate::DIsZero)?;
        let c = HessianCurve::new(a, f).map_err(|_| Error::PreconditionFailed(Gate::DCubedIsOne))?;
        let x = match self.tables[Family::Hessian as usize].get() {
            Some(_) => self.hessian_side(a)?,
            None => {
                let arg = f.inv(cube(a, f)).ok_or(Error::ZeroArgument)?;
                let g = self.gfunction(Family::Hessian)?.eval(arg)?;
                self.scaled(f.phi(f.mul(self.el(-3), a)), &self.int(f.q() as i64)?.mul(&g)?)?
            }
        };
        let q = f.q();
        let bound = q + 6 * (q.sqrt() + 1) + 6;
        let rhs = recover_integer(&x, bound).map(|g| self.alpha().value - 1 + q as i64 - g);
        let counter = self.hessian_counter.get_or_init(|| HessianCounter::new(f));
        Ok(Sides::Integer { lhs: counter.count(&c, f) as i64, rhs })
    }

    /// Builds the value table for the families used by the scan-based checks.
    pub fn precompute(&self) -> Result<()> {
        for fam in [Family::Weierstrass, Family::Hessian, Family::Thirds, Family::Quarters] {
            self.table(fam)?;
        }
        Ok(())
    }

    fn gamma_cache(&self) -> Result<&GammaCache> {
        self.gamma
            .get_or_init(|| Ok(GammaCache::new(PrecisionContext::new(self.field.p(), self.k)?)))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// The two gamma-product identities for `t` and `j`.
    pub fn lemma31(&self, t: u64, j: u64) -> Result<[Sides; 2]> {
        gate(t.is_multiple_of(self.field.p()), Gate::TDivisibleByP)?;
        let [a, b] = gamma::verify_lemma31(t, j, &self.field, &self.out, self.gamma_cache()?)?;
        Ok([a.into(), b.into()])
    }

    pub fn eq29(&self, l: u64) -> Result<Sides> {
        Ok(gamma::verify_eq29(l, &self.field, &self.out, self.gamma_cache()?)?.into())
    }

    pub fn lemma5(&self, l: u64, i: u32) -> Result<Sides> {
        Ok(gamma::verify_lemma5(l, i, self.field.p(), self.field.r())?.into())
    }

    /// A record for `sides`, with `elapsed_ms` left at zero.
    pub fn record(&self, theorem: Theorem, params: BTreeMap<String, String>, sides: &Sides) -> VerifyRecord {
        let (lhs, rhs) = sides.render();
        VerifyRecord {
            theorem,
            p: self.field.p(),
            r: self.field.r(),
            k: self.k,
            params,
            lhs,
            rhs,
            pass: sides.pass(),
            elapsed_ms: 0,
        }
    }

    fn params(&self, kv: &[(&str, FqElement)]) -> BTreeMap<String, String> {
        kv.iter().map(|(k, v)| (k.to_string(), self.field.format(*v))).collect()
    }
}

pub fn verify_mt1(v: &Verifier, d: FqElement) -> Result<VerifyRecord> {
    Ok(v.record(Theorem::Mt1, v.params(&[("d", d)]), &v.mt1(d, Form::Printed)?))
}

pub fn verify_cor2(v: &Verifier, branch: u8, d: FqElement, aux: FqElement) -> Result<VerifyRecord> {
    let (th, key) = if branch == 1 { (Theorem::Cor2_1, "k") } else { (Theorem::Cor2_2, "h") };
    Ok(v.record(th, v.params(&[("d", d), (key, aux)]), &v.cor2(branch, d, aux, Form::Printed)?))
}

pub fn verify_bs1(v: &Verifier, branch: u8, a: FqElement, b: FqElement, aux: FqElement) -> Result<VerifyRecord> {
    let (th, key) = if branch == 1 { (Theorem::Bs1_1, "k") } else { (Theorem::Bs1_2, "h") };
    Ok(v.record(th, v.params(&[("a", a), ("b", b), (key, aux)]), &v.bs1(branch, a, b, aux, Form::Printed)?))
}

pub fn verify_mc(v: &Verifier, a: FqElement, b: FqElement) -> Result<VerifyRecord> {
    Ok(v.record(Theorem::Mc, v.params(&[("a", a), ("b", b)]), &v.mc(a, b)?))
}

pub fn verify_hessian(v: &Verifier, a: FqElement) -> Result<VerifyRecord> {
    Ok(v.record(Theorem::Hessian, v.params(&[("a", a)]), &v.hessian(a)?))
}
