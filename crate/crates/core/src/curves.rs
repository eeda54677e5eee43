//! Brute-force point counts for short Weierstrass and Hessian curves.

use crate::error::{Error, Result};
use crate::field::{FqElement, FqField};

/// `y^2 = x^3 + a x + b` with `4a^3 + 27b^2 != 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeierstrassCurve {
    a: FqElement,
    b: FqElement,
}

impl WeierstrassCurve {
    pub fn new(a: FqElement, b: FqElement, field: &FqField) -> Result<Self> {
        if discriminant_part(a, b, field) == field.zero() {
            return Err(Error::SingularCurve);
        }
        Ok(WeierstrassCurve { a, b })
    }

    pub fn a(&self) -> FqElement {
        self.a
    }

    pub fn b(&self) -> FqElement {
        self.b
    }
}

/// `4a^3 + 27b^2`.
pub fn discriminant_part(a: FqElement, b: FqElement, field: &FqField) -> FqElement {
    let f = field;
    let a3 = cube(a, f);
    f.add(f.mul(f.from_i64(4), a3), f.mul(f.from_i64(27), f.mul(b, b)))
}

/// `x^3 + y^3 + 1 = 3 d x y` with `d^3 != 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HessianCurve {
    d: FqElement,
}

impl HessianCurve {
    pub fn new(d: FqElement, field: &FqField) -> Result<Self> {
        if cube(d, field) == field.one() {
            return Err(Error::SingularHessian);
        }
        Ok(HessianCurve { d })
    }

    pub fn d(&self) -> FqElement {
        self.d
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CurveCount {
    pub affine: u64,
    pub projective: u64,
    /// `q + 1 - projective`
    pub trace: i64,
}

pub(crate) fn cube(x: FqElement, f: &FqField) -> FqElement {
    f.mul(f.mul(x, x), x)
}

fn weierstrass_rhs(e: &WeierstrassCurve, x: FqElement, f: &FqField) -> FqElement {
    f.add(f.add(cube(x, f), f.mul(e.a, x)), e.b)
}

fn count_from_affine(affine: u64, q: u64) -> CurveCount {
    let projective = affine + 1;
    CurveCount { affine, projective, trace: q as i64 + 1 - projective as i64 }
}

/// Counts points as `sum_x (1 + phi(x^3 + a x + b))` plus the point at infinity.
pub fn count_weierstrass(e: &WeierstrassCurve, field: &FqField) -> CurveCount {
    let s: i64 = field.elements().map(|x| field.phi(weierstrass_rhs(e, x, field))).sum();
    count_from_affine((field.q() as i64 + s) as u64, field.q())
}

/// Counts points by testing every pair `(x, y)`.
pub fn count_weierstrass_enumerate(e: &WeierstrassCurve, field: &FqField) -> CurveCount {
    let squares: Vec<FqElement> = field.elements().map(|y| field.mul(y, y)).collect();
    let mut affine = 0;
    for x in field.elements() {
        let rhs = weierstrass_rhs(e, x, field);
        affine += squares.iter().filter(|&&s| s == rhs).count() as u64;
    }
    count_from_affine(affine, field.q())
}

/// Number of affine solutions of `x^3 + y^3 + 1 = 3 d x y`.
pub fn count_hessian(c: &HessianCurve, field: &FqField) -> u64 {
    let f = field;
    let cubes: Vec<FqElement> = f.elements().map(|y| cube(y, f)).collect();
    let three_d = f.mul(f.from_i64(3), c.d);
    let mut count = 0;
    for x in f.elements() {
        // x^3 + 1 + y^3 - 3dx y = 0
        let row = f.add(cubes[x.index() as usize], f.one());
        let slope = f.mul(three_d, x);
        for y in f.elements() {
            if f.add(row, cubes[y.index() as usize]) == f.mul(slope, y) {
                count += 1;
            }
        }
    }
    count
}

/// Affine Hessian counts through a table of `#{y : y^3 - c y = v}` over all
/// `(c, v)`: `#C_d = sum_x #{y : y^3 - 3dx y = -(x^3 + 1)}`. Building the table
/// takes `q^2` steps, after which each count takes `q`.
#[derive(Clone, Debug)]
pub struct HessianCounter {
    q: usize,
    roots: Vec<u8>,
}

impl HessianCounter {
    pub fn new(field: &FqField) -> Self {
        let f = field;
        let q = f.q() as usize;
        let mut roots = vec![0u8; q * q];
        for c in f.elements() {
            let row = &mut roots[c.index() as usize * q..][..q];
            for y in f.elements() {
                let v = f.sub(cube(y, f), f.mul(c, y));
                row[v.index() as usize] += 1;
            }
        }
        HessianCounter { q, roots }
    }

    /// Same value as [`count_hessian`].
    pub fn count(&self, c: &HessianCurve, field: &FqField) -> u64 {
        let f = field;
        let three_d = f.mul(f.from_i64(3), c.d);
        f.elements()
            .map(|x| {
                let slope = f.mul(three_d, x).index() as usize;
                let v = f.neg(f.add(cube(x, f), f.one())).index() as usize;
                self.roots[slope * self.q + v] as u64
            })
            .sum()
    }
}

/// `(m, n) = (-27 d (d^3 + 8), 27 (d^6 - 20 d^3 - 8))`.
pub fn hessian_bridge(d: FqElement, field: &FqField) -> (FqElement, FqElement) {
    bridge_with_scale(d, 27, field)
}

/// `(m, n) = (-27 d (d^3 + 8), 54 (d^6 - 20 d^3 - 8))`, a Weierstrass model
/// `y^2 = x^3 + m x + n` of the Hessian curve `C_d`, with
/// `4m^3 + 27n^2 = -2^8 3^9 (d^3 - 1)^3`.
pub fn hessian_weierstrass_model(d: FqElement, field: &FqField) -> (FqElement, FqElement) {
    bridge_with_scale(d, 54, field)
}

fn bridge_with_scale(d: FqElement, n_scale: i64, field: &FqField) -> (FqElement, FqElement) {
    let f = field;
    let d3 = cube(d, f);
    let m = f.mul(f.from_i64(-27), f.mul(d, f.add(d3, f.from_i64(8))));
    let inner = f.sub(f.sub(f.mul(d3, d3), f.mul(f.from_i64(20), d3)), f.from_i64(8));
    (m, f.mul(f.from_i64(n_scale), inner))
}

/// Both sides of `#E(F_q) + q = #C_d(F_q) + 2 + phi(-3(8 + 92 d^3 + 35 d^6))`,
/// where `E: y^2 = x^3 + m x + n` with `(m, n)` from [`hessian_bridge`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CountRelation {
    pub lhs: i64,
    pub rhs: i64,
}

impl CountRelation {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn check_count_relation(d: FqElement, field: &FqField) -> Result<CountRelation> {
    let f = field;
    let c = HessianCurve::new(d, f)?;
    let (m, n) = hessian_bridge(d, f);
    let e = WeierstrassCurve::new(m, n, f)?;
    let d3 = cube(d, f);
    let d6 = f.mul(d3, d3);
    let inner = f.add(f.add(f.from_i64(8), f.mul(f.from_i64(92), d3)), f.mul(f.from_i64(35), d6));
    let chi = f.phi(f.mul(f.from_i64(-3), inner));
    let lhs = count_weierstrass(&e, f).projective as i64 + f.q() as i64;
    let rhs = count_hessian(&c, f) as i64 + 2 + chi;
    Ok(CountRelation { lhs, rhs })
}

/// `1728 * 4a^3 / (4a^3 + 27b^2)`.
pub fn j_invariant(e: &WeierstrassCurve, field: &FqField) -> FqElement {
    let f = field;
    let four_a3 = f.mul(f.from_i64(4), cube(e.a, f));
    let num = f.mul(f.from_i64(1728), four_a3);
    f.div(num, discriminant_part(e.a, e.b, f)).expect("nonsingular curve")
}

/// True when `j(E)` is neither `0` nor `1728`.
pub fn is_generic(e: &WeierstrassCurve, field: &FqField) -> bool {
    let j = j_invariant(e, field);
    j != field.zero() && j != field.from_i64(1728)
}
