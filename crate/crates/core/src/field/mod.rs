//! The finite field `F_q`, `q = p^r`, with a fixed primitive element and full
//! discrete-logarithm tables.

pub mod poly;

use std::fmt;
use std::sync::Arc;

use crate::arith::{inv_mod, is_prime, prime_factors};
use crate::error::{Error, Result};
use crate::padic::{teichmueller, PrecisionContext, UnramifiedContext, ZqElement};

/// Default cap on `q`; the log tables hold `2q` words.
pub const DEFAULT_FIELD_BOUND: u64 = 100_000;

/// A field element, stored as the packed index `c_0 + c_1 p + ... + c_{r-1} p^{r-1}`
/// of its power-basis coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FqElement(u32);

impl FqElement {
    pub fn index(self) -> u32 {
        self.0
    }
}

/// A multiplicative character `T^m`, with `m` reduced mod `q - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CharacterIndex {
    m: u64,
}

impl CharacterIndex {
    pub fn new(m: i64, field: &FqField) -> Self {
        CharacterIndex { m: m.rem_euclid((field.q - 1) as i64) as u64 }
    }

    pub fn m(self) -> u64 {
        self.m
    }

    pub fn is_trivial(self) -> bool {
        self.m == 0
    }
}

#[derive(Clone, Debug)]
pub struct FqField {
    p: u64,
    r: u32,
    q: u64,
    poly: Vec<u64>,
    generator: FqElement,
    /// `exp[s]` is the index of `g^s`, `0 <= s < q - 1`.
    exp: Vec<u32>,
    /// `log[i]` is the discrete log of the element with index `i`; unused at 0.
    log: Vec<u32>,
}

impl PartialEq for FqField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.poly == other.poly && self.generator == other.generator
    }
}

impl Eq for FqField {}

impl FqField {
    pub fn build(p: u64, r: u32) -> Result<Self> {
        Self::build_with_limit(p, r, DEFAULT_FIELD_BOUND)
    }

    pub fn build_with_limit(p: u64, r: u32, bound: u64) -> Result<Self> {
        Self::check_size(p, r, bound)?;
        Self::from_poly(p, poly::default_defining_poly(p, r), None)
    }

    /// Builds the field on an explicit defining polynomial (low coefficients of a
    /// monic polynomial that is irreducible with a primitive root).
    pub fn build_with_poly(p: u64, low: Vec<u64>) -> Result<Self> {
        Self::check_size(p, low.len() as u32, DEFAULT_FIELD_BOUND)?;
        if !poly::is_primitive(&low, p) {
            return Err(Error::InvalidParameter(format!(
                "{low:?} is not a primitive polynomial mod {p}"
            )));
        }
        Self::from_poly(p, low, None)
    }

    /// The same field with a different primitive element as generator.
    pub fn with_generator(&self, g: FqElement) -> Result<Self> {
        if g == self.zero() || self.order(g) != self.q - 1 {
            return Err(Error::InvalidParameter("generator must have order q - 1".into()));
        }
        Self::from_poly(self.p, self.poly.clone(), Some(g))
    }

    fn check_size(p: u64, r: u32, bound: u64) -> Result<()> {
        if p == 2 || !is_prime(p) {
            return Err(Error::CompositeP(p));
        }
        if r == 0 {
            return Err(Error::InvalidParameter("extension degree r must be at least 1".into()));
        }
        let q = (p as u128).checked_pow(r).unwrap_or(u128::MAX);
        if q > bound as u128 || q > u32::MAX as u128 {
            return Err(Error::FieldTooLarge { q: q.min(u64::MAX as u128) as u64, bound });
        }
        Ok(())
    }

    fn from_poly(p: u64, low: Vec<u64>, generator: Option<FqElement>) -> Result<Self> {
        let r = low.len() as u32;
        let q = p.pow(r);
        let n = q - 1;
        let pack = |c: &[u64]| c.iter().rev().fold(0u64, |acc, &d| acc * p + d) as u32;
        // Tables relative to the root X of the defining polynomial.
        let x_exp: Vec<u32> = poly::root_powers(&low, p).iter().map(|c| pack(c)).collect();
        let mut x_log = vec![u32::MAX; q as usize];
        for (s, &i) in x_exp.iter().enumerate() {
            x_log[i as usize] = s as u32;
        }
        let g = match generator {
            Some(g) => g,
            None => FqElement(
                (1..q as u32)
                    .find(|&i| num_integer::gcd(x_log[i as usize] as u64, n) == 1)
                    .expect("a primitive element exists"),
            ),
        };
        // log_g(y) = log_X(y) / log_X(g) mod q - 1
        let lg = x_log[g.0 as usize] as u64;
        let lg_inv = if n == 1 { 0 } else { inv_mod(lg, n).expect("generator is primitive") };
        let mut exp = vec![0u32; n as usize];
        let mut log = vec![u32::MAX; q as usize];
        for (i, &lx) in x_log.iter().enumerate().skip(1) {
            let s = (lx as u128 * lg_inv as u128 % n.max(1) as u128) as u32;
            log[i] = s;
            exp[s as usize] = i as u32;
        }
        Ok(FqField { p, r, q, poly: low, generator: g, exp, log })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Low coefficients of the monic defining polynomial.
    pub fn defining_poly(&self) -> &[u64] {
        &self.poly
    }

    pub fn generator(&self) -> FqElement {
        self.generator
    }

    pub fn zero(&self) -> FqElement {
        FqElement(0)
    }

    pub fn one(&self) -> FqElement {
        FqElement(1)
    }

    /// The image of an integer in the prime field.
    pub fn from_i64(&self, n: i64) -> FqElement {
        FqElement(n.rem_euclid(self.p as i64) as u32)
    }

    pub fn from_index(&self, i: u64) -> Result<FqElement> {
        if i >= self.q {
            return Err(Error::InvalidParameter(format!("element index {i} is not below q = {}", self.q)));
        }
        Ok(FqElement(i as u32))
    }

    /// Power-basis coordinates; entries beyond `r` are rejected.
    pub fn from_coeffs(&self, c: &[i64]) -> Result<FqElement> {
        if c.len() > self.r as usize {
            return Err(Error::InvalidParameter(format!(
                "{} coordinates for a degree-{} field",
                c.len(),
                self.r
            )));
        }
        let p = self.p as i64;
        let idx = c.iter().rev().fold(0i64, |acc, &d| acc * p + d.rem_euclid(p));
        Ok(FqElement(idx as u32))
    }

    pub fn coeffs(&self, x: FqElement) -> Vec<u64> {
        let mut n = x.0 as u64;
        (0..self.r)
            .map(|_| {
                let d = n % self.p;
                n /= self.p;
                d
            })
            .collect()
    }

    /// Every element in index order, starting with zero.
    pub fn elements(&self) -> impl Iterator<Item = FqElement> {
        (0..self.q as u32).map(FqElement)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FqElement> {
        (1..self.q as u32).map(FqElement)
    }

    /// True for elements of the prime field `F_p`.
    pub fn in_prime_field(&self, x: FqElement) -> bool {
        (x.0 as u64) < self.p
    }

    pub fn add(&self, x: FqElement, y: FqElement) -> FqElement {
        if self.r == 1 {
            return FqElement(((x.0 as u64 + y.0 as u64) % self.p) as u32);
        }
        let (mut a, mut b) = (x.0 as u64, y.0 as u64);
        let (mut out, mut place) = (0u64, 1u64);
        for _ in 0..self.r {
            out += (a % self.p + b % self.p) % self.p * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        FqElement(out as u32)
    }

    pub fn neg(&self, x: FqElement) -> FqElement {
        let mut a = x.0 as u64;
        let (mut out, mut place) = (0u64, 1u64);
        for _ in 0..self.r {
            out += (self.p - a % self.p) % self.p * place;
            a /= self.p;
            place *= self.p;
        }
        FqElement(out as u32)
    }

    pub fn sub(&self, x: FqElement, y: FqElement) -> FqElement {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: FqElement, y: FqElement) -> FqElement {
        if x.0 == 0 || y.0 == 0 {
            return FqElement(0);
        }
        let n = self.q - 1;
        let s = (self.log[x.0 as usize] as u64 + self.log[y.0 as usize] as u64) % n;
        FqElement(self.exp[s as usize])
    }

    pub fn inv(&self, x: FqElement) -> Option<FqElement> {
        let s = self.dlog(x)?;
        Some(self.exp((self.q - 1 - s) as i64))
    }

    pub fn div(&self, x: FqElement, y: FqElement) -> Option<FqElement> {
        Some(self.mul(x, self.inv(y)?))
    }

    /// `x^e`; negative exponents require `x != 0`. `0^0 = 1`.
    pub fn pow(&self, x: FqElement, e: i64) -> Option<FqElement> {
        if x.0 == 0 {
            return match e {
                0 => Some(self.one()),
                e if e > 0 => Some(self.zero()),
                _ => None,
            };
        }
        let n = (self.q - 1) as i128;
        let s = (self.log[x.0 as usize] as i128 * e as i128).rem_euclid(n);
        Some(FqElement(self.exp[s as usize]))
    }

    /// Discrete log base the generator; `None` for zero.
    pub fn dlog(&self, x: FqElement) -> Option<u64> {
        (x.0 != 0).then(|| self.log[x.0 as usize] as u64)
    }

    /// `g^s` for any integer `s`.
    pub fn exp(&self, s: i64) -> FqElement {
        FqElement(self.exp[s.rem_euclid((self.q - 1) as i64) as usize])
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, x: FqElement) -> u64 {
        let n = self.q - 1;
        match self.dlog(x) {
            None => 0,
            Some(s) => n / num_integer::gcd(s, n),
        }
    }

    /// The quadratic character, with `phi(0) = 0`.
    pub fn phi(&self, x: FqElement) -> i64 {
        match self.dlog(x) {
            None => 0,
            Some(s) if s % 2 == 0 => 1,
            Some(_) => -1,
        }
    }

    /// `x + x^p + ... + x^{p^{r-1}}`, an element of `F_p`.
    pub fn trace(&self, x: FqElement) -> u64 {
        let mut acc = self.zero();
        let mut y = x;
        for _ in 0..self.r {
            acc = self.add(acc, y);
            y = self.pow(y, self.p as i64).expect("nonnegative exponent");
        }
        debug_assert!(self.in_prime_field(acc));
        acc.0 as u64
    }

    /// `Z_q / p^K` on the same defining polynomial.
    pub fn unramified(&self, k: u32) -> Result<Arc<UnramifiedContext>> {
        Ok(UnramifiedContext::from_verified(PrecisionContext::new(self.p, k)?, self.poly.clone()))
    }

    /// Parses an element as an integer (prime-field image) or as comma-separated
    /// power-basis coordinates `c0,c1,...`.
    pub fn parse(&self, s: &str) -> Result<FqElement> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let mut c = Vec::with_capacity(parts.len());
        for part in &parts {
            c.push(
                part.parse::<i64>()
                    .map_err(|_| Error::InvalidParameter(format!("cannot parse field element {s:?}")))?,
            );
        }
        self.from_coeffs(&c)
    }

    /// Text form: the integer for `r = 1`, otherwise the coordinate list `c0,c1,...`.
    pub fn format(&self, x: FqElement) -> String {
        if self.r == 1 {
            return x.0.to_string();
        }
        let c: Vec<String> = self.coeffs(x).iter().map(u64::to_string).collect();
        c.join(",")
    }
}

impl fmt::Display for FqField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.q)
    }
}

/// `omega^m(x)`, the `m`-th power of the Teichmüller character.
pub fn char_eval_padic(
    m: CharacterIndex,
    x: FqElement,
    field: &FqField,
    uctx: &Arc<UnramifiedContext>,
) -> Result<ZqElement> {
    Ok(teichmueller(x, field, uctx)?.pow(m.m()))
}

/// Exact value of a sum of `n`-th roots of unity `sum_e counts[e] * zeta^e`,
/// when it can be certified: the full count if every term is `zeta^0`, zero if
/// the count vector is invariant under a shift by a proper divisor of `n`.
pub fn exact_root_sum(counts: &[u64]) -> Option<i64> {
    let n = counts.len() as u64;
    let total: u64 = counts.iter().sum();
    if counts[0] == total {
        return Some(total as i64);
    }
    for l in prime_factors(n) {
        let h = (n / l) as usize;
        if (0..counts.len()).all(|i| counts[i] == counts[(i + h) % counts.len()]) {
            return Some(0);
        }
    }
    None
}

/// Tallies of the orthogonality checks over one field.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OrthogonalityTally {
    pub checked: usize,
    pub failed: usize,
}

/// Both orthogonality relations for every character `T^m` and every `x = g^s`:
/// `sum_x T^m(x)` is `q - 1` for `m = 0` and `0` otherwise, and
/// `sum_m T^m(g^s)` is `q - 1` for `s = 0` and `0` otherwise.
pub fn orthogonality_tally(field: &FqField) -> OrthogonalityTally {
    let n = (field.q() - 1) as usize;
    let mut tally = OrthogonalityTally::default();
    let mut counts = vec![0u64; n];
    let mut run = |counts: &[u64], expected: i64| {
        tally.checked += 1;
        if exact_root_sum(counts) != Some(expected) {
            tally.failed += 1;
        }
    };
    // Sum over x of T^m(x): x = g^s runs over all s, contributing zeta^{ms}.
    for m in 0..n {
        counts.iter_mut().for_each(|c| *c = 0);
        for x in field.nonzero_elements() {
            let s = field.dlog(x).expect("nonzero") as usize;
            counts[m * s % n] += 1;
        }
        run(&counts, if m == 0 { n as i64 } else { 0 });
    }
    // Sum over characters of T^m(x) for fixed x.
    for x in field.nonzero_elements() {
        let s = field.dlog(x).expect("nonzero") as usize;
        counts.iter_mut().for_each(|c| *c = 0);
        for m in 0..n {
            counts[m * s % n] += 1;
        }
        run(&counts, if x == field.one() { n as i64 } else { 0 });
    }
    tally
}

pub fn check_orthogonality(field: &FqField) -> bool {
    orthogonality_tally(field).failed == 0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_generator() {
        let f = FqField::build(7, 1).unwrap();
        assert_eq!(f.generator(), f.from_i64(3));
        assert_eq!(f.q(), 7);
        assert_eq!(FqField::build(9, 1).unwrap_err(), Error::CompositeP(9));
        assert!(matches!(FqField::build(7, 7), Err(Error::FieldTooLarge { .. })));
    }

    #[test]
    fn generator_has_full_order() {
        let f = FqField::build(5, 2).unwrap();
        let g = f.generator();
        // Exhaustive order oracle by repeated multiplication.
        let mut x = g;
        let mut k = 1;
        while x != f.one() {
            x = f.mul(x, g);
            k += 1;
        }
        assert_eq!(k, 24);
    }

    #[test]
    fn dlog_is_a_homomorphism() {
        for (p, r) in [(3, 1), (5, 1), (7, 1), (11, 1), (3, 2), (5, 2), (7, 2), (11, 2), (3, 3), (3, 4)] {
            let f = FqField::build(p, r).unwrap();
            let n = f.q() - 1;
            let mut seen = vec![false; n as usize];
            for x in f.nonzero_elements() {
                let s = f.dlog(x).unwrap();
                assert!(!seen[s as usize]);
                seen[s as usize] = true;
                assert_eq!(f.exp(s as i64), x);
                for y in f.nonzero_elements() {
                    assert_eq!(f.dlog(f.mul(x, y)).unwrap(), (s + f.dlog(y).unwrap()) % n);
                    assert_eq!(f.phi(x) * f.phi(y), f.phi(f.mul(x, y)));
                }
            }
        }
    }

    #[test]
    fn multiplication_matches_polynomial_product() {
        let f = FqField::build(7, 2).unwrap();
        let c = f.defining_poly().to_vec();
        // T * T = -c1 T - c0
        let t = f.from_coeffs(&[0, 1]).unwrap();
        let expected = f.from_coeffs(&[-(c[0] as i64), -(c[1] as i64)]).unwrap();
        assert_eq!(f.mul(t, t), expected);
        // distributivity
        for x in f.elements().step_by(5) {
            for y in f.elements().step_by(7) {
                for z in f.elements().step_by(11) {
                    assert_eq!(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
                }
            }
        }
    }

    #[test]
    fn quadratic_character() {
        let f = FqField::build(7, 1).unwrap();
        assert_eq!(f.phi(f.zero()), 0);
        assert_eq!(f.phi(f.one()), 1);
        assert_eq!(f.phi(f.generator()), -1);
        // Euler's criterion oracle.
        for a in 1..7 {
            let e = crate::arith::pow_mod(a, 3, 7);
            assert_eq!(f.phi(f.from_i64(a as i64)), if e == 1 { 1 } else { -1 });
        }
    }

    #[test]
    fn phi_minus_three_is_one_when_q_is_one_mod_three() {
        for p in [5u64, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 97] {
            for r in 1..=4 {
                let Ok(f) = FqField::build_with_limit(p, r, 10_000) else { continue };
                if f.q() % 3 == 1 {
                    assert_eq!(f.phi(f.from_i64(-3)), 1, "q = {}", f.q());
                }
            }
        }
    }

    #[test]
    fn trace_examples() {
        let f = FqField::build(7, 1).unwrap();
        assert_eq!(f.trace(f.from_i64(4)), 4);
        let f = FqField::build(5, 2).unwrap();
        assert_eq!(f.trace(f.zero()), 0);
        // Vieta: T + T^5 = -c1
        let t = f.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(f.trace(t), (5 - f.defining_poly()[1]) % 5);
        // additivity
        for x in f.elements() {
            for y in f.elements() {
                assert_eq!(f.trace(f.add(x, y)), (f.trace(x) + f.trace(y)) % 5);
            }
        }
    }

    #[test]
    fn characters_agree_mod_p() {
        let f = FqField::build(7, 1).unwrap();
        let u = f.unramified(3).unwrap();
        let minus = char_eval_padic(CharacterIndex::new(3, &f), f.generator(), &f, &u).unwrap();
        assert_eq!(minus.coeffs(), &[342]);
        for m in [0, 6] {
            let one = char_eval_padic(CharacterIndex::new(m, &f), f.from_i64(5), &f, &u).unwrap();
            assert!(one.is_one());
        }
        for (p, r) in [(5, 2), (7, 2), (11, 1)] {
            let f = FqField::build(p, r).unwrap();
            let u = f.unramified(2).unwrap();
            for m in 0..f.q() as i64 - 1 {
                let chi = CharacterIndex::new(m, &f);
                for s in [1i64, 2, 5] {
                    let x = f.exp(s);
                    let lifted = char_eval_padic(chi, x, &f, &u).unwrap();
                    let low: Vec<u64> = lifted.coeffs().iter().map(|c| c % p).collect();
                    assert_eq!(low, f.coeffs(f.exp(m * s)));
                }
            }
        }
        assert_eq!(char_eval_padic(CharacterIndex::new(1, &f), f.zero(), &f, &u), Err(Error::ZeroArgument));
    }

    #[test]
    fn orthogonality() {
        for (p, r) in [(3, 1), (5, 1), (7, 1), (13, 1), (3, 2), (5, 2), (7, 2), (11, 2), (3, 4)] {
            let f = FqField::build(p, r).unwrap();
            let t = orthogonality_tally(&f);
            assert_eq!(t.failed, 0);
            assert_eq!(t.checked as u64, 2 * (f.q() - 1));
        }
        assert_eq!(exact_root_sum(&[1, 1, 0, 0]), None);
        assert_eq!(exact_root_sum(&[0, 2, 0, 2]), Some(0));
    }

    #[test]
    fn alternate_generator() {
        let f = FqField::build(11, 1).unwrap();
        let g2 = f.with_generator(f.from_i64(7)).unwrap();
        assert_eq!(g2.generator(), g2.from_i64(7));
        assert_eq!(g2.dlog(g2.from_i64(7)), Some(1));
        assert!(f.with_generator(f.from_i64(3)).is_err());
    }

    #[test]
    fn parse_and_format() {
        let f = FqField::build(5, 2).unwrap();
        let x = f.parse("3,4").unwrap();
        assert_eq!(f.coeffs(x), vec![3, 4]);
        assert_eq!(f.format(x), "3,4");
        assert_eq!(f.parse("-1").unwrap(), f.from_i64(4));
        assert!(f.parse("1,2,3").is_err());
    }
}
