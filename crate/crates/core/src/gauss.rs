//! Gauss sums over `F_q` in double-precision complex arithmetic.
//!
//! `G(T^m) = sum_{x != 0} zeta_{q-1}^{m log x} zeta_p^{tr x}`, with `T` the
//! character sending the field generator to `exp(2 pi i / (q-1))`.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::field::{CharacterIndex, FqElement, FqField};

/// Root-of-unity tables and all `q - 1` Gauss sums of one field.
#[derive(Clone, Debug)]
pub struct GaussSums<'a> {
    field: &'a FqField,
    zeta_n: Vec<Complex64>,
    sums: Vec<Complex64>,
}

/// Both sides of a floating-point identity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FloatCheck {
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub tol: f64,
}

impl FloatCheck {
    pub fn error(&self) -> f64 {
        (self.lhs - self.rhs).norm()
    }

    pub fn holds(&self) -> bool {
        self.lhs.is_finite() && self.rhs.is_finite() && self.error() < self.tol
    }
}

/// Neumaier-compensated sum, so that long Gauss sums keep close to full precision.
fn compensated_sum(terms: impl Iterator<Item = Complex64>) -> Complex64 {
    fn step(sum: &mut f64, comp: &mut f64, x: f64) {
        let t = *sum + x;
        *comp += if sum.abs() >= x.abs() { (*sum - t) + x } else { (x - t) + *sum };
        *sum = t;
    }
    let (mut re, mut re_c, mut im, mut im_c) = (0.0, 0.0, 0.0, 0.0);
    for z in terms {
        step(&mut re, &mut re_c, z.re);
        step(&mut im, &mut im_c, z.im);
    }
    Complex64::new(re + re_c, im + im_c)
}

fn roots(n: u64) -> Vec<Complex64> {
    (0..n).map(|e| Complex64::from_polar(1.0, TAU * e as f64 / n as f64)).collect()
}

impl<'a> GaussSums<'a> {
    pub fn new(field: &'a FqField) -> Self {
        let n = field.q() - 1;
        let zeta_n = roots(n);
        let zeta_p = roots(field.p());
        // theta(x) for x = g^s
        let theta: Vec<Complex64> = (0..n).map(|s| zeta_p[field.trace(field.exp(s as i64)) as usize]).collect();
        let sums = (0..n)
            .map(|m| compensated_sum((0..n).map(|s| zeta_n[((m * s) % n) as usize] * theta[s as usize])))
            .collect();
        GaussSums { field, zeta_n, sums }
    }

    pub fn field(&self) -> &FqField {
        self.field
    }

    /// `G(T^m)`.
    pub fn gauss_sum(&self, m: CharacterIndex) -> Complex64 {
        self.sums[m.m() as usize]
    }

    fn g(&self, m: i64) -> Complex64 {
        self.sums[m.rem_euclid(self.sums.len() as i64) as usize]
    }

    /// `T^m(x)` for `x != 0`.
    pub fn character(&self, m: i64, x: FqElement) -> Complex64 {
        let n = self.zeta_n.len() as i64;
        let s = self.field.dlog(x).expect("nonzero argument") as i64;
        self.zeta_n[(m.rem_euclid(n) * s % n) as usize]
    }

    /// The additive character `theta(x) = zeta_p^{tr x}`.
    pub fn theta(&self, x: FqElement) -> Complex64 {
        Complex64::from_polar(1.0, TAU * self.field.trace(x) as f64 / self.field.p() as f64)
    }

    /// `G_k G_{-k} = q T^k(-1)` for `T^k` nontrivial.
    pub fn check_gk_product(&self, k: CharacterIndex, tol: f64) -> Result<FloatCheck> {
        if k.is_trivial() {
            return Err(Error::TrivialCharacter);
        }
        let k = k.m() as i64;
        let lhs = self.g(k) * self.g(-k);
        let rhs = self.character(k, self.field.from_i64(-1)) * self.field.q() as f64;
        Ok(FloatCheck { lhs, rhs, tol })
    }

    /// `theta(alpha) = 1/(q-1) sum_m G_{-m} T^m(alpha)` for `alpha != 0`.
    pub fn check_theta_expansion(&self, alpha: FqElement, tol: f64) -> Result<FloatCheck> {
        if alpha == self.field.zero() {
            return Err(Error::ZeroArgument);
        }
        let n = self.sums.len() as i64;
        let s = compensated_sum((0..n).map(|m| self.g(-m) * self.character(m, alpha)));
        Ok(FloatCheck { lhs: self.theta(alpha), rhs: s / n as f64, tol })
    }

    /// `prod_{chi^m = 1} G(chi psi) = -G(psi^m) psi(m^{-m}) prod_{chi^m = 1} G(chi)`
    /// for `q = 1 mod m`.
    pub fn check_davenport_hasse(&self, m: u64, psi: CharacterIndex, tol: f64) -> Result<FloatCheck> {
        let q = self.field.q();
        if m == 0 || !(q - 1).is_multiple_of(m) {
            return Err(Error::ModulusMismatch { q, m });
        }
        let n = (q - 1) as i64;
        let step = n / m as i64;
        let psi = psi.m() as i64;
        let mut lhs = Complex64::new(1.0, 0.0);
        let mut prod_chi = Complex64::new(1.0, 0.0);
        for c in 0..m as i64 {
            lhs *= self.g(c * step + psi);
            prod_chi *= self.g(c * step);
        }
        // m^{-m} lies in the prime field
        let mm = self.field.pow(self.field.from_i64(m as i64), -(m as i64)).expect("p does not divide m");
        let rhs = -self.g(psi * m as i64) * self.character(psi, mm) * prod_chi;
        Ok(FloatCheck { lhs, rhs, tol })
    }
}

/// `G(T^m)` over `field`.
pub fn gauss_sum(m: CharacterIndex, field: &FqField) -> Complex64 {
    GaussSums::new(field).gauss_sum(m)
}

/// The default tolerance `1e-6 q`.
pub fn default_tolerance(q: u64) -> f64 {
    1e-6 * q as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_character_sum_is_minus_one() {
        for (p, r) in [(5, 1), (7, 1), (3, 2), (5, 2)] {
            let f = FqField::build(p, r).unwrap();
            let g = gauss_sum(CharacterIndex::new(0, &f), &f);
            assert!((g - Complex64::new(-1.0, 0.0)).norm() < 1e-9);
        }
    }

    #[test]
    fn absolute_values() {
        for (p, r) in [(5, 1), (7, 1), (11, 1), (3, 3), (5, 2), (7, 2), (11, 2)] {
            let f = FqField::build(p, r).unwrap();
            let gs = GaussSums::new(&f);
            let q = f.q() as f64;
            for m in 1..f.q() as i64 - 1 {
                let g = gs.gauss_sum(CharacterIndex::new(m, &f));
                assert!((g.norm_sqr() - q).abs() < 1e-6 * q);
                // G(T^{-m}) = T^m(-1) conj(G(T^m))
                let conj = gs.character(m, f.from_i64(-1)) * g.conj();
                assert!((gs.g(-m) - conj).norm() < 1e-6 * q);
            }
        }
    }

    #[test]
    fn four_term_oracle() {
        // p = 5, m = 2: generator 2, T^2(2^s) = (-1)^s.
        let f = FqField::build(5, 1).unwrap();
        let mut direct = Complex64::new(0.0, 0.0);
        for x in 1..5u64 {
            let s = f.dlog(f.from_i64(x as i64)).unwrap();
            let chi = if s.is_multiple_of(2) { 1.0 } else { -1.0 };
            direct += Complex64::from_polar(chi, TAU * x as f64 / 5.0);
        }
        let g = gauss_sum(CharacterIndex::new(2, &f), &f);
        assert!((g - direct).norm() < 1e-12);
        assert!((g.norm_sqr() - 5.0).abs() < 1e-9);
    }

    #[test]
    fn lemma_checks() {
        let f = FqField::build(7, 1).unwrap();
        let gs = GaussSums::new(&f);
        let tol = default_tolerance(7);
        assert!(gs.check_gk_product(CharacterIndex::new(1, &f), tol).unwrap().holds());
        assert!(gs.check_gk_product(CharacterIndex::new(3, &f), tol).unwrap().holds());
        assert_eq!(gs.check_gk_product(CharacterIndex::new(6, &f), tol), Err(Error::TrivialCharacter));
        assert!(gs.check_theta_expansion(f.one(), tol).unwrap().holds());
        assert_eq!(gs.check_theta_expansion(f.zero(), tol), Err(Error::ZeroArgument));
        assert!(gs.check_davenport_hasse(2, CharacterIndex::new(1, &f), tol).unwrap().holds());
        assert!(gs.check_davenport_hasse(3, CharacterIndex::new(1, &f), tol).unwrap().holds());
        assert!(gs.check_davenport_hasse(2, CharacterIndex::new(0, &f), tol).unwrap().holds());
        let f5 = FqField::build(5, 1).unwrap();
        let gs5 = GaussSums::new(&f5);
        assert_eq!(
            gs5.check_davenport_hasse(3, CharacterIndex::new(1, &f5), tol),
            Err(Error::ModulusMismatch { q: 5, m: 3 })
        );
    }

    #[test]
    fn compensated_sum_recovers_cancellation() {
        let terms = [1e16, 1.0, -1e16, 1.0].map(|x| Complex64::new(x, -x));
        assert_eq!(compensated_sum(terms.into_iter()), Complex64::new(2.0, -2.0));
    }

    #[test]
    fn theta_expansion_over_f25() {
        let f = FqField::build(5, 2).unwrap();
        let gs = GaussSums::new(&f);
        for a in f.nonzero_elements() {
            assert!(gs.check_theta_expansion(a, default_tolerance(25)).unwrap().holds());
        }
    }
}
