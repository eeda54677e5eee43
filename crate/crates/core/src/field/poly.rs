//! Dense polynomials over `F_p`, coefficients low-first.

use crate::arith::{inv_mod, is_prime, prime_factors};

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

/// Remainder of `a` by a nonzero `m`.
fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut a = trim(a.to_vec());
    let m = trim(m.to_vec());
    let dm = m.len() - 1;
    let lead_inv = inv_mod(m[dm], p).expect("leading coefficient is nonzero");
    while a.len() > dm {
        let da = a.len() - 1;
        let c = a[da] * lead_inv % p;
        for i in 0..=dm {
            a[da - dm + i] = (a[da - dm + i] + p - c * m[i] % p) % p;
        }
        a = trim(a);
    }
    a
}

fn mul_mod_poly(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    rem(&prod, m, p)
}

fn pow_mod_poly(base: &[u64], mut e: u128, m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = rem(&[1], m, p);
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod_poly(&acc, &b, m, p);
        }
        e >>= 1;
        if e > 0 {
            b = mul_mod_poly(&b, &b, m, p);
        }
    }
    acc
}

fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// The monic polynomial `T^r + c_{r-1} T^{r-1} + ... + c_0` from its low coefficients.
pub(crate) fn monic(low: &[u64]) -> Vec<u64> {
    let mut f = low.to_vec();
    f.push(1);
    f
}

/// Ben-Or test: `f` of degree `r` is irreducible iff `gcd(f, X^{p^i} - X) = 1`
/// for every `1 <= i <= r/2`.
pub fn is_irreducible(low: &[u64], p: u64) -> bool {
    let f = monic(low);
    let r = low.len();
    let x = [0u64, 1];
    let mut xp = x.to_vec();
    for _ in 1..=r / 2 {
        xp = pow_mod_poly(&xp, p as u128, &f, p);
        let g = gcd(&f, &sub(&xp, &x, p), p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// True when the monic polynomial with low coefficients `low` is irreducible mod `p`
/// and its root `X` has multiplicative order `p^r - 1`.
pub fn is_primitive(low: &[u64], p: u64) -> bool {
    if !is_prime(p) || low.is_empty() || low.iter().any(|&c| c >= p) || low[0] == 0 {
        return false;
    }
    if !is_irreducible(low, p) {
        return false;
    }
    let f = monic(low);
    let order = (p as u128).pow(low.len() as u32) - 1;
    let x = [0u64, 1];
    for l in prime_factors(order as u64) {
        if pow_mod_poly(&x, order / l as u128, &f, p) == [1] {
            return false;
        }
    }
    true
}

/// Monic degree-`r` polynomials in search order: the low coefficient vector read
/// as the base-`p` number `c_0 + c_1 p + ... + c_{r-1} p^{r-1}`, increasing.
pub fn candidate_polys(p: u64, r: u32) -> impl Iterator<Item = Vec<u64>> {
    let count = p.pow(r);
    (0..count).map(move |mut n| {
        let mut low = Vec::with_capacity(r as usize);
        for _ in 0..r {
            low.push(n % p);
            n /= p;
        }
        low
    })
}

/// The first candidate that is irreducible with a primitive root.
pub fn default_defining_poly(p: u64, r: u32) -> Vec<u64> {
    candidate_polys(p, r)
        .find(|low| is_primitive(low, p))
        .expect("a primitive polynomial exists for every degree")
}

/// Powers `X^0, X^1, ..., X^{q-2}` modulo `f`, each as a full length-`r` vector.
pub(crate) fn root_powers(low: &[u64], p: u64) -> Vec<Vec<u64>> {
    let r = low.len();
    let q = p.pow(r as u32);
    let mut out = Vec::with_capacity((q - 1) as usize);
    let mut cur = vec![0u64; r];
    cur[0] = 1;
    for _ in 0..q - 1 {
        out.push(cur.clone());
        // multiply by X: shift up, then reduce T^r = -sum c_i T^i
        let top = cur[r - 1];
        for i in (1..r).rev() {
            cur[i] = cur[i - 1];
        }
        cur[0] = 0;
        if r == 1 {
            cur[0] = (p - low[0]) % p * top % p;
        } else if top != 0 {
            for i in 0..r {
                cur[i] = (cur[i] + p - top * low[i] % p) % p;
            }
        }
    }
    out
}
