//! Polynomials over the prime field `GF(p)` for machine-word primes.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use super::int::residue_u64;
use super::poly::ZPoly;
use crate::{Error, Result};

/// Deterministic Miller–Rabin for `u64`.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Inverse of a nonzero residue modulo a prime.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

/// Dense polynomial over `GF(p)`, coefficients low degree first, each in
/// `[0, p)`, trailing zeros stripped.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl FpPoly {
    /// Builds a polynomial, reducing every coefficient. `p` is trusted to be
    /// prime; use [`mod_reduce`] for checked construction from `Z[x]`.
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut f = FpPoly {
            p,
            coeffs: coeffs.into_iter().map(|c| c % p).collect(),
        };
        f.trim();
        f
    }

    pub fn zero(p: u64) -> Self {
        FpPoly {
            p,
            coeffs: Vec::new(),
        }
    }

    pub fn one(p: u64) -> Self {
        FpPoly::new(p, vec![1])
    }

    pub fn x(p: u64) -> Self {
        FpPoly::new(p, vec![0, 1])
    }

    pub fn from_i64s(p: u64, cs: &[i64]) -> Self {
        FpPoly::new(
            p,
            cs.iter().map(|&c| c.rem_euclid(p as i64) as u64).collect(),
        )
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let p = self.p;
        FpPoly::new(
            p,
            (0..n)
                .map(|i| {
                    let s = self.coeff(i) + o.coeff(i);
                    if s >= p {
                        s - p
                    } else {
                        s
                    }
                })
                .collect(),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        let p = self.p;
        FpPoly::new(p, self.coeffs.iter().map(|&c| (p - c) % p).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return FpPoly::zero(self.p);
        }
        let p = self.p;
        let mut acc = vec![0u128; self.coeffs.len() + o.coeffs.len() - 1];
        let pp = p as u128;
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                acc[i + j] = (acc[i + j] + a as u128 * b as u128) % pp;
            }
        }
        FpPoly::new(p, acc.into_iter().map(|c| c as u64).collect())
    }

    pub fn scale(&self, c: u64) -> Self {
        let p = self.p;
        FpPoly::new(p, self.coeffs.iter().map(|&a| mul_mod(a, c, p)).collect())
    }

    pub fn derivative(&self) -> Self {
        let p = self.p;
        FpPoly::new(
            p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mul_mod(c, i as u64 % p, p))
                .collect(),
        )
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(inv_mod(self.lc(), self.p))
    }

    pub fn divrem(&self, d: &Self) -> Result<(Self, Self)> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let p = self.p;
        let dd = d.deg();
        if self.is_zero() || self.deg() < dd {
            return Ok((FpPoly::zero(p), self.clone()));
        }
        let inv = inv_mod(d.lc(), p);
        let mut r = self.coeffs.clone();
        let mut q = vec![0u64; self.deg() - dd + 1];
        for k in (0..q.len()).rev() {
            let t = mul_mod(r[k + dd], inv, p);
            if t == 0 {
                continue;
            }
            q[k] = t;
            for (j, &dc) in d.coeffs.iter().enumerate() {
                r[k + j] = (r[k + j] + p - mul_mod(t, dc, p)) % p;
            }
        }
        r.truncate(dd);
        Ok((FpPoly::new(p, q), FpPoly::new(p, r)))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).expect("nonzero modulus").1
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s*self + t*o = g`, `g` monic.
    pub fn ext_gcd(&self, o: &Self) -> (Self, Self, Self) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (FpPoly::one(p), FpPoly::zero(p));
        let (mut t0, mut t1) = (FpPoly::zero(p), FpPoly::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1).expect("nonzero");
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = core::mem::replace(&mut r1, r);
            s0 = core::mem::replace(&mut s1, s);
            t0 = core::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = inv_mod(r0.lc(), p);
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    /// `self^e mod m` with a big exponent.
    pub fn pow_mod_big(&self, e: &BigUint, m: &Self) -> Self {
        let p = self.p;
        let mut result = FpPoly::one(p).rem(m);
        let base = self.rem(m);
        for i in (0..e.bits()).rev() {
            result = result.mul(&result).rem(m);
            if e.bit(i) {
                result = result.mul(&base).rem(m);
            }
        }
        result
    }

    pub fn pow_mod(&self, e: u64, m: &Self) -> Self {
        self.pow_mod_big(&BigUint::from(e), m)
    }

    /// Compose `self(g) mod m`.
    pub fn compose_mod(&self, g: &Self, m: &Self) -> Self {
        let p = self.p;
        self.coeffs.iter().rev().fold(FpPoly::zero(p), |acc, &c| {
            acc.mul(g).add(&FpPoly::new(p, vec![c])).rem(m)
        })
    }

    pub fn eval(&self, x: u64) -> u64 {
        let p = self.p;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| (mul_mod(acc, x, p) + c) % p)
    }

    /// Irreducibility over `GF(p)` via Rabin's test.
    pub fn is_irreducible(&self) -> bool {
        let n = self.deg();
        if self.is_zero() || n == 0 {
            return false;
        }
        if n == 1 {
            return true;
        }
        let f = self.monic();
        let p = self.p;
        let x = FpPoly::x(p);
        let frob = x.pow_mod(p, &f);
        // x^(p^n) == x
        let mut cur = x.clone();
        let mut powers = Vec::with_capacity(n + 1);
        powers.push(cur.clone());
        for _ in 0..n {
            cur = cur.compose_mod(&frob, &f);
            powers.push(cur.clone());
        }
        if powers[n] != x.rem(&f) {
            return false;
        }
        let mut m = n;
        let mut primes = Vec::new();
        let mut d = 2;
        while d * d <= m {
            if m % d == 0 {
                primes.push(d);
                while m % d == 0 {
                    m /= d;
                }
            }
            d += 1;
        }
        if m > 1 {
            primes.push(m);
        }
        primes.into_iter().all(|q| {
            let h = powers[n / q].sub(&x);
            f.gcd(&h).is_one()
        })
    }
}

impl fmt::Debug for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} mod {}", self.coeffs, self.p)
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if c != 1 || i == 0 {
                write!(f, "{}", c)?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{}", i)?,
            }
        }
        Ok(())
    }
}

/// Reduction of an integer polynomial modulo a prime.
#[derive(Clone, Debug, PartialEq)]
pub struct Reduced {
    pub poly: FpPoly,
    /// The leading coefficient vanished, so the degree dropped.
    pub degree_dropped: bool,
}

pub fn mod_reduce(f: &ZPoly, p: u64) -> Result<Reduced> {
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(p));
    }
    let poly = FpPoly::new(p, f.coeffs().iter().map(|c| residue_u64(c, p)).collect());
    let degree_dropped = !f.is_zero() && (poly.is_zero() || poly.deg() < f.deg());
    Ok(Reduced {
        poly,
        degree_dropped,
    })
}

/// Reduction for callers that require the degree to be preserved.
pub fn reduce_keep_degree(f: &ZPoly, p: u64) -> Result<FpPoly> {
    let r = mod_reduce(f, p)?;
    if r.poly.is_zero() {
        return Err(Error::VanishesModP(p));
    }
    if f.leading().is_zero() || r.degree_dropped {
        return Err(Error::InvalidArgument(alloc::format!(
            "{} divides the leading coefficient",
            p
        )));
    }
    Ok(r.poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..40).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(is_prime_u64(18446744073709551557));
        assert!(!is_prime_u64(3215031751));
    }

    #[test]
    fn reduce_examples() {
        let r = mod_reduce(&ZPoly::from_i64s(&[-1, 0, 1]), 2).unwrap();
        assert_eq!(r.poly, FpPoly::from_i64s(2, &[1, 0, 1]));
        assert!(!r.degree_dropped);
        let r = mod_reduce(&ZPoly::from_i64s(&[3, 3]), 3).unwrap();
        assert!(r.poly.is_zero());
        assert!(r.degree_dropped);
        assert_eq!(
            mod_reduce(&ZPoly::from_i64s(&[1]), 4),
            Err(Error::NotPrime(4))
        );
    }

    #[test]
    fn h_mod_7_keeps_degree() {
        let h = ZPoly::from_i64s(&[162, -432, 504, -299, 60, 1]);
        let r = mod_reduce(&h, 7).unwrap();
        assert_eq!(r.poly.deg(), 5);
        assert!(!r.degree_dropped);
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = FpPoly::from_i64s(13, &[1, 2, 3, 4]);
        let b = FpPoly::from_i64s(13, &[5, 0, 1]);
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
        assert!(g.is_one());
    }

    #[test]
    fn rabin_irreducibility() {
        assert!(FpPoly::from_i64s(7, &[1, 1, 6, 3, 1]).is_irreducible());
        assert!(!FpPoly::from_i64s(2, &[1, 0, 1]).is_irreducible());
        assert!(FpPoly::from_i64s(2, &[1, 1, 1]).is_irreducible());
    }
}
