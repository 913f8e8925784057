//! Coefficient transforms: reversal with scaling, shifts, dilations and
//! power substitution, plus the monic-associate construction built on them.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::{Coeff, ExactDiv, Poly, ZPoly};
use crate::{Error, Result};

/// A transform applied to a univariate polynomial.
#[derive(Clone, Debug, PartialEq)]
pub enum Transform<R> {
    /// `x^n f(c/x) / s`. Roots map by `r -> c/r`.
    ReverseScale { n: usize, c: R, s: R },
    /// `f(x + c)`.
    Shift(R),
    /// `f(c x)`.
    Dilate(R),
    /// `f(x) = g(x^k)` becomes `g`.
    PowerSubstitute(usize),
    /// `f(a x + b)`.
    ComposeLinear { a: R, b: R },
}

pub fn apply<R: ExactDiv>(f: &Poly<R>, t: &Transform<R>) -> Result<Poly<R>> {
    match t {
        Transform::ReverseScale { n, c, s } => reverse_scale(f, *n, c, s),
        Transform::Shift(c) => Ok(f.compose(&Poly::new(alloc::vec![c.clone(), R::one()]))),
        Transform::Dilate(c) => Ok(dilate(f, c)),
        Transform::PowerSubstitute(k) => power_substitute(f, *k),
        Transform::ComposeLinear { a, b } => {
            Ok(f.compose(&Poly::new(alloc::vec![b.clone(), a.clone()])))
        }
    }
}

/// `f(c x)`, computed coefficientwise.
pub fn dilate<R: Coeff>(f: &Poly<R>, c: &R) -> Poly<R> {
    let mut pw = R::one();
    let mut out = Vec::with_capacity(f.coeffs().len());
    for a in f.coeffs() {
        out.push(a.clone() * pw.clone());
        pw = pw * c.clone();
    }
    Poly::new(out)
}

/// `x^n f(c/x) / s`. Requires `n >= deg f` and `s` dividing every
/// coefficient of the reversed polynomial.
pub fn reverse_scale<R: ExactDiv>(f: &Poly<R>, n: usize, c: &R, s: &R) -> Result<Poly<R>> {
    if f.deg() > n {
        return Err(Error::InvalidTransform(format!(
            "reversal length {} is below the degree {}",
            n,
            f.deg()
        )));
    }
    if s.is_zero() {
        return Err(Error::InvalidTransform("zero divisor".into()));
    }
    let mut out = alloc::vec![R::zero(); n + 1];
    let mut pw = R::one();
    for i in 0..=n {
        out[n - i] = f.coeff(i) * pw.clone();
        pw = pw * c.clone();
    }
    Poly::new(out)
        .div_scalar_exact(s)
        .ok_or_else(|| Error::InvalidTransform("divisor does not divide every coefficient".into()))
}

/// `g` with `f(x) = g(x^k)`.
pub fn power_substitute<R: Coeff>(f: &Poly<R>, k: usize) -> Result<Poly<R>> {
    if k == 0 {
        return Err(Error::InvalidTransform("exponent 0".into()));
    }
    let mut out = Vec::new();
    for (i, c) in f.coeffs().iter().enumerate() {
        if i % k == 0 {
            out.push(c.clone());
        } else if !c.is_zero() {
            return Err(Error::InvalidTransform(format!(
                "exponent {} is not a multiple of {}",
                i, k
            )));
        }
    }
    Ok(Poly::new(out))
}

/// Largest `k` such that `f` only uses exponents divisible by `k`.
pub fn power_gcd<R: Coeff>(f: &Poly<R>) -> usize {
    f.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .fold(0usize, |g, (i, _)| g.gcd(&i))
}

/// How a non-monic integer polynomial is turned into a monic one with the
/// same splitting field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonicStrategy {
    /// `x^n f(c/x) / a0` with the smallest positive `c` making the result
    /// integral.
    MinimalScale,
    /// `x^n f(|a0|/x) / a0` (or `c = 1` when `a0 = ±1`).
    ConstantScale,
}

/// A monic associate and the reversal that produced it, if any.
#[derive(Clone, Debug, PartialEq)]
pub struct MonicAssociate {
    pub poly: ZPoly,
    /// `(n, c, s)` of the reversal; `None` when the input was monic.
    pub reversal: Option<(usize, BigInt, BigInt)>,
}

pub fn monic_associate(f: &ZPoly, strategy: MonicStrategy) -> Result<MonicAssociate> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_monic() {
        return Ok(MonicAssociate {
            poly: f.clone(),
            reversal: None,
        });
    }
    if f.leading() == -BigInt::one() {
        return Ok(MonicAssociate {
            poly: -f,
            reversal: None,
        });
    }
    let a0 = f.coeff(0);
    if a0.is_zero() {
        return Err(Error::InvalidTransform(
            "zero constant term has no reversal".into(),
        ));
    }
    let n = f.deg();
    let c = match strategy {
        MonicStrategy::ConstantScale => a0.abs(),
        MonicStrategy::MinimalScale => minimal_scale(f),
    };
    let poly = reverse_scale(f, n, &c, &a0)?;
    debug_assert!(poly.is_monic());
    Ok(MonicAssociate {
        poly,
        reversal: Some((n, c, a0)),
    })
}

/// Smallest `c > 0` with `a0 | a_i c^i` for every `i >= 1`.
fn minimal_scale(f: &ZPoly) -> BigInt {
    let a0 = f.coeff(0).abs();
    let (primes, rest) = trial_factor(&a0);
    let mut c = BigInt::one();
    for (q, e) in primes {
        let qb = BigInt::from(q);
        let mut need = 0u32;
        for (i, a) in f.coeffs().iter().enumerate().skip(1) {
            if a.is_zero() {
                continue;
            }
            let v = valuation(a, &qb).min(e);
            let k = (e - v).div_ceil(i as u32);
            need = need.max(k);
        }
        c *= qb.pow(need);
    }
    // An unfactored cofactor is treated as a single block; the result stays
    // integral but may not be minimal.
    c * rest
}

fn valuation(a: &BigInt, q: &BigInt) -> u32 {
    let mut v = 0;
    let mut a = a.clone();
    while !a.is_zero() && a.is_multiple_of(q) {
        a /= q;
        v += 1;
    }
    v
}

/// Trial division by primes below `10^6`; returns the factored part and the
/// leftover cofactor.
fn trial_factor(n: &BigInt) -> (Vec<(u64, u32)>, BigInt) {
    let mut n = n.clone();
    let mut out = Vec::new();
    let mut d = 2u64;
    while d < 1_000_000 {
        if n.to_u64().is_some_and(|m| d.saturating_mul(d) > m) {
            break;
        }
        let db = BigInt::from(d);
        let mut e = 0;
        while n.is_multiple_of(&db) {
            n /= &db;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if let Some(m) = n.to_u64() {
        if m > 1 && m < 1_000_000u64.pow(2) {
            out.push((m, 1));
            return (out, BigInt::one());
        }
    }
    (out, n)
}
