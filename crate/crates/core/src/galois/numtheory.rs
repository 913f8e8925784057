//! Integer factorization, Euler's totient and the prime scans behind the
//! root-tree degree bounds.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{Float, One, ToPrimitive, Zero};

use crate::exact::modp::{is_prime_u64, mul_mod};
use crate::polyalg::primality::{is_prime_big, is_probable_prime};
use crate::{Error, Result};

fn pollard_rho_u64(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = x.abs_diff(y).gcd(&n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

/// Prime factorization of a `u64`, ascending, with exponents.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut primes = Vec::new();
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        while n % p == 0 {
            primes.push(p);
            n /= p;
        }
    }
    let mut stack = Vec::new();
    if n > 1 {
        stack.push(n);
    }
    while let Some(m) = stack.pop() {
        if is_prime_u64(m) {
            primes.push(m);
        } else {
            let d = pollard_rho_u64(m);
            stack.push(d);
            stack.push(m / d);
        }
    }
    primes.sort_unstable();
    let mut out: Vec<(u64, u32)> = Vec::new();
    for p in primes {
        match out.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}

/// Euler's totient.
pub fn totient(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidArgument("totient of 0".into()));
    }
    Ok(factor_u64(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1)))
}

pub fn largest_prime_factor(n: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::InvalidArgument(alloc::format!(
            "{} has no prime factor",
            n
        )));
    }
    Ok(factor_u64(n).last().expect("n >= 2").0)
}

pub fn is_power_of_two(n: u64) -> bool {
    n.is_power_of_two()
}

/// Primes `p <= limit` with `2p + 1` prime.
pub fn sophie_germain_scan(limit: u64) -> Vec<u64> {
    (2..=limit)
        .filter(|&p| is_prime_u64(p) && is_prime_u64(2 * p + 1))
        .collect()
}

/// One row of [`phi_exponent_scan`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhiExponent {
    pub prime: u64,
    pub largest_factor: u64,
    /// `log_p(largest prime factor of p - 1)`.
    pub exponent: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PhiScan {
    pub entries: Vec<PhiExponent>,
    /// Rows with exponent at least [`PHI_EXPONENT_THRESHOLD`].
    pub at_threshold: usize,
}

pub const PHI_EXPONENT_THRESHOLD: f64 = 0.677;

pub fn phi_exponent_scan(limit: u64) -> PhiScan {
    let entries: Vec<PhiExponent> = (3..=limit)
        .filter(|&p| is_prime_u64(p))
        .map(|p| {
            let q = largest_prime_factor(p - 1).expect("p - 1 >= 2");
            PhiExponent {
                prime: p,
                largest_factor: q,
                exponent: Float::ln(q as f64) / Float::ln(p as f64),
            }
        })
        .collect();
    let at_threshold = entries
        .iter()
        .filter(|e| e.exponent >= PHI_EXPONENT_THRESHOLD)
        .count();
    PhiScan {
        entries,
        at_threshold,
    }
}

impl PhiScan {
    pub fn fraction(&self) -> f64 {
        if self.entries.is_empty() {
            0.0
        } else {
            self.at_threshold as f64 / self.entries.len() as f64
        }
    }
}

/// A signed integer split into prime powers, possibly with an unfactored
/// remainder.
#[derive(Clone, Debug, PartialEq)]
pub struct Factored {
    pub sign: Sign,
    pub factors: Vec<(BigUint, u32)>,
    /// Composite cofactor that resisted the budget.
    pub cofactor: Option<BigUint>,
}

impl Factored {
    pub fn is_complete(&self) -> bool {
        self.cofactor.is_none()
    }
}

fn brent_rho(n: &BigUint, c: u64, budget: &mut u64) -> Option<BigUint> {
    let one = BigUint::one();
    let f = |x: &BigUint| (x * x + c) % n;
    let mut y = BigUint::from(2u32);
    let mut r = 1u64;
    let mut q = one.clone();
    let m = 128u64;
    let mut g = one.clone();
    let mut x = y.clone();
    let mut ys = y.clone();
    while g == one {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        while k < r && g == one {
            ys = y.clone();
            for _ in 0..m.min(r - k) {
                y = f(&y);
                let diff = if x > y { &x - &y } else { &y - &x };
                q = (q * diff) % n;
            }
            g = q.gcd(n);
            k += m;
            if *budget < m {
                return None;
            }
            *budget -= m;
        }
        r *= 2;
    }
    if &g == n {
        loop {
            ys = f(&ys);
            let diff = if x > ys { &x - &ys } else { &ys - &x };
            g = diff.gcd(n);
            if g != one {
                break;
            }
        }
    }
    (&g != n).then_some(g)
}

/// Factor `n` with trial division and Brent's rho, spending at most `budget`
/// rho iterations. Large prime factors are accepted on a deterministic test
/// when one applies and on a probable-prime test otherwise.
pub fn factor_bigint(n: &BigInt, mut budget: u64) -> Factored {
    let sign = n.sign();
    let mut m = n.magnitude().clone();
    let mut primes: Vec<BigUint> = Vec::new();
    let mut cofactors: Vec<BigUint> = Vec::new();
    if m.is_zero() {
        return Factored {
            sign,
            factors: Vec::new(),
            cofactor: None,
        };
    }
    let mut d = 2u32;
    while d < 10_000 {
        while (&m % d).is_zero() {
            primes.push(BigUint::from(d));
            m /= d;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    let mut stack = Vec::new();
    if m > BigUint::one() {
        stack.push(m);
    }
    while let Some(x) = stack.pop() {
        if x.to_u64().is_some() {
            for (p, e) in factor_u64(x.to_u64().expect("fits")) {
                for _ in 0..e {
                    primes.push(BigUint::from(p));
                }
            }
            continue;
        }
        if is_prime_big(&x) == Some(true) || (is_prime_big(&x).is_none() && is_probable_prime(&x)) {
            primes.push(x);
            continue;
        }
        let mut split = None;
        for c in 1..=8u64 {
            if let Some(g) = brent_rho(&x, c, &mut budget) {
                split = Some(g);
                break;
            }
            if budget == 0 {
                break;
            }
        }
        match split {
            Some(g) => {
                let other = &x / &g;
                stack.push(g);
                stack.push(other);
            }
            None => cofactors.push(x),
        }
    }
    primes.sort();
    let mut factors: Vec<(BigUint, u32)> = Vec::new();
    for p in primes {
        match factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => factors.push((p, 1)),
        }
    }
    let cofactor =
        (!cofactors.is_empty()).then(|| cofactors.into_iter().fold(BigUint::one(), |a, b| a * b));
    Factored {
        sign,
        factors,
        cofactor,
    }
}

/// `-2^6 * 3^9 * 2341^2 * 2749` style rendering; `None` when incomplete.
pub fn format_factored(f: &Factored) -> Option<alloc::string::String> {
    use alloc::string::ToString;
    if !f.is_complete() {
        return None;
    }
    let mut parts: Vec<alloc::string::String> = f
        .factors
        .iter()
        .map(|(p, e)| {
            if *e == 1 {
                p.to_string()
            } else {
                alloc::format!("{}^{}", p, e)
            }
        })
        .collect();
    if parts.is_empty() {
        parts.push(if f.sign == Sign::NoSign { "0" } else { "1" }.into());
    }
    let body = parts.join(" * ");
    Some(if f.sign == Sign::Minus {
        alloc::format!("-{}", body)
    } else {
        body
    })
}
