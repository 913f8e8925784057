//! Miller–Rabin for arbitrary-precision integers.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::exact::modp::is_prime_u64;

/// Bases 2..=41 make Miller–Rabin exact below this value
/// (3 317 044 064 679 887 385 961 981).
pub fn deterministic_limit() -> BigUint {
    BigUint::parse_bytes(b"3317044064679887385961981", 10).expect("literal")
}

/// `Some(is_prime)` below [`deterministic_limit`], `None` above it.
pub fn is_prime_big(n: &BigUint) -> Option<bool> {
    if let Some(small) = n.to_u64() {
        return Some(is_prime_u64(small));
    }
    if n >= &deterministic_limit() {
        return None;
    }
    const BASES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
    for b in BASES {
        if (n % b).is_zero() {
            return Some(false);
        }
    }
    let one = BigUint::one();
    let n1 = n - &one;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    'bases: for b in BASES {
        let mut x = BigUint::from(b).modpow(&d, n);
        if x == one || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n1 {
                continue 'bases;
            }
        }
        return Some(false);
    }
    Some(true)
}

/// Probable-prime test with the same bases, for values above the
/// deterministic range.
pub fn is_probable_prime(n: &BigUint) -> bool {
    if let Some(v) = is_prime_big(n) {
        return v;
    }
    if n.is_even() {
        return false;
    }
    let one = BigUint::one();
    let n1 = n - &one;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    'bases: for b in [
        2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
    ] {
        let mut x = BigUint::from(b).modpow(&d, n);
        if x == one || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn large_values() {
        // 2^89 - 1 is a Mersenne prime, 2^67 - 1 is composite.
        let m89 = (BigUint::one() << 89u32) - 1u32;
        assert_eq!(is_prime_big(&m89), None);
        assert!(is_probable_prime(&m89));
        let m67 = (BigUint::one() << 67u32) - 1u32;
        assert_eq!(is_prime_big(&m67), Some(false));
        let p = BigUint::parse_bytes(b"170141183460469231731687303715884105727", 10).unwrap();
        assert!(is_probable_prime(&p));
        // 2^61 - 1 is prime and fits in u64; 10^20 + 39 is the next prime
        // above 10^20.
        assert_eq!(
            is_prime_big(&((BigUint::one() << 61u32) - 1u32)),
            Some(true)
        );
        let q = BigUint::parse_bytes(b"100000000000000000039", 10).unwrap();
        assert_eq!(is_prime_big(&q), Some(true));
        assert_eq!(is_prime_big(&(q + 2u32)), Some(false));
    }
}
