//! Property tests for the polynomial kernel, factorization, resultants and
//! the number theory behind the degree bounds.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use galoisdraw_core::exact::int::{squarefree_part, z_divrem};
use galoisdraw_core::exact::{mod_reduce, FpPoly, QPoly, ZPoly};
use galoisdraw_core::galois::{sophie_germain_scan, totient};
use galoisdraw_core::polyalg::{
    discriminant, factor_fp, factor_mod_p, factor_over_z, resultant, DEFAULT_SEED,
};

const PRIMES: [u64; 8] = [2, 3, 5, 7, 13, 101, 7919, 1_000_000_007];

fn zpoly(max_deg: usize, bound: i64) -> impl Strategy<Value = ZPoly> {
    prop::collection::vec(-bound..=bound, 1..=max_deg + 1).prop_map(|v| ZPoly::from_i64s(&v))
}

fn nonzero_zpoly(max_deg: usize, bound: i64) -> impl Strategy<Value = ZPoly> {
    zpoly(max_deg, bound).prop_filter("nonzero", |f| !f.is_zero())
}

fn nonconstant(max_deg: usize, bound: i64) -> impl Strategy<Value = ZPoly> {
    zpoly(max_deg, bound).prop_filter("nonconstant", |f| f.degree().unwrap_or(0) >= 1)
}

fn to_q(f: &ZPoly) -> QPoly {
    f.map(|c| BigRational::from_integer(c.clone()))
}

fn red(f: &ZPoly, p: u64) -> FpPoly {
    mod_reduce(f, p).unwrap().poly
}

/// `c * prod (x - r)`.
fn from_roots(c: i64, roots: &[i64]) -> ZPoly {
    roots.iter().fold(ZPoly::from_i64s(&[c]), |acc, &r| {
        &acc * &ZPoly::from_i64s(&[-r, 1])
    })
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn is_prime_oracle(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn integer_ring_axioms(a in zpoly(6, 50), b in zpoly(6, 50), c in zpoly(6, 50)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &ZPoly::zero(), a.clone());
        prop_assert_eq!(&a * &ZPoly::constant(BigInt::one()), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn rational_division_with_remainder(a in zpoly(9, 60), b in nonzero_zpoly(5, 60)) {
        let (a, b) = (to_q(&a), to_q(&b));
        let (q, r) = a.divrem(&b);
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.deg() < b.deg());
    }

    #[test]
    fn integer_division_by_monic(a in zpoly(9, 60), b in zpoly(4, 60)) {
        let mut cs = b.coeffs().to_vec();
        cs.push(BigInt::one());
        let b = ZPoly::new(cs);
        let d = z_divrem(&a, &b).unwrap();
        prop_assert!(d.pseudo.is_none());
        prop_assert_eq!(&(&d.quotient * &b) + &d.remainder, a);
        prop_assert!(d.remainder.is_zero() || d.remainder.deg() < b.deg());
    }

    #[test]
    fn division_mod_p(a in zpoly(9, 1000), b in zpoly(5, 1000), i in 0usize..8) {
        let p = PRIMES[i];
        let (fa, fb) = (red(&a, p), red(&b, p));
        prop_assume!(!fb.is_zero());
        let (q, r) = fa.divrem(&fb).unwrap();
        prop_assert_eq!(q.mul(&fb).add(&r), fa);
        prop_assert!(r.is_zero() || r.deg() < fb.deg());
    }

    #[test]
    fn reduction_is_a_ring_homomorphism(a in zpoly(7, 1_000_000), b in zpoly(7, 1_000_000), i in 0usize..8) {
        let p = PRIMES[i];
        prop_assert_eq!(red(&(&a * &b), p), red(&a, p).mul(&red(&b, p)));
        prop_assert_eq!(red(&(&a + &b), p), red(&a, p).add(&red(&b, p)));
        prop_assert_eq!(red(&(&a - &b), p), red(&a, p).sub(&red(&b, p)));
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(a in zpoly(7, 1000), b in zpoly(7, 1000), k in -100i64..=100) {
        let k = BigInt::from(k);
        prop_assert_eq!((&a * &b).eval(&k), a.eval(&k) * b.eval(&k));
        prop_assert_eq!((&a + &b).eval(&k), a.eval(&k) + b.eval(&k));
        prop_assert_eq!(a.compose(&b).eval(&k), a.eval(&b.eval(&k)));
    }

    #[test]
    fn discriminant_of_planted_roots(c in prop_oneof![-6i64..=-1, 1i64..=6],
                                     roots in prop::collection::vec(-30i64..=30, 2..=6)) {
        let f = from_roots(c, &roots);
        let n = roots.len();
        let mut want = num_traits::pow(BigInt::from(c), 2 * n - 2);
        for i in 0..n {
            for j in i + 1..n {
                want *= BigInt::from(roots[i] - roots[j]).pow(2);
            }
        }
        prop_assert_eq!(discriminant(&f).unwrap(), want);
    }

    #[test]
    fn resultant_of_planted_roots(a in prop::collection::vec(-20i64..=20, 1..=5),
                                  b in prop::collection::vec(-20i64..=20, 1..=5)) {
        let (f, g) = (from_roots(1, &a), from_roots(1, &b));
        let want = a.iter().flat_map(|x| b.iter().map(move |y| BigInt::from(x - y))).product::<BigInt>();
        prop_assert_eq!(resultant(&f, &g).unwrap(), want);
    }

    #[test]
    fn resultant_vanishes_on_common_factor(h in nonconstant(3, 20), a in nonzero_zpoly(3, 20), b in nonzero_zpoly(3, 20)) {
        let (f, g) = (&h * &a, &h * &b);
        prop_assert!(resultant(&f, &g).unwrap().is_zero());
        prop_assert!(discriminant(&(&h * &h)).unwrap().is_zero());
    }

    #[test]
    fn factor_product_over_z(parts in prop::collection::vec(nonconstant(3, 9), 1..=3), unit in 1i64..=6) {
        let f = parts.iter().fold(ZPoly::from_i64s(&[unit]), |acc, g| &acc * g);
        let fl = factor_over_z(&f).unwrap();
        prop_assert_eq!(fl.expand_z(), f.clone());
        for (g, _) in &fl.factors {
            prop_assert!(g.deg() >= 1);
        }
        // Every factor divides f and the squarefree part has the same roots.
        let sq = squarefree_part(&f);
        for (g, _) in &fl.factors {
            prop_assert!(z_divrem(&sq, g).unwrap().remainder.is_zero());
        }
    }

    #[test]
    fn factor_product_mod_p(f in nonconstant(10, 1000), i in 0usize..7, seed in any::<u64>()) {
        let p = PRIMES[i];
        let fp = red(&f, p);
        prop_assume!(fp.degree().unwrap_or(0) >= 1);
        let fl = factor_fp(&fp, seed).unwrap();
        prop_assert_eq!(fl.expand_fp(p), fp.clone());
        for (g, _) in &fl.factors {
            prop_assert!(g.is_irreducible());
            prop_assert_eq!(g.lc(), 1);
        }
    }

    #[test]
    fn totient_is_multiplicative(a in 1u64..3000, b in 1u64..3000) {
        prop_assume!(gcd(a, b) == 1);
        let count = |n: u64| (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64;
        prop_assert_eq!(totient(a).unwrap(), count(a));
        prop_assert_eq!(totient(a * b).unwrap(), totient(a).unwrap() * totient(b).unwrap());
    }

    #[test]
    fn sophie_germain_scan_matches_trial_division(limit in 0u64..3000) {
        let want: Vec<u64> = (0..=limit)
            .filter(|&p| is_prime_oracle(p) && is_prime_oracle(2 * p + 1))
            .collect();
        prop_assert_eq!(sophie_germain_scan(limit), want);
    }
}

#[test]
fn seeded_factorizations_agree() {
    let h = ZPoly::from_i64s(&[162, -432, 504, -299, 60, 1]);
    for p in [5u64, 7, 11, 13] {
        let a = factor_mod_p(&h, p, DEFAULT_SEED).unwrap();
        let b = factor_mod_p(&h, p, 12345).unwrap();
        assert_eq!(a, b);
    }
}
