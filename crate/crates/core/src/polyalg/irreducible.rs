//! Irreducibility over `Q`, tried by a chain of increasingly expensive
//! tests; the first conclusive one wins and carries its witness.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::finite::degree_pattern;
use super::primality::is_prime_big;
use super::zassenhaus::{factor_over_z, is_good_prime, DEGREE_LIMIT};
use super::{CycleType, FactorList};
use crate::exact::int::{primitive_part, rational_primitive};
use crate::exact::modp::is_prime_u64;
use crate::exact::{QPoly, ZPoly};
use crate::{Error, Result};

/// Integers probed by the Stäckel step of [`irreducible_over_q`].
pub const STACKEL_RANGE: (i64, i64) = (-100, 100);
/// Primes probed by the modular steps of [`irreducible_over_q`].
pub const PRIME_SCAN_LIMIT: u64 = 2000;
/// Rational-root search only runs when both end coefficients are at most
/// this large in absolute value.
const ROOT_TEST_LIMIT: u64 = 1_000_000_000_000;
const ROOT_CANDIDATE_LIMIT: usize = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IrreducibilityMethod {
    /// Degree one.
    Linear,
    RationalRoot,
    Stackel,
    SinglePrime,
    DegreeSet,
    FullFactorization,
}

impl IrreducibilityMethod {
    pub fn name(self) -> &'static str {
        match self {
            IrreducibilityMethod::Linear => "linear",
            IrreducibilityMethod::RationalRoot => "rational-root",
            IrreducibilityMethod::Stackel => "stackel",
            IrreducibilityMethod::SinglePrime => "single-prime",
            IrreducibilityMethod::DegreeSet => "degree-set-intersection",
            IrreducibilityMethod::FullFactorization => "full-factorization",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        [
            IrreducibilityMethod::Linear,
            IrreducibilityMethod::RationalRoot,
            IrreducibilityMethod::Stackel,
            IrreducibilityMethod::SinglePrime,
            IrreducibilityMethod::DegreeSet,
            IrreducibilityMethod::FullFactorization,
        ]
        .into_iter()
        .find(|m| m.name() == s)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum IrreducibilityWitness {
    None,
    /// Degree at most three and no rational root.
    NoRationalRoot,
    /// A proper factor (reducible verdicts).
    Factor(ZPoly),
    /// Integers where `|f(k)|` is prime.
    StackelPoints(Vec<i64>),
    /// `f` is irreducible modulo this prime.
    Prime(u64),
    /// Factor degree patterns whose possible subset sums intersect to
    /// `{0, n}`.
    Patterns(Vec<CycleType>),
    Factorization(FactorList<BigInt, ZPoly>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct IrreducibilityVerdict {
    pub irreducible: bool,
    pub method: IrreducibilityMethod,
    pub witness: IrreducibilityWitness,
}

/// Result of [`stackel_irreducible`].
#[derive(Clone, Debug, PartialEq)]
pub struct StackelVerdict {
    pub proved: bool,
    pub witnesses: Vec<i64>,
}

/// Every `k` in `lo..=hi` with `|f(k)|` provably prime.
pub fn prime_value_points(f: &ZPoly, lo: i64, hi: i64) -> Vec<i64> {
    (lo..=hi)
        .filter(|&k| {
            let v = f.eval(&BigInt::from(k));
            is_prime_big(v.magnitude()) == Some(true)
        })
        .collect()
}

/// Stäckel's criterion: prime absolute values at `2n + 1` integers prove
/// irreducibility. Stops at the first `2n + 1` witnesses.
pub fn stackel_irreducible(f: &ZPoly, lo: i64, hi: i64) -> StackelVerdict {
    let need = 2 * f.deg() + 1;
    let mut witnesses = Vec::new();
    if f.deg() == 0 {
        return StackelVerdict {
            proved: false,
            witnesses,
        };
    }
    for k in lo..=hi {
        let v = f.eval(&BigInt::from(k));
        if is_prime_big(v.magnitude()) == Some(true) {
            witnesses.push(k);
            if witnesses.len() == need {
                return StackelVerdict {
                    proved: true,
                    witnesses,
                };
            }
        }
    }
    StackelVerdict {
        proved: false,
        witnesses,
    }
}

fn small_divisors(n: &BigInt) -> Option<Vec<u64>> {
    let m = n.abs().to_u64()?;
    if m == 0 || m > ROOT_TEST_LIMIT {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= m {
        if m % d == 0 {
            out.push(d);
            if d * d != m {
                out.push(m / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    Some(out)
}

/// First rational root `d/e` in the canonical candidate order, if the search
/// is affordable. `Some(None)` means the search ran and found nothing.
fn rational_root(f: &ZPoly) -> Option<Option<BigRational>> {
    if f.coeff(0).is_zero() {
        return Some(Some(BigRational::zero()));
    }
    let nums = small_divisors(&f.coeff(0))?;
    let dens = small_divisors(&f.leading())?;
    if nums.len() * dens.len() > ROOT_CANDIDATE_LIMIT {
        return None;
    }
    let n = f.deg();
    for &d in &nums {
        for &e in &dens {
            if d.gcd(&e) != 1 {
                continue;
            }
            for sign in [1i64, -1] {
                let num = BigInt::from(d) * sign;
                let den = BigInt::from(e);
                // e^n f(d/e) as an integer.
                let mut acc = BigInt::zero();
                let mut dp = BigInt::one();
                let mut ep = den.pow(n as u32);
                for c in f.coeffs() {
                    acc += c * &dp * &ep;
                    dp *= &num;
                    ep = ep.div_floor(&den);
                }
                if acc.is_zero() {
                    return Some(Some(BigRational::new(num, den)));
                }
            }
        }
    }
    Some(None)
}

/// The linear factor `e x - d` vanishing at `r = d/e`.
fn linear_factor(r: &BigRational) -> ZPoly {
    ZPoly::new(vec![-r.numer().clone(), r.denom().clone()])
}

/// Scan good primes; returns the first conclusive modular verdict.
fn prime_scan(f: &ZPoly) -> Option<IrreducibilityVerdict> {
    let n = f.deg();
    let mut possible = vec![true; n + 1];
    let mut used = Vec::new();
    for p in 2..=PRIME_SCAN_LIMIT {
        if !is_prime_u64(p) {
            continue;
        }
        let Some(fp) = is_good_prime(f, p) else {
            continue;
        };
        let degrees = degree_pattern(&fp.monic());
        if degrees.len() == 1 {
            return Some(IrreducibilityVerdict {
                irreducible: true,
                method: IrreducibilityMethod::SinglePrime,
                witness: IrreducibilityWitness::Prime(p),
            });
        }
        let mut sums = vec![false; n + 1];
        sums[0] = true;
        for &d in &degrees {
            for s in (d..=n).rev() {
                if sums[s - d] {
                    sums[s] = true;
                }
            }
        }
        let before = possible.iter().filter(|&&b| b).count();
        for (slot, s) in possible.iter_mut().zip(&sums) {
            *slot &= *s;
        }
        if possible.iter().filter(|&&b| b).count() < before {
            used.push(CycleType {
                degrees,
                prime: p,
                squarefree: true,
            });
        }
        if possible[1..n].iter().all(|b| !b) {
            return Some(IrreducibilityVerdict {
                irreducible: true,
                method: IrreducibilityMethod::DegreeSet,
                witness: IrreducibilityWitness::Patterns(used),
            });
        }
    }
    None
}

/// Decide irreducibility of an integer polynomial over `Q`.
pub fn irreducible_over_q(f: &ZPoly) -> Result<IrreducibilityVerdict> {
    let n = f.deg();
    if f.is_zero() || n == 0 {
        return Err(Error::DegreeTooSmall { degree: n, min: 1 });
    }
    let f = primitive_part(f);
    if n == 1 {
        return Ok(IrreducibilityVerdict {
            irreducible: true,
            method: IrreducibilityMethod::Linear,
            witness: IrreducibilityWitness::None,
        });
    }
    if let Some(found) = rational_root(&f) {
        match found {
            Some(r) => {
                return Ok(IrreducibilityVerdict {
                    irreducible: false,
                    method: IrreducibilityMethod::RationalRoot,
                    witness: IrreducibilityWitness::Factor(linear_factor(&r)),
                })
            }
            None if n <= 3 => {
                return Ok(IrreducibilityVerdict {
                    irreducible: true,
                    method: IrreducibilityMethod::RationalRoot,
                    witness: IrreducibilityWitness::NoRationalRoot,
                })
            }
            None => {}
        }
    }
    let st = stackel_irreducible(&f, STACKEL_RANGE.0, STACKEL_RANGE.1);
    if st.proved {
        return Ok(IrreducibilityVerdict {
            irreducible: true,
            method: IrreducibilityMethod::Stackel,
            witness: IrreducibilityWitness::StackelPoints(st.witnesses),
        });
    }
    if let Some(v) = prime_scan(&f) {
        return Ok(v);
    }
    if n > DEGREE_LIMIT {
        return Err(Error::Undetermined);
    }
    let fl = factor_over_z(&f)?;
    let irreducible = fl.factors.len() == 1 && fl.factors[0].1 == 1;
    let witness = if irreducible {
        IrreducibilityWitness::Factorization(fl)
    } else {
        IrreducibilityWitness::Factor(fl.factors[0].0.clone())
    };
    Ok(IrreducibilityVerdict {
        irreducible,
        method: IrreducibilityMethod::FullFactorization,
        witness,
    })
}

/// [`irreducible_over_q`] for a rational polynomial.
pub fn irreducible_over_q_rat(f: &QPoly) -> Result<IrreducibilityVerdict> {
    let (_, prim) = rational_primitive(f)?;
    irreducible_over_q(&prim)
}

/// Re-check a claimed irreducibility witness for `f` from scratch.
pub fn check_irreducibility_witness(
    f: &ZPoly,
    method: IrreducibilityMethod,
    witness: &IrreducibilityWitness,
) -> bool {
    let n = f.deg();
    match (method, witness) {
        (IrreducibilityMethod::Linear, _) => n == 1,
        (IrreducibilityMethod::RationalRoot, IrreducibilityWitness::NoRationalRoot) => {
            (2..=3).contains(&n) && rational_root(f) == Some(None)
        }
        (IrreducibilityMethod::Stackel, IrreducibilityWitness::StackelPoints(ks)) => {
            let mut sorted = ks.clone();
            sorted.sort_unstable();
            sorted.dedup();
            sorted.len() >= 2 * n + 1
                && n >= 1
                && sorted
                    .iter()
                    .all(|&k| is_prime_big(f.eval(&BigInt::from(k)).magnitude()) == Some(true))
        }
        (IrreducibilityMethod::SinglePrime, IrreducibilityWitness::Prime(p)) => {
            is_good_prime(f, *p).is_some_and(|fp| fp.is_irreducible())
        }
        (IrreducibilityMethod::DegreeSet, IrreducibilityWitness::Patterns(cts)) => {
            let mut possible = vec![true; n + 1];
            for ct in cts {
                let Some(fp) = is_good_prime(f, ct.prime) else {
                    return false;
                };
                if degree_pattern(&fp.monic()) != ct.degrees {
                    return false;
                }
                let mut sums = vec![false; n + 1];
                sums[0] = true;
                for &d in &ct.degrees {
                    for s in (d..=n).rev() {
                        if sums[s - d] {
                            sums[s] = true;
                        }
                    }
                }
                for (slot, s) in possible.iter_mut().zip(&sums) {
                    *slot &= *s;
                }
            }
            n >= 2 && possible[1..n].iter().all(|b| !b)
        }
        (IrreducibilityMethod::FullFactorization, IrreducibilityWitness::Factorization(_)) => {
            factor_over_z(f).is_ok_and(|fl| fl.factors.len() == 1 && fl.factors[0].1 == 1)
        }
        _ => false,
    }
}
