//! Dedekind sampling and `S_n` certificates.
//!
//! An irreducible monic `f` of degree `n` has Galois group `S_n` as soon as
//! Frobenius at two unramified primes shows an `(n-1)`-cycle and a
//! permutation some power of which is a transposition. A certificate stores
//! both primes, the claimed cycle types, the discriminant and the
//! irreducibility witness, so that [`verify_sn_certificate`] can redo every
//! step without trusting the search.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exact::modp::is_prime_u64;
use crate::exact::ZPoly;
use crate::polyalg::{
    check_irreducibility_witness, cycle_type_mod_p, discriminant, irreducible_over_q, CycleType,
    IrreducibilityVerdict,
};
use crate::{Error, Result};

/// Default upper bound for the prime scan.
pub const DEFAULT_PRIME_BOUND: u64 = 1000;

/// A prime together with the factor degrees of `f` modulo it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeWitness {
    pub prime: u64,
    pub cycle_type: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SnCertificate {
    pub poly: ZPoly,
    pub irreducibility: IrreducibilityVerdict,
    pub discriminant: BigInt,
    /// Cycle type `{1, n-1}`.
    pub ncycle: PrimeWitness,
    /// Exactly one 2 and otherwise odd cycle lengths.
    pub transposition: PrimeWitness,
    /// Lcm of the odd entries of the transposition cycle type.
    pub power: u64,
    pub conclusion: String,
}

impl SnCertificate {
    pub fn degree(&self) -> usize {
        self.poly.deg()
    }
}

pub fn sn_label(n: usize) -> String {
    format!("S_{}", n)
}

/// Frobenius cycle type at `p`, refusing primes that divide `disc(f)`.
pub fn dedekind_sample(f: &ZPoly, p: u64) -> Result<CycleType> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(p));
    }
    let disc = discriminant(f)?;
    sample_unramified(f, &disc, p)
}

fn sample_unramified(f: &ZPoly, disc: &BigInt, p: u64) -> Result<CycleType> {
    if (disc % p).is_zero() {
        return Err(Error::PrimeDividesDiscriminant(p));
    }
    cycle_type_mod_p(f, p)
}

/// Result of [`search_sn_certificate`].
#[derive(Clone, Debug, PartialEq)]
pub enum SearchOutcome {
    Found(SnCertificate),
    NotFound {
        reason: String,
        /// Every prime sampled, in increasing order.
        scanned: Vec<CycleType>,
        /// Primes skipped because they divide the discriminant.
        skipped: Vec<u64>,
    },
}

impl SearchOutcome {
    pub fn certificate(&self) -> Option<&SnCertificate> {
        match self {
            SearchOutcome::Found(c) => Some(c),
            SearchOutcome::NotFound { .. } => None,
        }
    }
}

/// Scan primes up to `prime_bound` for the two Dedekind witnesses, keeping
/// the smallest prime for each pattern.
pub fn search_sn_certificate(f: &ZPoly, prime_bound: u64) -> Result<SearchOutcome> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let n = f.deg();
    if n < 2 {
        return Err(Error::DegreeTooSmall { degree: n, min: 2 });
    }
    let irreducibility = irreducible_over_q(f)?;
    if !irreducibility.irreducible {
        return Ok(SearchOutcome::NotFound {
            reason: "polynomial is reducible over Q".into(),
            scanned: Vec::new(),
            skipped: Vec::new(),
        });
    }
    let disc = discriminant(f)?;
    let mut scanned = Vec::new();
    let mut skipped = Vec::new();
    let mut ncycle: Option<CycleType> = None;
    let mut transposition: Option<CycleType> = None;
    for p in (2..=prime_bound).filter(|&p| is_prime_u64(p)) {
        let ct = match sample_unramified(f, &disc, p) {
            Ok(ct) => ct,
            Err(Error::PrimeDividesDiscriminant(_)) => {
                skipped.push(p);
                continue;
            }
            Err(e) => return Err(e),
        };
        if ncycle.is_none() && ct.is_ncycle_pattern(n) {
            ncycle = Some(ct.clone());
        }
        if transposition.is_none() && ct.is_transposition_pattern() {
            transposition = Some(ct.clone());
        }
        scanned.push(ct);
        if let (Some(a), Some(b)) = (&ncycle, &transposition) {
            return Ok(SearchOutcome::Found(SnCertificate {
                poly: f.clone(),
                irreducibility,
                discriminant: disc,
                ncycle: PrimeWitness {
                    prime: a.prime,
                    cycle_type: a.degrees.clone(),
                },
                power: b.transposition_power(),
                transposition: PrimeWitness {
                    prime: b.prime,
                    cycle_type: b.degrees.clone(),
                },
                conclusion: sn_label(n),
            }));
        }
    }
    let reason = match (&ncycle, &transposition) {
        (None, None) => "no (n-1)-cycle and no transposition pattern",
        (None, Some(_)) => "no (n-1)-cycle pattern",
        _ => "no transposition pattern",
    };
    Ok(SearchOutcome::NotFound {
        reason: format!("{} among primes <= {}", reason, prime_bound),
        scanned,
        skipped,
    })
}

/// Why a certificate was refused.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rejection {
    NotMonic,
    DegreeTooSmall(usize),
    ConclusionMismatch {
        claimed: String,
        expected: String,
    },
    DiscriminantMismatch,
    ZeroDiscriminant,
    NotIrreducible,
    IrreducibilityWitness,
    NotNCycle(Vec<usize>),
    /// Wrong total degree in a claimed cycle type.
    DegreeSum {
        prime: u64,
        sum: usize,
    },
    TwoEvenCycles(Vec<usize>),
    NoEvenCycle(Vec<usize>),
    EvenCycleNotTwo(Vec<usize>),
    PowerMismatch {
        claimed: u64,
        expected: u64,
    },
    NotPrime(u64),
    PrimeDividesDiscriminant(u64),
    CycleTypeMismatch {
        prime: u64,
        claimed: Vec<usize>,
        actual: Vec<usize>,
    },
    NotMinimal {
        prime: u64,
        smaller: u64,
    },
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::NotMonic => write!(f, "polynomial is not monic"),
            Rejection::DegreeTooSmall(n) => write!(f, "degree {} is below 2", n),
            Rejection::ConclusionMismatch { claimed, expected } => {
                write!(
                    f,
                    "conclusion {} does not match degree ({})",
                    claimed, expected
                )
            }
            Rejection::DiscriminantMismatch => write!(f, "discriminant does not match"),
            Rejection::ZeroDiscriminant => write!(f, "discriminant is zero"),
            Rejection::NotIrreducible => write!(f, "irreducibility verdict is not proved"),
            Rejection::IrreducibilityWitness => {
                write!(f, "irreducibility witness does not re-verify")
            }
            Rejection::NotNCycle(ct) => write!(f, "cycle type {:?} is not {{1, n-1}}", ct),
            Rejection::DegreeSum { prime, sum } => {
                write!(f, "cycle type at {} sums to {}, not the degree", prime, sum)
            }
            Rejection::TwoEvenCycles(ct) => {
                write!(f, "cycle type {:?} has two even cycles", ct)
            }
            Rejection::NoEvenCycle(ct) => write!(f, "cycle type {:?} has no 2-cycle", ct),
            Rejection::EvenCycleNotTwo(ct) => {
                write!(f, "cycle type {:?} has an even cycle longer than 2", ct)
            }
            Rejection::PowerMismatch { claimed, expected } => {
                write!(f, "power {} should be {}", claimed, expected)
            }
            Rejection::NotPrime(p) => write!(f, "{} is not prime", p),
            Rejection::PrimeDividesDiscriminant(p) => {
                write!(f, "prime divides discriminant ({})", p)
            }
            Rejection::CycleTypeMismatch {
                prime,
                claimed,
                actual,
            } => write!(
                f,
                "cycle type at {} is {:?}, certificate claims {:?}",
                prime, actual, claimed
            ),
            Rejection::NotMinimal { prime, smaller } => write!(
                f,
                "prime {} is not the first with its pattern ({} qualifies)",
                prime, smaller
            ),
        }
    }
}

fn transposition_shape(ct: &[usize]) -> core::result::Result<(), Rejection> {
    let evens: Vec<usize> = ct.iter().copied().filter(|d| d % 2 == 0).collect();
    match evens.as_slice() {
        [] => Err(Rejection::NoEvenCycle(ct.to_vec())),
        [2] => Ok(()),
        [_] => Err(Rejection::EvenCycleNotTwo(ct.to_vec())),
        _ => Err(Rejection::TwoEvenCycles(ct.to_vec())),
    }
}

/// Recompute every claim of `cert`. Checks run in a fixed order and the
/// first failure is reported.
pub fn verify_sn_certificate(cert: &SnCertificate) -> core::result::Result<(), Rejection> {
    let f = &cert.poly;
    if !f.is_monic() {
        return Err(Rejection::NotMonic);
    }
    let n = f.deg();
    if n < 2 {
        return Err(Rejection::DegreeTooSmall(n));
    }
    if cert.conclusion != sn_label(n) {
        return Err(Rejection::ConclusionMismatch {
            claimed: cert.conclusion.clone(),
            expected: sn_label(n),
        });
    }
    let disc = discriminant(f).map_err(|_| Rejection::DegreeTooSmall(n))?;
    if disc != cert.discriminant {
        return Err(Rejection::DiscriminantMismatch);
    }
    if disc.is_zero() {
        return Err(Rejection::ZeroDiscriminant);
    }
    if !cert.irreducibility.irreducible {
        return Err(Rejection::NotIrreducible);
    }
    if !check_irreducibility_witness(f, cert.irreducibility.method, &cert.irreducibility.witness) {
        return Err(Rejection::IrreducibilityWitness);
    }

    for w in [&cert.ncycle, &cert.transposition] {
        let sum: usize = w.cycle_type.iter().sum();
        if sum != n || w.cycle_type.contains(&0) {
            return Err(Rejection::DegreeSum {
                prime: w.prime,
                sum,
            });
        }
    }
    let mut nc = cert.ncycle.cycle_type.clone();
    nc.sort_unstable();
    if nc != [1, n - 1] {
        return Err(Rejection::NotNCycle(cert.ncycle.cycle_type.clone()));
    }
    transposition_shape(&cert.transposition.cycle_type)?;
    let claimed_t = CycleType {
        degrees: cert.transposition.cycle_type.clone(),
        prime: cert.transposition.prime,
        squarefree: true,
    };
    if claimed_t.transposition_power() != cert.power {
        return Err(Rejection::PowerMismatch {
            claimed: cert.power,
            expected: claimed_t.transposition_power(),
        });
    }

    for w in [&cert.ncycle, &cert.transposition] {
        if !is_prime_u64(w.prime) {
            return Err(Rejection::NotPrime(w.prime));
        }
    }
    for w in [&cert.ncycle, &cert.transposition] {
        if (&disc % w.prime).is_zero() {
            return Err(Rejection::PrimeDividesDiscriminant(w.prime));
        }
    }
    for w in [&cert.ncycle, &cert.transposition] {
        let actual = cycle_type_mod_p(f, w.prime)
            .map_err(|_| Rejection::NotPrime(w.prime))?
            .degrees;
        let mut claimed = w.cycle_type.clone();
        claimed.sort_unstable();
        if actual != claimed {
            return Err(Rejection::CycleTypeMismatch {
                prime: w.prime,
                claimed: w.cycle_type.clone(),
                actual,
            });
        }
    }

    let top = cert.ncycle.prime.max(cert.transposition.prime);
    for q in (2..top).filter(|&q| is_prime_u64(q) && !(&disc % q).is_zero()) {
        let Ok(ct) = cycle_type_mod_p(f, q) else {
            continue;
        };
        if q < cert.ncycle.prime && ct.is_ncycle_pattern(n) {
            return Err(Rejection::NotMinimal {
                prime: cert.ncycle.prime,
                smaller: q,
            });
        }
        if q < cert.transposition.prime && ct.is_transposition_pattern() {
            return Err(Rejection::NotMinimal {
                prime: cert.transposition.prime,
                smaller: q,
            });
        }
    }
    Ok(())
}
