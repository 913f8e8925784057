//! Factorization over `GF(p)`: squarefree decomposition, distinct-degree
//! splitting and Cantor–Zassenhaus equal-degree splitting.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::One;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use super::{CycleType, FactorList};
use crate::exact::modp::{mod_reduce, FpPoly};
use crate::exact::ZPoly;
use crate::{Error, Result};

/// Default seed for the equal-degree splitting.
pub const DEFAULT_SEED: u64 = 0x5EED;

/// Squarefree decomposition of a monic polynomial: `f = prod g_i^{m_i}`.
pub fn squarefree_mod_p(f: &FpPoly) -> Vec<(FpPoly, u32)> {
    let p = f.modulus();
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    let df = f.derivative();
    if df.is_zero() {
        for (g, m) in squarefree_mod_p(&pth_root(f)) {
            out.push((g, m * p as u32));
        }
        return out;
    }
    let mut c = f.gcd(&df);
    let mut w = f.divrem(&c).expect("nonzero").0;
    let mut i = 1u32;
    while w.deg() > 0 {
        let y = w.gcd(&c);
        let z = w.divrem(&y).expect("nonzero").0;
        if z.deg() > 0 {
            out.push((z.monic(), i));
        }
        i += 1;
        w = y;
        c = c.divrem(&w).expect("nonzero").0;
    }
    if c.deg() > 0 {
        for (g, m) in squarefree_mod_p(&pth_root(&c)) {
            out.push((g, m * p as u32));
        }
    }
    out
}

/// `g` with `g^p = f`, for `f` whose derivative vanishes.
fn pth_root(f: &FpPoly) -> FpPoly {
    let p = f.modulus() as usize;
    FpPoly::new(f.modulus(), f.coeffs().iter().step_by(p).copied().collect())
}

/// Distinct-degree factorization of a monic squarefree polynomial: pairs
/// `(g, d)` where `g` is the product of all irreducible factors of degree `d`.
pub fn distinct_degree(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    let p = f.modulus();
    let x = FpPoly::x(p);
    let mut out = Vec::new();
    let mut f = f.monic();
    let mut h = x.rem(&f);
    let mut d = 1;
    while f.deg() >= 2 * d {
        h = h.pow_mod(p, &f);
        let g = f.gcd(&h.sub(&x));
        if g.deg() > 0 {
            f = f.divrem(&g).expect("nonzero").0;
            h = h.rem(&f);
            out.push((g, d));
        }
        d += 1;
    }
    if f.deg() > 0 {
        let n = f.deg();
        out.push((f, n));
    }
    out
}

fn random_poly(p: u64, deg_bound: usize, rng: &mut ChaCha8Rng) -> FpPoly {
    FpPoly::new(p, (0..deg_bound).map(|_| rng.next_u64() % p).collect())
}

/// Split a monic squarefree product of irreducibles all of degree `d`.
pub fn equal_degree(f: &FpPoly, d: usize, rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
    let n = f.deg();
    if n == d {
        return vec![f.monic()];
    }
    let p = f.modulus();
    let exponent = if p == 2 {
        BigUint::one()
    } else {
        (BigUint::from(p).pow(d as u32) - 1u32) / 2u32
    };
    loop {
        let a = random_poly(p, n, rng);
        if a.deg() == 0 {
            continue;
        }
        let b = if p == 2 {
            // Trace map a + a^2 + ... + a^(2^(d-1)).
            let mut t = a.rem(f);
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.mul(&t).rem(f);
                acc = acc.add(&t);
            }
            acc
        } else {
            a.pow_mod_big(&exponent, f).sub(&FpPoly::one(p))
        };
        let g = f.gcd(&b);
        if g.deg() > 0 && g.deg() < n {
            let h = f.divrem(&g).expect("nonzero").0.monic();
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&h, d, rng));
            return out;
        }
    }
}

/// Complete factorization of `f mod p` into monic irreducibles.
pub fn factor_mod_p(f: &ZPoly, p: u64, seed: u64) -> Result<FactorList<u64, FpPoly>> {
    let red = mod_reduce(f, p)?;
    factor_fp(&red.poly, seed)
}

/// [`factor_mod_p`] for a polynomial already reduced.
pub fn factor_fp(f: &FpPoly, seed: u64) -> Result<FactorList<u64, FpPoly>> {
    let p = f.modulus();
    if f.is_zero() {
        return Err(Error::VanishesModP(p));
    }
    let unit = f.lc();
    let monic = f.monic();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors = Vec::new();
    for (g, m) in squarefree_mod_p(&monic) {
        for (h, d) in distinct_degree(&g) {
            for irr in equal_degree(&h, d, &mut rng) {
                factors.push((irr, m));
            }
        }
    }
    factors.sort_by(|a, b| (a.0.deg(), a.0.coeffs(), a.1).cmp(&(b.0.deg(), b.0.coeffs(), b.1)));
    let out = FactorList { unit, factors };
    debug_assert_eq!(out.expand_fp(p), *f);
    Ok(out)
}

impl FactorList<u64, FpPoly> {
    /// `unit * prod factor^multiplicity`.
    pub fn expand_fp(&self, p: u64) -> FpPoly {
        let mut acc = FpPoly::new(p, vec![self.unit]);
        for (g, m) in &self.factors {
            for _ in 0..*m {
                acc = acc.mul(g);
            }
        }
        acc
    }
}

/// Degrees of the irreducible factors of a monic `f` modulo `p`, counted
/// with multiplicity, and whether `f mod p` is squarefree.
pub fn cycle_type_mod_p(f: &ZPoly, p: u64) -> Result<CycleType> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let red = mod_reduce(f, p)?.poly;
    let squarefree = red.gcd(&red.derivative()).deg() == 0;
    let mut degrees = Vec::new();
    for (g, m) in squarefree_mod_p(&red) {
        for (h, d) in distinct_degree(&g) {
            for _ in 0..(h.deg() / d) * m as usize {
                degrees.push(d);
            }
        }
    }
    degrees.sort_unstable();
    Ok(CycleType {
        degrees,
        prime: p,
        squarefree,
    })
}

/// Sorted factor degrees of a squarefree `f mod p` (no randomness needed).
pub(crate) fn degree_pattern(f: &FpPoly) -> Vec<usize> {
    let mut degrees = Vec::new();
    for (h, d) in distinct_degree(f) {
        for _ in 0..h.deg() / d {
            degrees.push(d);
        }
    }
    degrees.sort_unstable();
    degrees
}
