//! Factorization over `Z` by the Zassenhaus method: modular factorization at
//! a good prime, Hensel lifting, and recombination of lifted factors.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;

use super::finite::{degree_pattern, distinct_degree, equal_degree, DEFAULT_SEED};
use super::FactorList;
use crate::exact::int::{
    from_u64_residue, l2_norm_ceil, primitive_part, residue_u64, squarefree_decomposition,
    symmetric_mod,
};
use crate::exact::modp::{is_prime_u64, mod_reduce, FpPoly};
use crate::exact::ZPoly;
use crate::{Error, Result};

/// Largest degree accepted by [`factor_over_z`].
pub const DEGREE_LIMIT: usize = 32;

/// Number of good primes compared when choosing the modulus.
const PRIME_TRIALS: usize = 6;

/// Complete factorization over `Z`. The unit carries the content and sign;
/// factors are primitive with positive leading coefficient.
pub fn factor_over_z(f: &ZPoly) -> Result<FactorList<BigInt, ZPoly>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.deg() > DEGREE_LIMIT {
        return Err(Error::Unsupported {
            degree: f.deg(),
            limit: DEGREE_LIMIT,
        });
    }
    let mut unit = crate::exact::int::content(f);
    if f.leading().is_negative() {
        unit = -unit;
    }
    let prim = primitive_part(f);
    let mut factors: Vec<(ZPoly, u32)> = Vec::new();
    let v = prim.x_valuation();
    if v > 0 {
        factors.push((ZPoly::x(), v as u32));
    }
    let rest = prim.shift_down(v);
    for (a, m) in squarefree_decomposition(&rest) {
        for g in factor_squarefree(&a) {
            factors.push((g, m));
        }
    }
    factors.sort_by(|a, b| (a.0.deg(), a.0.coeffs()).cmp(&(b.0.deg(), b.0.coeffs())));
    let out = FactorList { unit, factors };
    debug_assert_eq!(out.expand_z(), *f);
    Ok(out)
}

impl FactorList<BigInt, ZPoly> {
    pub fn expand_z(&self) -> ZPoly {
        let mut acc = ZPoly::constant(self.unit.clone());
        for (g, m) in &self.factors {
            acc = &acc * &g.pow(*m);
        }
        acc
    }
}

/// A prime where `f` keeps its degree and stays squarefree.
pub(crate) fn is_good_prime(f: &ZPoly, p: u64) -> Option<FpPoly> {
    let r = mod_reduce(f, p).ok()?;
    if r.degree_dropped {
        return None;
    }
    let fp = r.poly;
    (fp.gcd(&fp.derivative()).deg() == 0).then_some(fp)
}

/// Factor a primitive squarefree polynomial with positive leading
/// coefficient and nonzero constant term.
fn factor_squarefree(f: &ZPoly) -> Vec<ZPoly> {
    if f.deg() <= 1 {
        return alloc::vec![f.clone()];
    }
    // Choose the good prime with the fewest modular factors.
    let mut best: Option<(usize, u64, FpPoly)> = None;
    let mut tried = 0;
    let mut p = 2u64;
    while tried < PRIME_TRIALS {
        p += 1;
        if !is_prime_u64(p) {
            continue;
        }
        let Some(fp) = is_good_prime(f, p) else {
            continue;
        };
        tried += 1;
        let count = degree_pattern(&fp.monic()).len();
        if count == 1 {
            return alloc::vec![f.clone()];
        }
        if best.as_ref().is_none_or(|b| count < b.0) {
            best = Some((count, p, fp));
        }
    }
    let (_, p, fp) = best.expect("at least one good prime");
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let mut modular = Vec::new();
    for (h, d) in distinct_degree(&fp.monic()) {
        modular.extend(equal_degree(&h, d, &mut rng));
    }
    let lc = f.leading();
    // Any factor of lc * f has coefficients below |lc| 2^n ||f||_2; lift past
    // twice that so symmetric residues recover them.
    let bound = BigInt::from(l2_norm_ceil(f)) * lc.abs() * (BigInt::one() << f.deg());
    let target = bound * 2u32;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut modulus = pb.clone();
    while modulus <= target {
        modulus *= &pb;
        k += 1;
    }
    let lifted = hensel_lift(f, &modular, p, k);
    recombine(f, lifted, &modulus)
}

fn reduce_coeffs(f: &ZPoly, m: &BigInt) -> ZPoly {
    f.map(|c| c.mod_floor(m))
}

fn to_z(f: &FpPoly) -> ZPoly {
    ZPoly::new(f.coeffs().iter().map(|&c| from_u64_residue(c)).collect())
}

fn to_fp(f: &ZPoly, p: u64) -> FpPoly {
    FpPoly::new(p, f.coeffs().iter().map(|c| residue_u64(c, p)).collect())
}

/// Lift `f = g0 * h0 (mod p)` to `f = g * h (mod p^k)`, where `g0` carries
/// the leading coefficient of `f` and `h0` is monic. The lifted `g` keeps
/// leading coefficient exactly `lc(f)` and `h` stays monic.
fn lift_pair(f: &ZPoly, g0: &FpPoly, h0: &FpPoly, p: u64, k: u32) -> (ZPoly, ZPoly) {
    let (one, s, t) = g0.ext_gcd(h0);
    debug_assert!(one.is_one(), "modular factors must be coprime");
    let lc = f.leading();
    let mut g = to_z(g0);
    let mut gc = g.clone().into_coeffs();
    *gc.last_mut().expect("nonzero") = lc;
    g = ZPoly::new(gc);
    let mut h = to_z(h0);
    let pb = BigInt::from(p);
    let mut m = pb.clone();
    for _ in 1..k {
        let diff = f - &(&g * &h);
        let e = diff
            .div_scalar_exact(&m)
            .expect("f = g h modulo the current power");
        let e = to_fp(&e, p);
        let (q, dg) = e.mul(&t).divrem(g0).expect("nonzero");
        let dh = e.mul(&s).add(&q.mul(h0));
        g = &g + &to_z(&dg).scale(&m);
        h = &h + &to_z(&dh).scale(&m);
        m *= &pb;
    }
    (reduce_coeffs(&g, &m), reduce_coeffs(&h, &m))
}

/// Lift a full list of monic modular factors; returns monic lifts mod `p^k`.
fn hensel_lift(f: &ZPoly, factors: &[FpPoly], p: u64, k: u32) -> Vec<ZPoly> {
    let m = BigInt::from(p).pow(k);
    if factors.len() == 1 {
        let lc = f.leading();
        let inv = lc.extended_gcd(&m).x.mod_floor(&m);
        return alloc::vec![reduce_coeffs(&f.scale(&inv), &m)];
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let lcp = residue_u64(&f.leading(), p);
    let g0 = left
        .iter()
        .fold(FpPoly::new(p, alloc::vec![lcp]), |acc, u| acc.mul(u));
    let h0 = right.iter().fold(FpPoly::one(p), |acc, u| acc.mul(u));
    let (g, h) = lift_pair(f, &g0, &h0, p, k);
    let mut out = hensel_lift(&g, left, p, k);
    out.extend(hensel_lift(&h, right, p, k));
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k == 0 || k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Try products of lifted factors in increasing subset size.
fn recombine(f: &ZPoly, mut lifted: Vec<ZPoly>, modulus: &BigInt) -> Vec<ZPoly> {
    let mut found = Vec::new();
    let mut rest = f.clone();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut hit = None;
        for combo in combinations(lifted.len(), size) {
            let lc = rest.leading();
            // Constant-term screen before the full product.
            let c0 = combo.iter().fold(lc.clone(), |acc, &i| {
                (acc * lifted[i].coeff(0)).mod_floor(modulus)
            });
            let c0 = symmetric_mod(&c0, modulus);
            if c0.is_zero() || !(&lc * rest.coeff(0)).is_multiple_of(&c0) {
                continue;
            }
            let prod = combo.iter().fold(ZPoly::constant(lc.clone()), |acc, &i| {
                reduce_coeffs(&(&acc * &lifted[i]), modulus)
            });
            let cand = primitive_part(&prod.map(|c| symmetric_mod(c, modulus)));
            if let Some(q) = rest.div_exact(&cand) {
                hit = Some((combo, cand, q));
                break;
            }
        }
        match hit {
            Some((combo, cand, q)) => {
                found.push(cand);
                rest = q;
                for &i in combo.iter().rev() {
                    lifted.remove(i);
                }
            }
            None => size += 1,
        }
    }
    if rest.deg() > 0 {
        found.push(primitive_part(&rest));
    }
    found
}
