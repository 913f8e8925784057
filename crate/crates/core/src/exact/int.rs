//! Integer and rational specifics: content, primitive parts, gcd over `Z`,
//! squarefree decomposition.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::{QPoly, ZPoly};
use crate::{Error, Result};

/// Result of an integer-domain division.
#[derive(Clone, Debug, PartialEq)]
pub struct ZDivRem {
    pub quotient: ZPoly,
    pub remainder: ZPoly,
    /// `Some(k)` when the division was a pseudo-division, i.e.
    /// `lc(g)^k * f = q * g + r`.
    pub pseudo: Option<u32>,
}

/// Divide over `Z`: exact or monic divisors give a true quotient; anything
/// else falls back to pseudo-division and says so.
pub fn z_divrem(f: &ZPoly, g: &ZPoly) -> Result<ZDivRem> {
    if g.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if let Some((q, r)) = f.divrem_exact(g) {
        return Ok(ZDivRem {
            quotient: q,
            remainder: r,
            pseudo: None,
        });
    }
    let (q, r) = f.pseudo_divrem(g);
    let k = (f.deg() + 1 - g.deg()) as u32;
    Ok(ZDivRem {
        quotient: q,
        remainder: r,
        pseudo: Some(k),
    })
}

/// Nonnegative gcd of the coefficients (zero for the zero polynomial).
pub fn content(f: &ZPoly) -> BigInt {
    f.coeffs().iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

/// Primitive part with positive leading coefficient.
pub fn primitive_part(f: &ZPoly) -> ZPoly {
    if f.is_zero() {
        return ZPoly::zero();
    }
    let mut c = content(f);
    if f.leading().is_negative() {
        c = -c;
    }
    f.div_scalar_exact(&c)
        .expect("content divides every coefficient")
}

/// Split a rational polynomial as `content * primitive` where `primitive`
/// has coprime integer coefficients and positive leading coefficient.
pub fn rational_primitive(f: &QPoly) -> Result<(BigRational, ZPoly)> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let den = f
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let scaled: ZPoly = f.map(|c| (c * BigRational::from_integer(den.clone())).to_integer());
    let mut cont = content(&scaled);
    if scaled.leading().is_negative() {
        cont = -cont;
    }
    let prim = scaled.div_scalar_exact(&cont).expect("content divides");
    Ok((BigRational::new(cont, den), prim))
}

/// Integer version of [`rational_primitive`].
pub fn integer_primitive(f: &ZPoly) -> Result<(BigInt, ZPoly)> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut cont = content(f);
    if f.leading().is_negative() {
        cont = -cont;
    }
    Ok((
        cont.clone(),
        f.div_scalar_exact(&cont).expect("content divides"),
    ))
}

pub fn to_q(f: &ZPoly) -> QPoly {
    f.map(|c| BigRational::from_integer(c.clone()))
}

/// `Some` when every coefficient is an integer.
pub fn to_z(f: &QPoly) -> Option<ZPoly> {
    f.coeffs()
        .iter()
        .map(|c| c.is_integer().then(|| c.to_integer()))
        .collect::<Option<Vec<_>>>()
        .map(ZPoly::new)
}

/// Gcd over `Z[x]` normalized to positive leading coefficient, computed by
/// the primitive remainder sequence.
pub fn z_gcd(f: &ZPoly, g: &ZPoly) -> ZPoly {
    if f.is_zero() {
        return primitive_part(g).scale(&content(g));
    }
    if g.is_zero() {
        return primitive_part(f).scale(&content(f));
    }
    let c = content(f).gcd(&content(g));
    let (mut a, mut b) = (primitive_part(f), primitive_part(g));
    if a.deg() < b.deg() {
        core::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = a.pseudo_rem(&b);
        a = b;
        b = primitive_part(&r);
    }
    primitive_part(&a).scale(&c)
}

/// Yun's squarefree decomposition of a primitive polynomial: returns
/// `(a_i, i)` with `f = prod a_i^i` up to sign, each `a_i` primitive and
/// nonconstant.
pub fn squarefree_decomposition(f: &ZPoly) -> Vec<(ZPoly, u32)> {
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    let f = primitive_part(f);
    let df = f.derivative();
    let a0 = z_gcd(&f, &df);
    let mut b = f.div_exact(&a0).expect("gcd divides f");
    let mut c = df.div_exact(&a0).expect("gcd divides f'");
    let mut d = &c - &b.derivative();
    let mut i = 1u32;
    while b.deg() > 0 {
        let a = primitive_part(&z_gcd(&b, &d));
        b = b.div_exact(&a).expect("a divides b");
        c = d.div_exact(&a).expect("a divides d");
        d = &c - &b.derivative();
        if a.deg() > 0 {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

/// Squarefree part (product of the distinct irreducible factors), primitive.
pub fn squarefree_part(f: &ZPoly) -> ZPoly {
    squarefree_decomposition(f)
        .into_iter()
        .fold(ZPoly::one(), |acc, (a, _)| &acc * &a)
}

/// `ceil(||f||_2)`.
pub fn l2_norm_ceil(f: &ZPoly) -> BigUint {
    let sum: BigUint = f
        .coeffs()
        .iter()
        .map(|c| {
            let m = c.magnitude();
            m * m
        })
        .sum();
    let root = sum.sqrt();
    if &root * &root == sum {
        root
    } else {
        root + 1u32
    }
}

/// Representative of `c mod m` in `(-m/2, m/2]`.
pub fn symmetric_mod(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

pub fn nonneg_mod(c: &BigInt, m: &BigInt) -> BigInt {
    c.mod_floor(m)
}

/// `c` as an `i64`-free unsigned residue modulo a machine prime.
pub fn residue_u64(c: &BigInt, p: u64) -> u64 {
    let r = c.mod_floor(&BigInt::from(p));
    let (_, digits) = r.to_u64_digits();
    digits.first().copied().unwrap_or(0)
}

/// Floating-point Horner evaluation.
pub fn eval_f64(f: &ZPoly, x: f64) -> f64 {
    f.coeffs()
        .iter()
        .rev()
        .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
}

pub fn from_u64_residue(c: u64) -> BigInt {
    BigInt::from_biguint(Sign::Plus, BigUint::from(c))
}
