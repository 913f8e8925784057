//! Dense univariate polynomials over a generic coefficient ring.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Coefficient ring of a [`Poly`].
///
/// Implemented for `BigInt`, `BigRational` and for `Poly<R>` itself, so
/// `Poly<Poly<BigInt>>` is a bivariate integer polynomial.
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(v: i64) -> Self;
}

/// Rings where exact division can be attempted.
pub trait ExactDiv: Coeff {
    /// `Some(q)` with `q * d == self`, `None` when `d` does not divide `self`.
    fn div_exact(&self, d: &Self) -> Option<Self>;
}

/// Fields.
pub trait FieldCoeff: ExactDiv {
    fn inv(&self) -> Option<Self>;
}

impl Coeff for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
}

impl ExactDiv for BigInt {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }
}

impl Coeff for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

impl ExactDiv for BigRational {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        (!d.is_zero()).then(|| self / d)
    }
}

impl FieldCoeff for BigRational {
    fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}

/// Dense polynomial, coefficients stored low degree first.
///
/// Trailing zeros are stripped on construction, so the zero polynomial is
/// the empty sequence and equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

pub type ZPoly = Poly<BigInt>;
pub type QPoly = Poly<BigRational>;
/// Polynomial in `a` whose coefficients are integer polynomials in `b`.
pub type BiPoly = Poly<ZPoly>;

impl<R: Coeff> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: R, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| R::from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> Option<&R> {
        self.coeffs.last()
    }

    /// Leading coefficient, zero for the zero polynomial.
    pub fn leading(&self) -> R {
        self.coeffs.last().cloned().unwrap_or_else(R::zero)
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.lc().is_some_and(|c| c.is_one())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Horner evaluation after embedding each coefficient into `S`.
    pub fn eval_map<S, F>(&self, x: &S, embed: F) -> S
    where
        S: Clone + Zero + Add<Output = S> + Mul<Output = S>,
        F: Fn(&R) -> S,
    {
        self.coeffs
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc * x.clone() + embed(c))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * R::from_i64(i as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Largest `k` with `x^k` dividing `self` (0 for the zero polynomial).
    pub fn x_valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Divide by `x^k`; the low `k` coefficients must be zero.
    pub fn shift_down(&self, k: usize) -> Self {
        debug_assert!(self.coeffs.iter().take(k).all(|c| c.is_zero()));
        Self::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::constant(R::one());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `self(g(x))`.
    pub fn compose(&self, g: &Self) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * g) + &Self::constant(c.clone())
        })
    }

    /// Pseudo-division: `lc(d)^(deg f - deg d + 1) * f = q * d + r`.
    pub fn pseudo_divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "pseudo-division by zero polynomial");
        let dd = d.deg();
        if self.is_zero() || self.deg() < dd {
            return (Self::zero(), self.clone());
        }
        let lc = d.leading();
        let steps = self.deg() - dd + 1;
        let mut r = self.coeffs.clone();
        let mut q = vec![R::zero(); steps];
        for k in (0..steps).rev() {
            let top = r[k + dd].clone();
            for qc in q.iter_mut() {
                *qc = qc.clone() * lc.clone();
            }
            q[k] = q[k].clone() + top.clone();
            for rc in r.iter_mut() {
                *rc = rc.clone() * lc.clone();
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] = r[k + j].clone() - top.clone() * dc.clone();
            }
            r.truncate(k + dd);
        }
        (Self::new(q), Self::new(r))
    }

    pub fn pseudo_rem(&self, d: &Self) -> Self {
        self.pseudo_divrem(d).1
    }

    /// Map every coefficient.
    pub fn map<S: Coeff, F: Fn(&R) -> S>(&self, f: F) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<R: ExactDiv> Poly<R> {
    /// Long division where every quotient coefficient must divide exactly.
    /// Returns `None` if some leading-term division is inexact.
    pub fn divrem_exact(&self, d: &Self) -> Option<(Self, Self)> {
        let lc = d.lc()?;
        let dd = d.deg();
        if self.is_zero() || self.deg() < dd {
            return Some((Self::zero(), self.clone()));
        }
        let steps = self.deg() - dd + 1;
        let mut r = self.coeffs.clone();
        let mut q = vec![R::zero(); steps];
        for k in (0..steps).rev() {
            let top = r[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            let t = top.div_exact(lc)?;
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] = r[k + j].clone() - t.clone() * dc.clone();
            }
            q[k] = t;
        }
        r.truncate(dd);
        Some((Self::new(q), Self::new(r)))
    }

    /// `Some(q)` when `d * q == self` exactly.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.divrem_exact(d)?;
        r.is_zero().then_some(q)
    }

    /// Divide every coefficient by `c`, which must divide all of them.
    pub fn div_scalar_exact(&self, c: &R) -> Option<Self> {
        self.coeffs
            .iter()
            .map(|a| a.div_exact(c))
            .collect::<Option<Vec<_>>>()
            .map(Self::new)
    }
}

impl<R: FieldCoeff> Poly<R> {
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        self.divrem_exact(d)
            .expect("field division is always exact")
    }

    pub fn monic(&self) -> Self {
        match self.lc().and_then(|c| c.inv()) {
            Some(inv) => self.scale(&inv),
            None => Self::zero(),
        }
    }

    /// Monic gcd (zero when both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl<R: ExactDiv> ExactDiv for Poly<R> {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        Poly::div_exact(self, d)
    }
}

impl<R: Coeff> Coeff for Poly<R> {
    fn from_i64(v: i64) -> Self {
        Poly::constant(R::from_i64(v))
    }
}

impl<R: Coeff> Zero for Poly<R> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<R: Coeff> One for Poly<R> {
    fn one() -> Self {
        Poly::constant(R::one())
    }
}

impl<R: Coeff> Default for Poly<R> {
    fn default() -> Self {
        Poly::zero()
    }
}

impl<'a, R: Coeff> Add<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;
    fn add(self, o: &Poly<R>) -> Poly<R> {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl<'a, R: Coeff> Sub<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;
    fn sub(self, o: &Poly<R>) -> Poly<R> {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl<'a, R: Coeff> Mul<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;
    fn mul(self, o: &Poly<R>) -> Poly<R> {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<R: Coeff> Neg for &Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

macro_rules! by_value {
    ($tr:ident, $m:ident) => {
        impl<R: Coeff> $tr for Poly<R> {
            type Output = Poly<R>;
            fn $m(self, o: Poly<R>) -> Poly<R> {
                (&self).$m(&o)
            }
        }
    };
}
by_value!(Add, add);
by_value!(Sub, sub);
by_value!(Mul, mul);

impl<R: Coeff> Neg for Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        -&self
    }
}

impl<R: fmt::Debug> fmt::Debug for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

/// Signed integer-like coefficients that can be printed in the usual
/// `3x^2 - x + 1` form.
pub trait DisplayCoeff {
    fn is_negative_coeff(&self) -> bool;
    fn abs_string(&self) -> alloc::string::String;
}

impl DisplayCoeff for BigInt {
    fn is_negative_coeff(&self) -> bool {
        self.is_negative()
    }
    fn abs_string(&self) -> alloc::string::String {
        use alloc::string::ToString;
        self.abs().to_string()
    }
}

impl DisplayCoeff for BigRational {
    fn is_negative_coeff(&self) -> bool {
        self.is_negative()
    }
    fn abs_string(&self) -> alloc::string::String {
        use alloc::string::ToString;
        self.abs().to_string()
    }
}

/// Renders a polynomial with a chosen variable name.
pub struct PolyDisplay<'a, R> {
    poly: &'a Poly<R>,
    var: &'a str,
}

impl<R: Coeff + DisplayCoeff> Poly<R> {
    pub fn display<'a>(&'a self, var: &'a str) -> PolyDisplay<'a, R> {
        PolyDisplay { poly: self, var }
    }
}

impl<R: Coeff + DisplayCoeff> fmt::Display for PolyDisplay<'_, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.poly.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative_coeff();
            let mag = c.abs_string();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag == "1";
            if i == 0 || !unit {
                f.write_str(&mag)?;
            }
            match i {
                0 => {}
                1 => f.write_str(self.var)?,
                _ => write!(f, "{}^{}", self.var, i)?,
            }
        }
        Ok(())
    }
}

impl<R: Coeff + DisplayCoeff> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display("x").fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(cs: &[i64]) -> ZPoly {
        ZPoly::from_i64s(cs)
    }

    #[test]
    fn normalization_strips_trailing_zeros() {
        assert_eq!(z(&[1, 2, 0, 0]), z(&[1, 2]));
        assert!(z(&[0, 0]).is_zero());
        assert_eq!(z(&[0]).degree(), None);
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&z(&[-1, 1]) * &z(&[1, 1]), z(&[-1, 0, 1]));
    }

    #[test]
    fn additive_identity() {
        let f = z(&[162, -432, 504, -299, 60, 1]);
        assert_eq!(&f + &ZPoly::zero(), f);
    }

    #[test]
    fn exact_division() {
        let (q, r) = z(&[-1, 0, 1]).divrem_exact(&z(&[-1, 1])).unwrap();
        assert_eq!(q, z(&[1, 1]));
        assert!(r.is_zero());
        // 2x does not divide x^2 + 1 with integer quotient
        assert!(z(&[1, 0, 1]).divrem_exact(&z(&[0, 2])).is_none());
    }

    #[test]
    fn pseudo_division_identity() {
        let f = z(&[3, 1, 4, 1, 5]);
        let d = z(&[2, 0, 3]);
        let (q, r) = f.pseudo_divrem(&d);
        let lc = BigInt::from(3).pow(3);
        assert_eq!(f.scale(&lc), &(&q * &d) + &r);
        assert!(r.deg() < 2);
    }

    #[test]
    fn display_form() {
        let h = z(&[162, -432, 504, -299, 60, 1]);
        assert_eq!(
            alloc::format!("{}", h),
            "x^5 + 60x^4 - 299x^3 + 504x^2 - 432x + 162"
        );
        assert_eq!(alloc::format!("{}", z(&[-1, -1]).display("b")), "-b - 1");
    }

    #[test]
    fn compose_and_eval() {
        let f = z(&[1, 0, 1]);
        let g = z(&[1, 1]);
        let fg = f.compose(&g);
        assert_eq!(fg, z(&[2, 2, 1]));
        assert_eq!(fg.eval(&BigInt::from(3)), BigInt::from(17));
    }

    #[test]
    fn bivariate_eval() {
        // p(a, b) = 2a^5 + 3a^4 b + a^3 b^2 - 5a^2 - 5ab - b^2, as a poly in a
        let p: BiPoly = Poly::new(vec![
            z(&[0, 0, -1]),
            z(&[0, -5]),
            z(&[-5]),
            z(&[0, 0, 1]),
            z(&[0, 3]),
            z(&[2]),
        ]);
        let at_a1 = p.eval(&ZPoly::one());
        assert_eq!(at_a1.eval(&BigInt::from(1)), BigInt::from(-5));
    }
}
