//! Quotients of polynomials.
//!
//! Sums over a shared denominator keep it; otherwise denominators are
//! multiplied. Univariate integer quotients can additionally be reduced to
//! lowest terms.

use core::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::int::{content, z_gcd};
use super::poly::{Coeff, ExactDiv, Poly, ZPoly};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct RatFunc<R> {
    num: Poly<R>,
    den: Poly<R>,
}

/// Rational function in two variables with integer coefficients.
pub type BiRatFunc = RatFunc<ZPoly>;
pub type ZRatFunc = RatFunc<num_bigint::BigInt>;

impl<R: Coeff> RatFunc<R> {
    pub fn new(num: Poly<R>, den: Poly<R>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFunc { num, den })
    }

    pub fn from_poly(p: Poly<R>) -> Self {
        RatFunc {
            num: p,
            den: Poly::constant(R::one()),
        }
    }

    pub fn constant(c: R) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn numer(&self) -> &Poly<R> {
        &self.num
    }

    pub fn denom(&self) -> &Poly<R> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self * &o.recip()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        RatFunc {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    fn combine(&self, o: &Self, sign: bool) -> Self {
        let pick = |a: Poly<R>, b: Poly<R>| if sign { &a - &b } else { &a + &b };
        if self.den == o.den {
            return RatFunc {
                num: pick(self.num.clone(), o.num.clone()),
                den: self.den.clone(),
            };
        }
        RatFunc {
            num: pick(&self.num * &o.den, &o.num * &self.den),
            den: &self.den * &o.den,
        }
    }
}

impl<R: ExactDiv> RatFunc<R> {
    /// Compare as functions: `a/b == c/d` iff `ad == bc`.
    pub fn equivalent(&self, o: &Self) -> bool {
        &self.num * &o.den == &o.num * &self.den
    }
}

impl RatFunc<num_bigint::BigInt> {
    /// Lowest terms with a primitive denominator of positive leading
    /// coefficient.
    pub fn reduced(&self) -> Self {
        if self.num.is_zero() {
            return RatFunc::from_poly(ZPoly::zero());
        }
        let g = z_gcd(&self.num, &self.den);
        let mut num = self.num.div_exact(&g).expect("gcd divides numerator");
        let mut den = self.den.div_exact(&g).expect("gcd divides denominator");
        let c = content(&num).gcd(&content(&den));
        num = num.div_scalar_exact(&c).expect("content");
        den = den.div_scalar_exact(&c).expect("content");
        if den.leading().is_negative() {
            num = -num;
            den = -den;
        }
        RatFunc { num, den }
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        super::int::eval_f64(&self.num, x) / super::int::eval_f64(&self.den, x)
    }
}

impl<'a, R: Coeff> Add<&'a RatFunc<R>> for &'a RatFunc<R> {
    type Output = RatFunc<R>;
    fn add(self, o: &RatFunc<R>) -> RatFunc<R> {
        self.combine(o, false)
    }
}

impl<'a, R: Coeff> Sub<&'a RatFunc<R>> for &'a RatFunc<R> {
    type Output = RatFunc<R>;
    fn sub(self, o: &RatFunc<R>) -> RatFunc<R> {
        self.combine(o, true)
    }
}

impl<'a, R: Coeff> Mul<&'a RatFunc<R>> for &'a RatFunc<R> {
    type Output = RatFunc<R>;
    fn mul(self, o: &RatFunc<R>) -> RatFunc<R> {
        RatFunc {
            num: &self.num * &o.num,
            den: &self.den * &o.den,
        }
    }
}

impl<R: Coeff> Neg for &RatFunc<R> {
    type Output = RatFunc<R>;
    fn neg(self) -> RatFunc<R> {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl<R: Coeff> Zero for RatFunc<R> {
    fn zero() -> Self {
        RatFunc::from_poly(Poly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<R: Coeff> Add for RatFunc<R> {
    type Output = RatFunc<R>;
    fn add(self, o: Self) -> Self {
        &self + &o
    }
}
