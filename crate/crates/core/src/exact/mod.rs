//! Exact arithmetic: polynomials over `Z`, `Q` and `GF(p)`.
//!
//! The typed cores are [`ZPoly`], [`QPoly`], [`FpPoly`] and [`BiPoly`].
//! [`Polynomial`] wraps the three univariate domains behind one tag for
//! callers (such as the command line) that only learn the domain at run time.

pub mod int;
pub mod modp;
pub mod poly;
pub mod ratfunc;
pub mod transform;

use alloc::format;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use int::{
    content, integer_primitive, primitive_part, rational_primitive, squarefree_decomposition,
    squarefree_part, to_q, to_z, z_divrem, z_gcd, ZDivRem,
};
pub use modp::{is_prime_u64, mod_reduce, FpPoly, Reduced};
pub use poly::{BiPoly, Coeff, ExactDiv, FieldCoeff, Poly, QPoly, ZPoly};
pub use ratfunc::{BiRatFunc, RatFunc, ZRatFunc};
pub use transform::{monic_associate, MonicAssociate, MonicStrategy, Transform};

use crate::{Error, Result};

/// Coefficient domain tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Domain {
    Int,
    Rat,
    ModP(u64),
}

/// A univariate polynomial whose domain is known only at run time.
#[derive(Clone, Debug, PartialEq)]
pub enum Polynomial {
    Int(ZPoly),
    Rat(QPoly),
    ModP(FpPoly),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Neg,
    Derivative,
}

/// A value in one of the three coefficient domains.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Int(BigInt),
    Rat(BigRational),
    ModP(u64, u64),
}

impl Polynomial {
    pub fn domain(&self) -> Domain {
        match self {
            Polynomial::Int(_) => Domain::Int,
            Polynomial::Rat(_) => Domain::Rat,
            Polynomial::ModP(f) => Domain::ModP(f.modulus()),
        }
    }

    pub fn degree(&self) -> Option<usize> {
        match self {
            Polynomial::Int(f) => f.degree(),
            Polynomial::Rat(f) => f.degree(),
            Polynomial::ModP(f) => f.degree(),
        }
    }

    /// Ring operations; the binary ones need `g` in the same domain.
    pub fn arith(op: ArithOp, f: &Polynomial, g: Option<&Polynomial>) -> Result<Polynomial> {
        use Polynomial::*;
        match op {
            ArithOp::Neg | ArithOp::Derivative => {
                if g.is_some() {
                    return Err(Error::InvalidArgument(format!(
                        "{:?} takes a single operand",
                        op
                    )));
                }
                let unary = op == ArithOp::Neg;
                return Ok(match f {
                    Int(a) => Int(if unary { -a } else { a.derivative() }),
                    Rat(a) => Rat(if unary { -a } else { a.derivative() }),
                    ModP(a) => ModP(if unary { a.neg() } else { a.derivative() }),
                });
            }
            _ => {}
        }
        let g = g.ok_or_else(|| Error::InvalidArgument(format!("{:?} needs two operands", op)))?;
        match (f, g) {
            (Int(a), Int(b)) => Ok(Int(match op {
                ArithOp::Add => a + b,
                ArithOp::Sub => a - b,
                _ => a * b,
            })),
            (Rat(a), Rat(b)) => Ok(Rat(match op {
                ArithOp::Add => a + b,
                ArithOp::Sub => a - b,
                _ => a * b,
            })),
            (ModP(a), ModP(b)) if a.modulus() == b.modulus() => Ok(ModP(match op {
                ArithOp::Add => a.add(b),
                ArithOp::Sub => a.sub(b),
                _ => a.mul(b),
            })),
            _ => Err(Error::DomainMismatch(format!(
                "{:?} vs {:?}",
                f.domain(),
                g.domain()
            ))),
        }
    }

    /// Quotient and remainder. Over `Z` the result is flagged when it had to
    /// fall back to pseudo-division.
    pub fn divrem(&self, g: &Polynomial) -> Result<(Polynomial, Polynomial, Option<u32>)> {
        use Polynomial::*;
        match (self, g) {
            (Int(a), Int(b)) => {
                let d = z_divrem(a, b)?;
                Ok((Int(d.quotient), Int(d.remainder), d.pseudo))
            }
            (Rat(a), Rat(b)) => {
                if b.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                let (q, r) = a.divrem(b);
                Ok((Rat(q), Rat(r), None))
            }
            (ModP(a), ModP(b)) if a.modulus() == b.modulus() => {
                let (q, r) = a.divrem(b)?;
                Ok((ModP(q), ModP(r), None))
            }
            _ => Err(Error::DomainMismatch(format!(
                "{:?} vs {:?}",
                self.domain(),
                g.domain()
            ))),
        }
    }

    /// Horner evaluation; integers embed into `Q` and `GF(p)`.
    pub fn eval(&self, x: &Scalar) -> Result<Scalar> {
        use Polynomial as P;
        match (self, x) {
            (P::Int(f), Scalar::Int(v)) => Ok(Scalar::Int(f.eval(v))),
            (P::Rat(f), Scalar::Rat(v)) => Ok(Scalar::Rat(f.eval(v))),
            (P::Rat(f), Scalar::Int(v)) => {
                Ok(Scalar::Rat(f.eval(&BigRational::from_integer(v.clone()))))
            }
            (P::Int(f), Scalar::Rat(v)) => Ok(Scalar::Rat(to_q(f).eval(v))),
            (P::ModP(f), Scalar::ModP(v, p)) if *p == f.modulus() => {
                Ok(Scalar::ModP(f.eval(*v), *p))
            }
            (P::ModP(f), Scalar::Int(v)) => {
                let p = f.modulus();
                Ok(Scalar::ModP(f.eval(int::residue_u64(v, p)), p))
            }
            _ => Err(Error::DomainMismatch(format!(
                "cannot evaluate a {:?} polynomial at {:?}",
                self.domain(),
                x
            ))),
        }
    }
}
