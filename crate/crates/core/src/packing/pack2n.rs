//! The concentric packing of `Pack(2, n)` for odd `n`.
//!
//! With the hubs concentric and the rim circles `D` scaled to radius 1, the
//! inner hub `A` has radius `a`, each pair member `B` touching `A` has
//! radius `b` and its partner `C` has radius `1 - b`. The angles around `B`
//! give `a` in terms of `b`. The angles around `A` give
//! `arccos U + m arccos V = pi / 2` with `m = (n - 1) / 2`. Writing
//! `cos(m t)` and `sin(m t)` through Chebyshev polynomials and squaring once
//! turns that into a polynomial `f(b)`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::circle::verify_packing;
use super::concentric::normalize_concentric;
use super::numeric::pack_graph_numeric;
use crate::exact::int::primitive_part;
use crate::exact::{
    monic_associate, BiPoly, BiRatFunc, MonicAssociate, MonicStrategy, ZPoly, ZRatFunc,
};
use crate::galois::{
    computability_verdict, search_sn_certificate, Citation, ComputabilityVerdict, Evidence, Lemma,
    Model, SearchOutcome, SnCertificate, DEFAULT_PRIME_BOUND,
};
use crate::graphlab::pack_layout;
use crate::polyalg::{chebyshev, factor_over_z, ChebyshevKind};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct Pack2nPolynomial {
    pub n: usize,
    pub m: usize,
    pub a_of_b: ZRatFunc,
    pub u: ZRatFunc,
    pub v: ZRatFunc,
    /// Primitive, positive leading coefficient.
    pub f: ZPoly,
}

fn bi_a() -> BiRatFunc {
    BiRatFunc::from_poly(BiPoly::x())
}

fn bi_b() -> BiRatFunc {
    BiRatFunc::from_poly(BiPoly::constant(ZPoly::x()))
}

fn bi_const(c: i64) -> BiRatFunc {
    BiRatFunc::from_poly(BiPoly::constant(ZPoly::from_i64s(&[c])))
}

/// Cosine of the angle between sides `p` and `q` opposite side `opp`.
fn law_of_cosines(p: &BiRatFunc, q: &BiRatFunc, opp: &BiRatFunc) -> BiRatFunc {
    let num = &(&(p * p) + &(q * q)) - &(opp * opp);
    let den = &(&bi_const(2) * p) * q;
    num.div(&den).expect("side lengths are nonzero")
}

fn z_const(c: ZPoly) -> ZRatFunc {
    ZRatFunc::from_poly(c)
}

/// Substitute `a := r(b)` into a polynomial in `a` over `Z[b]`.
fn substitute_a(p: &BiPoly, r: &ZRatFunc) -> ZRatFunc {
    p.coeffs()
        .iter()
        .rev()
        .fold(ZRatFunc::zero(), |acc, c| &(&acc * r) + &z_const(c.clone()))
}

fn substitute_ratfunc(f: &BiRatFunc, r: &ZRatFunc) -> ZRatFunc {
    substitute_a(f.numer(), r)
        .div(&substitute_a(f.denom(), r))
        .expect("denominator does not vanish identically")
        .reduced()
}

fn eval_at_ratfunc(f: &ZPoly, r: &ZRatFunc) -> ZRatFunc {
    f.coeffs().iter().rev().fold(ZRatFunc::zero(), |acc, c| {
        &(&acc * r) + &z_const(ZPoly::constant(c.clone()))
    })
}

pub fn pack2n_polynomial(n: usize) -> Result<Pack2nPolynomial> {
    if n % 2 == 0 {
        return Err(Error::InvalidArgument(format!(
            "pack2n supports odd n only; got {}",
            n
        )));
    }
    if n < 5 {
        return Err(Error::InvalidArgument(format!(
            "pack2n needs n >= 5; got {}",
            n
        )));
    }
    let m = (n - 1) / 2;
    let (a, b, one, two) = (bi_a(), bi_b(), bi_const(1), bi_const(2));
    let c = &one - &b;
    // Around B: triangles C-B-D and B-D-A.
    let x = law_of_cosines(&(&b + &c), &(&b + &one), &(&c + &one));
    let y = law_of_cosines(&(&b + &one), &(&b + &a), &(&a + &one));
    let twin = (&x + &y).numer().clone();
    if twin.deg() != 1 {
        return Err(Error::Pipeline(
            "around-B relation is not linear in a".into(),
        ));
    }
    let a_of_b = ZRatFunc::new(-twin.coeff(0), twin.coeff(1))?.reduced();
    // Around A: triangles A-B-D and A-D-D.
    let u = substitute_ratfunc(
        &law_of_cosines(&(&a + &b), &(&a + &one), &(&b + &one)),
        &a_of_b,
    );
    let v = substitute_ratfunc(&law_of_cosines(&(&a + &one), &(&a + &one), &two), &a_of_b);
    let t_m = eval_at_ratfunc(&chebyshev(ChebyshevKind::T, m), &v);
    let u_m1 = eval_at_ratfunc(&chebyshev(ChebyshevKind::U, m - 1), &v);
    let one_z = ZRatFunc::constant(BigInt::from(1));
    let lhs = &(&u * &u) * &(&t_m * &t_m);
    let rhs = &(&(&one_z - &(&u * &u)) * &(&one_z - &(&v * &v))) * &(&u_m1 * &u_m1);
    let relation = (&lhs - &rhs).reduced();
    let mut f = primitive_part(relation.numer());
    if f.leading().is_negative() {
        f = -f;
    }
    Ok(Pack2nPolynomial {
        n,
        m,
        a_of_b,
        u,
        v,
        f,
    })
}

/// Radii read off the normalized numeric packing.
#[derive(Clone, Debug, PartialEq)]
pub struct Pack2nNumeric {
    /// Radius of every `B` circle (they agree to `spread`).
    pub b: f64,
    /// Radius of the inner hub.
    pub a: f64,
    pub spread: f64,
    /// `|a - a_of_b(b)|` for the twin-circle formula `2b^2 / (1 - 2b)`.
    pub twin_defect: f64,
}

pub fn pack2n_numeric(n: usize, tol: f64) -> Result<Pack2nNumeric> {
    let (g, lay) = pack_layout(2, n)?;
    let p = pack_graph_numeric(&g, None, tol)?;
    let q = normalize_concentric(&g, &p, lay.inner_hub, lay.outer_hub)?;
    verify_packing(&g, &q, tol)?;
    let bs: Vec<f64> = lay
        .pairs
        .iter()
        .map(|&(b, _)| q.circles[b].radius)
        .collect();
    let b = bs[0];
    let spread = bs.iter().map(|x| (x - b).abs()).fold(0.0, f64::max);
    let a = q.circles[lay.inner_hub].radius;
    Ok(Pack2nNumeric {
        b,
        a,
        spread,
        twin_defect: (a - 2.0 * b * b / (1.0 - 2.0 * b)).abs(),
    })
}

/// `f(x)` in exact arithmetic at the double `x`, rounded.
pub fn eval_at_f64(f: &ZPoly, x: f64) -> f64 {
    let xr = BigRational::from_float(x).expect("finite");
    f.eval_map(&xr, |c| BigRational::from_integer(c.clone()))
        .to_f64()
        .unwrap_or(f64::NAN)
}

#[derive(Clone, Debug, PartialEq)]
pub struct FactorCertificate {
    pub factor: ZPoly,
    pub monic: MonicAssociate,
    pub outcome: SearchOutcome,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Pack2nReport {
    pub polynomial: Pack2nPolynomial,
    pub factors: Vec<(ZPoly, u32)>,
    pub numeric: Pack2nNumeric,
    /// The irreducible factor that vanishes at the numeric `B` radius `b`.
    pub f1: ZPoly,
    /// `f1(b)` at the numeric `b`.
    pub f1_residual: f64,
    /// The factor with `f0(x) = f1(1 - x)` up to sign, if `f` has one. It
    /// vanishes at the radius `1 - b` of the partner circle `C`.
    pub f0: Option<ZPoly>,
    /// `f0(1 - b)` at the numeric `b`.
    pub f0_residual_at_c: Option<f64>,
    /// Monic associate of `f0` (of `f1` when there is no `f0`); the plain
    /// reversal when the constant term is 1.
    pub g: MonicAssociate,
    pub certificate: Option<SnCertificate>,
    pub verdict: Option<ComputabilityVerdict>,
    /// One entry per nonlinear irreducible factor of `f`.
    pub factor_certificates: Vec<FactorCertificate>,
}

impl Pack2nReport {
    /// Distinct certified groups over all factors, with `"not found"` for
    /// factors without a certificate, in factor order.
    pub fn groups(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for fc in &self.factor_certificates {
            let label = match fc.outcome.certificate() {
                Some(c) => c.conclusion.clone(),
                None => "not found".into(),
            };
            if !out.contains(&label) {
                out.push(label);
            }
        }
        out
    }
}

/// `f(1 - x)`.
pub fn mirror(f: &ZPoly) -> ZPoly {
    f.compose(&ZPoly::from_i64s(&[1, -1]))
}

pub fn pack2n_certify(n: usize) -> Result<Pack2nReport> {
    let polynomial = pack2n_polynomial(n)?;
    let fl = factor_over_z(&polynomial.f)?;
    let factors = fl.factors;
    let numeric = pack2n_numeric(n, 1e-9)?;
    let relative = |f: &ZPoly| {
        let scale: f64 = f
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| {
                c.to_f64().unwrap_or(f64::INFINITY).abs() * numeric.b.abs().powi(i as i32)
            })
            .sum();
        eval_at_f64(f, numeric.b).abs() / scale
    };
    let (f1, _) = factors
        .iter()
        .map(|(f, _)| (f, relative(f)))
        .min_by(|x, y| x.1.total_cmp(&y.1))
        .ok_or_else(|| Error::Pipeline("f has no factors".into()))?;
    let f1 = f1.clone();
    if relative(&f1) > 1e-8 {
        return Err(Error::Pipeline(format!(
            "no factor of f vanishes at the numeric b = {}",
            numeric.b
        )));
    }
    let f1_residual = eval_at_f64(&f1, numeric.b);
    let m1 = mirror(&f1);
    let f0 = factors
        .iter()
        .map(|(f, _)| f)
        .find(|f| **f == m1 || **f == -&m1)
        .cloned();
    let f0_residual_at_c = f0.as_ref().map(|f| eval_at_f64(f, 1.0 - numeric.b));
    let g = monic_associate(f0.as_ref().unwrap_or(&f1), MonicStrategy::MinimalScale)?;
    let mut factor_certificates = Vec::new();
    for (f, _) in &factors {
        if f.deg() < 2 {
            continue;
        }
        let monic = monic_associate(f, MonicStrategy::MinimalScale)?;
        let outcome = search_sn_certificate(&monic.poly, DEFAULT_PRIME_BOUND)?;
        factor_certificates.push(FactorCertificate {
            factor: f.clone(),
            monic,
            outcome,
        });
    }
    let certificate = if g.poly.deg() >= 2 {
        search_sn_certificate(&g.poly, DEFAULT_PRIME_BOUND)?
            .certificate()
            .cloned()
    } else {
        None
    };
    let verdict = match &certificate {
        Some(cert) => {
            let mut v = computability_verdict(
                Evidence::Certificate(cert),
                Model::Radical,
                &format!("radius b in the concentric packing of pack:2:{}", n),
            )?;
            v.justification.push(Citation::new(
                Lemma::Concentric,
                format!(
                    "every packing of pack:2:{} maps to the concentric one, so none is radical-constructible either",
                    n
                ),
            ));
            Some(v)
        }
        None => None,
    };
    Ok(Pack2nReport {
        polynomial,
        factors,
        numeric,
        f1,
        f1_residual,
        f0,
        f0_residual_at_c,
        g,
        certificate,
        verdict,
        factor_certificates,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(cs: &[i64]) -> ZPoly {
        ZPoly::from_i64s(cs)
    }

    #[test]
    fn twin_circles_and_cosines() {
        let p = pack2n_polynomial(5).unwrap();
        assert!(p
            .a_of_b
            .equivalent(&ZRatFunc::new(z(&[0, 0, 2]), z(&[1, -2])).unwrap()));
        assert!(p
            .u
            .equivalent(&ZRatFunc::new(z(&[-1, 6, -6]), z(&[1, -2, 2])).unwrap()));
        let vn = &z(&[1, -4, 2]) * &z(&[-1, 0, 2]);
        let vd = &z(&[1, -2, 2]) * &z(&[1, -2, 2]);
        assert!(p.v.equivalent(&ZRatFunc::new(vn, vd).unwrap()));
    }

    #[test]
    fn even_and_small_rejected() {
        assert!(pack2n_polynomial(6).is_err());
        assert!(pack2n_polynomial(3).is_err());
    }

    #[test]
    fn n5_polynomial_and_certificate() {
        let p = pack2n_polynomial(5).unwrap();
        let printed = [
            1, -24, 200, -896, 3568, -17504, 73440, -208000, 390112, -501376, 471424, -363520,
            254720, -154112, 68096, -18432, 2304,
        ];
        assert_eq!(p.f, z(&printed));
        let r = pack2n_certify(5).unwrap();
        assert_eq!(r.f0, Some(z(&[1, -4, 4, -64, 336, -656, 592, -256, 48])));
        assert_eq!(r.f1, z(&[1, -20, 116, -288, 336, -208, 144, -128, 48]));
        assert_eq!(r.g.poly, z(&[48, -256, 592, -656, 336, -64, 4, -4, 1]));
        let cert = r.certificate.as_ref().unwrap();
        assert_eq!((cert.ncycle.prime, cert.transposition.prime), (3, 29));
        assert!(r.f1_residual.abs() < 1e-8, "{:e}", r.f1_residual);
        assert!(r.f0_residual_at_c.unwrap().abs() < 1e-8);
        assert!(r.numeric.twin_defect < 1e-8);
    }

    #[test]
    fn n7_groups() {
        let r = pack2n_certify(7).unwrap();
        let total: usize = r.factors.iter().map(|(f, m)| f.deg() * *m as usize).sum();
        assert_eq!(total, 24);
        assert_eq!(r.groups(), ["S_2", "S_10"]);
        assert_eq!(r.f1.deg(), 10);
    }
}
