//! Resultants by the subresultant remainder sequence, discriminants and
//! elimination of one variable from a pair of bivariate polynomials.

use num_bigint::BigInt;

use crate::exact::int::squarefree_part;
use crate::exact::{BiPoly, Coeff, ExactDiv, Poly, ZPoly};
use crate::{Error, Result};

fn pow<R: Coeff>(base: &R, e: usize) -> R {
    let mut acc = R::one();
    for _ in 0..e {
        acc = acc * base.clone();
    }
    acc
}

/// `Res(a, b)` over any domain with exact division.
///
/// Subresultant PRS: every intermediate division is exact, so coefficient
/// growth stays polynomial and no fractions appear.
pub fn resultant<R: ExactDiv>(a: &Poly<R>, b: &Poly<R>) -> Result<R> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut sign_neg = false;
    if a.deg() < b.deg() {
        core::mem::swap(&mut a, &mut b);
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            sign_neg = true;
        }
    }
    if b.deg() == 0 {
        let r = pow(&b.leading(), a.deg());
        return Ok(if sign_neg { -r } else { r });
    }
    let mut g = R::one();
    let mut h = R::one();
    loop {
        let delta = a.deg() - b.deg();
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            sign_neg = !sign_neg;
        }
        let r = a.pseudo_rem(&b);
        a = b;
        let divisor = g.clone() * pow(&h, delta);
        b = r
            .div_scalar_exact(&divisor)
            .expect("subresultant division is exact");
        g = a.leading();
        h = if delta == 0 {
            h
        } else {
            pow(&g, delta)
                .div_exact(&pow(&h, delta - 1))
                .expect("subresultant division is exact")
        };
        if b.is_zero() {
            return Ok(R::zero());
        }
        if b.deg() == 0 {
            let da = a.deg();
            let num = pow(&b.leading(), da);
            let res = if da == 0 {
                num
            } else {
                num.div_exact(&pow(&h, da - 1))
                    .expect("subresultant division is exact")
            };
            return Ok(if sign_neg { -res } else { res });
        }
    }
}

/// `(-1)^(n(n-1)/2) Res(f, f') / lc(f)`.
pub fn discriminant<R: ExactDiv>(f: &Poly<R>) -> Result<R> {
    let n = f.deg();
    if f.is_zero() || n < 2 {
        return Err(Error::DegreeTooSmall { degree: n, min: 2 });
    }
    let r = resultant(f, &f.derivative())?;
    let q = r
        .div_exact(&f.leading())
        .expect("leading coefficient divides Res(f, f')");
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -q } else { q })
}

/// Output of [`eliminate_resultant`].
#[derive(Clone, Debug, PartialEq)]
pub struct Elimination {
    /// Resultant with respect to the outer variable.
    pub raw: ZPoly,
    /// Product of the distinct irreducible factors of `raw`, primitive with
    /// positive leading coefficient (zero when `raw` is zero).
    pub squarefree_primitive: ZPoly,
}

/// Eliminate the outer variable of two bivariate integer polynomials.
pub fn eliminate_resultant(p: &BiPoly, q: &BiPoly) -> Result<Elimination> {
    if p.deg() == 0 || q.deg() == 0 {
        return Err(Error::InvalidArgument(
            "both polynomials need positive degree in the eliminated variable".into(),
        ));
    }
    let raw = resultant(p, q)?;
    let squarefree_primitive = if raw.is_zero() {
        ZPoly::zero()
    } else {
        squarefree_part(&raw)
    };
    Ok(Elimination {
        raw,
        squarefree_primitive,
    })
}

/// Integer resultant, for call sites that want a concrete type.
pub fn resultant_z(f: &ZPoly, g: &ZPoly) -> Result<BigInt> {
    resultant(f, g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(cs: &[i64]) -> ZPoly {
        ZPoly::from_i64s(cs)
    }

    /// Sylvester determinant by fraction-free Bareiss elimination.
    fn sylvester_oracle(f: &ZPoly, g: &ZPoly) -> BigInt {
        let (m, n) = (f.deg(), g.deg());
        let size = m + n;
        let mut a = vec![vec![BigInt::from(0); size]; size];
        for i in 0..n {
            for j in 0..=m {
                a[i][i + j] = f.coeff(m - j);
            }
        }
        for i in 0..m {
            for j in 0..=n {
                a[n + i][i + j] = g.coeff(n - j);
            }
        }
        let mut sign = BigInt::from(1);
        let mut prev = BigInt::from(1);
        for k in 0..size {
            if a[k][k] == BigInt::from(0) {
                let Some(r) = (k + 1..size).find(|&r| a[r][k] != BigInt::from(0)) else {
                    return BigInt::from(0);
                };
                a.swap(k, r);
                sign = -sign;
            }
            for i in k + 1..size {
                for j in k + 1..size {
                    a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * prev
    }

    #[test]
    fn linear_resultant() {
        assert_eq!(
            resultant(&z(&[-3, 1]), &z(&[-5, 1])).unwrap(),
            BigInt::from(-2)
        );
    }

    #[test]
    fn quadratic_pair_matches_sylvester() {
        let f = z(&[-2, 0, 1]);
        let g = z(&[-3, 0, 1]);
        assert_eq!(resultant(&f, &g).unwrap(), BigInt::from(1));
        assert_eq!(sylvester_oracle(&f, &g), BigInt::from(1));
    }

    #[test]
    fn random_pairs_match_sylvester() {
        let cases = [
            (vec![3, -1, 4, 1, -5], vec![9, 2, -6, 5]),
            (vec![2, 7, 1, 8, 2, 8], vec![-1, 0, 0, 3]),
            (vec![1, 1], vec![5, 0, 0, 0, 2]),
            (vec![0, 4, -2, 1], vec![7, 3, 1, -1, 2]),
        ];
        for (a, b) in cases {
            let (f, g) = (z(&a), z(&b));
            assert_eq!(resultant(&f, &g).unwrap(), sylvester_oracle(&f, &g));
            assert_eq!(resultant(&g, &f).unwrap(), sylvester_oracle(&g, &f));
        }
    }

    #[test]
    fn quadratic_discriminant() {
        // x^2 + 3x + 5 -> 9 - 20
        assert_eq!(discriminant(&z(&[5, 3, 1])).unwrap(), BigInt::from(-11));
        assert!(matches!(
            discriminant(&z(&[1, 1])),
            Err(Error::DegreeTooSmall { .. })
        ));
    }

    #[test]
    fn disc_h() {
        let h = z(&[162, -432, 504, -299, 60, 1]);
        let expected = -BigInt::from(2).pow(6)
            * BigInt::from(3).pow(9)
            * BigInt::from(2341).pow(2)
            * BigInt::from(2749);
        assert_eq!(discriminant(&h).unwrap(), expected);
    }

    #[test]
    fn common_factor_gives_zero() {
        let c = z(&[1, 1, 1]);
        let f = &c * &z(&[2, 1]);
        let g = &c * &z(&[-7, 0, 3]);
        assert_eq!(resultant(&f, &g).unwrap(), BigInt::from(0));
    }

    #[test]
    fn simple_eliminations() {
        let a_minus_b: BiPoly = Poly::new(vec![z(&[0, -1]), z(&[1])]);
        let a_plus_b: BiPoly = Poly::new(vec![z(&[0, 1]), z(&[1])]);
        let e = eliminate_resultant(&a_minus_b, &a_plus_b).unwrap();
        assert!(e.raw == z(&[0, 2]) || e.raw == z(&[0, -2]));
        let sq: BiPoly = Poly::new(vec![z(&[0, -1]), ZPoly::zero(), z(&[1])]);
        let lin: BiPoly = Poly::new(vec![z(&[-2]), z(&[1])]);
        let e = eliminate_resultant(&sq, &lin).unwrap();
        assert!(e.raw == z(&[4, -1]) || e.raw == z(&[-4, 1]));
        let constant: BiPoly = Poly::new(vec![z(&[1, 1])]);
        assert!(eliminate_resultant(&constant, &lin).is_err());
    }
}
