//! Chebyshev polynomials by the three-term recurrence.

use crate::exact::ZPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChebyshevKind {
    /// First kind, `T_m(cos t) = cos(m t)`.
    T,
    /// Second kind, `U_m(cos t) sin t = sin((m + 1) t)`.
    U,
}

pub fn chebyshev(kind: ChebyshevKind, m: usize) -> ZPoly {
    let mut prev = ZPoly::from_i64s(&[1]);
    if m == 0 {
        return prev;
    }
    let mut cur = match kind {
        ChebyshevKind::T => ZPoly::from_i64s(&[0, 1]),
        ChebyshevKind::U => ZPoly::from_i64s(&[0, 2]),
    };
    let two_x = ZPoly::from_i64s(&[0, 2]);
    for _ in 1..m {
        let next = &(&two_x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{BiPoly, Poly};

    #[test]
    fn low_orders() {
        assert_eq!(
            chebyshev(ChebyshevKind::T, 2),
            ZPoly::from_i64s(&[-1, 0, 2])
        );
        assert_eq!(chebyshev(ChebyshevKind::U, 1), ZPoly::from_i64s(&[0, 2]));
        assert_eq!(chebyshev(ChebyshevKind::T, 0), ZPoly::from_i64s(&[1]));
        assert_eq!(
            chebyshev(ChebyshevKind::U, 3),
            ZPoly::from_i64s(&[0, -4, 0, 8])
        );
    }

    #[test]
    fn cosine_identity() {
        let t = 0.37f64;
        for m in 0..8 {
            let tm = crate::exact::int::eval_f64(&chebyshev(ChebyshevKind::T, m), t.cos());
            assert!((tm - (m as f64 * t).cos()).abs() < 1e-12);
            let um = crate::exact::int::eval_f64(&chebyshev(ChebyshevKind::U, m), t.cos());
            assert!((um * t.sin() - ((m + 1) as f64 * t).sin()).abs() < 1e-12);
        }
    }

    #[test]
    fn squared_double_angle_identity() {
        // U^2 T_2(V)^2 - 4 V^2 (1 - U^2)(1 - V^2) = 4V^4 - 4V^2 + U^2, as a
        // polynomial in U whose coefficients are polynomials in V.
        let t2 = chebyshev(ChebyshevKind::T, 2);
        let v = ZPoly::from_i64s(&[0, 1]);
        let one = ZPoly::from_i64s(&[1]);
        let u2: BiPoly = Poly::monomial(one.clone(), 2);
        let v2 = &v * &v;
        let four_v2: BiPoly = Poly::constant(v2.scale(&4.into()));
        let one_minus_u2 = &Poly::constant(one.clone()) - &u2;
        let one_minus_v2: BiPoly = Poly::constant(&one - &v2);
        let lhs =
            &(&u2 * &Poly::constant(&t2 * &t2)) - &(&four_v2 * &(&one_minus_u2 * &one_minus_v2));
        let rhs = &Poly::constant(ZPoly::from_i64s(&[0, 0, -4, 0, 4])) + &u2;
        assert_eq!(lhs, rhs);
    }
}
