//! Symbolic Fruchterman–Reingold equilibrium of the path on four vertices.
//!
//! With the vertices on a line at spacings `a, b, a`, the net force on an
//! end vertex and on an inner vertex are rational functions of `a` and `b`.
//! Their numerators `p(a, b)` and `q(a, b)` vanish at every symmetric
//! collinear equilibrium; eliminating `a` leaves a polynomial in `b` alone.

use num_bigint::BigInt;

use super::forces::{ForceModel, Layout};
use super::kk::eval_exact;
use super::solver::numeric_equilibrium;
use crate::exact::int::{eval_f64, z_divrem};
use crate::exact::transform::power_substitute;
use crate::exact::{
    monic_associate, BiPoly, BiRatFunc, MonicAssociate, MonicStrategy, Poly, ZPoly,
};
use crate::galois::{
    computability_verdict, search_sn_certificate, ComputabilityVerdict, Evidence, Model,
    SnCertificate, DEFAULT_PRIME_BOUND,
};
use crate::graphlab::{build_graph, GraphSpec};
use crate::polyalg::{eliminate_resultant, Elimination};
use crate::{Error, Result};

/// The degree-15 factor every symmetric equilibrium spacing `b` satisfies.
pub const P3_ELIMINANT: [i64; 16] = [144, 0, 0, 1440, 0, 0, -1196, 0, 0, 336, 0, 0, -48, 0, 0, 3];

fn var_a() -> BiRatFunc {
    BiRatFunc::from_poly(BiPoly::x())
}

fn var_b() -> BiRatFunc {
    BiRatFunc::from_poly(BiPoly::constant(ZPoly::x()))
}

fn inv(f: &BiRatFunc) -> BiRatFunc {
    f.recip().expect("distances are nonzero polynomials")
}

/// `(p, q)`: numerators of the net force on `v0` and on `v1` for the
/// collinear layout `0, a, a + b, 2a + b` with `k = 1`.
pub fn fr_p3_system() -> (BiPoly, BiPoly) {
    let a = var_a();
    let b = var_b();
    let ab = &a + &b;
    let two_a_b = &(&a + &a) + &b;
    let a2 = &a * &a;
    let b2 = &b * &b;
    // Attraction d^2 toward each neighbour, repulsion 1/d from every vertex.
    let f0 = &(&(&a2 - &inv(&a)) - &inv(&ab)) - &inv(&two_a_b);
    let neg_a2 = -&a2;
    let f1 = &(&(&(&neg_a2 + &inv(&a)) + &b2) - &inv(&b)) - &inv(&ab);
    (f0.numer().clone(), f1.numer().clone())
}

#[derive(Clone, Debug, PartialEq)]
pub struct FrP3Report {
    pub p: BiPoly,
    pub q: BiPoly,
    pub elimination: Elimination,
    /// Squarefree eliminant with the spurious `b = 0` root removed.
    pub eliminant: ZPoly,
    /// `eliminant(b) = quintic(b^3)`.
    pub quintic: ZPoly,
    pub monic: MonicAssociate,
    pub certificate: SnCertificate,
    pub verdict: ComputabilityVerdict,
}

pub fn fr_p3_certify() -> Result<FrP3Report> {
    let (p, q) = fr_p3_system();
    let elimination = eliminate_resultant(&p, &q)?;
    let sq = &elimination.squarefree_primitive;
    let eliminant = sq.shift_down(sq.x_valuation());
    let target = ZPoly::from_i64s(&P3_ELIMINANT);
    let d = z_divrem(&elimination.raw, &target)?;
    if !d.remainder.is_zero() || d.pseudo.is_some() {
        return Err(Error::Pipeline(
            "resultant is not divisible by the degree-15 eliminant".into(),
        ));
    }
    if eliminant != target {
        return Err(Error::Pipeline(
            "squarefree eliminant differs from the degree-15 factor".into(),
        ));
    }
    let quintic = power_substitute(&eliminant, 3)?;
    let monic = monic_associate(&quintic, MonicStrategy::MinimalScale)?;
    let outcome = search_sn_certificate(&monic.poly, DEFAULT_PRIME_BOUND)?;
    let certificate = outcome
        .certificate()
        .cloned()
        .ok_or_else(|| Error::Pipeline("no S_n certificate for h".into()))?;
    let verdict = computability_verdict(
        Evidence::Certificate(&certificate),
        Model::Radical,
        "middle spacing b of the FR equilibrium of P_3",
    )?;
    Ok(FrP3Report {
        p,
        q,
        elimination,
        eliminant,
        quintic,
        monic,
        certificate,
        verdict,
    })
}

/// Numeric FR equilibrium of the four-vertex path from a collinear start.
#[derive(Clone, Debug, PartialEq)]
pub struct FrP3Numeric {
    pub layout: Layout,
    /// Outer spacings and the middle spacing.
    pub a: [f64; 2],
    pub b: f64,
    /// Eliminant evaluated exactly at the double `b`.
    pub eliminant_at_b: f64,
    /// `p(a, b)` and `q(a, b)` at the numeric spacings.
    pub system_at_ab: [f64; 2],
}

pub fn fr_p3_numeric(tol: f64) -> Result<FrP3Numeric> {
    let g = build_graph(&GraphSpec::Path(4))?;
    let init = Layout::new(alloc::vec![[0.0, 0.0], [1.0, 0.0], [2.3, 0.0], [3.3, 0.0]]);
    let layout = numeric_equilibrium(&g, &ForceModel::fr(), &init, tol)?;
    let x: alloc::vec::Vec<f64> = layout.positions.iter().map(|p| p[0]).collect();
    let a = [x[1] - x[0], x[3] - x[2]];
    let b = x[2] - x[1];
    let eliminant_at_b = eval_exact(&ZPoly::from_i64s(&P3_ELIMINANT), b);
    let (p, q) = fr_p3_system();
    let am = 0.5 * (a[0] + a[1]);
    let at = |f: &BiPoly| {
        f.coeffs()
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * am + eval_f64(c, b))
    };
    Ok(FrP3Numeric {
        eliminant_at_b,
        system_at_ab: [at(&p), at(&q)],
        layout,
        a,
        b,
    })
}

/// `P(a, b)` with `a` the outer variable, from `(i, j, c)` = `c a^i b^j`.
pub fn bipoly_from_terms(terms: &[(usize, usize, i64)]) -> BiPoly {
    let deg_a = terms.iter().map(|t| t.0).max().unwrap_or(0);
    let mut rows: alloc::vec::Vec<alloc::vec::Vec<BigInt>> =
        alloc::vec![alloc::vec::Vec::new(); deg_a + 1];
    for &(i, j, c) in terms {
        if rows[i].len() <= j {
            rows[i].resize(j + 1, BigInt::from(0));
        }
        rows[i][j] += BigInt::from(c);
    }
    Poly::new(rows.into_iter().map(ZPoly::new).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn system_matches_displays() {
        let (p, q) = fr_p3_system();
        let p_expect = bipoly_from_terms(&[
            (5, 0, 2),
            (4, 1, 3),
            (3, 2, 1),
            (2, 0, -5),
            (1, 1, -5),
            (0, 2, -1),
        ]);
        let q_expect = bipoly_from_terms(&[
            (4, 1, -1),
            (3, 2, -1),
            (2, 3, 1),
            (2, 0, -1),
            (1, 4, 1),
            (1, 1, -1),
            (0, 2, 1),
        ]);
        assert_eq!(p, p_expect);
        assert_eq!(q, q_expect);
        let at_one = |f: &BiPoly| f.eval_map(&BigInt::from(1), |c| c.eval(&BigInt::from(1)));
        assert_eq!(at_one(&p), BigInt::from(-5));
        assert_eq!(at_one(&q), BigInt::from(-1));
    }

    #[test]
    fn pipeline_gives_h() {
        let r = fr_p3_certify().unwrap();
        assert_eq!(
            r.monic.poly,
            ZPoly::from_i64s(&[162, -432, 504, -299, 60, 1])
        );
        assert_eq!(
            r.monic.reversal,
            Some((5, BigInt::from(6), BigInt::from(144)))
        );
        assert_eq!(r.certificate.conclusion, "S_5");
    }

    #[test]
    fn numeric_spacing_is_a_root() {
        let r = fr_p3_numeric(1e-13).unwrap();
        assert!((r.a[0] - r.a[1]).abs() < 1e-10);
        assert!(
            r.eliminant_at_b.abs() < 1e-8,
            "T(b) = {:e}",
            r.eliminant_at_b
        );
        assert!(r.system_at_ab.iter().all(|v| v.abs() < 1e-8));
    }
}
