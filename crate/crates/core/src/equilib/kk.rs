//! Kamada–Kawai equilibrium of the four-vertex graph `kk4`.
//!
//! The polynomial `p(c)` satisfied by the vertical offset `c` and its
//! monic degree-14 associate `g` are stored data; this module re-derives
//! `g` from `p`, certifies it and checks `p` against a numeric solve.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Float, ToPrimitive, Zero};

use super::forces::{ForceModel, Layout};
use super::solver::numeric_equilibrium;
use crate::exact::int::z_divrem;
use crate::exact::{monic_associate, MonicAssociate, MonicStrategy, ZPoly};
use crate::galois::{
    computability_verdict, search_sn_certificate, ComputabilityVerdict, Evidence, Model,
    SnCertificate, DEFAULT_PRIME_BOUND,
};
use crate::graphlab::{build_graph, GraphSpec};
use crate::{Error, Result};

/// `p(c)`, lowest degree first.
pub const KK_P: [&str; 19] = [
    "0",
    "0",
    "0",
    "0",
    "167184",
    "-83177280",
    "11493047016",
    "-317453745456",
    "4535144373717",
    "-40028929618536",
    "234371204926092",
    "-947252378063088",
    "2703932242407045",
    "-5501379135910008",
    "7939897360159392",
    "-7950536566252800",
    "5257074184960000",
    "-2065812736000000",
    "365580800000000",
];

/// `g(x) = x^14 f(258/x) / 167184`, lowest degree first.
pub const KK_G: [&str; 15] = [
    "12660899181603462048518168020372684800000000",
    "-277301626082465808611849917345431552000000",
    "2735179704826314422602131722817699840000",
    "-16033136614269762618278694793639526400",
    "62060780922813932272692806330099712",
    "-166668765204034179394613907054336",
    "317510974076480215971285088080",
    "-431130685015107552530542464",
    "413454551042624579937072",
    "-273701889217560990672",
    "120191907907039173",
    "-32609554186008",
    "4575935386",
    "-128360",
    "1",
];

fn parse(cs: &[&str]) -> ZPoly {
    ZPoly::new(
        cs.iter()
            .map(|s| s.parse::<BigInt>().expect("stored decimal"))
            .collect(),
    )
}

pub fn kk_p() -> ZPoly {
    parse(&KK_P)
}

pub fn kk_g_stored() -> ZPoly {
    parse(&KK_G)
}

#[derive(Clone, Debug, PartialEq)]
pub struct KkReport {
    pub p: ZPoly,
    /// `p / c^4`.
    pub f: ZPoly,
    pub monic: MonicAssociate,
    /// Whether `monic.poly` equals the stored `g` coefficient for
    /// coefficient.
    pub matches_stored: bool,
    pub certificate: SnCertificate,
    pub verdict: ComputabilityVerdict,
}

pub fn kk_certify() -> Result<KkReport> {
    let p = kk_p();
    let c4 = ZPoly::monomial(BigInt::from(1), 4);
    let d = z_divrem(&p, &c4)?;
    if !d.remainder.is_zero() {
        return Err(Error::Pipeline("c^4 does not divide p".into()));
    }
    let f = d.quotient;
    if f.coeff(0).is_zero() {
        return Err(Error::Pipeline("p has a higher power of c".into()));
    }
    let monic = monic_associate(&f, MonicStrategy::MinimalScale)?;
    let matches_stored = monic.poly == kk_g_stored();
    let outcome = search_sn_certificate(&monic.poly, DEFAULT_PRIME_BOUND)?;
    let certificate = outcome
        .certificate()
        .cloned()
        .ok_or_else(|| Error::Pipeline("no S_n certificate for g".into()))?;
    let verdict = computability_verdict(
        Evidence::Certificate(&certificate),
        Model::Radical,
        "vertical offset c of the KK equilibrium of kk4",
    )?;
    Ok(KkReport {
        p,
        f,
        monic,
        matches_stored,
        certificate,
        verdict,
    })
}

/// Numeric KK equilibrium of `kk4` and the quantities read off it.
#[derive(Clone, Debug, PartialEq)]
pub struct KkNumeric {
    pub layout: Layout,
    /// Distance from `u2` to the line through `u0` and `u1`.
    pub c: f64,
    /// `|cos|` of the angle between `u0 u1` and `u2 u3`.
    pub right_angle_defect: f64,
    /// `p(c)` evaluated exactly at the double `c`.
    pub p_at_c: f64,
}

/// Starting layout shaped like the expected drawing: `u0, u1` on a
/// horizontal line, `u2, u3` above and below to the right of `u1`.
pub fn kk4_initial_layout() -> Layout {
    Layout::new(alloc::vec![
        [-1.0, 0.0],
        [0.0, 0.0],
        [0.8, 0.6],
        [0.8, -0.6]
    ])
}

pub fn kk_numeric(tol: f64) -> Result<KkNumeric> {
    let g = build_graph(&GraphSpec::Kk4)?;
    let layout = numeric_equilibrium(&g, &ForceModel::kamada_kawai(), &kk4_initial_layout(), tol)?;
    let p = &layout.positions;
    let (ex, ey) = (p[1][0] - p[0][0], p[1][1] - p[0][1]);
    let norm = Float::hypot(ex, ey);
    let (ux, uy) = (ex / norm, ey / norm);
    let c = ((p[2][0] - p[1][0]) * -uy + (p[2][1] - p[1][1]) * ux).abs();
    let (sx, sy) = (p[3][0] - p[2][0], p[3][1] - p[2][1]);
    let right_angle_defect = ((sx * ux + sy * uy) / Float::hypot(sx, sy)).abs();
    let p_at_c = eval_exact(&kk_p(), c);
    Ok(KkNumeric {
        layout,
        c,
        right_angle_defect,
        p_at_c,
    })
}

/// `f(x)` computed in exact rational arithmetic at the double `x`, then
/// rounded.
pub fn eval_exact(f: &ZPoly, x: f64) -> f64 {
    let xr = BigRational::from_float(x).expect("finite");
    let v = f.eval_map(&xr, |c| BigRational::from_integer(c.clone()));
    v.to_f64().unwrap_or(f64::NAN)
}

/// Coefficients as decimal strings, lowest degree first.
pub fn decimal_coeffs(f: &ZPoly) -> Vec<alloc::string::String> {
    use alloc::string::ToString;
    f.coeffs().iter().map(|c| c.to_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stored_p_has_c4() {
        let p = kk_p();
        assert_eq!(p.deg(), 18);
        assert_eq!(p.x_valuation(), 4);
    }

    #[test]
    fn certify_reproduces_g() {
        let r = kk_certify().unwrap();
        assert_eq!(r.f.deg(), 14);
        assert!(r.matches_stored);
        assert_eq!(
            r.monic.reversal,
            Some((14, BigInt::from(258), BigInt::from(167184)))
        );
        assert_eq!(r.certificate.conclusion, "S_14");
        assert_eq!(
            (
                r.certificate.ncycle.prime,
                r.certificate.transposition.prime
            ),
            (67, 113)
        );
    }

    #[test]
    fn numeric_c() {
        let r = kk_numeric(1e-13).unwrap();
        assert!((r.c - 0.498597100445440).abs() < 1e-10, "c = {}", r.c);
        assert!(r.right_angle_defect < 1e-9);
        assert!(r.p_at_c.abs() < 1e-6, "p(c) = {:e}", r.p_at_c);
    }
}
