//! Verdicts for the quadratic, radical and root computation-tree models.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::certificate::SnCertificate;
use super::numtheory::{is_power_of_two, largest_prime_factor, totient};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Model {
    /// Ruler and compass: square roots only.
    Quadratic,
    Radical,
    /// Roots of polynomials of degree at most `D`, when `D` is given.
    Root(Option<u64>),
}

impl Model {
    pub fn name(&self) -> String {
        match self {
            Model::Quadratic => "quadratic".into(),
            Model::Radical => "radical".into(),
            Model::Root(None) => "root".into(),
            Model::Root(Some(d)) => format!("root({})", d),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conclusion {
    Impossible,
    DegreeLowerBound(u64),
    Unknown,
}

impl Conclusion {
    pub fn name(&self) -> String {
        match self {
            Conclusion::Impossible => "impossible".into(),
            Conclusion::DegreeLowerBound(q) => format!("degree_lower_bound({})", q),
            Conclusion::Unknown => "unknown".into(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lemma {
    /// Irreducible polynomials have transitive Galois groups.
    Transitivity,
    Dedekind,
    SwapCycle,
    RadicalTree,
    Extensions,
    RootsOfUnity,
    Smoothness,
    /// A packing with two disjoint circles has a Möbius image in which they
    /// are concentric, so constructing any packing constructs that one.
    Concentric,
}

impl Lemma {
    pub fn name(self) -> &'static str {
        match self {
            Lemma::Transitivity => "irreducible-transitive",
            Lemma::Dedekind => "dedekind",
            Lemma::SwapCycle => "swap+cycle",
            Lemma::RadicalTree => "radical-tree",
            Lemma::Extensions => "extensions",
            Lemma::RootsOfUnity => "roots-of-unity",
            Lemma::Smoothness => "root-tree-smoothness",
            Lemma::Concentric => "concentric",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Citation {
    pub lemma: Lemma,
    pub detail: String,
}

impl Citation {
    pub fn new(lemma: Lemma, detail: String) -> Self {
        Citation { lemma, detail }
    }

    /// `lemma: detail`.
    pub fn render(&self) -> String {
        format!("{}: {}", self.lemma.name(), self.detail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComputabilityVerdict {
    pub model: Model,
    pub subject: String,
    pub conclusion: Conclusion,
    pub justification: Vec<Citation>,
}

#[derive(Clone, Copy, Debug)]
pub enum Evidence<'a> {
    /// `[Q(alpha):Q]`, optionally obtained as `phi(m)` for a primitive
    /// `m`-th root of unity.
    FieldDegree {
        degree: u64,
        cyclotomic: Option<u64>,
    },
    Certificate(&'a SnCertificate),
}

/// The lemma chain that turns a certificate into `Gal = S_n`.
pub fn certificate_chain(cert: &SnCertificate) -> Vec<Citation> {
    let n = cert.degree();
    vec![
        Citation::new(
            Lemma::Transitivity,
            format!(
                "irreducible by {}, so the group is transitive",
                cert.irreducibility.method.name()
            ),
        ),
        Citation::new(
            Lemma::Dedekind,
            format!(
                "p = {} gives cycle type {:?}, a cycle of length {}",
                cert.ncycle.prime,
                cert.ncycle.cycle_type,
                n - 1
            ),
        ),
        Citation::new(
            Lemma::Dedekind,
            format!(
                "p = {} gives cycle type {:?}; raised to the power {} it is a transposition",
                cert.transposition.prime, cert.transposition.cycle_type, cert.power
            ),
        ),
        Citation::new(
            Lemma::SwapCycle,
            format!(
                "transposition and {}-cycle generate {}",
                n - 1,
                cert.conclusion
            ),
        ),
    ]
}

fn degree_chain(degree: u64, cyclotomic: Option<u64>) -> Result<Vec<Citation>> {
    let mut chain = Vec::new();
    if let Some(m) = cyclotomic {
        let phi = totient(m)?;
        if phi != degree {
            return Err(Error::InvalidArgument(format!(
                "field degree {} is not phi({}) = {}",
                degree, m, phi
            )));
        }
        chain.push(Citation::new(
            Lemma::RootsOfUnity,
            format!("[Q(zeta_{}):Q] = phi({}) = {}", m, m, phi),
        ));
    }
    Ok(chain)
}

pub fn computability_verdict(
    evidence: Evidence<'_>,
    model: Model,
    subject: &str,
) -> Result<ComputabilityVerdict> {
    let (conclusion, justification) = match (model, evidence) {
        (Model::Quadratic, Evidence::FieldDegree { degree, cyclotomic }) => {
            if degree == 0 {
                return Err(Error::InvalidArgument("field degree 0".into()));
            }
            let mut chain = degree_chain(degree, cyclotomic)?;
            let c = if is_power_of_two(degree) {
                chain.push(Citation::new(
                    Lemma::Extensions,
                    format!("degree {} is a power of two; no obstruction", degree),
                ));
                Conclusion::Unknown
            } else {
                chain.push(Citation::new(
                    Lemma::Extensions,
                    format!("degree {} is not a power of two", degree),
                ));
                Conclusion::Impossible
            };
            (c, chain)
        }
        (Model::Root(bound), Evidence::FieldDegree { degree, cyclotomic }) => {
            if degree == 0 {
                return Err(Error::InvalidArgument("field degree 0".into()));
            }
            let mut chain = degree_chain(degree, cyclotomic)?;
            if degree == 1 {
                chain.push(Citation::new(
                    Lemma::Smoothness,
                    "degree 1 has no prime factor".into(),
                ));
                (Conclusion::Unknown, chain)
            } else {
                let q = largest_prime_factor(degree)?;
                chain.push(Citation::new(
                    Lemma::Smoothness,
                    format!(
                        "degree {} is not {}-smooth, so some root node needs degree >= {}",
                        degree,
                        q - 1,
                        q
                    ),
                ));
                let c = match bound {
                    Some(d) if d < q => Conclusion::Impossible,
                    _ => Conclusion::DegreeLowerBound(q),
                };
                (c, chain)
            }
        }
        (Model::Radical, Evidence::Certificate(cert)) => {
            let n = cert.degree();
            let mut chain = certificate_chain(cert);
            let c = if n >= 5 {
                chain.push(Citation::new(
                    Lemma::RadicalTree,
                    format!("{} is not solvable for n = {} >= 5", cert.conclusion, n),
                ));
                Conclusion::Impossible
            } else {
                chain.push(Citation::new(
                    Lemma::RadicalTree,
                    format!("{} is solvable; no obstruction", cert.conclusion),
                ));
                Conclusion::Unknown
            };
            (c, chain)
        }
        (m, _) => {
            return Err(Error::InvalidArgument(format!(
                "evidence kind does not match model {}",
                m.name()
            )))
        }
    };
    Ok(ComputabilityVerdict {
        model,
        subject: subject.into(),
        conclusion,
        justification,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ZPoly;
    use crate::galois::certificate::search_sn_certificate;

    #[test]
    fn heptagon_quadratic() {
        let v = computability_verdict(
            Evidence::FieldDegree {
                degree: 6,
                cyclotomic: Some(7),
            },
            Model::Quadratic,
            "C_7 vertex coordinates",
        )
        .unwrap();
        assert_eq!(v.conclusion, Conclusion::Impossible);
        assert_eq!(
            v.justification[0].render(),
            "roots-of-unity: [Q(zeta_7):Q] = phi(7) = 6"
        );
    }

    #[test]
    fn root_bound_for_23() {
        let v = computability_verdict(
            Evidence::FieldDegree {
                degree: 22,
                cyclotomic: Some(23),
            },
            Model::Root(None),
            "C_23",
        )
        .unwrap();
        assert_eq!(v.conclusion, Conclusion::DegreeLowerBound(11));
        let v = computability_verdict(
            Evidence::FieldDegree {
                degree: 22,
                cyclotomic: None,
            },
            Model::Root(Some(10)),
            "C_23",
        )
        .unwrap();
        assert_eq!(v.conclusion, Conclusion::Impossible);
    }

    #[test]
    fn radical_from_h() {
        let h = ZPoly::from_i64s(&[162, -432, 504, -299, 60, 1]);
        let out = search_sn_certificate(&h, 1000).unwrap();
        let cert = out.certificate().unwrap();
        let v =
            computability_verdict(Evidence::Certificate(cert), Model::Radical, "P_3 b").unwrap();
        assert_eq!(v.conclusion, Conclusion::Impossible);
        assert_eq!(v.justification.last().unwrap().lemma, Lemma::RadicalTree);
    }

    #[test]
    fn mismatches_and_bad_degrees() {
        let e = Evidence::FieldDegree {
            degree: 6,
            cyclotomic: None,
        };
        assert!(computability_verdict(e, Model::Radical, "x").is_err());
        let wrong = Evidence::FieldDegree {
            degree: 5,
            cyclotomic: Some(7),
        };
        assert!(computability_verdict(wrong, Model::Quadratic, "x").is_err());
    }

    #[test]
    fn powers_of_two_never_impossible() {
        for k in 0..=20 {
            let v = computability_verdict(
                Evidence::FieldDegree {
                    degree: 1 << k,
                    cyclotomic: None,
                },
                Model::Quadratic,
                "x",
            )
            .unwrap();
            assert_eq!(v.conclusion, Conclusion::Unknown);
        }
    }
}
