//! From a graph matrix to per-factor Galois certificates.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::graph::Graph;
use super::matrix::{charpoly_exact, graph_matrix, rational_eigenvectors, ExactMatrix, MatrixKind};
use crate::exact::int::rational_primitive;
use crate::exact::{monic_associate, MonicAssociate, MonicStrategy, QPoly, ZPoly};
use crate::galois::{
    computability_verdict, search_sn_certificate, ComputabilityVerdict, Evidence, Model,
    SearchOutcome,
};
use crate::polyalg::factor_over_z;
use crate::Result;

#[derive(Clone, Debug, PartialEq)]
pub enum FactorAnalysis {
    /// Linear factor: a rational eigenvalue with its exact eigenvectors.
    Rational {
        root: BigRational,
        eigenvectors: Vec<Vec<BigInt>>,
    },
    Irreducible {
        monic: MonicAssociate,
        outcome: SearchOutcome,
        /// Radical verdict when a certificate was found.
        verdict: Option<ComputabilityVerdict>,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct FactorReport {
    /// Primitive with positive leading coefficient.
    pub factor: ZPoly,
    pub multiplicity: u32,
    pub analysis: FactorAnalysis,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectralReport {
    pub kind: MatrixKind,
    pub matrix: ExactMatrix,
    pub charpoly: QPoly,
    /// `charpoly = content * primitive`.
    pub content: BigRational,
    pub primitive: ZPoly,
    pub factors: Vec<FactorReport>,
    /// Disagreements between recorded group claims and what was certified.
    pub notes: Vec<String>,
}

impl SpectralReport {
    /// Certificates found, in factor order.
    pub fn certificates(&self) -> impl Iterator<Item = &crate::galois::SnCertificate> {
        self.factors.iter().filter_map(|f| match &f.analysis {
            FactorAnalysis::Irreducible { outcome, .. } => outcome.certificate(),
            FactorAnalysis::Rational { .. } => None,
        })
    }
}

/// Group claims recorded for named graphs, checked against the certifier.
struct Claim {
    graph: &'static str,
    kind: &'static str,
    degree: usize,
    group: &'static str,
}

const CLAIMS: [Claim; 2] = [
    Claim {
        graph: "h12",
        kind: "adjacency",
        degree: 6,
        group: "S_8",
    },
    Claim {
        graph: "y9",
        kind: "rlaplacian(1)",
        degree: 8,
        group: "S_8",
    },
];

fn claim_notes(g: &Graph, kind: &MatrixKind, factors: &[FactorReport]) -> Vec<String> {
    let mut notes = Vec::new();
    let Some(name) = g.name.as_deref() else {
        return notes;
    };
    let kind_name = kind.name();
    for c in CLAIMS
        .iter()
        .filter(|c| c.graph == name && c.kind == kind_name)
    {
        let label_n: Option<usize> = c.group.strip_prefix("S_").and_then(|s| s.parse().ok());
        let certified: Vec<String> = factors
            .iter()
            .filter(|f| f.factor.deg() == c.degree)
            .filter_map(|f| match &f.analysis {
                FactorAnalysis::Irreducible { outcome, .. } => {
                    outcome.certificate().map(|cert| cert.conclusion.clone())
                }
                FactorAnalysis::Rational { .. } => None,
            })
            .collect();
        if label_n != Some(c.degree) {
            notes.push(format!(
                "recorded claim {} for a degree-{} factor of {} {} is inconsistent with the degree; certified {}",
                c.group,
                c.degree,
                name,
                kind_name,
                if certified.is_empty() { "nothing".into() } else { certified.join(", ") }
            ));
        } else if !certified.iter().any(|s| s == c.group) {
            let degrees: Vec<String> = factors
                .iter()
                .map(|f| format!("{}^{}", f.factor.deg(), f.multiplicity))
                .collect();
            notes.push(format!(
                "recorded claim {} for {} {} not reproduced: no irreducible degree-{} factor certified (factor degrees {})",
                c.group,
                name,
                kind_name,
                c.degree,
                degrees.join(" ")
            ));
        }
    }
    notes
}

/// Characteristic polynomial, factorization over `Z`, and a certificate
/// search for each nonlinear factor.
pub fn spectral_certify(g: &Graph, kind: &MatrixKind, prime_bound: u64) -> Result<SpectralReport> {
    let matrix = graph_matrix(g, kind)?;
    let charpoly = charpoly_exact(&matrix)?;
    let (content, primitive) = rational_primitive(&charpoly)?;
    let fl = factor_over_z(&primitive)?;
    let mut factors = Vec::new();
    for (f, m) in fl.factors {
        let analysis = if f.deg() == 1 {
            let root = BigRational::new(-f.coeff(0), f.coeff(1));
            let eigenvectors = rational_eigenvectors(&matrix, &root)?;
            FactorAnalysis::Rational { root, eigenvectors }
        } else {
            let monic = monic_associate(&f, MonicStrategy::ConstantScale)?;
            let outcome = search_sn_certificate(&monic.poly, prime_bound)?;
            let verdict = match outcome.certificate() {
                Some(cert) => Some(computability_verdict(
                    Evidence::Certificate(cert),
                    Model::Radical,
                    &format!(
                        "eigenvalues of {} that are roots of the degree-{} factor",
                        kind.name(),
                        f.deg()
                    ),
                )?),
                None => None,
            };
            FactorAnalysis::Irreducible {
                monic,
                outcome,
                verdict,
            }
        };
        factors.push(FactorReport {
            factor: f,
            multiplicity: m,
            analysis,
        });
    }
    factors.sort_by(|a, b| {
        a.factor
            .deg()
            .cmp(&b.factor.deg())
            .then_with(|| a.factor.coeffs().cmp(b.factor.coeffs()))
    });
    let notes = claim_notes(g, kind, &factors);
    Ok(SpectralReport {
        kind: kind.clone(),
        matrix,
        charpoly,
        content,
        primitive,
        factors,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::Conclusion;
    use crate::graphlab::graph::{build_graph, GraphSpec};
    use num_traits::Zero;

    #[test]
    fn y9_laplacian_report() {
        let y = build_graph(&GraphSpec::Y9).unwrap();
        let r = spectral_certify(&y, &MatrixKind::Laplacian, 1000).unwrap();
        assert_eq!(r.factors.len(), 2);
        let FactorAnalysis::Rational { root, .. } = &r.factors[0].analysis else {
            panic!("expected eigenvalue 0");
        };
        assert!(root.is_zero());
        let FactorAnalysis::Irreducible {
            outcome, verdict, ..
        } = &r.factors[1].analysis
        else {
            panic!("expected octic");
        };
        let cert = outcome.certificate().unwrap();
        assert_eq!((cert.ncycle.prime, cert.transposition.prime), (31, 41));
        assert_eq!(verdict.as_ref().unwrap().conclusion, Conclusion::Impossible);
        assert!(r.notes.is_empty());
    }

    #[test]
    fn h12_adjacency_flags_claim() {
        let h = build_graph(&GraphSpec::H12).unwrap();
        let r = spectral_certify(&h, &MatrixKind::Adjacency, 1000).unwrap();
        let certs: Vec<_> = r.certificates().collect();
        assert_eq!(certs.len(), 2);
        assert!(certs.iter().all(|c| c.conclusion == "S_6"));
        assert_eq!(r.notes.len(), 1);
        assert!(r.notes[0].contains("S_8"));
    }
}
