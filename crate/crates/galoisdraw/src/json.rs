//! JSON documents for certificates, verdicts and command reports.
//!
//! Every big integer is a decimal string and every polynomial a coefficient
//! list in the text form of [`crate::polytext`]. Field order is fixed by the
//! struct definitions, so equal inputs give byte-identical output.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use galoisdraw_core::galois::{
    certificate_chain, factor_bigint, format_factored, verify_sn_certificate, ComputabilityVerdict,
    PrimeWitness, SnCertificate,
};
use galoisdraw_core::polyalg::{
    CycleType, FactorList, IrreducibilityMethod, IrreducibilityVerdict, IrreducibilityWitness,
};

use crate::polytext::{format_coeffs, parse_coeffs};

/// Brent-rho iterations spent on factoring a discriminant for display.
pub const DISCRIMINANT_FACTOR_BUDGET: u64 = 200_000;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateDoc {
    pub poly: String,
    pub degree: usize,
    pub discriminant: String,
    /// Prime-power form, present when the factorization finished.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub discriminant_factored: Option<String>,
    pub irreducibility: IrreducibilityDoc,
    pub primes: PrimesDoc,
    pub conclusion: String,
    pub lemmas: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IrreducibilityDoc {
    pub method: String,
    pub witnesses: WitnessDoc,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum WitnessDoc {
    None,
    NoRationalRoot,
    Factor {
        poly: String,
    },
    StackelPoints {
        points: Vec<i64>,
    },
    Prime {
        prime: u64,
    },
    Patterns {
        patterns: Vec<PatternDoc>,
    },
    Factorization {
        unit: String,
        factors: Vec<FactorDoc>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PatternDoc {
    pub prime: u64,
    pub degrees: Vec<usize>,
    pub squarefree: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FactorDoc {
    pub poly: String,
    pub multiplicity: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PrimesDoc {
    pub ncycle: NcycleDoc,
    pub transposition: TranspositionDoc,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NcycleDoc {
    pub p: u64,
    pub cycle_type: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TranspositionDoc {
    pub p: u64,
    pub cycle_type: Vec<usize>,
    pub power: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerdictDoc {
    pub model: String,
    pub subject: String,
    pub conclusion: String,
    pub justification: Vec<String>,
}

/// Output of every verb under `--json`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDoc {
    pub command: String,
    pub subject: String,
    pub data: Value,
    pub certificates: Vec<CertificateDoc>,
    pub verdicts: Vec<VerdictDoc>,
    pub notes: Vec<String>,
}

impl ReportDoc {
    pub fn new(command: &str, subject: &str) -> Self {
        ReportDoc {
            command: command.into(),
            subject: subject.into(),
            data: Value::Object(Default::default()),
            certificates: Vec::new(),
            verdicts: Vec::new(),
            notes: Vec::new(),
        }
    }
}

pub fn factored_string(n: &BigInt) -> Option<String> {
    format_factored(&factor_bigint(n, DISCRIMINANT_FACTOR_BUDGET))
}

fn witness_doc(w: &IrreducibilityWitness) -> WitnessDoc {
    match w {
        IrreducibilityWitness::None => WitnessDoc::None,
        IrreducibilityWitness::NoRationalRoot => WitnessDoc::NoRationalRoot,
        IrreducibilityWitness::Factor(f) => WitnessDoc::Factor {
            poly: format_coeffs(f),
        },
        IrreducibilityWitness::StackelPoints(ks) => {
            WitnessDoc::StackelPoints { points: ks.clone() }
        }
        IrreducibilityWitness::Prime(p) => WitnessDoc::Prime { prime: *p },
        IrreducibilityWitness::Patterns(ps) => WitnessDoc::Patterns {
            patterns: ps
                .iter()
                .map(|c| PatternDoc {
                    prime: c.prime,
                    degrees: c.degrees.clone(),
                    squarefree: c.squarefree,
                })
                .collect(),
        },
        IrreducibilityWitness::Factorization(fl) => WitnessDoc::Factorization {
            unit: fl.unit.to_string(),
            factors: fl
                .factors
                .iter()
                .map(|(f, m)| FactorDoc {
                    poly: format_coeffs(f),
                    multiplicity: *m,
                })
                .collect(),
        },
    }
}

pub fn certificate_doc(cert: &SnCertificate) -> CertificateDoc {
    CertificateDoc {
        poly: format_coeffs(&cert.poly),
        degree: cert.degree(),
        discriminant: cert.discriminant.to_string(),
        discriminant_factored: factored_string(&cert.discriminant),
        irreducibility: IrreducibilityDoc {
            method: cert.irreducibility.method.name().into(),
            witnesses: witness_doc(&cert.irreducibility.witness),
        },
        primes: PrimesDoc {
            ncycle: NcycleDoc {
                p: cert.ncycle.prime,
                cycle_type: cert.ncycle.cycle_type.clone(),
            },
            transposition: TranspositionDoc {
                p: cert.transposition.prime,
                cycle_type: cert.transposition.cycle_type.clone(),
                power: cert.power,
            },
        },
        conclusion: cert.conclusion.clone(),
        lemmas: certificate_chain(cert).iter().map(|c| c.render()).collect(),
    }
}

pub fn verdict_doc(v: &ComputabilityVerdict) -> VerdictDoc {
    VerdictDoc {
        model: v.model.name(),
        subject: v.subject.clone(),
        conclusion: v.conclusion.name(),
        justification: v.justification.iter().map(|c| c.render()).collect(),
    }
}

fn parse_int(field: &str, s: &str) -> Result<BigInt, String> {
    s.parse()
        .map_err(|_| format!("{}: '{}' is not a decimal integer", field, s))
}

fn parse_poly(field: &str, s: &str) -> Result<galoisdraw_core::exact::ZPoly, String> {
    if s.starts_with("file:") {
        return Err(format!("{}: file references are not allowed here", field));
    }
    parse_coeffs(s).map_err(|e| format!("{}: {}", field, e))
}

/// Rebuild the certificate a document describes. Only the shape is checked
/// here; [`verify_document`] checks the mathematics.
pub fn certificate_from_doc(doc: &CertificateDoc) -> Result<SnCertificate, String> {
    let poly = parse_poly("poly", &doc.poly)?;
    let method = IrreducibilityMethod::from_name(&doc.irreducibility.method).ok_or_else(|| {
        format!(
            "unknown irreducibility method '{}'",
            doc.irreducibility.method
        )
    })?;
    let witness = match &doc.irreducibility.witnesses {
        WitnessDoc::None => IrreducibilityWitness::None,
        WitnessDoc::NoRationalRoot => IrreducibilityWitness::NoRationalRoot,
        WitnessDoc::Factor { poly } => IrreducibilityWitness::Factor(parse_poly("witness", poly)?),
        WitnessDoc::StackelPoints { points } => {
            IrreducibilityWitness::StackelPoints(points.clone())
        }
        WitnessDoc::Prime { prime } => IrreducibilityWitness::Prime(*prime),
        WitnessDoc::Patterns { patterns } => IrreducibilityWitness::Patterns(
            patterns
                .iter()
                .map(|p| CycleType {
                    degrees: p.degrees.clone(),
                    prime: p.prime,
                    squarefree: p.squarefree,
                })
                .collect(),
        ),
        WitnessDoc::Factorization { unit, factors } => {
            let mut fs = Vec::with_capacity(factors.len());
            for f in factors {
                fs.push((parse_poly("witness factor", &f.poly)?, f.multiplicity));
            }
            IrreducibilityWitness::Factorization(FactorList {
                unit: parse_int("witness unit", unit)?,
                factors: fs,
            })
        }
    };
    Ok(SnCertificate {
        poly,
        irreducibility: IrreducibilityVerdict {
            irreducible: true,
            method,
            witness,
        },
        discriminant: parse_int("discriminant", &doc.discriminant)?,
        ncycle: PrimeWitness {
            prime: doc.primes.ncycle.p,
            cycle_type: doc.primes.ncycle.cycle_type.clone(),
        },
        transposition: PrimeWitness {
            prime: doc.primes.transposition.p,
            cycle_type: doc.primes.transposition.cycle_type.clone(),
        },
        power: doc.primes.transposition.power,
        conclusion: doc.conclusion.clone(),
    })
}

/// `-2^6 * 3^9 * 2341^2 * 2749` back to an integer.
fn eval_factored(s: &str) -> Option<BigInt> {
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let mut acc = BigInt::from(1);
    for part in body.split(" * ") {
        let (base, exp) = match part.split_once('^') {
            Some((b, e)) => (b, e.parse::<u32>().ok()?),
            None => (part, 1),
        };
        let b: BigInt = base.parse().ok()?;
        acc *= num_traits::pow(b, exp as usize);
    }
    Some(if neg { -acc } else { acc })
}

/// Full re-verification: the certificate itself, the stated degree, the
/// factored discriminant and the lemma chain.
pub fn verify_document(doc: &CertificateDoc) -> Result<(), String> {
    let cert = certificate_from_doc(doc)?;
    verify_sn_certificate(&cert).map_err(|r| r.to_string())?;
    if doc.degree != cert.degree() {
        return Err(format!(
            "degree {} does not match the polynomial ({})",
            doc.degree,
            cert.degree()
        ));
    }
    if let Some(f) = &doc.discriminant_factored {
        if eval_factored(f).as_ref() != Some(&cert.discriminant) {
            return Err(format!(
                "factored discriminant '{}' does not multiply out",
                f
            ));
        }
    }
    let chain: Vec<String> = certificate_chain(&cert)
        .iter()
        .map(|c| c.render())
        .collect();
    if doc.lemmas != chain {
        return Err("lemma chain does not match the certificate".into());
    }
    Ok(())
}

/// Certificates in a JSON value: a bare certificate or a report carrying a
/// `certificates` array.
pub fn certificates_in(v: &Value) -> Result<Vec<CertificateDoc>, String> {
    if let Some(arr) = v.get("certificates") {
        return serde_json::from_value(arr.clone()).map_err(|e| format!("certificates: {}", e));
    }
    serde_json::from_value(v.clone())
        .map(|d| vec![d])
        .map_err(|e| format!("not a certificate or report: {}", e))
}

pub fn to_pretty(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("documents serialize");
    s.push('\n');
    s
}
