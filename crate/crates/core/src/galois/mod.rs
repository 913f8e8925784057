//! Galois-group certification and computability verdicts.

pub mod certificate;
pub mod numtheory;
pub mod verdict;

pub use certificate::{
    dedekind_sample, search_sn_certificate, sn_label, verify_sn_certificate, PrimeWitness,
    Rejection, SearchOutcome, SnCertificate, DEFAULT_PRIME_BOUND,
};
pub use numtheory::{
    factor_bigint, factor_u64, format_factored, largest_prime_factor, phi_exponent_scan,
    sophie_germain_scan, totient, Factored, PhiExponent, PhiScan, PHI_EXPONENT_THRESHOLD,
};
pub use verdict::{
    certificate_chain, computability_verdict, Citation, ComputabilityVerdict, Conclusion, Evidence,
    Lemma, Model,
};
