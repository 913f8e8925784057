use alloc::format;
use alloc::vec::Vec;

use crate::galois::{
    computability_verdict, totient, Citation, ComputabilityVerdict, Evidence, Lemma, Model,
};
use crate::{Error, Result};

/// Quadratic and root-tree verdicts for packing `bipyr:k`. In the
/// concentric packing with the apexes as hubs, a rim centre sits at the
/// primitive `k`-th root of unity.
pub fn bipyr_verdicts(k: usize) -> Result<Vec<ComputabilityVerdict>> {
    if k < 3 {
        return Err(Error::InvalidArgument("bipyr needs k >= 3".into()));
    }
    let k64 = k as u64;
    let degree = totient(k64)?;
    let subject = format!(
        "rim centre zeta_{} of the concentric packing of bipyr:{}",
        k, k
    );
    let mut out = Vec::new();
    for model in [Model::Quadratic, Model::Root(None)] {
        let mut v = computability_verdict(
            Evidence::FieldDegree {
                degree,
                cyclotomic: Some(k64),
            },
            model,
            &subject,
        )?;
        v.justification.insert(
            0,
            Citation::new(
                Lemma::Concentric,
                format!(
                    "any packing of bipyr:{} maps to the one with concentric apex circles, whose rim centres are k-th roots of unity after scaling",
                    k
                ),
            ),
        );
        out.push(v);
    }
    Ok(out)
}
