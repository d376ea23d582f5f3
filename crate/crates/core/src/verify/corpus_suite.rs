//! Oracle equivalences and identity suites over a seeded random corpus.

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::identities::{verify_adjoint_identities, verify_core_identities, PolynomialForms};
use super::{Recorder, VerificationReport};
use crate::adjoint::adjoint;
use crate::corpus::{generic_element, random_complete_ideal, CorpusSpec};
use crate::error::{Error, Result};
use crate::local::{truncation_certificate, LocalPolynomial, PolynomialIdeal, TruncationCertificate, DEFAULT_TRUNCATION_CAP};
use crate::newton::{howald_adjoint, integral_closure, mixed_e1, multiplicity};
use crate::staircase::MonomialIdeal;
use crate::transform::{hd_colength, hd_mixed_e1, hd_multiplicity};

/// Random draws tried before giving up on a generic joint reduction.
const JOINT_REDUCTION_ATTEMPTS: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpusSuiteOptions {
    pub seed: u64,
    /// Ideals checked against the oracles.
    pub count: usize,
    /// Pairs run through the identity suites.
    pub pairs: usize,
    pub r_max: u32,
    pub s_max: u32,
    pub cap: u64,
}

impl CorpusSuiteOptions {
    pub fn new(seed: u64, count: usize) -> Self {
        CorpusSuiteOptions { seed, count, pairs: 50, r_max: 3, s_max: 3, cap: DEFAULT_TRUNCATION_CAP }
    }
}

fn tag(reports: Vec<VerificationReport>, key: &str, value: i64) -> Vec<VerificationReport> {
    reports
        .into_iter()
        .map(|mut r| {
            r.params.insert(key.into(), value);
            r
        })
        .collect()
}

/// A generic element pair `{a, b}` with `e(a, b) = e₁(I|J)`, the
/// certificate of `(a, b)` and `e(a, b)`.
fn certified_joint_reduction(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    rng: &mut ChaCha8Rng,
    cap: u64,
) -> Result<(TruncationCertificate, BigInt)> {
    let target = mixed_e1(i, j)?;
    for _ in 0..JOINT_REDUCTION_ATTEMPTS {
        let (a, b) = (generic_element(i, rng), generic_element(j, rng));
        let cert = match truncation_certificate(&PolynomialIdeal::pair(&a, &b)?, cap) {
            Ok(cert) => cert,
            Err(Error::NotCertified { .. }) => continue,
            Err(e) => return Err(e),
        };
        if cert.colength() == target {
            let e = cert.colength();
            return Ok((cert, e));
        }
    }
    Err(Error::Invariant(format!("no joint reduction of `{i}` and `{j}` found among random draws")))
}

/// Number of generators of the closure of `IJ` lying in `(a, b)`, and the
/// number of generators.
fn rees_sally_counts(i: &MonomialIdeal, j: &MonomialIdeal, cert: &TruncationCertificate) -> Result<(i64, i64)> {
    let closure = integral_closure(&i.product(j))?;
    let inside = closure.generators().iter().filter(|&&g| cert.contains(&LocalPolynomial::monomial(g))).count();
    Ok((inside as i64, closure.num_min_gens() as i64))
}

/// Every corpus ideal against the independent oracles, then the first
/// `pairs` disjoint pairs through the adjoint and core identity suites and
/// the Rees–Sally containment for a random certified joint reduction.
pub fn corpus_suite(opts: &CorpusSuiteOptions) -> Result<Vec<VerificationReport>> {
    if opts.count == 0 {
        return Err(Error::InvalidParameter("count must be positive".into()));
    }
    if 2 * opts.pairs > opts.count {
        return Err(Error::InvalidParameter(format!("{} pairs need at least {} ideals", opts.pairs, 2 * opts.pairs)));
    }
    let ideals = random_complete_ideal(&CorpusSpec::new(opts.seed, opts.count));
    let mut rec = Recorder::default();
    for (k, ideal) in ideals.iter().enumerate() {
        let p = [("ideal", k as i64)];
        rec.check("oracle.hd_colength", &p, || Ok((hd_colength(ideal)?, ideal.colength()?)));
        rec.check("oracle.hd_multiplicity", &p, || Ok((hd_multiplicity(ideal)?, multiplicity(ideal)?)));
        rec.check("oracle.adjoint", &p, || Ok((adjoint(ideal)?, howald_adjoint(ideal)?)));
    }
    for (k, w) in ideals.windows(2).enumerate() {
        rec.check("oracle.hd_mixed_e1", &[("pair", k as i64)], || Ok((hd_mixed_e1(&w[0], &w[1])?, mixed_e1(&w[0], &w[1])?)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed.wrapping_add(1));
    let forms = PolynomialForms::default();
    for k in 0..opts.pairs {
        let (i, j) = (&ideals[2 * k], &ideals[2 * k + 1]);
        let pk = k as i64;
        rec.extend(tag(verify_adjoint_identities(i, j, opts.r_max, opts.s_max, &forms), "pair", pk));
        rec.extend(tag(verify_core_identities(i, j, opts.r_max, opts.s_max, &forms), "pair", pk));
        let mut reduction = None;
        rec.check("rees_sally.joint_reduction", &[("pair", pk)], || {
            let (cert, e) = certified_joint_reduction(i, j, &mut rng, opts.cap)?;
            reduction = Some(cert);
            Ok((e, mixed_e1(i, j)?))
        });
        rec.check("rees_sally.containment", &[("pair", pk)], || match &reduction {
            Some(cert) => rees_sally_counts(i, j, cert),
            None => Err(Error::Invariant("no certified joint reduction".into())),
        });
    }
    Ok(rec.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::all_passed;

    #[test]
    fn small_corpus_passes() {
        let opts = CorpusSuiteOptions { seed: 1, count: 6, pairs: 2, r_max: 2, s_max: 2, cap: DEFAULT_TRUNCATION_CAP };
        let reports = corpus_suite(&opts).unwrap();
        let failed: Vec<_> = reports.iter().filter(|r| !r.passed).collect();
        assert!(failed.is_empty(), "{failed:#?}");
        assert!(all_passed(&reports));
    }

    #[test]
    fn rejects_too_few_ideals() {
        assert!(corpus_suite(&CorpusSuiteOptions::new(1, 10)).is_err());
    }
}
