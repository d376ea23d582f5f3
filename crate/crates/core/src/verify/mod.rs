//! Identity-checking suites.
//!
//! Every suite returns one [`VerificationReport`] per claim and parameter
//! tuple. A claim that fails, or whose computation hits an internal error, is
//! reported rather than raised; only invalid suite parameters produce `Err`.
//! Reports come back sorted by `(claim_id, params)`.
//!
//! Containment claims `A ⊆ B` are reported as the equality `A + B = B`, so
//! `passed` always means `lhs == rhs`.

mod corpus_suite;
mod examples;
mod identities;

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::staircase::MonomialIdeal;

pub use corpus_suite::{corpus_suite, CorpusSuiteOptions};
pub use examples::{family_suite, family_suite_upto, fixed_pair_suite, fixed_pair_suite_upto};
pub use identities::{
    binomial_identity, verify_adjoint_identities, verify_core_identities, verify_hd, JointReduction, PolynomialForms,
};

/// One side of a claim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Int(BigInt),
    /// Canonical generator string of a monomial ideal.
    Ideal(String),
    /// Anything else, including the message of an internal error.
    Text(String),
}

impl From<BigInt> for Value {
    fn from(v: BigInt) -> Self {
        Value::Int(v)
    }
}

impl From<i64> for Value {
    fn from(v: i64) -> Self {
        Value::Int(v.into())
    }
}

impl From<&MonomialIdeal> for Value {
    fn from(m: &MonomialIdeal) -> Self {
        Value::Ideal(m.to_string())
    }
}

impl From<MonomialIdeal> for Value {
    fn from(m: MonomialIdeal) -> Self {
        Value::from(&m)
    }
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Text(b.to_string())
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Ideal(s) => write!(f, "({s})"),
            Value::Text(s) => write!(f, "{s}"),
        }
    }
}

impl Serialize for Value {
    /// Integers that fit an `i64` become JSON numbers, larger ones decimal
    /// strings; ideals and text are strings.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Value::Int(v) => match v.to_i64() {
                Some(small) => serializer.serialize_i64(small),
                None => serializer.collect_str(v),
            },
            Value::Ideal(s) | Value::Text(s) => serializer.serialize_str(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub claim_id: String,
    pub params: BTreeMap<String, i64>,
    pub lhs: Value,
    pub rhs: Value,
    pub passed: bool,
    pub runtime_ms: u64,
}

impl VerificationReport {
    pub fn new(claim_id: impl Into<String>, params: BTreeMap<String, i64>, lhs: Value, rhs: Value) -> Self {
        let passed = lhs == rhs;
        VerificationReport { claim_id: claim_id.into(), params, lhs, rhs, passed, runtime_ms: 0 }
    }

    fn sort_key(&self) -> (&str, &BTreeMap<String, i64>) {
        (&self.claim_id, &self.params)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(
            f,
            "{} {:<40} {:<24} lhs={} rhs={}",
            if self.passed { "PASS" } else { "FAIL" },
            self.claim_id,
            params.join(","),
            self.lhs,
            self.rhs
        )
    }
}

pub fn all_passed(reports: &[VerificationReport]) -> bool {
    reports.iter().all(|r| r.passed)
}

/// Zeroes `runtime_ms`, the only field that varies between identical runs.
pub fn strip_timing(reports: &mut [VerificationReport]) {
    for r in reports {
        r.runtime_ms = 0;
    }
}

pub fn to_json(reports: &[VerificationReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

/// Collects reports, timing each claim and turning errors into failures.
#[derive(Debug, Default)]
pub(crate) struct Recorder {
    reports: Vec<VerificationReport>,
}

pub(crate) fn params(pairs: &[(&str, i64)]) -> BTreeMap<String, i64> {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

impl Recorder {
    pub(crate) fn check<L, R>(&mut self, claim: &str, p: &[(&str, i64)], f: impl FnOnce() -> Result<(L, R)>)
    where
        L: Into<Value>,
        R: Into<Value>,
    {
        let start = Instant::now();
        let (lhs, rhs) = match f() {
            Ok((l, r)) => (l.into(), r.into()),
            Err(e) => (Value::Text(format!("error: {e}")), Value::Text("no error".into())),
        };
        let mut report = VerificationReport::new(claim, params(p), lhs, rhs);
        report.runtime_ms = start.elapsed().as_millis() as u64;
        self.reports.push(report);
    }

    /// `a ⊆ b`, reported as `a + b = b`.
    pub(crate) fn containment(
        &mut self,
        claim: &str,
        p: &[(&str, i64)],
        f: impl FnOnce() -> Result<(MonomialIdeal, MonomialIdeal)>,
    ) {
        self.check(claim, p, || {
            let (a, b) = f()?;
            Ok((a.sum(&b), b))
        });
    }

    pub(crate) fn extend(&mut self, reports: Vec<VerificationReport>) {
        self.reports.extend(reports);
    }

    pub(crate) fn finish(mut self) -> Vec<VerificationReport> {
        self.reports.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        self.reports
    }
}
