use serde::{Serialize, Serializer};

use crate::linalg::{Scalar, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// Inputs at which an identity was found not to vanish.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Basis indices when the inputs are basis vectors (0-based).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<usize>>,
    #[serde(serialize_with = "serialize_vectors")]
    pub inputs: Vec<Vector>,
    #[serde(serialize_with = "serialize_vector")]
    pub residual: Vector,
}

/// A consequence the verdict is required to agree with, evaluated independently.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossCheck {
    pub claim: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub tuples_checked: u64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub tags: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub cross_checks: Vec<CrossCheck>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub sub_reports: Vec<CheckReport>,
}

impl CheckReport {
    pub fn pass(name: impl Into<String>, tuples_checked: u64) -> Self {
        CheckReport {
            name: name.into(),
            verdict: Verdict::Pass,
            witness: None,
            tuples_checked,
            tags: Vec::new(),
            cross_checks: Vec::new(),
            sub_reports: Vec::new(),
        }
    }

    pub fn fail(name: impl Into<String>, witness: Witness, tuples_checked: u64) -> Self {
        CheckReport {
            verdict: Verdict::Fail,
            witness: Some(witness),
            ..CheckReport::pass(name, tuples_checked)
        }
    }

    /// Conjunction of sub-reports; the first failing one supplies the witness.
    pub fn all(name: impl Into<String>, subs: Vec<CheckReport>) -> Self {
        let failing = subs.iter().find(|r| !r.passed());
        CheckReport {
            name: name.into(),
            verdict: if failing.is_some() {
                Verdict::Fail
            } else {
                Verdict::Pass
            },
            witness: failing.and_then(|r| r.witness.clone()),
            tuples_checked: subs.iter().map(|r| r.tuples_checked).sum(),
            tags: Vec::new(),
            cross_checks: Vec::new(),
            sub_reports: subs,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn with_cross_check(mut self, claim: impl Into<String>, holds: bool) -> Self {
        self.cross_checks.push(CrossCheck {
            claim: claim.into(),
            holds,
        });
        self
    }

    pub fn with_tag(mut self, tag: impl Into<String>) -> Self {
        self.tags.push(tag.into());
        self
    }

    /// Every cross-check in this report and its sub-reports holds.
    pub fn cross_checks_hold(&self) -> bool {
        self.cross_checks.iter().all(|c| c.holds)
            && self.sub_reports.iter().all(CheckReport::cross_checks_hold)
    }

    /// Depth-first search for a sub-report by name.
    pub fn find(&self, name: &str) -> Option<&CheckReport> {
        if self.name == name {
            return Some(self);
        }
        self.sub_reports.iter().find_map(|r| r.find(name))
    }
}

pub(crate) fn serialize_vector<S: Serializer>(v: &[Scalar], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

fn serialize_vectors<S: Serializer>(vs: &[Vector], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(vs.iter().map(|v| v.iter().map(ToString::to_string).collect::<Vec<_>>()))
}
