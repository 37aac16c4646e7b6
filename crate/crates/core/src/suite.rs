//! Named check suites over loaded documents, and the classification report.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::{admissible_pair, jmp_to_admissible, minus_algebra, plus_algebra, HomAlgebra, HomJMPAlgebra};
use crate::error::{Error, Result};
use crate::forms::{check_pseudo_euclidean_homjmp, check_triple_invariance, BilinearForm};
use crate::identity::checks::{
    check_admissible_jmp, check_condition_rl, check_hom_alternative, check_hom_flexible, check_hom_jmp,
    check_hom_jordan, check_hom_leibniz, check_hom_malcev, check_power_hom_associative, PowerMode,
};
use crate::identity::report::{CheckReport, Verdict};
use crate::io::{AlgebraDocument, Object};
use crate::triples::{check_hljp, check_hlts_axioms, hljp_from_homjmp, HomTripleSystem};

/// Degree bound and sample count of the sampled power check.
pub const POWER_MAX: usize = 6;
pub const POWER_SAMPLES: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    All,
    Flexible,
    Alternative,
    Jordan,
    Malcev,
    Leibniz,
    Jmp,
    Admissible,
    RlCondition,
    Power,
    Hlts,
    Hljp,
}

impl Suite {
    pub const NAMES: &'static [&'static str] = &[
        "all",
        "flexible",
        "alternative",
        "jordan",
        "malcev",
        "leibniz",
        "jmp",
        "admissible",
        "rl-condition",
        "power",
        "hlts",
        "hljp",
    ];

    const SINGLE: [Suite; 11] = [
        Suite::Flexible,
        Suite::Alternative,
        Suite::Jordan,
        Suite::Malcev,
        Suite::Leibniz,
        Suite::Jmp,
        Suite::Admissible,
        Suite::RlCondition,
        Suite::Power,
        Suite::Hlts,
        Suite::Hljp,
    ];
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let i = Suite::NAMES
            .iter()
            .position(|n| *n == s)
            .ok_or_else(|| Error::format("suite", format!("unknown suite {s:?}")))?;
        Ok(match i {
            0 => Suite::All,
            k => Suite::SINGLE[k - 1],
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = match self {
            Suite::All => 0,
            s => 1 + Suite::SINGLE.iter().position(|t| t == s).expect("listed"),
        };
        f.write_str(Suite::NAMES[i])
    }
}

fn renamed(mut r: CheckReport, name: &str) -> CheckReport {
    r.name = name.to_string();
    r
}

fn hlts_of_jmp(j: &HomJMPAlgebra) -> Result<CheckReport> {
    let malcev = check_hom_malcev(&j.bracket_algebra());
    if !malcev.passed() {
        return Ok(CheckReport::all("hom-lie triple system", vec![renamed(malcev, "hom-malcev (bracket)")]));
    }
    let t = crate::triples::triple_from_malcev(&j.bracket_algebra())?;
    Ok(check_hlts_axioms(&t))
}

fn hljp_of_jmp(j: &HomJMPAlgebra) -> Result<CheckReport> {
    let jmp = check_hom_jmp(j);
    if !jmp.passed() {
        return Ok(CheckReport::all("hom-lie-jordan-poisson triple system", vec![jmp]));
    }
    Ok(check_hljp(&hljp_from_homjmp(j)?))
}

fn power(a: &HomAlgebra, seed: u64) -> Result<CheckReport> {
    Ok(CheckReport::all(
        "power hom-associative",
        vec![
            check_power_hom_associative(a, PowerMode::Strict)?,
            check_power_hom_associative(
                a,
                PowerMode::Sampled {
                    max_power: POWER_MAX,
                    samples: POWER_SAMPLES,
                    seed,
                },
            )?,
        ],
    ))
}

fn on_algebra(a: &HomAlgebra, suite: Suite, seed: u64) -> Result<CheckReport> {
    let pair = admissible_pair(a);
    Ok(match suite {
        Suite::Flexible => check_hom_flexible(a),
        Suite::Alternative => check_hom_alternative(a),
        Suite::Jordan => renamed(check_hom_jordan(&plus_algebra(a)), "hom-jordan (plus algebra)"),
        Suite::Malcev => renamed(check_hom_malcev(&minus_algebra(a)), "hom-malcev (minus algebra)"),
        Suite::Leibniz => check_hom_leibniz(&pair),
        Suite::Jmp => check_hom_jmp(&pair),
        Suite::Admissible => check_admissible_jmp(a),
        Suite::RlCondition => check_condition_rl(a),
        Suite::Power => power(a, seed)?,
        Suite::Hlts => hlts_of_jmp(&pair)?,
        Suite::Hljp => hljp_of_jmp(&pair)?,
        Suite::All => unreachable!("expanded by the caller"),
    })
}

fn on_jmp(j: &HomJMPAlgebra, suite: Suite, seed: u64) -> Result<CheckReport> {
    let a = jmp_to_admissible(j);
    Ok(match suite {
        Suite::Jordan => renamed(check_hom_jordan(&j.jordan_algebra()), "hom-jordan (jordan product)"),
        Suite::Malcev => renamed(check_hom_malcev(&j.bracket_algebra()), "hom-malcev (bracket)"),
        Suite::Leibniz => check_hom_leibniz(j),
        Suite::Jmp => check_hom_jmp(j),
        Suite::Hlts => hlts_of_jmp(j)?,
        Suite::Hljp => hljp_of_jmp(j)?,
        Suite::Flexible
        | Suite::Alternative
        | Suite::Admissible
        | Suite::RlCondition
        | Suite::Power => on_algebra(&a, suite, seed)?,
        Suite::All => unreachable!("expanded by the caller"),
    })
}

fn on_triple(t: &HomTripleSystem, hljp: Option<&crate::triples::HLJPSystem>, suite: Suite) -> Result<CheckReport> {
    match (suite, hljp) {
        (Suite::Hlts, _) => Ok(check_hlts_axioms(t)),
        (Suite::Hljp, Some(s)) => Ok(check_hljp(s)),
        _ => Err(Error::Precondition(format!(
            "suite {suite} does not apply to this triple file"
        ))),
    }
}

fn suites_for(doc: &AlgebraDocument) -> Vec<Suite> {
    match &doc.object {
        Object::Algebra(_) | Object::Jmp(_) => Suite::SINGLE.to_vec(),
        Object::Triple(_) => vec![Suite::Hlts],
        Object::Hljp(_) => vec![Suite::Hlts, Suite::Hljp],
    }
}

fn form_report(doc: &AlgebraDocument, form: &BilinearForm) -> Result<CheckReport> {
    match &doc.object {
        Object::Algebra(a) => check_pseudo_euclidean_homjmp(&admissible_pair(a), form),
        Object::Jmp(j) => check_pseudo_euclidean_homjmp(j, form),
        Object::Triple(t) => check_triple_invariance(t, form, None),
        Object::Hljp(s) => check_triple_invariance(s.triple_system(), form, None),
    }
}

/// Runs one named suite. `All` runs every applicable suite plus the form
/// checks when the document carries a form.
pub fn run_suite(doc: &AlgebraDocument, suite: Suite, seed: u64) -> Result<CheckReport> {
    if suite == Suite::All {
        let mut subs = Vec::new();
        for s in suites_for(doc) {
            subs.push(run_suite(doc, s, seed)?);
        }
        if let Some(form) = &doc.form {
            subs.push(form_report(doc, form)?);
        }
        return Ok(CheckReport::all(format!("all ({})", doc.name), subs));
    }
    match &doc.object {
        Object::Algebra(a) => on_algebra(a, suite, seed),
        Object::Jmp(j) => on_jmp(j, suite, seed),
        Object::Triple(t) => on_triple(t, None, suite),
        Object::Hljp(s) => on_triple(s.triple_system(), Some(s), suite),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub property: String,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportDocument {
    pub name: String,
    pub kind: String,
    pub dim: usize,
    pub seed: u64,
    pub classification: Vec<Classification>,
    pub reports: Vec<CheckReport>,
}

impl ReportDocument {
    pub fn verdict(&self, property: &str) -> Option<Verdict> {
        self.classification
            .iter()
            .find(|c| c.property == property)
            .map(|c| c.verdict)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

fn property_name(suite: Suite, doc: &AlgebraDocument) -> &'static str {
    match (suite, &doc.object) {
        (Suite::Flexible, _) => "hom-flexible",
        (Suite::Alternative, _) => "hom-alternative",
        (Suite::Jordan, Object::Algebra(_)) => "hom-jordan (plus)",
        (Suite::Jordan, _) => "hom-jordan",
        (Suite::Malcev, Object::Algebra(_)) => "hom-malcev (minus)",
        (Suite::Malcev, _) => "hom-malcev",
        (Suite::Leibniz, _) => "hom-leibniz",
        (Suite::Jmp, _) => "hom-jmp",
        (Suite::Admissible, _) => "admissible hom-jmp",
        (Suite::RlCondition, _) => "rl-condition",
        (Suite::Power, _) => "power hom-associative",
        (Suite::Hlts, _) => "hom-lie triple system",
        (Suite::Hljp, _) => "hom-lie-jordan-poisson triple system",
        (Suite::All, _) => "all",
    }
}

/// Every applicable suite with its verdict. Deterministic in `seed`.
pub fn build_report(doc: &AlgebraDocument, seed: u64) -> Result<ReportDocument> {
    let mut classification = Vec::new();
    let mut reports = Vec::new();
    for suite in suites_for(doc) {
        let r = run_suite(doc, suite, seed)?;
        classification.push(Classification {
            property: property_name(suite, doc).to_string(),
            verdict: r.verdict,
        });
        reports.push(r);
    }
    if let Some(form) = &doc.form {
        let r = form_report(doc, form)?;
        classification.push(Classification {
            property: "pseudo-euclidean".to_string(),
            verdict: r.verdict,
        });
        reports.push(r);
    }
    Ok(ReportDocument {
        name: doc.name.clone(),
        kind: doc.object.kind().to_string(),
        dim: doc.dim(),
        seed,
        classification,
        reports,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::example;
    use std::collections::BTreeMap;

    #[test]
    fn suite_names_round_trip() {
        for name in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().to_string(), *name);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn zero_algebra_passes_all() {
        let doc = AlgebraDocument::new("zero3", Object::Algebra(HomAlgebra::zero(3)));
        assert!(run_suite(&doc, Suite::All, 0).unwrap().passed());
    }

    #[test]
    fn ex5_report() {
        let doc = example("ex5", &BTreeMap::new()).unwrap();
        let r = build_report(&doc, 7).unwrap();
        for p in ["hom-flexible", "rl-condition", "hom-jordan (plus)", "hom-leibniz", "power hom-associative"] {
            assert_eq!(r.verdict(p), Some(Verdict::Pass), "{p}");
        }
        // the tabulated bracket is not Malcev: e4 acts on the line of e3 by lambda
        for p in ["hom-malcev (minus)", "admissible hom-jmp"] {
            assert_eq!(r.verdict(p), Some(Verdict::Fail), "{p}");
        }
        assert_eq!(r.to_json(), build_report(&doc, 7).unwrap().to_json());
    }

    #[test]
    fn triple_rejects_binary_suites() {
        let t = HomTripleSystem::new(crate::linalg::Tensor4::zeros(2), crate::linalg::Matrix::identity(2)).unwrap();
        let doc = AlgebraDocument::new("t", Object::Triple(t));
        assert!(run_suite(&doc, Suite::Hlts, 0).unwrap().passed());
        assert!(run_suite(&doc, Suite::Flexible, 0).is_err());
    }
}
