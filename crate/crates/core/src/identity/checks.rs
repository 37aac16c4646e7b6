//! Decision procedures for the identity classes.
//!
//! Multilinear identities are decided by evaluating on every tuple of basis
//! vectors. Identities of higher degree in `x` are polarized first, so a pass
//! is a proof over the rationals, not a sampling estimate.

use std::sync::LazyLock;

use crate::algebra::{admissible_pair, minus_algebra, HomAlgebra, HomJMPAlgebra, PowerTable, ProductKind::*, Structure};
use crate::error::{Error, Result};
use crate::linalg::{self, Vector};
use crate::random;

use super::expr::IdentityExpr;
use super::library as lib;
use super::multilinear::{basis, polarize, scan_basis_tuples, MultilinearIdentity, Scan};
use super::report::{CheckReport, Witness};

/// The compiled identities every checker uses.
pub struct Identities {
    pub commutative: MultilinearIdentity,
    pub skewsymmetric: MultilinearIdentity,
    pub hom_associative: MultilinearIdentity,
    pub flexible: MultilinearIdentity,
    pub left_alternative: MultilinearIdentity,
    pub right_alternative: MultilinearIdentity,
    pub hom_jordan: MultilinearIdentity,
    pub hom_malcev: MultilinearIdentity,
    pub hom_leibniz: MultilinearIdentity,
    pub hom_leibniz_skew: MultilinearIdentity,
    pub flexible_characterization: MultilinearIdentity,
    pub rl_condition: MultilinearIdentity,
    pub third_power: MultilinearIdentity,
    pub fourth_power: MultilinearIdentity,
    pub cyclic_lemma: MultilinearIdentity,
    pub minus_jacobiator_on_square: MultilinearIdentity,
    pub associator_equals_plus: MultilinearIdentity,
}

impl Identities {
    /// The identities that are polarized in `x`, with their degrees.
    pub fn polarized(&self) -> Vec<(&MultilinearIdentity, u32)> {
        vec![
            (&self.hom_jordan, 3),
            (&self.hom_malcev, 2),
            (&self.rl_condition, 3),
            (&self.third_power, 3),
            (&self.fourth_power, 4),
            (&self.minus_jacobiator_on_square, 3),
            (&self.associator_equals_plus, 3),
        ]
    }
}

fn lin(name: &str, e: IdentityExpr) -> MultilinearIdentity {
    MultilinearIdentity::linear(name, e).expect("built-in identity is multilinear")
}

fn pol(name: &str, e: IdentityExpr, degree: u32) -> MultilinearIdentity {
    polarize(&e, 0, degree)
        .expect("built-in identity is homogeneous in x")
        .named(name)
}

static IDENTITIES: LazyLock<Identities> = LazyLock::new(|| Identities {
    commutative: lin("commutative", lib::commutativity(Main)),
    skewsymmetric: lin("skewsymmetric", lib::skewsymmetry(Main)),
    hom_associative: lin("hom-associative", lib::hom_associativity(Main)),
    flexible: lin("hom-flexible", lib::flexible(Main)),
    left_alternative: lin("left hom-alternative", lib::left_alternative(Main)),
    right_alternative: lin("right hom-alternative", lib::right_alternative(Main)),
    hom_jordan: pol("hom-jordan identity (polarized)", lib::hom_jordan(Main), 3),
    hom_malcev: pol("hom-malcev identity (polarized)", lib::hom_malcev(Main), 2),
    hom_leibniz: lin("hom-leibniz", lib::hom_leibniz()),
    hom_leibniz_skew: lin("hom-leibniz (skew form)", lib::hom_leibniz_skew()),
    flexible_characterization: lin(
        "flexible characterization",
        lib::flexible_characterization(),
    ),
    rl_condition: pol("rl-condition (polarized)", lib::rl_condition(), 3),
    third_power: pol("third power hom-associativity (polarized)", lib::third_power(), 3),
    fourth_power: pol("fourth power hom-associativity (polarized)", lib::fourth_power(), 4),
    cyclic_lemma: lin("2 S_A = J_{A-}", lib::cyclic_lemma()),
    minus_jacobiator_on_square: pol(
        "J_{A-}(x^2, alpha(y), alpha(x)) = 0 (polarized)",
        lib::minus_jacobiator_on_square(),
        3,
    ),
    associator_equals_plus: pol(
        "as_A = as_{A+} at (x^2, alpha(y), alpha(x)) (polarized)",
        lib::associator_equals_plus_associator(),
        3,
    ),
});

pub fn identities() -> &'static Identities {
    &IDENTITIES
}

fn scan_report(name: &str, scan: Scan, e: &[Vector]) -> CheckReport {
    match scan.witness {
        None => CheckReport::pass(name, scan.checked),
        Some((tuple, residual)) => CheckReport::fail(
            name,
            Witness {
                inputs: tuple.iter().map(|&i| e[i].clone()).collect(),
                basis: Some(tuple),
                residual,
            },
            scan.checked,
        ),
    }
}

/// Evaluates a multilinear identity on all `n^m` basis tuples.
pub fn check_multilinear(m: &MultilinearIdentity, s: &dyn Structure) -> CheckReport {
    let e = basis(s.dim());
    let scan = scan_basis_tuples(s.dim(), m.arity(), |t| {
        let inputs: Vec<Vector> = t.iter().map(|&i| e[i].clone()).collect();
        m.eval(s, &inputs)
    });
    scan_report(m.name(), scan, &e)
}

/// Direct evaluation of an identity on seeded random rational inputs.
///
/// Only a diagnostic: a pass here is evidence, not proof.
pub fn sample_identity(
    name: &str,
    expr: &IdentityExpr,
    s: &dyn Structure,
    samples: usize,
    seed: u64,
) -> Result<CheckReport> {
    let arity = expr.arity()?;
    let mut rng = random::rng(seed);
    for k in 0..samples {
        let inputs: Vec<Vector> = (0..arity).map(|_| random::vector(&mut rng, s.dim())).collect();
        let r = expr.eval(s, &inputs);
        if !linalg::is_zero_vector(&r) {
            return Ok(CheckReport::fail(
                name,
                Witness {
                    basis: None,
                    inputs,
                    residual: r,
                },
                k as u64 + 1,
            ));
        }
    }
    Ok(CheckReport::pass(name, samples as u64))
}

pub fn check_hom_flexible(a: &HomAlgebra) -> CheckReport {
    check_multilinear(&identities().flexible, a)
}

pub fn check_hom_alternative(a: &HomAlgebra) -> CheckReport {
    let ids = identities();
    CheckReport::all(
        "hom-alternative",
        vec![
            check_multilinear(&ids.left_alternative, a),
            check_multilinear(&ids.right_alternative, a),
        ],
    )
}

/// Commutativity, then `as(x^2, alpha(y), alpha(x)) = 0` polarized in `x`.
pub fn check_hom_jordan(a: &HomAlgebra) -> CheckReport {
    let ids = identities();
    let commutative = check_multilinear(&ids.commutative, a);
    let mut subs = vec![commutative];
    if subs[0].passed() {
        subs.push(check_multilinear(&ids.hom_jordan, a));
    }
    CheckReport::all("hom-jordan", subs)
}

/// Skewsymmetry, then the Hom-Malcev identity polarized in `x`.
pub fn check_hom_malcev(a: &HomAlgebra) -> CheckReport {
    let ids = identities();
    let skew = check_multilinear(&ids.skewsymmetric, a);
    let mut subs = vec![skew];
    if subs[0].passed() {
        subs.push(check_multilinear(&ids.hom_malcev, a));
    }
    CheckReport::all("hom-malcev", subs)
}

/// `{alpha(x), y o z} = {x,y} o alpha(z) + alpha(y) o {x,z}`, together with its
/// skew form; for a skewsymmetric bracket the two verdicts must agree.
pub fn check_hom_leibniz(j: &HomJMPAlgebra) -> CheckReport {
    let ids = identities();
    let main = check_multilinear(&ids.hom_leibniz, j);
    let skew = check_multilinear(&ids.hom_leibniz_skew, j);
    let agree = main.verdict == skew.verdict;
    CheckReport::all("hom-leibniz", vec![main, skew])
        .with_cross_check("hom-leibniz and its skew form agree", agree)
}

pub fn check_hom_jmp(j: &HomJMPAlgebra) -> CheckReport {
    let mut malcev = check_hom_malcev(&j.bracket_algebra());
    malcev.name = "hom-malcev (bracket)".into();
    let mut jordan = check_hom_jordan(&j.jordan_algebra());
    jordan.name = "hom-jordan (jordan product)".into();
    CheckReport::all("hom-jmp", vec![malcev, jordan, check_hom_leibniz(j)])
}

/// `(A^-, A^+)` is a Hom-JMP algebra.
pub fn check_admissible_jmp(a: &HomAlgebra) -> CheckReport {
    let mut r = check_hom_jmp(&admissible_pair(a));
    r.name = "admissible hom-jmp".into();
    let implies_flexible = !r.passed() || check_hom_flexible(a).passed();
    r.with_cross_check("admissible implies hom-flexible", implies_flexible)
}

/// The four-term identity `as = 1/4 J_{A-} + 1/4 [alpha(y),[z,x]] + as_{A+}`,
/// which holds exactly when the algebra is Hom-flexible.
pub fn check_flexible_characterization(a: &HomAlgebra) -> CheckReport {
    let r = check_multilinear(&identities().flexible_characterization, a);
    let agree = r.verdict == check_hom_flexible(a).verdict;
    r.with_cross_check("verdict equals hom-flexible verdict", agree)
}

/// `R_{alpha^2(x)} L_{x^2} alpha = L_{alpha(x^2)} R_{alpha(x)} alpha`, polarized in `x`.
pub fn check_condition_rl(a: &HomAlgebra) -> CheckReport {
    let r = check_multilinear(&identities().rl_condition, a);
    let premise = check_hom_flexible(a).passed() && check_hom_malcev(&minus_algebra(a)).passed();
    let consistent = !premise || r.verdict == check_admissible_jmp(a).verdict;
    r.with_cross_check(
        "for hom-flexible algebras with hom-malcev commutator, equivalent to admissibility",
        consistent,
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PowerMode {
    /// Third and fourth power Hom-associativity, polarized and decided exactly.
    Strict,
    /// `x^n = alpha^{n-i-1}(x^i) . alpha^{i-1}(x^{n-i})` for `2 <= n <= max_power`
    /// on random rational vectors.
    Sampled {
        max_power: usize,
        samples: usize,
        seed: u64,
    },
}

pub fn check_power_hom_associative(a: &HomAlgebra, mode: PowerMode) -> Result<CheckReport> {
    match mode {
        PowerMode::Strict => {
            let ids = identities();
            Ok(CheckReport::all(
                "power hom-associative",
                vec![
                    check_multilinear(&ids.third_power, a),
                    check_multilinear(&ids.fourth_power, a),
                ],
            ))
        }
        PowerMode::Sampled {
            max_power,
            samples,
            seed,
        } => {
            if max_power < 2 {
                return Err(Error::InvalidMaxPower(max_power));
            }
            let name = format!("nth power hom-associative, n <= {max_power} (sampled)");
            let mut rng = random::rng(seed);
            let mut checked = 0u64;
            for _ in 0..samples {
                let x = random::vector(&mut rng, a.dim());
                let table = PowerTable::new(a, &x, max_power)?;
                for n in 2..=max_power {
                    for i in 1..n {
                        checked += 1;
                        let left = table.twist_power(n - i - 1).apply(table.power(i))?;
                        let right = table.twist_power(i - 1).apply(table.power(n - i))?;
                        let rhs = a.multiply(&left, &right)?;
                        let residual = linalg::sub(table.power(n), &rhs);
                        if !linalg::is_zero_vector(&residual) {
                            let r = CheckReport::fail(
                                name,
                                Witness {
                                    basis: None,
                                    inputs: vec![x],
                                    residual,
                                },
                                checked,
                            );
                            return Ok(r.with_tag(format!("n={n}, i={i}")));
                        }
                    }
                }
            }
            Ok(CheckReport::pass(name, checked))
        }
    }
}

/// The consequences of Hom-flexibility on the commutator and anticommutator:
/// `2 S_A = J_{A-}` on basis triples, and the two degree-3 identities at
/// `(x^2, alpha(y), alpha(x))` on seeded random pairs.
pub fn check_flexible_consequences(a: &HomAlgebra, samples: usize, seed: u64) -> Result<CheckReport> {
    let ids = identities();
    let cyclic = check_multilinear(&ids.cyclic_lemma, a);
    let jac = sample_identity(
        "J_{A-}(x^2, alpha(y), alpha(x)) = 0 (sampled)",
        &lib::minus_jacobiator_on_square(),
        a,
        samples,
        seed,
    )?;
    let assoc = sample_identity(
        "as_A = as_{A+} at (x^2, alpha(y), alpha(x)) (sampled)",
        &lib::associator_equals_plus_associator(),
        a,
        samples,
        seed.wrapping_add(1),
    )?;
    Ok(CheckReport::all("hom-flexible consequences", vec![cyclic, jac, assoc]))
}
