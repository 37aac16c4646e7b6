//! Hom-Lie triple systems and Hom-Lie-Jordan-Poisson triple systems.
//!
//! Only the multiplicative setting with a single twist map is modelled: the
//! two twist maps of a general Hom-triple system are taken equal.

use crate::algebra::{HomAlgebra, HomJMPAlgebra};
use crate::error::{Error, Result};
use crate::identity::checks::{check_hom_jmp, check_hom_malcev, check_hom_jordan, check_multilinear, identities};
use crate::identity::multilinear::{basis, scan_basis_tuples, Scan};
use crate::identity::report::{CheckReport, Witness};
use crate::linalg::{self, int, Matrix, Tensor3, Tensor4, Vector};

/// `(L, {,,}, alpha)` with `alpha_1 = alpha_2 = alpha`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomTripleSystem {
    triple: Tensor4,
    twist: Matrix,
}

impl HomTripleSystem {
    pub fn new(triple: Tensor4, twist: Matrix) -> Result<Self> {
        let n = triple.dim();
        if twist.rows() != n || twist.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: twist.rows(),
            });
        }
        Ok(HomTripleSystem { triple, twist })
    }

    pub fn dim(&self) -> usize {
        self.triple.dim()
    }

    pub fn triple(&self) -> &Tensor4 {
        &self.triple
    }

    pub fn twist_matrix(&self) -> &Matrix {
        &self.twist
    }
}

/// `(A, {,,}, o, alpha)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HLJPSystem {
    triple: HomTripleSystem,
    jordan: Tensor3,
}

impl HLJPSystem {
    pub fn new(triple: HomTripleSystem, jordan: Tensor3) -> Result<Self> {
        if jordan.dim() != triple.dim() {
            return Err(Error::DimensionMismatch {
                expected: triple.dim(),
                found: jordan.dim(),
            });
        }
        if let Some((i, j)) = jordan.first_pair(|a, b| a == b) {
            return Err(Error::Symmetry(format!(
                "jordan product is not symmetric at (e{i}, e{j})"
            )));
        }
        Ok(HLJPSystem { triple, jordan })
    }

    pub fn dim(&self) -> usize {
        self.triple.dim()
    }

    pub fn triple_system(&self) -> &HomTripleSystem {
        &self.triple
    }

    pub fn jordan(&self) -> &Tensor3 {
        &self.jordan
    }

    pub fn twist_matrix(&self) -> &Matrix {
        &self.triple.twist
    }

    /// `(A, o, alpha)`.
    pub fn jordan_algebra(&self) -> HomAlgebra {
        HomAlgebra::new(self.jordan.clone(), self.triple.twist.clone())
            .expect("dimensions checked at construction")
    }
}

/// `2{{x,y},alpha(z)} - {{y,z},alpha(x)} - {{z,x},alpha(y)}` evaluated in `m`.
pub fn malcev_triple_product(m: &HomAlgebra, x: &[linalg::Scalar], y: &[linalg::Scalar], z: &[linalg::Scalar]) -> Result<Vector> {
    let b = |u: &[linalg::Scalar], v: &[linalg::Scalar]| m.multiply(u, v);
    let a = |u: &[linalg::Scalar]| m.apply_twist(u);
    let t1 = b(&b(x, y)?, &a(z)?)?;
    let t2 = b(&b(y, z)?, &a(x)?)?;
    let t3 = b(&b(z, x)?, &a(y)?)?;
    let mut out = linalg::scale(&int(2), &t1);
    out = linalg::sub(&out, &t2);
    Ok(linalg::sub(&out, &t3))
}

/// The Hom-Lie triple system `(A, {,,}, alpha^2)` of a Hom-Malcev algebra.
pub fn triple_from_malcev(m: &HomAlgebra) -> Result<HomTripleSystem> {
    let report = check_hom_malcev(m);
    if !report.passed() {
        return Err(Error::Precondition(format!(
            "bracket is not Hom-Malcev ({})",
            describe_witness(&report)
        )));
    }
    let n = m.dim();
    let e = basis(n);
    let mut t = Tensor4::zeros(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                t.set_product(i, j, k, malcev_triple_product(m, &e[i], &e[j], &e[k])?);
            }
        }
    }
    HomTripleSystem::new(t, m.twist_matrix().pow(2)?)
}

/// `(A, {,,}, o_alpha, alpha^2)` with `x o_alpha y = alpha(x) o alpha(y)`.
pub fn hljp_from_homjmp(j: &HomJMPAlgebra) -> Result<HLJPSystem> {
    let report = check_hom_jmp(j);
    if !report.passed() {
        return Err(Error::Precondition(format!(
            "not a Hom-JMP algebra ({})",
            describe_witness(&report)
        )));
    }
    let triple = triple_from_malcev(&j.bracket_algebra())?;
    let jordan = j.jordan().conjugate(j.twist_matrix())?;
    HLJPSystem::new(triple, jordan)
}

fn describe_witness(r: &CheckReport) -> String {
    let failing = r
        .sub_reports
        .iter()
        .find(|s| !s.passed())
        .map_or(r.name.as_str(), |s| s.name.as_str());
    match r.witness.as_ref().and_then(|w| w.basis.as_ref()) {
        Some(b) => format!("{failing} fails at basis tuple {b:?}"),
        None => format!("{failing} fails"),
    }
}

fn report(name: &str, scan: Scan, e: &[Vector]) -> CheckReport {
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

/// Left skewsymmetry, ternary Jacobi, multiplicativity and the fundamental
/// identity, each on all basis tuples.
///
/// The fundamental identity
/// `[a(x),a(y),[u,v,w]] = [[x,y,u],a(v),a(w)] + [a(u),[x,y,v],a(w)] + [a(u),a(v),[x,y,w]]`
/// involves five variables, so it is scanned over `n^5` tuples `(x,y,u,v,w)`.
pub fn check_hlts_axioms(t: &HomTripleSystem) -> CheckReport {
    let n = t.dim();
    let e = basis(n);
    let tr = &t.triple;
    let ae: Vec<Vector> = e.iter().map(|v| t.twist.apply_unchecked(v)).collect();

    let skew = scan_basis_tuples(n, 3, |k| {
        linalg::add(tr.product_of_basis(k[0], k[1], k[2]), tr.product_of_basis(k[1], k[0], k[2]))
    });
    let jacobi = scan_basis_tuples(n, 3, |k| {
        let (x, y, z) = (k[0], k[1], k[2]);
        let s = linalg::add(tr.product_of_basis(x, y, z), tr.product_of_basis(y, z, x));
        linalg::add(&s, tr.product_of_basis(z, x, y))
    });
    let multiplicative = scan_basis_tuples(n, 3, |k| {
        let lhs = t.twist.apply_unchecked(tr.product_of_basis(k[0], k[1], k[2]));
        let rhs = tr.apply_unchecked(&ae[k[0]], &ae[k[1]], &ae[k[2]]);
        linalg::sub(&lhs, &rhs)
    });
    let fundamental = scan_basis_tuples(n, 5, |k| {
        let (x, y, u, v, w) = (k[0], k[1], k[2], k[3], k[4]);
        let lhs = tr.apply_unchecked(&ae[x], &ae[y], tr.product_of_basis(u, v, w));
        let r1 = tr.apply_unchecked(tr.product_of_basis(x, y, u), &ae[v], &ae[w]);
        let r2 = tr.apply_unchecked(&ae[u], tr.product_of_basis(x, y, v), &ae[w]);
        let r3 = tr.apply_unchecked(&ae[u], &ae[v], tr.product_of_basis(x, y, w));
        let rhs = linalg::add(&linalg::add(&r1, &r2), &r3);
        linalg::sub(&lhs, &rhs)
    });
    CheckReport::all(
        "hom-lie triple system",
        vec![
            report("left skewsymmetry", skew, &e),
            report("ternary jacobi", jacobi, &e),
            report("multiplicative", multiplicative, &e),
            report("fundamental identity", fundamental, &e),
        ],
    )
}

/// Hom-Jordan product, multiplicative Hom-Lie triple system, and
/// `{a(x),a(y),z o t} = {x,y,z} o a(t) + a(z) o {x,y,t}` on basis 4-tuples.
///
/// Tagged `hom-lie-poisson` when the Jordan product is also Hom-associative.
pub fn check_hljp(s: &HLJPSystem) -> CheckReport {
    let n = s.dim();
    let e = basis(n);
    let jordan_alg = s.jordan_algebra();
    let tr = &s.triple.triple;
    let tw = &s.triple.twist;
    let ae: Vec<Vector> = e.iter().map(|v| tw.apply_unchecked(v)).collect();
    let j = &s.jordan;

    let mut jordan_report = check_hom_jordan(&jordan_alg);
    jordan_report.name = "hom-jordan (jordan product)".into();
    let compat = scan_basis_tuples(n, 4, |k| {
        let (x, y, z, t) = (k[0], k[1], k[2], k[3]);
        let lhs = tr.apply_unchecked(&ae[x], &ae[y], j.product_of_basis(z, t));
        let r1 = j.apply_unchecked(tr.product_of_basis(x, y, z), &ae[t]);
        let r2 = j.apply_unchecked(&ae[z], tr.product_of_basis(x, y, t));
        linalg::sub(&lhs, &linalg::add(&r1, &r2))
    });
    let r = CheckReport::all(
        "hom-lie-jordan-poisson triple system",
        vec![
            jordan_report,
            check_hlts_axioms(&s.triple),
            report("triple leibniz", compat, &e),
        ],
    );
    if r.passed() && check_multilinear(&identities().hom_associative, &jordan_alg).passed() {
        r.with_tag("hom-lie-poisson")
    } else {
        r
    }
}
