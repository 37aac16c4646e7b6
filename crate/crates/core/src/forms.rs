//! Bilinear forms on an algebra: symmetry, non-degeneracy, invariance and
//! compatibility with the twist map.

use serde::Serialize;

use crate::algebra::{HomJMPAlgebra, ProductKind, Structure};
use crate::error::{Error, Result};
use crate::identity::multilinear::{basis, scan_basis_tuples, Scan};
use crate::identity::report::{CheckReport, Witness};
use crate::linalg::{self, Matrix, Scalar, Vector};
use crate::maps::{self, Strength};
use crate::triples::HomTripleSystem;

/// `B(e_i, e_j) = matrix[i][j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    matrix: Matrix,
}

impl BilinearForm {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        Ok(BilinearForm { matrix })
    }

    /// `B(x + f, y + g) = f(y) + g(x)` on `A + A*`, basis `(e_1..e_n, e^1..e^n)`.
    pub fn hyperbolic(n: usize) -> Self {
        let mut m = Matrix::zeros(2 * n, 2 * n);
        for i in 0..n {
            m.set(i, n + i, linalg::int(1));
            m.set(n + i, i, linalg::int(1));
        }
        BilinearForm { matrix: m }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        linalg::dot(x, &self.matrix.apply_unchecked(y))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        BilinearForm {
            matrix: self.matrix.scale(c),
        }
    }

    /// `(x, y) -> B(m(x), y)`.
    pub fn precompose(&self, m: &Matrix) -> Result<Self> {
        Ok(BilinearForm {
            matrix: m.transpose().mul(&self.matrix)?,
        })
    }

    pub fn is_symmetric(&self) -> bool {
        self.matrix.is_symmetric()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.matrix.rank() == self.dim()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormProperties {
    pub symmetric: bool,
    pub nondegenerate: bool,
    /// Per product of the structure.
    pub invariant: Vec<(ProductKind, bool)>,
    pub alpha_compatible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma_invariant: Option<bool>,
}

fn check_dims(s: &dyn Structure, b: &BilinearForm) -> Result<()> {
    if b.dim() != s.dim() {
        return Err(Error::DimensionMismatch {
            expected: s.dim(),
            found: b.dim(),
        });
    }
    Ok(())
}

fn scalar_scan_report(name: &str, scan: Scan, e: &[Vector]) -> CheckReport {
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

/// `B(p(x,y), gamma(z)) = B(gamma(x), p(y,z))` on basis triples;
/// `gamma = None` is plain invariance.
pub fn check_invariance(
    s: &dyn Structure,
    kind: ProductKind,
    b: &BilinearForm,
    gamma: Option<&Matrix>,
) -> Result<CheckReport> {
    check_dims(s, b)?;
    let e = basis(s.dim());
    let g: Vec<Vector> = match gamma {
        Some(m) => e.iter().map(|v| m.apply_unchecked(v)).collect(),
        None => e.clone(),
    };
    let name = match gamma {
        None => format!("invariant ({kind:?})").to_lowercase(),
        Some(_) => format!("gamma-invariant ({kind:?})").to_lowercase(),
    };
    let scan = scan_basis_tuples(s.dim(), 3, |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let lhs = b.eval(&s.product(kind, &e[x], &e[y]), &g[z]);
        let rhs = b.eval(&g[x], &s.product(kind, &e[y], &e[z]));
        vec![lhs - rhs]
    });
    Ok(scalar_scan_report(&name, scan, &e))
}

/// `B(alpha(x), y) = B(x, alpha(y))` on basis pairs.
pub fn check_alpha_compatible(twist: &Matrix, b: &BilinearForm) -> Result<CheckReport> {
    let n = b.dim();
    if twist.rows() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: twist.rows(),
        });
    }
    let e = basis(n);
    let scan = scan_basis_tuples(n, 2, |t| {
        let lhs = b.eval(&twist.apply_unchecked(&e[t[0]]), &e[t[1]]);
        let rhs = b.eval(&e[t[0]], &twist.apply_unchecked(&e[t[1]]));
        vec![lhs - rhs]
    });
    Ok(scalar_scan_report("alpha-compatible", scan, &e))
}

fn symmetric_report(b: &BilinearForm) -> CheckReport {
    let e = basis(b.dim());
    let scan = scan_basis_tuples(b.dim(), 2, |t| {
        vec![b.eval(&e[t[0]], &e[t[1]]) - b.eval(&e[t[1]], &e[t[0]])]
    });
    scalar_scan_report("symmetric", scan, &e)
}

fn nondegenerate_report(b: &BilinearForm) -> CheckReport {
    let r = b.matrix().rank();
    if r == b.dim() {
        CheckReport::pass("nondegenerate", 1)
    } else {
        let mut report = CheckReport::pass("nondegenerate", 1);
        report.verdict = crate::identity::Verdict::Fail;
        report.with_tag(format!("rank {r} < {}", b.dim()))
    }
}

pub fn check_form_properties(
    s: &dyn Structure,
    b: &BilinearForm,
    gamma: Option<&Matrix>,
) -> Result<FormProperties> {
    check_dims(s, b)?;
    if let Some(g) = gamma {
        maps::require(s, g, Strength::Weak)?;
    }
    let mut invariant = Vec::new();
    for &kind in s.kinds() {
        invariant.push((kind, check_invariance(s, kind, b, None)?.passed()));
    }
    let gamma_invariant = match gamma {
        None => None,
        Some(g) => {
            let mut all = true;
            for &kind in s.kinds() {
                all &= check_invariance(s, kind, b, Some(g))?.passed();
            }
            Some(all)
        }
    };
    Ok(FormProperties {
        symmetric: b.is_symmetric(),
        nondegenerate: b.is_nondegenerate(),
        invariant,
        alpha_compatible: check_alpha_compatible(s.twist_map(), b)?.passed(),
        gamma_invariant,
    })
}

/// Symmetric, non-degenerate, invariant for both products, and compatible with the twist.
pub fn check_pseudo_euclidean_homjmp(j: &HomJMPAlgebra, b: &BilinearForm) -> Result<CheckReport> {
    check_dims(j, b)?;
    Ok(CheckReport::all(
        "pseudo-euclidean hom-jmp",
        vec![
            symmetric_report(b),
            nondegenerate_report(b),
            check_invariance(j, ProductKind::Bracket, b, None)?,
            check_invariance(j, ProductKind::Jordan, b, None)?,
            check_alpha_compatible(j.twist_matrix(), b)?,
        ],
    ))
}

/// `B({x,y,z}, gamma(t)) = -B(gamma(z), {x,y,t})` on basis 4-tuples, plus
/// compatibility of `B` with the system's twist.
pub fn check_triple_invariance(
    t: &HomTripleSystem,
    b: &BilinearForm,
    gamma: Option<&Matrix>,
) -> Result<CheckReport> {
    let n = t.dim();
    if b.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: b.dim(),
        });
    }
    let e = basis(n);
    let g: Vec<Vector> = match gamma {
        Some(m) => {
            if m.rows() != n || m.cols() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: m.rows(),
                });
            }
            e.iter().map(|v| m.apply_unchecked(v)).collect()
        }
        None => e.clone(),
    };
    let tensor = t.triple();
    let scan = scan_basis_tuples(n, 4, |k| {
        let (x, y, z, w) = (k[0], k[1], k[2], k[3]);
        let lhs = b.eval(tensor.product_of_basis(x, y, z), &g[w]);
        let rhs = b.eval(&g[z], tensor.product_of_basis(x, y, w));
        vec![lhs + rhs]
    });
    let name = if gamma.is_some() {
        "triple gamma-invariant"
    } else {
        "triple invariant"
    };
    Ok(CheckReport::all(
        "triple system form",
        vec![
            scalar_scan_report(name, scan, &e),
            check_alpha_compatible(t.twist_matrix(), b)?,
        ],
    ))
}
