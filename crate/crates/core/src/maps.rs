//! Weak morphisms, morphisms, automorphisms and symmetry of linear maps.

use serde::Serialize;

use crate::algebra::{ProductKind, Structure};
use crate::error::{Error, Result};
use crate::forms::BilinearForm;
use crate::identity::multilinear::basis;
use crate::linalg::Matrix;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MapProperties {
    /// `m(xy) = m(x)m(y)` for every product of the structure.
    pub weak_morphism: bool,
    /// Weak morphism that also commutes with the twist.
    pub morphism: bool,
    /// Invertible morphism.
    pub automorphism: bool,
    /// `B(m(x), y) = B(x, m(y))`, when a form is given.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub symmetric_wrt_form: Option<bool>,
    /// First basis pair where a product is not preserved.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub product_failure: Option<(ProductKind, usize, usize)>,
}

pub fn check_map_properties(
    s: &dyn Structure,
    m: &Matrix,
    form: Option<&BilinearForm>,
) -> Result<MapProperties> {
    let n = s.dim();
    if m.rows() != n || m.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: m.rows().max(m.cols()),
        });
    }
    let e = basis(n);
    let images: Vec<_> = e.iter().map(|v| m.apply_unchecked(v)).collect();
    let mut product_failure = None;
    'outer: for &kind in s.kinds() {
        for i in 0..n {
            for j in 0..n {
                let lhs = m.apply_unchecked(&s.product(kind, &e[i], &e[j]));
                let rhs = s.product(kind, &images[i], &images[j]);
                if lhs != rhs {
                    product_failure = Some((kind, i, j));
                    break 'outer;
                }
            }
        }
    }
    let weak_morphism = product_failure.is_none();
    let twist = s.twist_map();
    let morphism = weak_morphism && m.mul(twist)? == twist.mul(m)?;
    let automorphism = morphism && m.rank() == n;
    let symmetric_wrt_form = match form {
        None => None,
        Some(b) => {
            if b.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: b.dim(),
                });
            }
            Some(m.transpose().mul(b.matrix())? == b.matrix().mul(m)?)
        }
    };
    Ok(MapProperties {
        weak_morphism,
        morphism,
        automorphism,
        symmetric_wrt_form,
        product_failure,
    })
}

/// Errors unless `m` has the required strength on `s`.
pub(crate) fn require(s: &dyn Structure, m: &Matrix, strength: Strength) -> Result<MapProperties> {
    let p = check_map_properties(s, m, None)?;
    let ok = match strength {
        Strength::Weak => p.weak_morphism,
        Strength::Morphism => p.morphism,
        Strength::Automorphism => p.automorphism,
    };
    if !ok {
        let detail = match p.product_failure {
            Some((kind, i, j)) => format!("{kind:?} product not preserved at (e{i}, e{j})"),
            None if !p.morphism => "does not commute with the twist map".to_string(),
            None => "not invertible".to_string(),
        };
        return Err(Error::NotMorphism {
            required: strength.name(),
            detail,
        });
    }
    Ok(p)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strength {
    Weak,
    Morphism,
    Automorphism,
}

impl Strength {
    fn name(self) -> &'static str {
        match self {
            Strength::Weak => "weak morphism",
            Strength::Morphism => "morphism",
            Strength::Automorphism => "automorphism",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::HomAlgebra;
    use crate::fixtures;
    use crate::linalg::int;

    #[test]
    fn identity_has_every_property() {
        let a = fixtures::ex5(&int(2), &int(3)).unwrap();
        let b = BilinearForm::new(Matrix::identity(5)).unwrap();
        let p = check_map_properties(&a, &Matrix::identity(5), Some(&b)).unwrap();
        assert!(p.weak_morphism && p.morphism && p.automorphism);
        assert_eq!(p.symmetric_wrt_form, Some(true));
    }

    #[test]
    fn ex3_twist_is_morphism_of_flat_table() {
        let flat = fixtures::ex3_flat();
        let alpha = fixtures::ex3_twist(&int(2)).unwrap();
        let p = check_map_properties(&flat, &alpha, None).unwrap();
        assert!(p.weak_morphism && p.morphism && p.automorphism);
    }

    #[test]
    fn theta_is_an_involutive_automorphism() {
        let flat = fixtures::ex3_flat();
        let theta = fixtures::ex3_theta();
        assert!(check_map_properties(&flat, &theta, None).unwrap().automorphism);
        assert!(theta.mul(&theta).unwrap().is_identity());
    }

    #[test]
    fn zero_map_is_weak_but_not_automorphism() {
        let flat = fixtures::ex3_flat();
        let p = check_map_properties(&flat, &Matrix::zeros(3, 3), None).unwrap();
        assert!(p.weak_morphism && p.morphism);
        assert!(!p.automorphism);
        let q = check_map_properties(&HomAlgebra::zero(3), &Matrix::zeros(3, 3), None).unwrap();
        assert!(q.weak_morphism && !q.automorphism);
    }

    #[test]
    fn scaling_is_not_a_morphism_of_a_nonzero_product() {
        let flat = fixtures::ex3_flat();
        let p = check_map_properties(&flat, &Matrix::identity(3).scale(&int(2)), None).unwrap();
        assert!(!p.weak_morphism);
        assert!(p.product_failure.is_some());
        assert!(check_map_properties(&flat, &Matrix::identity(2), None).is_err());
    }
}
