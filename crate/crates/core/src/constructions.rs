//! Procedures that build new algebras: Yau twists, the `A_n` family,
//! T*-extensions, the map `beta = a + ta` and annihilator centers.

use serde::Serialize;

use crate::algebra::{HomAlgebra, HomJMPAlgebra, Structure};
use crate::error::{Error, Result};
use crate::forms::{check_pseudo_euclidean_homjmp, BilinearForm};
use crate::identity::checks::check_hom_jmp;
use crate::linalg::{self, Matrix, Tensor3, Vector};
use crate::maps::{self, check_map_properties, Strength};

/// How strong the twisting map has to be.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Requirement {
    /// Products preserved.
    Weak,
    /// Products preserved and commuting with the twist.
    Full,
}

impl Requirement {
    fn strength(self) -> Strength {
        match self {
            Requirement::Weak => Strength::Weak,
            Requirement::Full => Strength::Morphism,
        }
    }
}

/// `(A, beta o mu, beta o alpha)`.
pub fn yau_twist(a: &HomAlgebra, beta: &Matrix, require: Requirement) -> Result<HomAlgebra> {
    maps::require(a, beta, require.strength())?;
    HomAlgebra::new(a.mul().compose(beta)?, beta.mul(a.twist_matrix())?)
}

/// `(A, beta o {,}, beta o o, beta o alpha)`.
pub fn yau_twist_jmp(j: &HomJMPAlgebra, beta: &Matrix, require: Requirement) -> Result<HomJMPAlgebra> {
    maps::require(j, beta, require.strength())?;
    HomJMPAlgebra::new(
        j.bracket().compose(beta)?,
        j.jordan().compose(beta)?,
        beta.mul(j.twist_matrix())?,
    )
}

/// `(A, beta(x) beta(y), beta o alpha)`: the twist written through images.
///
/// Agrees with [`yau_twist`] whenever `beta` preserves the product.
pub fn conjugation_twist(a: &HomAlgebra, beta: &Matrix) -> Result<HomAlgebra> {
    HomAlgebra::new(a.mul().conjugate(beta)?, beta.mul(a.twist_matrix())?)
}

pub fn conjugation_twist_jmp(j: &HomJMPAlgebra, beta: &Matrix) -> Result<HomJMPAlgebra> {
    HomJMPAlgebra::new(
        j.bracket().conjugate(beta)?,
        j.jordan().conjugate(beta)?,
        beta.mul(j.twist_matrix())?,
    )
}

/// `A_n = (A, a^n {,}, a^n o, a^(n+1), B_n)` with `B_n(x, y) = B(a^n(x), y)`.
pub fn an_family(j: &HomJMPAlgebra, b: &BilinearForm, n: u32) -> Result<(HomJMPAlgebra, BilinearForm)> {
    let report = check_pseudo_euclidean_homjmp(j, b)?;
    if !report.passed() {
        let failing = report
            .sub_reports
            .iter()
            .find(|r| !r.passed())
            .map_or("suite", |r| r.name.as_str());
        return Err(Error::Precondition(format!(
            "input is not pseudo-Euclidean ({failing} fails)"
        )));
    }
    let an = j.twist_matrix().pow(n)?;
    let out = HomJMPAlgebra::new(
        j.bracket().compose(&an)?,
        j.jordan().compose(&an)?,
        j.twist_matrix().pow(n + 1)?,
    )?;
    Ok((out, b.precompose(&an)?))
}

/// `P = A + A*` over the basis `(e_1..e_n, e^1..e^n)` with its hyperbolic form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TStarExtension {
    pub base: HomJMPAlgebra,
    pub result: HomJMPAlgebra,
    pub form: BilinearForm,
}

/// `{x+f, y+g} = {x,y} + f ad_y - g ad_x`, `(x+f) o (y+g) = x o y + f L_y + g L_x`.
pub fn t_star_extension(base: &HomJMPAlgebra) -> Result<TStarExtension> {
    if !base.twist_matrix().is_identity() {
        return Err(Error::Precondition("base twist must be the identity".into()));
    }
    if !check_hom_jmp(base).passed() {
        return Err(Error::Precondition("base is not a JMP algebra".into()));
    }
    let n = base.dim();
    let cm = base.bracket();
    let cj = base.jordan();
    let mut bracket = Tensor3::zeros(2 * n);
    let mut jordan = Tensor3::zeros(2 * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                bracket.set(i, j, k, cm.get(i, j, k).clone());
                jordan.set(i, j, k, cj.get(i, j, k).clone());
                bracket.set(n + i, j, n + k, cm.get(j, k, i).clone());
                bracket.set(i, n + j, n + k, -cm.get(i, k, j).clone());
                jordan.set(n + i, j, n + k, cj.get(j, k, i).clone());
                jordan.set(i, n + j, n + k, cj.get(i, k, j).clone());
            }
        }
    }
    let result = HomJMPAlgebra::new(bracket, jordan, Matrix::identity(2 * n))?;
    Ok(TStarExtension {
        base: base.clone(),
        result,
        form: BilinearForm::hyperbolic(n),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaReport {
    /// `diag(a, a^T)`.
    pub beta: Matrix,
    pub beta_is_automorphism: bool,
    /// `Im(a^2 - Id)` inside `Z_J(A) n Z_M(A)`.
    pub image_in_centers: bool,
}

impl BetaReport {
    pub fn verdicts_agree(&self) -> bool {
        self.beta_is_automorphism == self.image_in_centers
    }
}

/// `beta(x + f) = a(x) + f o a`, with both sides of the automorphism criterion.
pub fn beta_from_automorphism(ext: &TStarExtension, a: &Matrix) -> Result<BetaReport> {
    maps::require(&ext.base, a, Strength::Automorphism)?;
    let beta = a.block_diagonal(&linalg::dual_transpose(a)?);
    let beta_is_automorphism = check_map_properties(&ext.result, &beta, None)?.automorphism;
    let zm = center_malcev(&ext.base);
    let zj = center_jordan(&ext.base);
    let defect = a.mul(a)?.sub(&Matrix::identity(a.rows()))?;
    let image_in_centers = (0..defect.cols()).all(|c| {
        let v = defect.column(c);
        linalg::in_span(&zm, &v) && linalg::in_span(&zj, &v)
    });
    Ok(BetaReport {
        beta,
        beta_is_automorphism,
        image_in_centers,
    })
}

/// Basis of `{z : z * e_j = 0 for all j}`.
pub fn annihilator(t: &Tensor3) -> Vec<Vector> {
    let n = t.dim();
    let stacked = Matrix::from_fn(n * n, n, |row, i| {
        let (j, k) = (row / n, row % n);
        t.get(i, j, k).clone()
    });
    stacked.kernel()
}

pub fn center_malcev(j: &HomJMPAlgebra) -> Vec<Vector> {
    annihilator(j.bracket())
}

pub fn center_jordan(j: &HomJMPAlgebra) -> Vec<Vector> {
    annihilator(j.jordan())
}

/// `(A, {a x, a y}, a(x) o a(y), a, B_a)` with `B_a(x, y) = B(a(x), y)`.
pub fn twisted_pseudo_euclidean(
    j: &HomJMPAlgebra,
    b: &BilinearForm,
    a: &Matrix,
) -> Result<(HomJMPAlgebra, BilinearForm)> {
    if !j.twist_matrix().is_identity() {
        return Err(Error::Precondition("input twist must be the identity".into()));
    }
    let p = check_map_properties(j, a, Some(b))?;
    if !p.automorphism || p.symmetric_wrt_form != Some(true) {
        let detail = if p.automorphism {
            "not symmetric with respect to the form".to_string()
        } else {
            "not an automorphism".to_string()
        };
        return Err(Error::NotMorphism {
            required: "symmetric automorphism",
            detail,
        });
    }
    let out = HomJMPAlgebra::new(j.bracket().conjugate(a)?, j.jordan().conjugate(a)?, a.clone())?;
    Ok((out, b.precompose(a)?))
}

/// Invertible twist.
pub fn is_regular(s: &dyn Structure) -> bool {
    s.twist_map().rank() == s.dim()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::admissible_pair;
    use crate::fixtures;
    use crate::identity::checks::check_admissible_jmp;
    use crate::linalg::{int, ratio, Scalar};

    #[test]
    fn identity_twist_is_trivial() {
        let a = fixtures::ex5(&int(2), &int(3)).unwrap();
        let t = yau_twist(&a, &Matrix::identity(5), Requirement::Full).unwrap();
        assert_eq!(t, a);
        let j = admissible_pair(&a);
        assert_eq!(yau_twist_jmp(&j, &Matrix::identity(5), Requirement::Weak).unwrap(), j);
    }

    #[test]
    fn twisting_flat_table_gives_ex3() {
        let lam = int(2);
        let alpha = fixtures::ex3_twist(&lam).unwrap();
        let flat = fixtures::ex3_flat();
        let composed = yau_twist(&flat, &alpha, Requirement::Full).unwrap();
        assert_eq!(composed, fixtures::ex3(&lam).unwrap());
        assert_eq!(conjugation_twist(&flat, &alpha).unwrap(), composed);
    }

    #[test]
    fn self_twist_stays_admissible() {
        let a = fixtures::ex3(&int(2)).unwrap();
        let t = yau_twist(&a, &a.twist_matrix().clone(), Requirement::Full).unwrap();
        assert!(check_admissible_jmp(&t).passed());
    }

    #[test]
    fn non_morphism_is_rejected() {
        let flat = fixtures::ex3_flat();
        let m = Matrix::identity(3).scale(&int(2));
        assert!(matches!(
            yau_twist(&flat, &m, Requirement::Weak),
            Err(Error::NotMorphism { .. })
        ));
    }

    #[test]
    fn zero_extension() {
        let ext = t_star_extension(&HomJMPAlgebra::zero(2)).unwrap();
        assert_eq!(ext.result.dim(), 4);
        assert!(ext.result.bracket().is_zero() && ext.result.jordan().is_zero());
        assert!(ext.form.is_nondegenerate());
        assert_eq!(ext.form.matrix().get(0, 2), &int(1));
        assert_eq!(ext.form.matrix().get(0, 0), &int(0));
    }

    #[test]
    fn extension_rejects_twisted_base() {
        let j = admissible_pair(&fixtures::ex3(&int(2)).unwrap());
        assert!(matches!(t_star_extension(&j), Err(Error::Precondition(_))));
    }

    #[test]
    fn ex3_flat_extension_entries() {
        let ext = fixtures::p6_extension();
        let b = ext.form.matrix();
        assert_eq!(b.get(1, 4), &int(1));
        assert_eq!(b.get(1, 2), &int(0));
        let v = ext.result.bracket().product_of_basis(3, 1).to_vec();
        let expected: Vec<Scalar> = (0..6)
            .map(|k| if k < 3 { int(0) } else { ext.base.bracket().get(1, k - 3, 0).clone() })
            .collect();
        assert_eq!(v, expected);
        assert_eq!(v[5], int(2));
    }

    #[test]
    fn centers_of_small_cases() {
        assert_eq!(center_malcev(&HomJMPAlgebra::zero(3)).len(), 3);
        let j = admissible_pair(&fixtures::ex3_flat());
        assert!(center_malcev(&j).is_empty());
        assert_eq!(center_jordan(&j).len(), 3);
    }

    #[test]
    fn beta_of_identity() {
        let ext = fixtures::p6_extension();
        let r = beta_from_automorphism(&ext, &Matrix::identity(3)).unwrap();
        assert!(r.beta.is_identity());
        assert!(r.beta_is_automorphism && r.image_in_centers);
    }

    #[test]
    fn beta_of_theta_and_of_a_scaling() {
        let ext = fixtures::p6_extension();
        let r = beta_from_automorphism(&ext, &fixtures::ex3_theta()).unwrap();
        assert!(r.beta_is_automorphism && r.image_in_centers);
        let d = fixtures::ex3_twist(&int(2)).unwrap();
        let r = beta_from_automorphism(&ext, &d).unwrap();
        assert!(r.verdicts_agree());
        assert!(!r.beta_is_automorphism);
    }

    #[test]
    fn twisted_identity_is_unchanged() {
        let ext = fixtures::p6_extension();
        let (j, b) = twisted_pseudo_euclidean(&ext.result, &ext.form, &Matrix::identity(6)).unwrap();
        assert_eq!(j, ext.result);
        assert_eq!(b, ext.form);
    }

    #[test]
    fn an_family_powers() {
        let (j, b) = fixtures::p6(&int(1)).unwrap();
        let (a0, b0) = an_family(&j, &b, 0).unwrap();
        assert_eq!(a0, j);
        assert_eq!(b0, b);
        let (a2, _) = an_family(&j, &b, 2).unwrap();
        assert_eq!(a2.twist_matrix(), &j.twist_matrix().pow(3).unwrap());
    }

    #[test]
    fn regularity() {
        assert!(is_regular(&fixtures::ex3(&ratio(5, 7)).unwrap()));
        let z = HomAlgebra::new(Tensor3::zeros(2), Matrix::zeros(2, 2)).unwrap();
        assert!(!is_regular(&z));
    }
}
