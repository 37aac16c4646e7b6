//! Worked examples: the 3-dimensional admissible JMP table and its twists,
//! the 5-dimensional Hom-flexible example, and the 6-dimensional
//! T*-extension of the 3-dimensional table.

use num_traits::Zero;

use crate::algebra::{admissible_pair, HomAlgebra, HomJMPAlgebra};
use crate::constructions::{beta_from_automorphism, t_star_extension, twisted_pseudo_euclidean, TStarExtension};
use crate::error::{Error, Result};
use crate::forms::BilinearForm;
use crate::linalg::{int, ratio, Matrix, Scalar, Tensor3};

fn nonzero(s: &Scalar) -> Result<()> {
    if s.is_zero() {
        Err(Error::SingularTwist)
    } else {
        Ok(())
    }
}

/// `e1*e2 = e2`, `e1*e3 = -e3`, `e2*e3 = e1`, skew, with twist `id`.
pub fn ex3_flat() -> HomAlgebra {
    let mut t = Tensor3::zeros(3);
    for (i, j, k, c) in [
        (0, 1, 1, 1),
        (0, 2, 2, -1),
        (1, 0, 1, -1),
        (1, 2, 0, 1),
        (2, 0, 2, 1),
        (2, 1, 0, -1),
    ] {
        t.set(i, j, k, int(c));
    }
    HomAlgebra::new(t, Matrix::identity(3)).expect("3x3 twist")
}

/// `diag(1, lambda, 1/lambda)`.
pub fn ex3_twist(lambda: &Scalar) -> Result<Matrix> {
    nonzero(lambda)?;
    Ok(Matrix::diagonal(&[int(1), lambda.clone(), lambda.recip()]))
}

/// `e1 -> -e1`, `e2 <-> e3`: an involutive automorphism of [`ex3_flat`].
pub fn ex3_theta() -> Matrix {
    let mut m = Matrix::zeros(3, 3);
    m.set(0, 0, int(-1));
    m.set(2, 1, int(1));
    m.set(1, 2, int(1));
    m
}

/// `theta o diag(1, lambda, 1/lambda)`, an involution for every `lambda != 0`.
pub fn ex3_involution(lambda: &Scalar) -> Result<Matrix> {
    ex3_theta().mul(&ex3_twist(lambda)?)
}

/// The twisted 3-dimensional table `x *_a y = a(x * y)` with `a = diag(1, lambda, 1/lambda)`.
pub fn ex3(lambda: &Scalar) -> Result<HomAlgebra> {
    let alpha = ex3_twist(lambda)?;
    let flat = ex3_flat();
    HomAlgebra::new(flat.mul().compose(&alpha)?, alpha)
}

pub fn ex3_flat_jmp() -> HomJMPAlgebra {
    admissible_pair(&ex3_flat())
}

/// The 5-dimensional table with `a = diag(nu, 1/nu, lambda, 1, 1)`.
pub fn ex5(nu: &Scalar, lambda: &Scalar) -> Result<HomAlgebra> {
    nonzero(nu)?;
    nonzero(lambda)?;
    let half = ratio(1, 2);
    let nu_inv = nu.recip();
    let mut t = Tensor3::zeros(5);
    t.set(0, 1, 4, int(1));
    t.set(0, 1, 3, half.clone());
    t.set(0, 3, 0, nu * &half);
    t.set(1, 0, 4, int(1));
    t.set(1, 0, 3, -half.clone());
    t.set(1, 3, 1, -(&nu_inv * &half));
    t.set(2, 3, 2, lambda * &half);
    t.set(3, 0, 0, -(nu * &half));
    t.set(3, 1, 1, &nu_inv * &half);
    t.set(3, 2, 2, -(lambda * &half));
    t.set(3, 3, 4, int(-1));
    let alpha = Matrix::diagonal(&[nu.clone(), nu_inv, lambda.clone(), int(1), int(1)]);
    HomAlgebra::new(t, alpha)
}

/// T*-extension of [`ex3_flat_jmp`] with the hyperbolic form.
pub fn p6_extension() -> TStarExtension {
    t_star_extension(&ex3_flat_jmp()).expect("ex3-flat is an admissible JMP algebra")
}

/// The regular pseudo-Euclidean structure on `P` twisted by `beta = theta + t(theta)`,
/// with `theta = ex3_involution(lambda)`.
pub fn p6(lambda: &Scalar) -> Result<(HomJMPAlgebra, BilinearForm)> {
    let ext = p6_extension();
    let beta = beta_from_automorphism(&ext, &ex3_involution(lambda)?)?.beta;
    twisted_pseudo_euclidean(&ext.result, &ext.form, &beta)
}
