//! Hom-algebras given by structure constants, and the maps derived from them:
//! associators, Jacobiators, the commutator and anticommutator algebras,
//! multiplication operators and Hom-powers.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, ratio, Matrix, Scalar, Tensor3, Vector};

/// Which bilinear operation of a structure an identity refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductKind {
    /// The single product of a Hom-algebra, or `x.y = 1/2{x,y} + x o y` on a Hom-JMP algebra.
    Main,
    /// `{x,y}`; on a Hom-algebra this is the commutator `xy - yx`.
    Bracket,
    /// `x o y`; on a Hom-algebra this is `1/2(xy + yx)`.
    Jordan,
}

/// Anything identities can be evaluated on: a space with products and a twist map.
pub trait Structure: Sync {
    fn dim(&self) -> usize;

    /// Unchecked: both inputs must have length `dim()`.
    fn product(&self, kind: ProductKind, u: &[Scalar], v: &[Scalar]) -> Vector;

    fn twist(&self, v: &[Scalar]) -> Vector;

    /// The products that make up this structure, in canonical order.
    fn kinds(&self) -> &'static [ProductKind];

    fn twist_map(&self) -> &Matrix;

    fn twist_pow(&self, k: u32, v: &[Scalar]) -> Vector {
        let mut out = v.to_vec();
        for _ in 0..k {
            out = self.twist(&out);
        }
        out
    }
}

fn check_square(m: &Matrix, n: usize) -> Result<()> {
    if m.rows() != n || m.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: if m.rows() != n { m.rows() } else { m.cols() },
        });
    }
    Ok(())
}

fn check_vectors(n: usize, vs: &[&[Scalar]]) -> Result<()> {
    for v in vs {
        if v.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: v.len(),
            });
        }
    }
    Ok(())
}

/// A Hom-algebra `(A, mu, alpha)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomAlgebra {
    mul: Tensor3,
    twist: Matrix,
}

impl HomAlgebra {
    pub fn new(mul: Tensor3, twist: Matrix) -> Result<Self> {
        check_square(&twist, mul.dim())?;
        Ok(HomAlgebra { mul, twist })
    }

    /// All products zero, twist the identity.
    pub fn zero(n: usize) -> Self {
        HomAlgebra {
            mul: Tensor3::zeros(n),
            twist: Matrix::identity(n),
        }
    }

    pub fn dim(&self) -> usize {
        self.mul.dim()
    }

    pub fn mul(&self) -> &Tensor3 {
        &self.mul
    }

    pub fn twist_matrix(&self) -> &Matrix {
        &self.twist
    }

    pub fn with_twist(&self, twist: Matrix) -> Result<Self> {
        HomAlgebra::new(self.mul.clone(), twist)
    }

    pub fn multiply(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vector> {
        self.mul.apply(u, v)
    }

    pub fn apply_twist(&self, v: &[Scalar]) -> Result<Vector> {
        self.twist.apply(v)
    }

    fn m(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        self.mul.apply_unchecked(u, v)
    }

    fn a(&self, v: &[Scalar]) -> Vector {
        self.twist.apply_unchecked(v)
    }

    pub(crate) fn associator_unchecked(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vector {
        let left = self.m(&self.m(x, y), &self.a(z));
        let right = self.m(&self.a(x), &self.m(y, z));
        linalg::sub(&left, &right)
    }

    pub(crate) fn jacobiator_unchecked(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vector {
        let mut out = self.m(&self.m(x, y), &self.a(z));
        for term in [self.m(&self.m(y, z), &self.a(x)), self.m(&self.m(z, x), &self.a(y))] {
            out = linalg::add(&out, &term);
        }
        out
    }
}

impl Structure for HomAlgebra {
    fn dim(&self) -> usize {
        self.dim()
    }

    fn product(&self, kind: ProductKind, u: &[Scalar], v: &[Scalar]) -> Vector {
        match kind {
            ProductKind::Main => self.m(u, v),
            ProductKind::Bracket => linalg::sub(&self.m(u, v), &self.m(v, u)),
            ProductKind::Jordan => {
                linalg::scale(&ratio(1, 2), &linalg::add(&self.m(u, v), &self.m(v, u)))
            }
        }
    }

    fn twist(&self, v: &[Scalar]) -> Vector {
        self.a(v)
    }

    fn kinds(&self) -> &'static [ProductKind] {
        &[ProductKind::Main]
    }

    fn twist_map(&self) -> &Matrix {
        &self.twist
    }
}

/// A Hom-JMP candidate `(A, {,}, o, alpha)`: skewsymmetric bracket, symmetric Jordan product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomJMPAlgebra {
    bracket: Tensor3,
    jordan: Tensor3,
    twist: Matrix,
}

impl HomJMPAlgebra {
    pub fn new(bracket: Tensor3, jordan: Tensor3, twist: Matrix) -> Result<Self> {
        let n = bracket.dim();
        if jordan.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: jordan.dim(),
            });
        }
        check_square(&twist, n)?;
        if let Some((i, j)) = bracket.first_pair(|a, b| *a == -b.clone()) {
            return Err(Error::Symmetry(format!(
                "bracket is not skewsymmetric at (e{i}, e{j})"
            )));
        }
        if let Some((i, j)) = jordan.first_pair(|a, b| a == b) {
            return Err(Error::Symmetry(format!(
                "jordan product is not symmetric at (e{i}, e{j})"
            )));
        }
        Ok(HomJMPAlgebra {
            bracket,
            jordan,
            twist,
        })
    }

    pub fn zero(n: usize) -> Self {
        HomJMPAlgebra {
            bracket: Tensor3::zeros(n),
            jordan: Tensor3::zeros(n),
            twist: Matrix::identity(n),
        }
    }

    pub fn dim(&self) -> usize {
        self.bracket.dim()
    }

    pub fn bracket(&self) -> &Tensor3 {
        &self.bracket
    }

    pub fn jordan(&self) -> &Tensor3 {
        &self.jordan
    }

    pub fn twist_matrix(&self) -> &Matrix {
        &self.twist
    }

    /// `(A, {,}, alpha)` as a single-product Hom-algebra.
    pub fn bracket_algebra(&self) -> HomAlgebra {
        HomAlgebra {
            mul: self.bracket.clone(),
            twist: self.twist.clone(),
        }
    }

    /// `(A, o, alpha)` as a single-product Hom-algebra.
    pub fn jordan_algebra(&self) -> HomAlgebra {
        HomAlgebra {
            mul: self.jordan.clone(),
            twist: self.twist.clone(),
        }
    }
}

impl Structure for HomJMPAlgebra {
    fn dim(&self) -> usize {
        self.dim()
    }

    fn product(&self, kind: ProductKind, u: &[Scalar], v: &[Scalar]) -> Vector {
        match kind {
            ProductKind::Bracket => self.bracket.apply_unchecked(u, v),
            ProductKind::Jordan => self.jordan.apply_unchecked(u, v),
            ProductKind::Main => {
                let mut out = self.jordan.apply_unchecked(u, v);
                linalg::axpy(&mut out, &ratio(1, 2), &self.bracket.apply_unchecked(u, v));
                out
            }
        }
    }

    fn twist(&self, v: &[Scalar]) -> Vector {
        self.twist.apply_unchecked(v)
    }

    fn kinds(&self) -> &'static [ProductKind] {
        &[ProductKind::Bracket, ProductKind::Jordan]
    }

    fn twist_map(&self) -> &Matrix {
        &self.twist
    }
}

/// `as(x,y,z) = (xy)alpha(z) - alpha(x)(yz)`
pub fn hom_associator(a: &HomAlgebra, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Result<Vector> {
    check_vectors(a.dim(), &[x, y, z])?;
    Ok(a.associator_unchecked(x, y, z))
}

/// Cyclic sum of `(xy)alpha(z)`.
pub fn hom_jacobiator(a: &HomAlgebra, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Result<Vector> {
    check_vectors(a.dim(), &[x, y, z])?;
    Ok(a.jacobiator_unchecked(x, y, z))
}

/// `as(x,y,z) + as(y,z,x) + as(z,x,y)`
pub fn cyclic_associator(
    a: &HomAlgebra,
    x: &[Scalar],
    y: &[Scalar],
    z: &[Scalar],
) -> Result<Vector> {
    check_vectors(a.dim(), &[x, y, z])?;
    let mut out = a.associator_unchecked(x, y, z);
    for term in [a.associator_unchecked(y, z, x), a.associator_unchecked(z, x, y)] {
        out = linalg::add(&out, &term);
    }
    Ok(out)
}

/// `A^-`: the commutator product `[x,y] = xy - yx`, same twist.
pub fn minus_algebra(a: &HomAlgebra) -> HomAlgebra {
    let mul = Tensor3::from_fn(a.dim(), |i, j, k| a.mul.get(i, j, k) - a.mul.get(j, i, k));
    HomAlgebra {
        mul,
        twist: a.twist.clone(),
    }
}

/// `A^+`: the product `x o y = 1/2(xy + yx)`, same twist.
pub fn plus_algebra(a: &HomAlgebra) -> HomAlgebra {
    let half = ratio(1, 2);
    let mul = Tensor3::from_fn(a.dim(), |i, j, k| {
        &half * (a.mul.get(i, j, k) + a.mul.get(j, i, k))
    });
    HomAlgebra {
        mul,
        twist: a.twist.clone(),
    }
}

/// `(A^-, A^+)` as a Hom-JMP candidate.
pub fn admissible_pair(a: &HomAlgebra) -> HomJMPAlgebra {
    HomJMPAlgebra {
        bracket: minus_algebra(a).mul,
        jordan: plus_algebra(a).mul,
        twist: a.twist.clone(),
    }
}

/// `x.y = 1/2{x,y} + x o y`
pub fn jmp_to_admissible(j: &HomJMPAlgebra) -> HomAlgebra {
    let half = ratio(1, 2);
    let mul = Tensor3::from_fn(j.dim(), |a, b, k| {
        &half * j.bracket.get(a, b, k) + j.jordan.get(a, b, k)
    });
    HomAlgebra {
        mul,
        twist: j.twist.clone(),
    }
}

/// Matrix of `y -> x.y`.
pub fn left_mult(a: &HomAlgebra, x: &[Scalar]) -> Result<Matrix> {
    check_vectors(a.dim(), &[x])?;
    let n = a.dim();
    let cols: Vec<Vector> = (0..n)
        .map(|j| a.m(x, &linalg::basis_vector(n, j)))
        .collect();
    Matrix::from_columns(n, &cols)
}

/// Matrix of `y -> y.x`.
pub fn right_mult(a: &HomAlgebra, x: &[Scalar]) -> Result<Matrix> {
    check_vectors(a.dim(), &[x])?;
    let n = a.dim();
    let cols: Vec<Vector> = (0..n)
        .map(|j| a.m(&linalg::basis_vector(n, j), x))
        .collect();
    Matrix::from_columns(n, &cols)
}

/// Hom-powers `x^1, ..., x^N` of a fixed element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerTable {
    base: Vector,
    powers: Vec<Vector>,
    twist_powers: Vec<Matrix>,
}

impl PowerTable {
    /// `x^1 = x`, `x^n = x^{n-1} . alpha^{n-2}(x)`.
    ///
    /// The twist powers `alpha^0 .. alpha^{N-1}` are computed once and kept
    /// for the power-associativity sweeps.
    pub fn new(a: &HomAlgebra, x: &[Scalar], max: usize) -> Result<Self> {
        if max < 1 {
            return Err(Error::InvalidPower);
        }
        check_vectors(a.dim(), &[x])?;
        let mut twist_powers = vec![Matrix::identity(a.dim())];
        for k in 1..max {
            let next = twist_powers[k - 1].mul(&a.twist)?;
            twist_powers.push(next);
        }
        let mut powers = vec![x.to_vec()];
        for n in 2..=max {
            let ax = twist_powers[n - 2].apply_unchecked(x);
            let next = a.m(&powers[n - 2], &ax);
            powers.push(next);
        }
        Ok(PowerTable {
            base: x.to_vec(),
            powers,
            twist_powers,
        })
    }

    pub fn base(&self) -> &[Scalar] {
        &self.base
    }

    pub fn max(&self) -> usize {
        self.powers.len()
    }

    /// `x^n`, `1 <= n <= max`.
    pub fn power(&self, n: usize) -> &[Scalar] {
        &self.powers[n - 1]
    }

    /// `alpha^k`, `k < max`.
    pub fn twist_power(&self, k: usize) -> &Matrix {
        &self.twist_powers[k]
    }
}

/// The `n`-th Hom-power of `x`.
pub fn hom_power(a: &HomAlgebra, x: &[Scalar], n: usize) -> Result<Vector> {
    Ok(PowerTable::new(a, x, n)?.power(n).to_vec())
}

/// Whether the twist intertwines the product: `alpha(xy) = alpha(x)alpha(y)` on basis pairs.
pub fn is_multiplicative(s: &dyn Structure) -> bool {
    let kinds = s.kinds();
    let n = s.dim();
    let basis: Vec<Vector> = (0..n).map(|i| linalg::basis_vector(n, i)).collect();
    kinds.iter().all(|&kind| {
        (0..n).all(|i| {
            (0..n).all(|j| {
                let lhs = s.twist(&s.product(kind, &basis[i], &basis[j]));
                let rhs = s.product(kind, &s.twist(&basis[i]), &s.twist(&basis[j]));
                lhs == rhs
            })
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::linalg::{basis_vector as e, int, is_zero_vector, scale};

    #[test]
    fn zero_algebra_maps_vanish() {
        let z = HomAlgebra::zero(3);
        let x = vec![int(1), int(2), int(3)];
        assert!(is_zero_vector(&hom_associator(&z, &x, &x, &x).unwrap()));
        assert!(is_zero_vector(&hom_jacobiator(&z, &x, &e(3, 1), &x).unwrap()));
        assert!(is_zero_vector(&cyclic_associator(&z, &x, &x, &e(3, 0)).unwrap()));
        assert_eq!(minus_algebra(&z), z);
        assert_eq!(plus_algebra(&z), z);
        assert!(left_mult(&z, &e(3, 0)).unwrap().is_zero());
        assert!(is_zero_vector(&hom_power(&z, &x, 2).unwrap()));
        assert_eq!(jmp_to_admissible(&HomJMPAlgebra::zero(3)), z);
    }

    #[test]
    fn dimension_errors() {
        let z = HomAlgebra::zero(3);
        assert!(hom_associator(&z, &e(2, 0), &e(3, 0), &e(3, 0)).is_err());
        assert!(left_mult(&z, &e(4, 0)).is_err());
        assert!(HomAlgebra::new(Tensor3::zeros(3), Matrix::identity(2)).is_err());
    }

    #[test]
    fn hom_power_rejects_zero_exponent() {
        let z = HomAlgebra::zero(2);
        assert_eq!(hom_power(&z, &e(2, 0), 0), Err(Error::InvalidPower));
    }

    #[test]
    fn ex3_associator_matches_closed_form() {
        for (lam, expected) in [(int(2), ratio(-1, 4)), (int(3), ratio(-1, 9))] {
            let a = fixtures::ex3(&lam).unwrap();
            let v = hom_associator(&a, &e(3, 1), &e(3, 2), &e(3, 2)).unwrap();
            assert_eq!(v, scale(&expected, &e(3, 2)));
        }
    }

    #[test]
    fn ex3_flat_products() {
        let a = fixtures::ex3_flat();
        assert_eq!(a.multiply(&e(3, 1), &e(3, 2)).unwrap(), e(3, 0));
        let s = linalg::add(&e(3, 1), &e(3, 2));
        assert!(is_zero_vector(&a.multiply(&s, &s).unwrap()));

        let minus = minus_algebra(&a);
        assert_eq!(minus.multiply(&e(3, 1), &e(3, 2)).unwrap(), scale(&int(2), &e(3, 0)));
        assert!(plus_algebra(&a).mul().is_zero());

        let l = left_mult(&a, &e(3, 0)).unwrap();
        assert!(is_zero_vector(&l.column(0)));
        assert_eq!(l.column(1), e(3, 1));
        assert_eq!(l.column(2), scale(&int(-1), &e(3, 2)));
    }

    #[test]
    fn ex5_derived_products() {
        let (nu, lam) = (int(2), int(3));
        let a = fixtures::ex5(&nu, &lam).unwrap();
        let minus = minus_algebra(&a);
        assert_eq!(minus.multiply(&e(5, 0), &e(5, 1)).unwrap(), e(5, 3));
        let plus = plus_algebra(&a);
        assert_eq!(plus.multiply(&e(5, 0), &e(5, 1)).unwrap(), e(5, 4));
        assert_eq!(plus.multiply(&e(5, 3), &e(5, 3)).unwrap(), scale(&int(-1), &e(5, 4)));
        let r = right_mult(&a, &e(5, 3)).unwrap();
        assert_eq!(r.apply(&e(5, 0)).unwrap(), scale(&ratio(1, 1), &e(5, 0)));
        let one = fixtures::ex5(&int(1), &int(1)).unwrap();
        assert_eq!(hom_power(&one, &e(5, 3), 2).unwrap(), scale(&int(-1), &e(5, 4)));
    }

    #[test]
    fn ex3_twisted_square_vanishes() {
        let a = fixtures::ex3(&int(2)).unwrap();
        let x = linalg::add(&e(3, 1), &e(3, 2));
        assert!(is_zero_vector(&hom_power(&a, &x, 2).unwrap()));
    }

    #[test]
    fn jacobiator_of_skew_product_vanishes_on_diagonal() {
        let a = minus_algebra(&fixtures::ex5(&int(2), &int(3)).unwrap());
        let x = vec![int(1), ratio(-1, 2), int(3), int(0), int(5)];
        assert!(is_zero_vector(&hom_jacobiator(&a, &x, &x, &x).unwrap()));
    }

    #[test]
    fn admissible_round_trip() {
        let a = fixtures::ex5(&int(-1), &ratio(1, 2)).unwrap();
        let pair = admissible_pair(&a);
        assert_eq!(jmp_to_admissible(&pair), a);
        let back = jmp_to_admissible(&pair);
        assert_eq!(minus_algebra(&back).mul(), pair.bracket());
        assert_eq!(plus_algebra(&back).mul(), pair.jordan());
    }

    #[test]
    fn jmp_constructor_enforces_symmetry() {
        let mut skew = Tensor3::zeros(2);
        skew.set(0, 1, 0, int(1));
        assert!(HomJMPAlgebra::new(skew.clone(), Tensor3::zeros(2), Matrix::identity(2)).is_err());
        assert!(HomJMPAlgebra::new(Tensor3::zeros(2), skew, Matrix::identity(2)).is_err());
    }
}
