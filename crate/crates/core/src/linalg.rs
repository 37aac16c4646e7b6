//! Exact rational linear algebra over coordinate vectors.
//!
//! Everything here works in the fixed basis `e_0, ..., e_{n-1}`: vectors are
//! plain coordinate arrays, matrices act on column vectors, and the product
//! tensors store `e_i * e_j = sum_k c[i][j][k] e_k`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

/// Coordinates in the fixed basis.
pub type Vector = Vec<Scalar>;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `p/q` as an exact rational. Panics on `q == 0`.
pub fn ratio(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p"` or `"p/q"` with `q > 0`.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let bad = |reason: &str| Error::InvalidScalar {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    let trimmed = text.trim();
    let (num, den) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (trimmed, None),
    };
    let numerator: BigInt = num.parse().map_err(|_| bad("numerator is not an integer"))?;
    let denominator = match den {
        None => BigInt::one(),
        Some(d) => {
            let d: BigInt = d.parse().map_err(|_| bad("denominator is not an integer"))?;
            if !d.is_positive() {
                return Err(bad("denominator must be positive"));
            }
            d
        }
    };
    Ok(Scalar::new(numerator, denominator))
}

pub fn zero_vector(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn basis_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add(u: &[Scalar], v: &[Scalar]) -> Vector {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

pub fn sub(u: &[Scalar], v: &[Scalar]) -> Vector {
    u.iter().zip(v).map(|(a, b)| a - b).collect()
}

pub fn scale(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|a| c * a).collect()
}

/// `acc += c * v`
pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a += c * b;
        }
    }
}

pub fn dot(u: &[Scalar], v: &[Scalar]) -> Scalar {
    u.iter()
        .zip(v)
        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
        .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
}

fn check_len(expected: usize, v: &[Scalar]) -> Result<()> {
    if v.len() != expected {
        return Err(Error::DimensionMismatch {
            expected,
            found: v.len(),
        });
    }
    Ok(())
}

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn diagonal(diag: &[Scalar]) -> Self {
        let mut m = Matrix::zeros(diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            check_len(c, &row)?;
            entries.extend(row);
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            entries,
        })
    }

    /// Builds the matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(n_rows: usize, columns: &[Vector]) -> Result<Self> {
        let mut m = Matrix::zeros(n_rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            check_len(n_rows, col)?;
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vector> {
        check_len(self.cols, v)?;
        Ok(self.apply_unchecked(v))
    }

    pub(crate) fn apply_unchecked(&self, v: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.rows);
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    *o += a * x;
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.entries[idx] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &Matrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| c * a).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn pow(&self, k: u32) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut out = Matrix::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// `[self 0; 0 other]`
    pub fn block_diagonal(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.rows)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    /// Exact rank by fraction-free (Bareiss) elimination.
    ///
    /// Each row is first cleared of denominators, then the integer matrix is
    /// reduced so that every intermediate entry is a minor of the original.
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<BigInt>> = (0..self.rows).map(|i| integer_row(self.row(i))).collect();
        let (rows, cols) = (self.rows, self.cols);
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            for i in r + 1..rows {
                for j in c + 1..cols {
                    let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                    a[i][j] = v / &prev;
                }
                a[i][c] = BigInt::zero();
            }
            prev = a[r][c].clone();
            r += 1;
        }
        r
    }

    /// Basis of `{v : self * v = 0}` via reduced row echelon form.
    pub fn kernel(&self) -> Vec<Vector> {
        let (rref, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = zero_vector(self.cols);
                v[f] = Scalar::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -rref.get(r, f).clone();
                }
                v
            })
            .collect()
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).recip();
            for j in 0..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in 0..m.cols {
                    let v = m.get(i, j) - &f * m.get(r, j);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(ToString::to_string).collect())
            .collect();
        f.debug_struct("Matrix").field("rows", &rows).finish()
    }
}

fn integer_row(row: &[Scalar]) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect()
}

/// Matrix of `f -> f . m` in the dual basis, i.e. the transpose.
pub fn dual_transpose(m: &Matrix) -> Result<Matrix> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    Ok(m.transpose())
}

/// Whether `v` lies in the span of `basis`.
pub fn in_span(basis: &[Vector], v: &[Scalar]) -> bool {
    if is_zero_vector(v) {
        return true;
    }
    let n = v.len();
    let mut with = basis.to_vec();
    let base_rank = if basis.is_empty() {
        0
    } else {
        Matrix::from_columns(n, basis).map(|m| m.rank()).unwrap_or(0)
    };
    with.push(v.to_vec());
    let ext_rank = Matrix::from_columns(n, &with).map(|m| m.rank()).unwrap_or(0);
    ext_rank == base_rank
}

/// Structure constants of a bilinear product, `e_i * e_j = sum_k c[i][j][k] e_k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tensor3 {
    dim: usize,
    entries: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(dim: usize) -> Self {
        Tensor3 {
            dim,
            entries: vec![Scalar::zero(); dim * dim * dim],
        }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> Scalar) -> Self {
        let mut t = Tensor3::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    t.entries[(i * dim + j) * dim + k] = f(i, j, k);
                }
            }
        }
        t
    }

    /// Builds the tensor from products of basis pairs.
    pub fn from_products(dim: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Self {
        let mut t = Tensor3::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                t.set_product(i, j, f(i, j));
            }
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.entries[(i * self.dim + j) * self.dim + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Scalar) {
        let d = self.dim;
        self.entries[(i * d + j) * d + k] = value;
    }

    /// Coordinates of `e_i * e_j`.
    pub fn product_of_basis(&self, i: usize, j: usize) -> &[Scalar] {
        let start = (i * self.dim + j) * self.dim;
        &self.entries[start..start + self.dim]
    }

    pub fn set_product(&mut self, i: usize, j: usize, v: Vector) {
        debug_assert_eq!(v.len(), self.dim);
        let start = (i * self.dim + j) * self.dim;
        for (slot, x) in self.entries[start..start + self.dim].iter_mut().zip(v) {
            *slot = x;
        }
    }

    pub fn apply(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vector> {
        check_len(self.dim, u)?;
        check_len(self.dim, v)?;
        Ok(self.apply_unchecked(u, v))
    }

    pub(crate) fn apply_unchecked(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.dim);
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                axpy(&mut out, &ab, self.product_of_basis(i, j));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.first_pair(|a, b| a == b).is_none()
    }

    pub fn is_skew(&self) -> bool {
        self.first_pair(|a, b| *a == -b.clone()).is_none()
    }

    /// First basis pair `(i, j)` where `pred(c[i][j][k], c[j][i][k])` fails for some `k`.
    pub fn first_pair(&self, pred: impl Fn(&Scalar, &Scalar) -> bool) -> Option<(usize, usize)> {
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                if (0..d).any(|k| !pred(self.get(i, j, k), self.get(j, i, k))) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// `c'[i][j] = m (e_i * e_j)`: products composed with a linear map.
    pub fn compose(&self, m: &Matrix) -> Result<Tensor3> {
        check_len(self.dim, &zero_vector(m.cols()))?;
        Ok(Tensor3::from_products(self.dim, |i, j| {
            m.apply_unchecked(self.product_of_basis(i, j))
        }))
    }

    /// `c'[i][j] = m(e_i) * m(e_j)`: products of images.
    pub fn conjugate(&self, m: &Matrix) -> Result<Tensor3> {
        check_len(self.dim, &zero_vector(m.cols()))?;
        let images: Vec<Vector> = (0..self.dim).map(|i| m.column(i)).collect();
        Ok(Tensor3::from_products(self.dim, |i, j| {
            self.apply_unchecked(&images[i], &images[j])
        }))
    }

    pub fn scale(&self, c: &Scalar) -> Tensor3 {
        Tensor3 {
            dim: self.dim,
            entries: self.entries.iter().map(|a| c * a).collect(),
        }
    }

    pub fn add(&self, other: &Tensor3) -> Result<Tensor3> {
        check_len(self.dim, &zero_vector(other.dim))?;
        Ok(Tensor3 {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Nonzero entries in `(i, j, k)` order.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = ([usize; 3], &Scalar)> {
        let d = self.dim;
        self.entries.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(idx, c)| {
            ([idx / (d * d), (idx / d) % d, idx % d], c)
        })
    }
}

impl fmt::Debug for Tensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_list();
        for (idx, c) in self.nonzero_entries() {
            list.entry(&format!("{idx:?}={c}"));
        }
        list.finish()
    }
}

/// Structure constants of a trilinear product,
/// `{e_i, e_j, e_k} = sum_l t[i][j][k][l] e_l`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tensor4 {
    dim: usize,
    entries: Vec<Scalar>,
}

impl Tensor4 {
    pub fn zeros(dim: usize) -> Self {
        Tensor4 {
            dim,
            entries: vec![Scalar::zero(); dim.pow(4)],
        }
    }

    pub fn from_products(dim: usize, mut f: impl FnMut(usize, usize, usize) -> Vector) -> Self {
        let mut t = Tensor4::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    t.set_product(i, j, k, f(i, j, k));
                }
            }
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn offset(&self, i: usize, j: usize, k: usize) -> usize {
        ((i * self.dim + j) * self.dim + k) * self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> &Scalar {
        &self.entries[self.offset(i, j, k) + l]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, l: usize, value: Scalar) {
        let o = self.offset(i, j, k);
        self.entries[o + l] = value;
    }

    pub fn product_of_basis(&self, i: usize, j: usize, k: usize) -> &[Scalar] {
        let o = self.offset(i, j, k);
        &self.entries[o..o + self.dim]
    }

    pub fn set_product(&mut self, i: usize, j: usize, k: usize, v: Vector) {
        let o = self.offset(i, j, k);
        for (slot, x) in self.entries[o..o + self.dim].iter_mut().zip(v) {
            *slot = x;
        }
    }

    pub fn apply(&self, u: &[Scalar], v: &[Scalar], w: &[Scalar]) -> Result<Vector> {
        check_len(self.dim, u)?;
        check_len(self.dim, v)?;
        check_len(self.dim, w)?;
        Ok(self.apply_unchecked(u, v, w))
    }

    pub(crate) fn apply_unchecked(&self, u: &[Scalar], v: &[Scalar], w: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.dim);
        for (i, a) in u.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in v.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (k, c) in w.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    axpy(&mut out, &(&ab * c), self.product_of_basis(i, j, k));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn nonzero_entries(&self) -> impl Iterator<Item = ([usize; 4], &Scalar)> {
        let d = self.dim;
        self.entries.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(idx, c)| {
            (
                [idx / (d * d * d), (idx / (d * d)) % d, (idx / d) % d, idx % d],
                c,
            )
        })
    }
}

impl fmt::Debug for Tensor4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_list();
        for (idx, c) in self.nonzero_entries() {
            list.entry(&format!("{idx:?}={c}"));
        }
        list.finish()
    }
}

/// Coordinate form of `mu(u, v)`.
pub fn apply_product(c: &Tensor3, u: &[Scalar], v: &[Scalar]) -> Result<Vector> {
    c.apply(u, v)
}

/// Coordinate form of `alpha(v)`.
pub fn mat_apply(m: &Matrix, v: &[Scalar]) -> Result<Vector> {
    m.apply(v)
}

pub fn rank(m: &Matrix) -> usize {
    m.rank()
}
