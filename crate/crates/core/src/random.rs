//! Seeded generators for random rational probes and fuzzed structures.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{ProductKind, Structure};
use crate::linalg::{ratio, Matrix, Scalar, Tensor3, Vector};

pub type ProbeRng = ChaCha8Rng;

pub fn rng(seed: u64) -> ProbeRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small rational with numerator in `[-9, 9]` and denominator in `[1, 5]`.
pub fn scalar(rng: &mut impl Rng) -> Scalar {
    ratio(rng.gen_range(-9..=9), rng.gen_range(1..=5))
}

pub fn vector(rng: &mut impl Rng, n: usize) -> Vector {
    (0..n).map(|_| scalar(rng)).collect()
}

/// Nonzero small integer.
pub fn nonzero_int(rng: &mut impl Rng) -> Scalar {
    let v = rng.gen_range(1..=4);
    ratio(if rng.gen_bool(0.5) { v } else { -v }, 1)
}

/// Structure constants with entries drawn from `{-2..2}`.
pub fn tensor(rng: &mut impl Rng, n: usize) -> Tensor3 {
    Tensor3::from_fn(n, |_, _, _| ratio(rng.gen_range(-2..=2), 1))
}

pub fn skew_tensor(rng: &mut impl Rng, n: usize) -> Tensor3 {
    let t = tensor(rng, n);
    Tensor3::from_fn(n, |i, j, k| {
        if i < j {
            t.get(i, j, k).clone()
        } else if i > j {
            -t.get(j, i, k).clone()
        } else {
            ratio(0, 1)
        }
    })
}

pub fn symmetric_tensor(rng: &mut impl Rng, n: usize) -> Tensor3 {
    let t = tensor(rng, n);
    Tensor3::from_fn(n, |i, j, k| t.get(i.min(j), i.max(j), k).clone())
}

pub fn matrix(rng: &mut impl Rng, n: usize) -> Matrix {
    Matrix::from_fn(n, n, |_, _| ratio(rng.gen_range(-2..=2), 1))
}

/// A structure with three unrelated random products and a random twist.
///
/// Identity trees are probed on it to confirm homogeneity and
/// multilinearity before they are trusted on real inputs.
#[derive(Clone, Debug)]
pub struct GenericStructure {
    main: Tensor3,
    bracket: Tensor3,
    jordan: Tensor3,
    twist: Matrix,
}

impl GenericStructure {
    pub fn new(rng: &mut impl Rng, n: usize) -> Self {
        GenericStructure {
            main: tensor(rng, n),
            bracket: tensor(rng, n),
            jordan: tensor(rng, n),
            twist: matrix(rng, n),
        }
    }
}

impl Structure for GenericStructure {
    fn dim(&self) -> usize {
        self.main.dim()
    }

    fn product(&self, kind: ProductKind, u: &[Scalar], v: &[Scalar]) -> Vector {
        match kind {
            ProductKind::Main => self.main.apply_unchecked(u, v),
            ProductKind::Bracket => self.bracket.apply_unchecked(u, v),
            ProductKind::Jordan => self.jordan.apply_unchecked(u, v),
        }
    }

    fn twist(&self, v: &[Scalar]) -> Vector {
        self.twist.apply_unchecked(v)
    }

    fn kinds(&self) -> &'static [ProductKind] {
        &[ProductKind::Main, ProductKind::Bracket, ProductKind::Jordan]
    }

    fn twist_map(&self) -> &Matrix {
        &self.twist
    }
}
