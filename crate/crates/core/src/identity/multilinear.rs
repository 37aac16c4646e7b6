use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::Structure;
use crate::error::{Error, Result};
use crate::linalg::{self, int, Vector};
use crate::random::{self, GenericStructure};

use super::expr::IdentityExpr;

/// Seed of the generic structure used to probe identity trees.
const PROBE_SEED: u64 = 0x5eed_0b5e;
const PROBE_DIM: usize = 3;

/// Where an argument slot of a multilinear identity comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "origin", rename_all = "lowercase")]
pub enum SlotOrigin {
    /// One of the `degree` fresh copies of a polarized variable.
    Polarized { var: usize, degree: u32, copy: u32 },
    /// A variable the source identity is already linear in.
    Direct { var: usize },
}

/// An identity that is linear in every argument, so it vanishes
/// everywhere iff it vanishes on all tuples of basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultilinearIdentity {
    name: String,
    source: IdentityExpr,
    source_arity: usize,
    polarized: Option<(usize, u32)>,
    slots: Vec<SlotOrigin>,
}

impl MultilinearIdentity {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> &IdentityExpr {
        &self.source
    }

    pub fn arity(&self) -> usize {
        self.slots.len()
    }

    pub fn slots(&self) -> &[SlotOrigin] {
        &self.slots
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Wraps an identity that is already linear in each variable.
    pub fn linear(name: impl Into<String>, source: IdentityExpr) -> Result<Self> {
        let source_arity = source.arity()?;
        let m = MultilinearIdentity {
            name: name.into(),
            slots: (0..source_arity).map(|var| SlotOrigin::Direct { var }).collect(),
            source,
            source_arity,
            polarized: None,
        };
        m.probe_linearity()?;
        Ok(m)
    }

    /// Evaluates on one input per slot.
    pub fn eval(&self, s: &dyn Structure, inputs: &[Vector]) -> Vector {
        let Some((var, degree)) = self.polarized else {
            return self.source.eval(s, inputs);
        };
        let d = degree as usize;
        let mut vars = vec![Vec::new(); self.source_arity];
        for (slot, origin) in self.slots.iter().enumerate().skip(d) {
            if let SlotOrigin::Direct { var } = origin {
                vars[*var] = inputs[slot].clone();
            }
        }
        let mut out = linalg::zero_vector(s.dim());
        for subset in 1u32..(1 << d) {
            let mut x = linalg::zero_vector(s.dim());
            for (copy, input) in inputs.iter().take(d).enumerate() {
                if subset & (1 << copy) != 0 {
                    x = linalg::add(&x, input);
                }
            }
            vars[var] = x;
            let value = self.source.eval(s, &vars);
            if (d as u32 - subset.count_ones()).is_multiple_of(2) {
                out = linalg::add(&out, &value);
            } else {
                out = linalg::sub(&out, &value);
            }
        }
        out
    }

    fn probe_linearity(&self) -> Result<()> {
        let mut rng = random::rng(PROBE_SEED);
        let s = GenericStructure::new(&mut rng, PROBE_DIM);
        let base: Vec<Vector> = (0..self.arity())
            .map(|_| random::vector(&mut rng, PROBE_DIM))
            .collect();
        for slot in 0..self.arity() {
            let (a, b) = (random::nonzero_int(&mut rng), random::scalar(&mut rng));
            let u = base[slot].clone();
            let w = random::vector(&mut rng, PROBE_DIM);
            let mut inputs = base.clone();
            inputs[slot] = linalg::add(&linalg::scale(&a, &u), &linalg::scale(&b, &w));
            let combined = self.eval(&s, &inputs);
            inputs[slot] = u;
            let fu = self.eval(&s, &inputs);
            inputs[slot] = w;
            let fw = self.eval(&s, &inputs);
            let expected = linalg::add(&linalg::scale(&a, &fu), &linalg::scale(&b, &fw));
            if combined != expected {
                return Err(Error::NotMultilinear { slot });
            }
        }
        Ok(())
    }
}

/// Full linearization of `source` in variable `var`, assumed homogeneous of
/// degree `degree` there:
///
/// `L(x_1..x_d; rest) = sum over nonempty S of (-1)^(d-|S|) I(sum_{i in S} x_i; rest)`.
///
/// Slots `0..degree` are the copies of `var`; the remaining variables follow
/// in index order. Homogeneity is confirmed by a scaling probe (`x -> t x`
/// for `t = 2, 3`) and the result by a linearity probe, both on a random
/// generic structure.
pub fn polarize(source: &IdentityExpr, var: usize, degree: u32) -> Result<MultilinearIdentity> {
    let source_arity = source.arity()?;
    if var >= source_arity || degree == 0 || degree > 16 {
        return Err(Error::NotHomogeneous { var, degree });
    }
    let mut rng = random::rng(PROBE_SEED ^ 0x9e37);
    let s = GenericStructure::new(&mut rng, PROBE_DIM);
    let vars: Vec<Vector> = (0..source_arity)
        .map(|_| random::vector(&mut rng, PROBE_DIM))
        .collect();
    let base = source.eval(&s, &vars);
    for t in [2i64, 3] {
        let mut scaled = vars.clone();
        scaled[var] = linalg::scale(&int(t), &vars[var]);
        let factor = int(t.pow(degree));
        if source.eval(&s, &scaled) != linalg::scale(&factor, &base) {
            return Err(Error::NotHomogeneous { var, degree });
        }
    }

    let mut slots: Vec<SlotOrigin> = (0..degree)
        .map(|copy| SlotOrigin::Polarized { var, degree, copy })
        .collect();
    slots.extend((0..source_arity).filter(|&v| v != var).map(|v| SlotOrigin::Direct { var: v }));
    let m = MultilinearIdentity {
        name: String::new(),
        source: source.clone(),
        source_arity,
        polarized: (degree > 1).then_some((var, degree)),
        slots,
    };
    // with degree 1 the slots are a permutation of the variables
    let m = if degree == 1 {
        let mut order = vec![0; source_arity];
        for (slot, origin) in m.slots.iter().enumerate() {
            let v = match origin {
                SlotOrigin::Polarized { var, .. } | SlotOrigin::Direct { var } => *var,
            };
            order[slot] = v;
        }
        MultilinearIdentity {
            source: permute_vars(source, &order),
            slots: (0..source_arity).map(|var| SlotOrigin::Direct { var }).collect(),
            ..m
        }
    } else {
        m
    };
    m.probe_linearity()?;
    Ok(m)
}

/// Renames variable `order[slot]` to `slot`.
fn permute_vars(e: &IdentityExpr, order: &[usize]) -> IdentityExpr {
    match e {
        IdentityExpr::Var(i) => {
            IdentityExpr::Var(order.iter().position(|v| v == i).expect("variable in order"))
        }
        IdentityExpr::Product(k, l, r) => {
            IdentityExpr::product(*k, permute_vars(l, order), permute_vars(r, order))
        }
        IdentityExpr::Twist(k, c) => IdentityExpr::Twist(*k, Box::new(permute_vars(c, order))),
        IdentityExpr::Sum(terms) => IdentityExpr::Sum(
            terms.iter().map(|(c, t)| (c.clone(), permute_vars(t, order))).collect(),
        ),
    }
}

/// Result of scanning all basis tuples in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scan {
    /// First failing tuple in canonical order, with its nonzero residual.
    pub witness: Option<(Vec<usize>, Vector)>,
    /// Tuples examined up to and including the witness (all of them on a pass).
    pub checked: u64,
}

/// Evaluates `eval` on every tuple in `{0..n}^arity`.
///
/// Work is split by the first index; each part scans its block in order and
/// the earliest block with a failure supplies the witness, so the result is
/// the same as a sequential scan.
pub fn scan_basis_tuples<F>(n: usize, arity: usize, eval: F) -> Scan
where
    F: Fn(&[usize]) -> Vector + Sync,
{
    if arity == 0 {
        let r = eval(&[]);
        return Scan {
            checked: 1,
            witness: (!linalg::is_zero_vector(&r)).then(|| (Vec::new(), r)),
        };
    }
    let total = (n as u64).pow(arity as u32);
    if n == 0 {
        return Scan {
            witness: None,
            checked: 0,
        };
    }
    let block = (n as u64).pow(arity as u32 - 1);
    let found = (0..n).into_par_iter().find_map_first(|first| {
        let mut tuple = vec![0usize; arity];
        tuple[0] = first;
        let mut offset = 0u64;
        loop {
            let r = eval(&tuple);
            if !linalg::is_zero_vector(&r) {
                return Some((first as u64 * block + offset, tuple, r));
            }
            offset += 1;
            // odometer over positions 1..arity
            let mut pos = arity - 1;
            loop {
                if pos == 0 {
                    return None;
                }
                tuple[pos] += 1;
                if tuple[pos] < n {
                    break;
                }
                tuple[pos] = 0;
                pos -= 1;
            }
        }
    });
    match found {
        Some((rank, tuple, r)) => Scan {
            witness: Some((tuple, r)),
            checked: rank + 1,
        },
        None => Scan {
            witness: None,
            checked: total,
        },
    }
}

/// Basis vectors `e_0..e_{n-1}`.
pub(crate) fn basis(n: usize) -> Vec<Vector> {
    (0..n).map(|i| linalg::basis_vector(n, i)).collect()
}



#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{HomAlgebra, ProductKind};
    use crate::identity::expr::var;
    use crate::linalg::{basis_vector, Matrix, Tensor3};

    fn square() -> IdentityExpr {
        var(0).mul(var(0))
    }

    #[test]
    fn square_on_zero_algebra_polarizes_to_zero() {
        let m = polarize(&square(), 0, 2).unwrap();
        assert_eq!(m.arity(), 2);
        let z = HomAlgebra::zero(3);
        let e = basis(3);
        for a in &e {
            for b in &e {
                assert!(linalg::is_zero_vector(&m.eval(&z, &[a.clone(), b.clone()])));
            }
        }
    }

    #[test]
    fn square_on_idempotent_line() {
        let mut t = Tensor3::zeros(1);
        t.set(0, 0, 0, int(1));
        let a = HomAlgebra::new(t, Matrix::identity(1)).unwrap();
        let m = polarize(&square(), 0, 2).unwrap();
        let e = basis_vector(1, 0);
        assert_eq!(m.eval(&a, &[e.clone(), e.clone()]), vec![int(2)]);
        assert_eq!(square().eval(&a, &[e.clone()]), e);
    }

    #[test]
    fn wrong_degree_is_rejected() {
        assert_eq!(
            polarize(&square(), 0, 3),
            Err(Error::NotHomogeneous { var: 0, degree: 3 })
        );
        // x.x + x is not homogeneous at all
        let mixed = square() + var(0);
        assert!(polarize(&mixed, 0, 2).is_err());
        assert!(polarize(&mixed, 0, 1).is_err());
    }

    #[test]
    fn nonlinear_identity_is_not_multilinear() {
        let e = var(0).mul(var(0)).mul(var(1));
        assert_eq!(
            MultilinearIdentity::linear("x^2 y", e),
            Err(Error::NotMultilinear { slot: 0 })
        );
    }

    #[test]
    fn non_contiguous_variables_rejected() {
        let e = var(0).mul(var(2));
        assert!(matches!(
            MultilinearIdentity::linear("gap", e),
            Err(Error::NonContiguousVariables { missing: 1 })
        ));
    }

    #[test]
    fn degree_one_polarization_reorders_slots() {
        // x.(y.y) is linear in x; polarizing x at degree 1 keeps x in slot 0
        let e = var(1).mul(var(0));
        let m = polarize(&e, 1, 1).unwrap();
        let mut t = Tensor3::zeros(2);
        t.set(0, 1, 1, int(1));
        let a = HomAlgebra::new(t, Matrix::identity(2)).unwrap();
        let r = m.eval(&a, &[basis_vector(2, 0), basis_vector(2, 1)]);
        assert_eq!(r, basis_vector(2, 1));
        let _ = ProductKind::Main;
    }

    #[test]
    fn scan_finds_lexicographically_first_failure() {
        let scan = scan_basis_tuples(3, 3, |t| {
            if t == [1, 0, 2] || t == [2, 0, 0] || t == [1, 2, 0] {
                vec![int(1)]
            } else {
                vec![int(0)]
            }
        });
        assert_eq!(scan.witness.unwrap().0, vec![1, 0, 2]);
        assert_eq!(scan.checked, 9 + 2 + 1);
    }

    #[test]
    fn scan_passes_and_counts() {
        let scan = scan_basis_tuples(4, 3, |_| vec![int(0)]);
        assert!(scan.witness.is_none());
        assert_eq!(scan.checked, 64);
        let empty = scan_basis_tuples(0, 2, |_| vec![int(1)]);
        assert!(empty.witness.is_none());
        assert_eq!(empty.checked, 0);
    }
}
