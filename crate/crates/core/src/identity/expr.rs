use std::collections::BTreeSet;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::algebra::{ProductKind, Structure};
use crate::error::{Error, Result};
use crate::linalg::{self, int, Scalar, Vector};

/// A formal expression in the products and twist of a structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdentityExpr {
    Var(usize),
    Product(ProductKind, Box<IdentityExpr>, Box<IdentityExpr>),
    /// `alpha^k(child)`
    Twist(u32, Box<IdentityExpr>),
    /// Linear combination of subexpressions.
    Sum(Vec<(Scalar, IdentityExpr)>),
}

pub fn var(i: usize) -> IdentityExpr {
    IdentityExpr::Var(i)
}

impl IdentityExpr {
    pub fn product(kind: ProductKind, left: IdentityExpr, right: IdentityExpr) -> Self {
        IdentityExpr::Product(kind, Box::new(left), Box::new(right))
    }

    pub fn mul(self, other: IdentityExpr) -> Self {
        Self::product(ProductKind::Main, self, other)
    }

    pub fn bracket(self, other: IdentityExpr) -> Self {
        Self::product(ProductKind::Bracket, self, other)
    }

    pub fn jordan(self, other: IdentityExpr) -> Self {
        Self::product(ProductKind::Jordan, self, other)
    }

    pub fn twist(self, k: u32) -> Self {
        match self {
            _ if k == 0 => self,
            IdentityExpr::Twist(j, inner) => IdentityExpr::Twist(j + k, inner),
            other => IdentityExpr::Twist(k, Box::new(other)),
        }
    }

    pub fn scaled(self, c: Scalar) -> Self {
        IdentityExpr::Sum(vec![(c, self)])
    }

    pub fn sum(terms: Vec<(Scalar, IdentityExpr)>) -> Self {
        IdentityExpr::Sum(terms)
    }

    /// Number of variables; errors unless the indices are exactly `0..k`.
    pub fn arity(&self) -> Result<usize> {
        let mut seen = BTreeSet::new();
        self.collect_vars(&mut seen);
        let k = seen.len();
        if let Some(missing) = (0..k).find(|i| !seen.contains(i)) {
            return Err(Error::NonContiguousVariables { missing });
        }
        Ok(k)
    }

    fn collect_vars(&self, seen: &mut BTreeSet<usize>) {
        match self {
            IdentityExpr::Var(i) => {
                seen.insert(*i);
            }
            IdentityExpr::Product(_, l, r) => {
                l.collect_vars(seen);
                r.collect_vars(seen);
            }
            IdentityExpr::Twist(_, c) => c.collect_vars(seen),
            IdentityExpr::Sum(terms) => terms.iter().for_each(|(_, t)| t.collect_vars(seen)),
        }
    }

    /// Evaluates with `vars[i]` substituted for variable `i`.
    pub fn eval(&self, s: &dyn Structure, vars: &[Vector]) -> Vector {
        match self {
            IdentityExpr::Var(i) => vars[*i].clone(),
            IdentityExpr::Product(kind, l, r) => {
                let lv = l.eval(s, vars);
                if linalg::is_zero_vector(&lv) {
                    return lv;
                }
                let rv = r.eval(s, vars);
                s.product(*kind, &lv, &rv)
            }
            IdentityExpr::Twist(k, c) => s.twist_pow(*k, &c.eval(s, vars)),
            IdentityExpr::Sum(terms) => {
                let mut out = linalg::zero_vector(s.dim());
                for (c, t) in terms {
                    if c.is_zero() {
                        continue;
                    }
                    let v = t.eval(s, vars);
                    if c.is_one() {
                        out = linalg::add(&out, &v);
                    } else {
                        linalg::axpy(&mut out, c, &v);
                    }
                }
                out
            }
        }
    }
}

impl Add for IdentityExpr {
    type Output = IdentityExpr;

    fn add(self, rhs: IdentityExpr) -> IdentityExpr {
        let mut terms = match self {
            IdentityExpr::Sum(t) => t,
            other => vec![(int(1), other)],
        };
        terms.push((int(1), rhs));
        IdentityExpr::Sum(terms)
    }
}

impl Sub for IdentityExpr {
    type Output = IdentityExpr;

    fn sub(self, rhs: IdentityExpr) -> IdentityExpr {
        self + (-rhs)
    }
}

impl Neg for IdentityExpr {
    type Output = IdentityExpr;

    fn neg(self) -> IdentityExpr {
        self.scaled(int(-1))
    }
}
