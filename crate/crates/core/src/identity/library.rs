//! Expression trees for the defining identities of Hom-algebra classes.
//!
//! Variable 0 is always `x`; the others follow the order they are written in.

use crate::algebra::ProductKind::{self, Bracket, Jordan, Main};
use crate::linalg::{int, ratio};

use super::expr::{var, IdentityExpr};

fn p(kind: ProductKind, a: IdentityExpr, b: IdentityExpr) -> IdentityExpr {
    IdentityExpr::product(kind, a, b)
}

/// `as(a,b,c) = (ab)alpha(c) - alpha(a)(bc)` for the given product.
pub fn associator(kind: ProductKind, a: IdentityExpr, b: IdentityExpr, c: IdentityExpr) -> IdentityExpr {
    p(kind, p(kind, a.clone(), b.clone()), c.clone().twist(1)) - p(kind, a.twist(1), p(kind, b, c))
}

/// Cyclic sum of `(ab)alpha(c)`.
pub fn jacobiator(kind: ProductKind, a: IdentityExpr, b: IdentityExpr, c: IdentityExpr) -> IdentityExpr {
    p(kind, p(kind, a.clone(), b.clone()), c.clone().twist(1))
        + p(kind, p(kind, b.clone(), c.clone()), a.clone().twist(1))
        + p(kind, p(kind, c, a), b.twist(1))
}

fn square(kind: ProductKind) -> IdentityExpr {
    p(kind, var(0), var(0))
}

/// `x.y - y.x`
pub fn commutativity(kind: ProductKind) -> IdentityExpr {
    p(kind, var(0), var(1)) - p(kind, var(1), var(0))
}

/// `x.y + y.x`
pub fn skewsymmetry(kind: ProductKind) -> IdentityExpr {
    p(kind, var(0), var(1)) + p(kind, var(1), var(0))
}

/// `as(x,y,z)`
pub fn hom_associativity(kind: ProductKind) -> IdentityExpr {
    associator(kind, var(0), var(1), var(2))
}

/// `as(x,y,z) + as(z,y,x)`
pub fn flexible(kind: ProductKind) -> IdentityExpr {
    associator(kind, var(0), var(1), var(2)) + associator(kind, var(2), var(1), var(0))
}

/// `as(x,y,z) + as(y,x,z)`
pub fn left_alternative(kind: ProductKind) -> IdentityExpr {
    associator(kind, var(0), var(1), var(2)) + associator(kind, var(1), var(0), var(2))
}

/// `as(x,y,z) + as(x,z,y)`
pub fn right_alternative(kind: ProductKind) -> IdentityExpr {
    associator(kind, var(0), var(1), var(2)) + associator(kind, var(0), var(2), var(1))
}

/// `as(x^2, alpha(y), alpha(x))`, degree 3 in `x`.
pub fn hom_jordan(kind: ProductKind) -> IdentityExpr {
    associator(kind, square(kind), var(1).twist(1), var(0).twist(1))
}

/// `J(alpha(x), alpha(y), [x,z]) - [J(x,y,z), alpha^2(x)]`, degree 2 in `x`.
pub fn hom_malcev(kind: ProductKind) -> IdentityExpr {
    let lhs = jacobiator(
        kind,
        var(0).twist(1),
        var(1).twist(1),
        p(kind, var(0), var(2)),
    );
    let rhs = p(kind, jacobiator(kind, var(0), var(1), var(2)), var(0).twist(2));
    lhs - rhs
}

/// `{alpha(x), y o z} - {x,y} o alpha(z) - alpha(y) o {x,z}`
pub fn hom_leibniz() -> IdentityExpr {
    p(Bracket, var(0).twist(1), p(Jordan, var(1), var(2)))
        - p(Jordan, p(Bracket, var(0), var(1)), var(2).twist(1))
        - p(Jordan, var(1).twist(1), p(Bracket, var(0), var(2)))
}

/// `{x o y, alpha(z)} - {x,z} o alpha(y) - alpha(x) o {y,z}`
pub fn hom_leibniz_skew() -> IdentityExpr {
    p(Bracket, p(Jordan, var(0), var(1)), var(2).twist(1))
        - p(Jordan, p(Bracket, var(0), var(2)), var(1).twist(1))
        - p(Jordan, var(0).twist(1), p(Bracket, var(1), var(2)))
}

/// `as(x,y,z) - 1/4 J_{A^-}(x,y,z) - 1/4 [alpha(y),[z,x]] - as_{A^+}(x,y,z)`
pub fn flexible_characterization() -> IdentityExpr {
    let quarter = ratio(1, 4);
    associator(Main, var(0), var(1), var(2))
        - jacobiator(Bracket, var(0), var(1), var(2)).scaled(quarter.clone())
        - p(Bracket, var(1).twist(1), p(Bracket, var(2), var(0))).scaled(quarter)
        - associator(Jordan, var(0), var(1), var(2))
}

/// `(x^2 . alpha(y)) . alpha^2(x) - alpha(x^2) . (alpha(y) . alpha(x))`, degree 3 in `x`.
pub fn rl_condition() -> IdentityExpr {
    p(Main, p(Main, square(Main), var(1).twist(1)), var(0).twist(2))
        - p(Main, square(Main).twist(1), p(Main, var(1).twist(1), var(0).twist(1)))
}

/// `x^2 . alpha(x) - alpha(x) . x^2`, degree 3.
pub fn third_power() -> IdentityExpr {
    p(Main, square(Main), var(0).twist(1)) - p(Main, var(0).twist(1), square(Main))
}

/// `x^3 . alpha^2(x) - alpha(x^2) . alpha(x^2)` with `x^3 = x^2 . alpha(x)`, degree 4.
pub fn fourth_power() -> IdentityExpr {
    let cube = p(Main, square(Main), var(0).twist(1));
    p(Main, cube, var(0).twist(2)) - p(Main, square(Main).twist(1), square(Main).twist(1))
}

/// `2 S_A(x,y,z) - J_{A^-}(x,y,z)`
pub fn cyclic_lemma() -> IdentityExpr {
    let two = int(2);
    (associator(Main, var(0), var(1), var(2))
        + associator(Main, var(1), var(2), var(0))
        + associator(Main, var(2), var(0), var(1)))
    .scaled(two)
        - jacobiator(Bracket, var(0), var(1), var(2))
}

/// `J_{A^-}(x^2, alpha(y), alpha(x))`, degree 3 in `x`.
pub fn minus_jacobiator_on_square() -> IdentityExpr {
    jacobiator(Bracket, square(Main), var(1).twist(1), var(0).twist(1))
}

/// `as_A(x^2, alpha(y), alpha(x)) - as_{A^+}(x^2, alpha(y), alpha(x))`, degree 3 in `x`.
pub fn associator_equals_plus_associator() -> IdentityExpr {
    associator(Main, square(Main), var(1).twist(1), var(0).twist(1))
        - associator(Jordan, square(Main), var(1).twist(1), var(0).twist(1))
}

/// `alpha(x.y) - alpha(x).alpha(y)`
pub fn multiplicativity(kind: ProductKind) -> IdentityExpr {
    p(kind, var(0), var(1)).twist(1) - p(kind, var(0).twist(1), var(1).twist(1))
}
