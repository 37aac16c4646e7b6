//! Inputs shared by the benchmarks.

use homjmp::algebra::admissible_pair;
use homjmp::constructions::TStarExtension;
use homjmp::{fixtures, linalg, HomAlgebra, HomJMPAlgebra};

pub fn ex3() -> HomAlgebra {
    fixtures::ex3(&linalg::int(2)).expect("nonzero parameter")
}

pub fn ex5() -> HomAlgebra {
    fixtures::ex5(&linalg::int(2), &linalg::int(3)).expect("nonzero parameters")
}

pub fn ex5_pair() -> HomJMPAlgebra {
    admissible_pair(&ex5())
}

pub fn p6_extension() -> TStarExtension {
    fixtures::p6_extension()
}
