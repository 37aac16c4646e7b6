//! Exact verification workbench for finite-dimensional Hom-Jordan-Malcev-Poisson
//! algebras given by structure constants.
//!
//! All arithmetic is over the rationals. Identities that are multilinear are
//! decided by enumerating basis tuples; identities of higher degree in one
//! variable are polarized first (valid in characteristic 0), so every verdict
//! is exact.

pub mod algebra;
pub mod constructions;
pub mod error;
pub mod fixtures;
pub mod forms;
pub mod identity;
pub mod io;
pub mod linalg;
pub mod maps;
pub mod random;
pub mod suite;
pub mod triples;

pub use algebra::{HomAlgebra, HomJMPAlgebra, PowerTable, ProductKind, Structure};
pub use error::{Error, Result};
pub use forms::BilinearForm;
pub use identity::{CheckReport, Verdict, Witness};
pub use linalg::{Matrix, Scalar, Tensor3, Tensor4, Vector};
pub use triples::{HLJPSystem, HomTripleSystem};
