//! Exact identity checking with basis enumeration and polarization.

pub mod checks;
pub mod expr;
pub mod library;
pub mod multilinear;
pub mod report;

pub use checks::{
    check_admissible_jmp, check_condition_rl, check_flexible_characterization,
    check_flexible_consequences, check_hom_alternative, check_hom_flexible, check_hom_jmp,
    check_hom_jordan, check_hom_leibniz, check_hom_malcev, check_multilinear,
    check_power_hom_associative, identities, sample_identity, Identities, PowerMode,
};
pub use expr::{var, IdentityExpr};
pub use multilinear::{polarize, scan_basis_tuples, MultilinearIdentity, Scan, SlotOrigin};
pub use report::{CheckReport, CrossCheck, Verdict, Witness};
