//! Cartan coderivations on `Λ*ΣΩ`, the operator `Π`, and the identity
//! `e^Π ∘ D ∘ e^Π = D + B` relating the de Rham differential to the
//! Koszul bracket of a Poisson structure.

mod homotopy;
mod operators;
mod theorem;

pub use homotopy::{f2, f3, f3_from_exponential, homotopy_stage, pi3, Stage};
pub use operators::{
    bracket_from_cartan, check_decomposition, derivation_tilde, make_coderivation, pi_from_decomposition, OperatorKind,
};
pub use theorem::{
    dgla_family, formality_defect, linfty_defect, main_theorem_defect, main_theorem_sides, DefectReport,
    PoissonCoderivations, Variant,
};
