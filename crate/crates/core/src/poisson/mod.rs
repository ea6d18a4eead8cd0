//! Poisson bivectors and the brackets they induce on functions and forms.

mod bracket;
pub mod fixtures;
mod structure;
mod tilde_pi;

pub use structure::{Entry, PoissonStructure, StructureFile};
