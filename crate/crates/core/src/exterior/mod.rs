//! Differential forms, polyvector fields and the Cartan calculus on ℝⁿ.

mod basis;
mod calculus;
mod multivector;

pub use basis::{Basis, MAX_DIM};
pub use calculus::{
    apply_vector_field, as_vector_field, differential, exterior_derivative, interior,
    interior_product, lie_derivative, schouten_bracket, vector_commutator,
};
pub(crate) use calculus::leibniz_extend;
pub use multivector::{DifferentialForm, FormKind, Kind, Multivector, Polyvector, VectorKind};
pub(crate) use multivector::same_dim;
