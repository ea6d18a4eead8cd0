//! The free cocommutative coalgebra `Λ*ΣΩ` on suspended forms.
//!
//! Words are expanded over letters `s(m dx_I)`; every sign comes from
//! [`permutation_sign`], where transposing letters `a, b` costs
//! `(-1)^{|a||b|+1}`.

mod component;
mod operator;
mod sign;
mod tensor;
mod word;

pub use component::{component_commutator, cup_product, Coderivation, Component};
pub use operator::{exp_nilpotent, Bidegree, Operator};
pub use sign::{permutation_sign, permutations, shuffles};
pub use tensor::{
    coassociativity_defect, coderivation_defect, comultiplication, comultiplication_with, ShuffleSign, TensorSum,
};
pub use word::{normalize_word, Letter, WordSum};
