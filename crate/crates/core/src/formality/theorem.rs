use serde::Serialize;

use crate::coalgebra::{exp_nilpotent, Coderivation, Component, Operator, WordSum};
use crate::error::Result;
use crate::poisson::PoissonStructure;

use super::operators::OperatorKind;

/// Which form of the intertwining identity to test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// `e^Π ∘ D ∘ e^Π = D + B`.
    Plain,
    /// `e^{Π̄} ∘ D̄ ∘ e^{-Π̄} = D̄ + B̄`.
    Skewed,
}

/// Both sides of an identity evaluated on one word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DefectReport {
    pub word: String,
    pub lhs: String,
    pub rhs: String,
    pub difference: String,
    pub zero: bool,
}

impl DefectReport {
    pub fn new(word: &WordSum, lhs: &WordSum, rhs: &WordSum) -> Self {
        let diff = lhs - rhs;
        DefectReport {
            word: word.to_string(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            difference: diff.to_string(),
            zero: diff.is_zero(),
        }
    }
}

/// The coderivations `D`, `Π` and `B` (extension of the Koszul bracket) for `S`.
#[derive(Clone, Debug)]
pub struct PoissonCoderivations {
    pub d: Operator,
    pub pi: Operator,
    pub bracket: Operator,
    pub d_bar: Operator,
    pub pi_bar: Operator,
    pub bracket_bar: Operator,
}

impl PoissonCoderivations {
    pub fn new(s: &PoissonStructure) -> Result<Self> {
        let n = s.dim();
        let d = Coderivation::new(vec![OperatorKind::D.component(n)?]);
        let pi = Coderivation::new(vec![OperatorKind::Pi(s.clone()).component(n)?]);
        let br = Coderivation::new(vec![OperatorKind::BracketExt(s.clone()).component(n)?]);
        Ok(PoissonCoderivations {
            d_bar: d.bar(),
            pi_bar: pi.bar(),
            bracket_bar: br.bar(),
            d: d.operator(),
            pi: pi.operator(),
            bracket: br.operator(),
        })
    }
}

/// Evaluates both sides of the intertwining identity on `w`.
pub fn main_theorem_sides(ops: &PoissonCoderivations, w: &WordSum, variant: Variant) -> Result<(WordSum, WordSum)> {
    match variant {
        Variant::Plain => {
            let inner = exp_nilpotent(&ops.pi, w, 1)?;
            let lhs = exp_nilpotent(&ops.pi, &ops.d.apply(&inner), 1)?;
            let rhs = &ops.d.apply(w) + &ops.bracket.apply(w);
            Ok((lhs, rhs))
        }
        Variant::Skewed => {
            let inner = exp_nilpotent(&ops.pi_bar, w, -1)?;
            let lhs = exp_nilpotent(&ops.pi_bar, &ops.d_bar.apply(&inner), 1)?;
            let rhs = &ops.d_bar.apply(w) + &ops.bracket_bar.apply(w);
            Ok((lhs, rhs))
        }
    }
}

pub fn main_theorem_defect(s: &PoissonStructure, w: &WordSum, variant: Variant) -> Result<DefectReport> {
    let ops = PoissonCoderivations::new(s)?;
    let (lhs, rhs) = main_theorem_sides(&ops, w, variant)?;
    Ok(DefectReport::new(w, &lhs, &rhs))
}

/// `(D + B) ∘ e^{-Π}` on `w`, against zero. Vanishes on words of closed
/// letters when `S` is Poisson.
pub fn formality_defect(ops: &PoissonCoderivations, w: &WordSum) -> Result<DefectReport> {
    let f = exp_nilpotent(&ops.pi, w, -1)?;
    let lhs = &ops.d.apply(&f) + &ops.bracket.apply(&f);
    Ok(DefectReport::new(w, &lhs, &WordSum::zero(w.dim())))
}

/// `{l, l}(w) = Σ_{i,j} (-1)^{|l_i||l_j|'} [l_i, l_j](w)`, each commutator
/// taken through [`crate::coalgebra::component_commutator`] and extended.
pub fn linfty_defect(family: &[Component], w: &WordSum) -> DefectReport {
    let mut total = WordSum::zero(w.dim());
    for a in family {
        for b in family {
            let c = crate::coalgebra::component_commutator(a, b);
            let mut v = c.extend().apply(w);
            if (a.bidegree().first * b.bidegree().second).rem_euclid(2) == 1 {
                v = -v;
            }
            total.add_assign_ref(&v);
        }
    }
    DefectReport::new(w, &total, &WordSum::zero(w.dim()))
}

/// `l_1 = d̃`, `l_2 = s{}`: the family of the de Rham DGLA with the Koszul bracket.
pub fn dgla_family(s: &PoissonStructure) -> Result<Vec<Component>> {
    let n = s.dim();
    Ok(vec![OperatorKind::D.component(n)?, OperatorKind::BracketExt(s.clone()).component(n)?])
}
