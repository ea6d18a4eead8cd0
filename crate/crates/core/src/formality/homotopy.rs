use crate::coalgebra::{permutation_sign, permutations, WordSum};
use crate::error::{Error, Result};
use crate::exterior::{exterior_derivative, DifferentialForm};
use crate::poisson::PoissonStructure;
use crate::symcore::q;

use super::theorem::PoissonCoderivations;

/// A stage of the `L∞` morphism from cohomology, or the obstruction `π₃`.
#[derive(Clone, Debug)]
pub enum Stage {
    F2(DifferentialForm, DifferentialForm),
    F3(DifferentialForm, DifferentialForm, DifferentialForm),
    Pi3(DifferentialForm, DifferentialForm, DifferentialForm),
}

fn require_closed(forms: &[&DifferentialForm]) -> Result<()> {
    for w in forms {
        let dw = exterior_derivative(w);
        if !dw.is_zero() {
            return Err(Error::NotClosed { form: w.to_string(), differential: dw.to_string() });
        }
    }
    Ok(())
}

/// Suspended degree of a homogeneous form.
fn sdeg(w: &DifferentialForm) -> Result<i64> {
    w.homogeneous_degree().map(|k| k as i64 - 1).ok_or_else(|| Error::Degree {
        expected: 0,
        found: format!("mixed degrees {:?}", w.grades()),
    })
}

/// `f₂(α, β) = π̃(α, β)` for closed `α, β`.
pub fn f2(s: &PoissonStructure, a: &DifferentialForm, b: &DifferentialForm) -> Result<DifferentialForm> {
    require_closed(&[a, b])?;
    s.tilde_pi(a, b)
}

/// `f₃(α₁, α₂, α₃) = ¼ Σ_{σ∈S₃} (-1)^σ π̃(π̃(α_σ(1), α_σ(2)), α_σ(3))` for closed
/// homogeneous inputs, with the shuffle sign in suspended degrees.
pub fn f3(s: &PoissonStructure, a: &DifferentialForm, b: &DifferentialForm, c: &DifferentialForm) -> Result<DifferentialForm> {
    require_closed(&[a, b, c])?;
    let args = [a, b, c];
    if args.iter().any(|w| w.is_zero()) {
        return Ok(DifferentialForm::zero(s.dim()));
    }
    let degrees = [sdeg(a)?, sdeg(b)?, sdeg(c)?];
    let mut out = DifferentialForm::zero(s.dim());
    for order in permutations(3) {
        let inner = s.tilde_pi(args[order[0]], args[order[1]])?;
        let t = s.tilde_pi(&inner, args[order[2]])?;
        out = if permutation_sign(&degrees, &order) { &out - &t } else { &out + &t };
    }
    Ok(out.scale(&q(1, 4)))
}

/// `π₃(α, β, γ) = {π̃(α,β), γ} + (-1)^{a(b+c)} {π̃(β,γ), α} + (-1)^{bc+1} {π̃(α,γ), β}`
/// with `a, b, c` the suspended degrees. Defined for all homogeneous forms.
pub fn pi3(s: &PoissonStructure, a: &DifferentialForm, b: &DifferentialForm, c: &DifferentialForm) -> Result<DifferentialForm> {
    if [a, b, c].iter().any(|w| w.is_zero()) {
        return Ok(DifferentialForm::zero(s.dim()));
    }
    let (da, db, dc) = (sdeg(a)?, sdeg(b)?, sdeg(c)?);
    let t1 = s.koszul_bracket(&s.tilde_pi(a, b)?, c)?;
    let t2 = s.koszul_bracket(&s.tilde_pi(b, c)?, a)?;
    let t3 = s.koszul_bracket(&s.tilde_pi(a, c)?, b)?;
    let t2 = if (da * (db + dc)).rem_euclid(2) == 1 { -t2 } else { t2 };
    let t3 = if (db * dc + 1).rem_euclid(2) == 1 { -t3 } else { t3 };
    Ok(&(&t1 + &t2) + &t3)
}

/// `f₃` read off the coalgebra map `e^{-Π}`: the length-1 part of
/// `½ Π²(sα₁ ∧ sα₂ ∧ sα₃)`, desuspended.
pub fn f3_from_exponential(
    ops: &PoissonCoderivations,
    a: &DifferentialForm,
    b: &DifferentialForm,
    c: &DifferentialForm,
) -> Result<DifferentialForm> {
    let w = WordSum::wedge_of(&[a.clone(), b.clone(), c.clone()])?;
    let e = crate::coalgebra::exp_nilpotent(&ops.pi, &w, -1)?;
    e.length_part(1).desuspend()
}

pub fn homotopy_stage(s: &PoissonStructure, stage: &Stage) -> Result<DifferentialForm> {
    match stage {
        Stage::F2(a, b) => f2(s, a, b),
        Stage::F3(a, b, c) => f3(s, a, b, c),
        Stage::Pi3(a, b, c) => pi3(s, a, b, c),
    }
}
