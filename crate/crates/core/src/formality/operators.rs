use crate::coalgebra::{cup_product, Coderivation, Component};
use crate::error::{Error, Result};
use crate::exterior::{as_vector_field, exterior_derivative, interior, lie_derivative, same_dim, DifferentialForm, Polyvector};
use crate::poisson::PoissonStructure;

/// The coderivations of `Λ*ΣΩ` built from geometric data.
#[derive(Clone, Debug)]
pub enum OperatorKind {
    /// From `d̃ sα = -s dα`.
    D,
    /// From `L̃_X sα = s L_X α`.
    Lie(Polyvector),
    /// From `ι̃_X sα = -s ι_X α`.
    Interior(Polyvector),
    /// From `m(sα ∧ sβ) = (-1)^{|α|} s(α ∧ β)`.
    M,
    /// From `π̃̃(sα ∧ sβ) = -s π̃(α, β)`.
    Pi(PoissonStructure),
    /// From `s{}(sα ∧ sβ) = s{α, β}`.
    BracketExt(PoissonStructure),
}

impl OperatorKind {
    /// The generating component on letters.
    pub fn component(&self, dim: usize) -> Result<Component> {
        Ok(match self {
            OperatorKind::D => Component::unary(dim, 1, |a| -exterior_derivative(a)),
            OperatorKind::Lie(x) => {
                let x = checked_field(x, dim)?;
                Component::unary(dim, 0, move |a| lie_derivative(&x, a).expect("vector field"))
            }
            OperatorKind::Interior(x) => {
                let x = checked_field(x, dim)?;
                Component::unary(dim, -1, move |a| -interior(&x, a))
            }
            OperatorKind::M => Component::binary(dim, 1, |a, b| {
                let ab = a.wedge(b);
                if odd_form(a) {
                    -ab
                } else {
                    ab
                }
            }),
            OperatorKind::Pi(s) => {
                same_dim(dim, s.dim())?;
                let s = s.clone();
                Component::binary(dim, -1, move |a, b| -s.tilde_pi(a, b).expect("same dimension"))
            }
            OperatorKind::BracketExt(s) => {
                same_dim(dim, s.dim())?;
                let s = s.clone();
                Component::binary(dim, 0, move |a, b| s.koszul_bracket(a, b).expect("same dimension"))
            }
        })
    }
}

fn odd_form(a: &DifferentialForm) -> bool {
    a.homogeneous_degree().is_some_and(|k| k % 2 == 1)
}

fn checked_field(x: &Polyvector, dim: usize) -> Result<Polyvector> {
    same_dim(dim, x.dim())?;
    Ok(as_vector_field(x)?.clone())
}

/// The coderivation extending the component of `kind`.
pub fn make_coderivation(kind: &OperatorKind, dim: usize) -> Result<Coderivation> {
    Ok(Coderivation::new(vec![kind.component(dim)?]))
}

/// `δ̃ sα = (-1)^k s δα` for a degree-`k` derivation `δ` of forms.
pub fn derivation_tilde(
    dim: usize,
    k: i64,
    delta: impl Fn(&DifferentialForm) -> DifferentialForm + Send + Sync + 'static,
) -> Component {
    Component::unary(dim, k, move |a| {
        let v = delta(a);
        if k.rem_euclid(2) == 1 {
            -v
        } else {
            v
        }
    })
}

/// `Σ_k ι̃_{X_k} ∪ ι̃_{Y_k}` for `π = Σ_k X_k ∧ Y_k`.
pub fn pi_from_decomposition(dim: usize, pairs: &[(Polyvector, Polyvector)]) -> Result<Component> {
    let mut out = Component::zero(dim, 2, -1);
    for (x, y) in pairs {
        let ix = OperatorKind::Interior(x.clone()).component(dim)?;
        let iy = OperatorKind::Interior(y.clone()).component(dim)?;
        out = out.plus(&cup_product(&ix, &iy));
    }
    Ok(out)
}

/// `Σ_k (ι̃_{X_k} ∪ L̃_{Y_k} - L̃_{X_k} ∪ ι̃_{Y_k})`.
pub fn bracket_from_cartan(dim: usize, pairs: &[(Polyvector, Polyvector)]) -> Result<Component> {
    let mut out = Component::zero(dim, 2, 0);
    for (x, y) in pairs {
        let ix = OperatorKind::Interior(x.clone()).component(dim)?;
        let iy = OperatorKind::Interior(y.clone()).component(dim)?;
        let lx = OperatorKind::Lie(x.clone()).component(dim)?;
        let ly = OperatorKind::Lie(y.clone()).component(dim)?;
        out = out.plus(&cup_product(&ix, &ly)).plus(&cup_product(&lx, &iy).scale(-crate::symcore::q(1, 1)));
    }
    Ok(out)
}

/// Checks that `pairs` decomposes `π`.
pub fn check_decomposition(s: &PoissonStructure, pairs: &[(Polyvector, Polyvector)]) -> Result<()> {
    let mut sum = Polyvector::zero(s.dim());
    for (x, y) in pairs {
        sum = &sum + &x.wedge(y);
    }
    if &sum != s.bivector() {
        return Err(Error::InvalidStructure(format!("decomposition sums to {sum}, not {}", s.bivector())));
    }
    Ok(())
}
