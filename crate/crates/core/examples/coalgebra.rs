//! Words of suspended forms, the comultiplication, and coderivations built from components.

use poisson_formality::coalgebra::{
    coassociativity_defect, coderivation_defect, comultiplication, component_commutator, Component, WordSum,
};
use poisson_formality::exterior::exterior_derivative;
use poisson_formality::formality::{derivation_tilde, OperatorKind};
use poisson_formality::symcore::parse_form;

fn main() -> poisson_formality::Result<()> {
    let n = 3;
    let forms = [parse_form("x1 dx2", n)?, parse_form("x3", n)?, parse_form("dx1^dx3", n)?];
    let w = WordSum::wedge_of(&forms)?;
    println!("w                = {w}");
    println!("nabla w          = {}", comultiplication(&w));
    println!("coassociativity  = {}", coassociativity_defect(&w));

    // swapping two even letters kills the word
    let even = parse_form("dx1", n)?;
    println!("s dx1 ^ s dx1    = {}", WordSum::wedge_of(&[even.clone(), even])?);

    let d = derivation_tilde(n, 1, exterior_derivative);
    let dd = d.extend();
    println!("D w              = {}", dd.apply(&w));
    println!("D D w            = {}", dd.apply(&dd.apply(&w)));
    println!("coderivation gap = {}", coderivation_defect(&dd, &w));

    let m = OperatorKind::M.component(n)?;
    let c = component_commutator(&m, &d);
    println!("[m, d~] on w     = {}", c.extend().apply(&w));

    let pair = WordSum::wedge_of(&forms[..2])?;
    let sq = Component::binary(n, 0, |a, b| a.wedge(b));
    println!("wedge on {pair} = {}", sq.apply(&pair));
    Ok(())
}
