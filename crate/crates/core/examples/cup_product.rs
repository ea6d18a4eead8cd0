//! Cup products of contraction components and the decomposition of Π.

use poisson_formality::coalgebra::{component_commutator, cup_product, WordSum};
use poisson_formality::exterior::interior;
use poisson_formality::formality::{derivation_tilde, pi_from_decomposition, OperatorKind};
use poisson_formality::poisson::fixtures;
use poisson_formality::symcore::parse_form;

fn main() -> poisson_formality::Result<()> {
    let s = fixtures::so3();
    let n = s.dim();
    let pairs = s.decomposition();
    for (x, y) in &pairs {
        println!("pi part: ({x}) ^ ({y})");
    }

    let w = WordSum::wedge_of(&[parse_form("x1 dx2^dx3", n)?, parse_form("dx1", n)?])?;
    let (x, y) = pairs[0].clone();
    let ix = derivation_tilde(n, -1, move |a| interior(&x, a));
    let iy = derivation_tilde(n, -1, move |a| interior(&y, a));
    println!("(i~X u i~Y)(w)  = {}", cup_product(&ix, &iy).apply(&w));
    println!("(i~Y u i~X)(w)  = {}", cup_product(&iy, &ix).apply(&w));

    let summed = pi_from_decomposition(n, &pairs)?;
    let direct = OperatorKind::Pi(s.clone()).component(n)?;
    println!("sum of cups     = {}", summed.apply(&w));
    println!("Pi component    = {}", direct.apply(&w));

    let d = OperatorKind::D.component(n)?;
    let b = OperatorKind::BracketExt(s.clone()).component(n)?;
    println!("[Pi, d~](w)     = {}", component_commutator(&direct, &d).apply(&w));
    println!("s{{}}(w)         = {}", b.apply(&w));
    Ok(())
}
