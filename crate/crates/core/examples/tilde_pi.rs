//! The operator π̃: sum formula, contraction formula, and the bracket it generates.

use poisson_formality::exterior::exterior_derivative;
use poisson_formality::poisson::fixtures;
use poisson_formality::symcore::parse_form;

fn main() -> poisson_formality::Result<()> {
    let s = fixtures::r4_symplectic();
    let n = s.dim();
    let a = parse_form("x1 dx2^dx3", n)?;
    let b = parse_form("x4 dx1 + dx3", n)?;

    println!("pi~(a, b)  sum         = {}", s.tilde_pi(&a, &b)?);
    println!("pi~(a, b)  contraction = {}", s.tilde_pi_contraction(&a, &b)?);
    println!("Koszul  {{a, b}} = {}", s.koszul_bracket(&a, &b)?);
    println!("Nikonov {{a, b}} = {}", s.nikonov_bracket(&a, &b)?);

    // closed forms: the bracket is exact
    let c1 = parse_form("dx1^dx2", n)?;
    let c2 = exterior_derivative(&parse_form("x3^2 dx4", n)?);
    println!("{{c1, c2}}     = {}", s.koszul_bracket(&c1, &c2)?);
    println!("d pi~(c1, c2) = {}", exterior_derivative(&s.tilde_pi(&c1, &c2)?));
    Ok(())
}
