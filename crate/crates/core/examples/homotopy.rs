//! The first stages f2, f3 of the morphism on closed forms and the obstruction π₃.

use poisson_formality::exterior::exterior_derivative;
use poisson_formality::formality::{f2, f3, f3_from_exponential, pi3, PoissonCoderivations};
use poisson_formality::poisson::fixtures;
use poisson_formality::symcore::parse_form;

fn main() -> poisson_formality::Result<()> {
    let s = fixtures::so3();
    let n = s.dim();
    let a = parse_form("x2 dx1 + x1 dx2", n)?;
    let b = parse_form("dx2^dx3", n)?;
    let c = parse_form("dx1", n)?;

    let f = f2(&s, &a, &b)?;
    println!("f2(a, b)     = {f}");
    println!("d f2(a, b)   = {}", exterior_derivative(&f));
    println!("{{a, b}}       = {}", s.koszul_bracket(&a, &b)?);

    let g = f3(&s, &a, &b, &c)?;
    println!("f3(a, b, c)  = {g}");
    println!("d f3         = {}", exterior_derivative(&g));
    println!("pi3(a, b, c) = {}", pi3(&s, &a, &b, &c)?);
    let ops = PoissonCoderivations::new(&s)?;
    println!("f3 via e^-Pi = {}", f3_from_exponential(&ops, &a, &b, &c)?);

    match f2(&s, &parse_form("x1 dx2", n)?, &b) {
        Ok(_) => unreachable!(),
        Err(e) => println!("non-closed input rejected: {e}"),
    }
    Ok(())
}
