//! The Koszul bracket of forms on so(3)* and on a non-Poisson bivector.

use poisson_formality::exterior::{differential, exterior_derivative};
use poisson_formality::poisson::fixtures;
use poisson_formality::symcore::{parse_form, parse_polynomial};

fn main() -> poisson_formality::Result<()> {
    let s = fixtures::so3();
    let n = s.dim();
    println!("pi       = {}", s.bivector());
    println!("[pi, pi] = {} (Poisson: {})", s.schouten_square(), s.is_poisson());

    let f = parse_polynomial("x1^2", n)?;
    let g = parse_polynomial("x2*x3", n)?;
    let lhs = s.koszul_bracket(&differential(&f), &differential(&g))?;
    let rhs = differential(&s.function_bracket(&f, &g)?);
    println!("{{df, dg}} = {lhs}");
    println!("d{{f, g}}  = {rhs}");

    let a = parse_form("x1 dx2", n)?;
    let b = parse_form("dx1^dx3", n)?;
    let ab = s.koszul_bracket(&a, &b)?;
    println!("{{a, b}}   = {ab}");
    println!("d{{a, b}}  = {}", exterior_derivative(&ab));
    println!("anchor a = {}", s.anchor(&a)?);

    let bad = fixtures::non_poisson();
    let (u, v, w) = (parse_form("dx1", 3)?, parse_form("dx2", 3)?, parse_form("dx3", 3)?);
    println!("non-Poisson [pi, pi] = {}", bad.schouten_square());
    println!("non-Poisson jacobiator(dx1, dx2, dx3) = {}", bad.jacobiator(&u, &v, &w)?);
    Ok(())
}
