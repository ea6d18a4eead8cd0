//! Parse, combine and render exact polynomials.

use poisson_formality::symcore::{parse_expression, parse_polynomial};

fn main() -> poisson_formality::Result<()> {
    let f = parse_polynomial("x1^2*x2 - 3/2 x3 + 1", 3)?;
    let g = parse_polynomial("x2 + x3", 3)?;
    println!("f        = {f}");
    println!("g        = {g}");
    println!("f + g    = {}", &f + &g);
    println!("f * g    = {}", &f * &g);
    println!("df/dx1   = {}", f.partial(0));
    println!("degree f = {:?}", f.degree());

    for text in ["x1 dx2^dx3 - dx1", "x3 @1^@2", "2/3"] {
        let e = parse_expression(text, 3)?;
        println!("{text:>18}  ->  {e}");
    }

    match parse_polynomial("x4", 3) {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
