//! Exterior derivative, contraction, Lie derivative and the Schouten bracket on ℝ³.

use poisson_formality::exterior::{
    exterior_derivative, interior, lie_derivative, schouten_bracket, vector_commutator,
};
use poisson_formality::symcore::{parse_form, parse_polyvector};

fn main() -> poisson_formality::Result<()> {
    let n = 3;
    let w = parse_form("x1*x2 dx3 + x3^2 dx1", n)?;
    let x = parse_polyvector("x2 @1 - x1 @2", n)?;
    let y = parse_polyvector("x3 @1", n)?;

    let dw = exterior_derivative(&w);
    println!("w        = {w}");
    println!("dw       = {dw}");
    println!("ddw      = {}", exterior_derivative(&dw));
    println!("i_X w    = {}", interior(&x, &w));

    let lie = lie_derivative(&x, &w)?;
    let magic = &exterior_derivative(&interior(&x, &w)) + &interior(&x, &dw);
    println!("L_X w    = {lie}");
    println!("Cartan   : L_X = d i_X + i_X d holds: {}", lie == magic);

    println!("[X, Y]   = {}", vector_commutator(&x, &y));
    let p = parse_polyvector("x3 @1^@2 + x1 @2^@3 + x2 @3^@1", n)?;
    println!("[p, p]   = {}", schouten_bracket(&p, &p)?);
    Ok(())
}
