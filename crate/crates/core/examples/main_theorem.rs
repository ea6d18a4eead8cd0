//! Both sides of the intertwining identity on a few words, Poisson and not.

use poisson_formality::formality::{formality_defect, main_theorem_sides, PoissonCoderivations, Variant};
use poisson_formality::poisson::fixtures;
use poisson_formality::verify::Sampler;

fn main() -> poisson_formality::Result<()> {
    for name in ["so3", "log-canonical", "non-poisson"] {
        let s = fixtures::by_name(name).expect("built-in");
        let ops = PoissonCoderivations::new(&s)?;
        let mut g = Sampler::new(3, s.dim(), 2).with_max_terms(2);
        println!("== {name}");
        for len in 1..=3 {
            let w = g.word(len, s.dim());
            for variant in [Variant::Skewed, Variant::Plain] {
                let (lhs, rhs) = main_theorem_sides(&ops, &w, variant)?;
                let diff = &lhs - &rhs;
                println!("  len {len} {variant:?}: defect {}", if diff.is_zero() { "0".into() } else { diff.to_string() });
            }
        }
        let mut bad = 0;
        for _ in 0..20 {
            let cw = g.closed_word(3, s.dim().min(3));
            bad += usize::from(!formality_defect(&ops, &cw)?.zero);
        }
        println!("  (D + B) e^-Pi nonzero on {bad}/20 closed words of length 3");
    }
    Ok(())
}
