//! Runs every property suite on every fixture and prints the reports.

use poisson_formality::poisson::fixtures;
use poisson_formality::verify::{run_check, Check, SuiteConfig};

fn main() -> poisson_formality::Result<()> {
    let cfg = SuiteConfig { trials: 10, ..SuiteConfig::default() };
    for name in fixtures::NAMES {
        let s = fixtures::by_name(name).expect("built-in");
        let mut row = Vec::new();
        for check in Check::ALL {
            let r = run_check(check, &s, &cfg)?;
            row.push(format!("{check}={}", if r.pass { "ok" } else { "FAIL" }));
        }
        println!("{name:>14}: {}", row.join(" "));
    }
    let r = run_check(Check::Jacobi, &fixtures::non_poisson(), &cfg)?;
    println!("\n{}", r.to_json());
    Ok(())
}
