//! Bundled structures used by the tests, the examples and the CLI.

use super::PoissonStructure;

const R2_SYMPLECTIC: &str = include_str!("../../fixtures/r2_symplectic.json");
const R4_SYMPLECTIC: &str = include_str!("../../fixtures/r4_symplectic.json");
const SO3: &str = include_str!("../../fixtures/so3.json");
const LOG_CANONICAL: &str = include_str!("../../fixtures/log_canonical.json");
const NON_POISSON: &str = include_str!("../../fixtures/non_poisson.json");

/// Names accepted by [`by_name`].
pub const NAMES: [&str; 5] = ["r2-symplectic", "r4-symplectic", "so3", "log-canonical", "non-poisson"];

fn load(text: &str) -> PoissonStructure {
    PoissonStructure::from_json(text).expect("bundled fixture parses")
}

/// `@1^@2` on ℝ².
pub fn r2_symplectic() -> PoissonStructure {
    load(R2_SYMPLECTIC)
}

/// `@1^@2 + @3^@4` on ℝ⁴.
pub fn r4_symplectic() -> PoissonStructure {
    load(R4_SYMPLECTIC)
}

/// The linear structure dual to so(3).
pub fn so3() -> PoissonStructure {
    load(SO3)
}

/// A quadratic log-canonical structure on ℝ³.
pub fn log_canonical() -> PoissonStructure {
    load(LOG_CANONICAL)
}

/// `x3 @1^@2 + x2 @2^@3`, whose Schouten square does not vanish.
pub fn non_poisson() -> PoissonStructure {
    load(NON_POISSON)
}

pub fn by_name(name: &str) -> Option<PoissonStructure> {
    Some(match name {
        "r2-symplectic" => r2_symplectic(),
        "r4-symplectic" => r4_symplectic(),
        "so3" => so3(),
        "log-canonical" => log_canonical(),
        "non-poisson" => non_poisson(),
        _ => return None,
    })
}

/// The Poisson fixtures.
pub fn poisson() -> Vec<(&'static str, PoissonStructure)> {
    NAMES[..4].iter().map(|&n| (n, by_name(n).unwrap())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poisson_flags() {
        for (name, s) in poisson() {
            assert!(s.is_poisson(), "{name}: {}", s.schouten_square());
        }
        let bad = non_poisson();
        assert!(!bad.is_poisson());
    }
}
