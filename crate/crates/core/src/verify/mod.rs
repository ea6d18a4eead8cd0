//! Seeded property suites and their reports.

mod checks;
mod random;

pub use checks::{run_check, BracketReport, Check, SuiteConfig};
pub use random::Sampler;
