//! Exact symbolic calculus on polynomial Poisson manifolds.
//!
//! Layers, bottom up:
//!
//! * [`symcore`]: rationals, sparse polynomials, the expression grammar.
//! * [`exterior`]: forms and polyvectors on ℝⁿ, Cartan calculus, Schouten bracket.
//! * [`poisson`]: Poisson structures, the Koszul bracket on forms, `π̃`.
//! * [`coalgebra`]: the free coalgebra on suspended forms, coderivations, cup products.
//! * [`formality`]: Cartan coderivations, `Π`, `e^Π`, the intertwining identity and
//!   the homotopy stages `f₂`, `f₃`, `π₃`.
//! * [`verify`]: seeded property suites producing reproducible reports.
//! * [`cli`]: the `pformal` command line over all of the above.
//!
//! The runnable programs under `examples/` walk through each layer.

pub mod cli;
pub mod coalgebra;
pub mod error;
pub mod exterior;
pub mod formality;
pub mod poisson;
pub mod symcore;
pub mod verify;

pub use error::{Error, Result};
