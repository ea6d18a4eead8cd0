//! The `pformal` command line.
//!
//! ```text
//! pformal bracket <S> <expr1> <expr2>
//! pformal tilde-pi <S> <expr1> <expr2>
//! pformal schouten-square <S>
//! pformal verify <check> <S> [--trials N] [--seed N] [--max-word-length L] [--max-poly-degree D]
//! ```
//!
//! `<S>` is a structure file, or the name of a built-in fixture
//! (`so3`, `r2-symplectic`, ...). Every subcommand accepts `--format text|json`.
//! Exit codes: 0 success, 1 counterexample found, 2 usage or input error.

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::{Error, Result};
use crate::poisson::{fixtures, PoissonStructure};
use crate::symcore::parse_form;
use crate::verify::{run_check, Check, SuiteConfig};

#[derive(Parser, Debug)]
#[command(name = "pformal", version, about = "Koszul brackets and formality identities on polynomial Poisson manifolds")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Koszul bracket of two forms.
    Bracket { structure: String, expr1: String, expr2: String },
    /// The operator π̃ on two forms.
    TildePi { structure: String, expr1: String, expr2: String },
    /// Schouten square [π, π] and the Poisson verdict.
    SchoutenSquare { structure: String },
    /// Run a seeded property suite.
    Verify {
        #[arg(value_parser = check_names())]
        check: String,
        structure: String,
        #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..=4))]
        max_word_length: u64,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(0..=3))]
        max_poly_degree: u32,
    },
}

fn check_names() -> clap::builder::PossibleValuesParser {
    clap::builder::PossibleValuesParser::new(Check::ALL.map(Check::name))
}

/// Loads a structure from a file, falling back to the built-in fixture of that name.
pub fn load_structure(arg: &str) -> Result<PoissonStructure> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{arg}: {e}")))?;
        return PoissonStructure::from_json(&text);
    }
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or(arg).replace('_', "-");
    fixtures::by_name(&stem).ok_or_else(|| Error::Io(format!("{arg}: no such file or built-in structure")))
}

/// Runs the CLI on `argv` (program name first), printing to stdout/stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut out = std::io::stdout().lock();
    let mut err = std::io::stderr().lock();
    run_with(argv, &mut out, &mut err)
}

/// [`run`] with explicit output streams.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match execute(&cli) {
        Ok((text, code)) => {
            let _ = writeln!(out, "{text}");
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn execute(cli: &Cli) -> Result<(String, i32)> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Bracket { structure, expr1, expr2 } | Command::TildePi { structure, expr1, expr2 } => {
            let s = load_structure(structure)?;
            let a = parse_form(expr1, s.dim())?;
            let b = parse_form(expr2, s.dim())?;
            let (name, value) = match cli.command {
                Command::Bracket { .. } => ("bracket", s.koszul_bracket(&a, &b)?),
                _ => ("tilde-pi", s.tilde_pi(&a, &b)?),
            };
            let text = if json {
                json!({ "command": name, "result": value.to_string() }).to_string()
            } else {
                value.to_string()
            };
            Ok((text, 0))
        }
        Command::SchoutenSquare { structure } => {
            let s = load_structure(structure)?;
            let verdict = if s.is_poisson() { "POISSON" } else { "NOT-POISSON" };
            let text = if json {
                json!({
                    "command": "schouten-square",
                    "result": s.schouten_square().to_string(),
                    "poisson": s.is_poisson(),
                })
                .to_string()
            } else {
                format!("{}\n{verdict}", s.schouten_square())
            };
            Ok((text, 0))
        }
        Command::Verify { check, structure, trials, seed, max_word_length, max_poly_degree } => {
            let s = load_structure(structure)?;
            let check: Check = check.parse()?;
            let cfg = SuiteConfig {
                trials: *trials as usize,
                seed: *seed,
                max_word_length: *max_word_length as usize,
                max_poly_degree: *max_poly_degree,
            };
            let report = run_check(check, &s, &cfg)?;
            let text = if json { report.to_json() } else { report.to_string() };
            Ok((text, if report.pass { 0 } else { 1 }))
        }
    }
}
