//! Exact arithmetic, sparse polynomials and the expression grammar.

mod monomial;
mod parse;
mod polynomial;

pub use monomial::Monomial;
pub use parse::{parse_expression, parse_form, parse_polynomial, parse_polyvector, Expr};
pub use polynomial::Polynomial;
pub(crate) use polynomial::join_signed as polynomial_join;

/// Exact rational coefficient.
pub type Rational = num_rational::BigRational;

/// Builds the rational `num/den`.
pub fn q(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Formats a rational as `n` or `n/d`.
pub(crate) fn fmt_rational(r: &Rational) -> String {
    if r.denom() == &num_bigint::BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
