use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{fmt_rational, Monomial, Rational};
use crate::error::{Error, Result};

/// Sparse polynomial with exact rational coefficients on `x1..xn`.
///
/// No zero coefficient is ever stored, so structural equality is
/// mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    dim: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(dim: usize) -> Self {
        Polynomial { dim, terms: BTreeMap::new() }
    }

    pub fn one(dim: usize) -> Self {
        Self::constant(dim, Rational::one())
    }

    pub fn constant(dim: usize, c: Rational) -> Self {
        Self::term(c, Monomial::one(dim))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let dim = m.dim();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { dim, terms }
    }

    /// The coordinate function `x_{i+1}` (0-based index).
    pub fn var(dim: usize, i: usize) -> Self {
        Self::term(Rational::one(), Monomial::var(dim, i))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Coefficient of the constant monomial, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self
                .terms
                .iter()
                .next()
                .filter(|(m, _)| m.is_one())
                .map(|(_, c)| c.clone()),
            _ => None,
        }
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        debug_assert_eq!(m.dim(), self.dim);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_dim(&self, other: &Polynomial) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: other.dim });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_dim(other)?;
        let mut out = Polynomial::zero(self.dim);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.dim);
        }
        Polynomial {
            dim: self.dim,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// `∂/∂x_{i+1}` (0-based index).
    pub fn partial(&self, i: usize) -> Polynomial {
        assert!(i < self.dim, "partial derivative index {i} out of range");
        let mut out = Polynomial::zero(self.dim);
        for (m, c) in &self.terms {
            if let Some((e, dm)) = m.partial(i) {
                out.add_term(dm, c * Rational::from_integer(e.into()));
            }
        }
        out
    }

    /// `∂/∂x_i` with a 1-based coordinate index, as written in expressions.
    pub fn checked_partial(&self, i: usize) -> Result<Polynomial> {
        if i == 0 || i > self.dim {
            return Err(Error::IndexOutOfRange { index: i, dim: self.dim });
        }
        Ok(self.partial(i - 1))
    }

    /// Term strings in canonical (descending graded-lex) order, signs attached.
    pub(crate) fn signed_terms(&self, basis_suffix: &str) -> Vec<(bool, String)> {
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let neg = c < &Rational::zero();
                let a = if neg { -c.clone() } else { c.clone() };
                let body = match (m.is_one(), a.is_one()) {
                    (true, _) => fmt_rational(&a),
                    (false, true) => m.to_string(),
                    (false, false) => format!("{}*{}", fmt_rational(&a), m),
                };
                let s = if basis_suffix.is_empty() {
                    body
                } else {
                    format!("{body} {basis_suffix}")
                };
                (neg, s)
            })
            .collect()
    }
}

/// Joins signed terms into `a + b - c`; an empty list renders as `0`.
pub(crate) fn join_signed(terms: impl IntoIterator<Item = (bool, String)>) -> String {
    let mut out = String::new();
    for (neg, s) in terms {
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&s);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_signed(self.signed_terms("")))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial addition")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(&-rhs).expect("polynomial subtraction")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial multiplication")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            dim: self.dim,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symcore::q;

    fn x(dim: usize, i: usize) -> Polynomial {
        Polynomial::var(dim, i)
    }

    #[test]
    fn additive_inverse_is_zero() {
        let p = &x(2, 0) * &x(2, 0);
        assert!((&p + &-&p).is_zero());
        assert_eq!((&p - &p).to_string(), "0");
    }

    #[test]
    fn power_rule() {
        let p = &(&x(2, 0) * &x(2, 0)) * &x(2, 1);
        let expected = (&x(2, 0) * &x(2, 1)).scale(&q(2, 1));
        assert_eq!(p.partial(0), expected);
    }

    #[test]
    fn difference_of_squares() {
        // term-by-term expansion: x1^2 - x1 x2 + x2 x1 - x2^2
        let a = &x(2, 0) + &x(2, 1);
        let b = &x(2, 0) - &x(2, 1);
        let mut expected = Polynomial::zero(2);
        expected.add_term(Monomial::from_exponents(vec![2, 0]), q(1, 1));
        expected.add_term(Monomial::from_exponents(vec![1, 1]), q(-1, 1));
        expected.add_term(Monomial::from_exponents(vec![1, 1]), q(1, 1));
        expected.add_term(Monomial::from_exponents(vec![0, 2]), q(-1, 1));
        assert_eq!(&a * &b, expected);
        assert_eq!((&a * &b).to_string(), "x1^2 - x2^2");
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let err = x(2, 0).checked_add(&x(3, 0)).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { left: 2, right: 3 });
        assert!(x(2, 0).checked_mul(&x(3, 0)).is_err());
        assert!(x(2, 0).checked_partial(3).is_err());
    }

    #[test]
    fn render_rational_coefficients() {
        let p = Polynomial::term(q(3, 2), Monomial::from_exponents(vec![2, 0]));
        assert_eq!(p.to_string(), "3/2*x1^2");
        let n = Polynomial::term(q(-1, 1), Monomial::from_exponents(vec![0, 1]));
        assert_eq!((&p + &n).to_string(), "3/2*x1^2 - x2");
    }
}
