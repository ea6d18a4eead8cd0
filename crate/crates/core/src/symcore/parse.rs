//! Recursive-descent parser for the expression grammar
//!
//! ```text
//! expr      := ('+'|'-')? term (('+'|'-') term)*
//! term      := coeff ('*'? basis)? | basis
//! coeff     := rational ('*'? monom)* | monom ('*'? monom)*
//! rational  := integer ('/' positive-integer)?
//! monom     := 'x' index ('^' exponent)?
//! basis     := 'dx' index ('^' 'dx' index)* | '@' index ('^' '@' index)*
//! ```
//!
//! Whitespace is ignored between tokens. Repeated basis indices give zero;
//! unsorted indices are sign-normalized.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Monomial, Polynomial, Rational};
use crate::error::{Error, Result};
use crate::exterior::{Basis, DifferentialForm, Multivector, Polyvector, MAX_DIM};

/// A parsed value, typed by the basis symbols it uses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Polynomial(Polynomial),
    Form(DifferentialForm),
    Polyvector(Polyvector),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum BasisSym {
    Form,
    Vector,
}

struct Term {
    coeff: Rational,
    mono: Monomial,
    basis: Option<(BasisSym, Vec<usize>)>,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    dim: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn peek_str(&mut self, s: &str) -> bool {
        self.skip_ws();
        self.src[self.pos..].starts_with(s.as_bytes())
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digit string"))
    }

    fn small(&mut self, what: &str) -> Result<usize> {
        let start = self.pos;
        let n = self.digits()?;
        n.try_into().map_err(|_| Error::Parse { pos: start, msg: format!("{what} too large") })
    }

    fn index(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        let i = self.small("index")?;
        if i == 0 || i > self.dim {
            return Err(Error::Parse {
                pos: start,
                msg: format!("coordinate index {i} out of range 1..={}", self.dim),
            });
        }
        Ok(i - 1)
    }

    fn at_monom(&mut self) -> bool {
        self.peek() == Some(b'x')
    }

    fn at_basis(&mut self) -> bool {
        self.peek_str("dx") || self.peek() == Some(b'@')
    }

    fn monom(&mut self, exps: &mut [u32]) -> Result<()> {
        self.pos += 1; // 'x'
        let i = self.index()?;
        let mut e = 1u32;
        if self.peek() == Some(b'^') && !self.src[self.pos + 1..].trim_ascii_start().starts_with(b"dx")
        {
            self.pos += 1;
            e = self.small("exponent")? as u32;
        }
        exps[i] += e;
        Ok(())
    }

    fn basis(&mut self) -> Result<(BasisSym, Vec<usize>)> {
        let sym = if self.peek_str("dx") { BasisSym::Form } else { BasisSym::Vector };
        let mut idx = Vec::new();
        loop {
            match sym {
                BasisSym::Form => {
                    if !self.peek_str("dx") {
                        return self.err("expected 'dx'");
                    }
                    self.pos += 2;
                }
                BasisSym::Vector => {
                    if !self.eat(b'@') {
                        return self.err("expected '@'");
                    }
                }
            }
            idx.push(self.index()?);
            if !self.eat(b'^') {
                break;
            }
        }
        Ok((sym, idx))
    }

    fn term(&mut self) -> Result<Term> {
        let mut coeff = Rational::one();
        let mut exps = vec![0u32; self.dim];
        let mut seen_coeff = false;
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            let num = self.digits()?;
            let den = if self.eat(b'/') {
                let p = self.pos;
                let d = self.digits()?;
                if d.is_zero() {
                    return Err(Error::Parse { pos: p, msg: "zero denominator".into() });
                }
                d
            } else {
                BigInt::one()
            };
            coeff = Rational::new(num, den);
            seen_coeff = true;
        }
        loop {
            let save = self.pos;
            let star = self.eat(b'*');
            if self.at_monom() {
                self.monom(&mut exps)?;
                seen_coeff = true;
            } else if star && !self.at_basis() {
                return self.err("expected a monomial or basis after '*'");
            } else {
                if !star {
                    self.pos = save;
                }
                break;
            }
        }
        let basis = if self.at_basis() {
            Some(self.basis()?)
        } else {
            if !seen_coeff {
                return self.err("expected a term");
            }
            None
        };
        Ok(Term { coeff, mono: Monomial::from_exponents(exps), basis })
    }

    fn expr(&mut self) -> Result<Vec<Term>> {
        let mut terms = Vec::new();
        let mut neg = false;
        if self.eat(b'-') {
            neg = true;
        } else {
            self.eat(b'+');
        }
        loop {
            let mut t = self.term()?;
            if neg {
                t.coeff = -t.coeff;
            }
            terms.push(t);
            if self.eat(b'+') {
                neg = false;
            } else if self.eat(b'-') {
                neg = true;
            } else {
                break;
            }
        }
        if self.peek().is_some() {
            return self.err("unexpected trailing input");
        }
        Ok(terms)
    }
}

fn build<K: crate::exterior::Kind>(dim: usize, terms: Vec<Term>) -> Multivector<K> {
    let mut out = Multivector::<K>::zero(dim);
    for t in terms {
        let idx = t.basis.map(|(_, i)| i).unwrap_or_default();
        if let Some((neg, b)) = Basis::from_indices(&idx) {
            let c = if neg { -t.coeff } else { t.coeff };
            out.add_poly(b, Polynomial::term(c, t.mono));
        }
    }
    out
}

/// Parses `text` over `x1..x{dim}`. The result kind follows the basis
/// symbols present: none → polynomial, `dx` → form, `@` → polyvector.
pub fn parse_expression(text: &str, dim: usize) -> Result<Expr> {
    if dim == 0 || dim > MAX_DIM {
        return Err(Error::Parse { pos: 0, msg: format!("unsupported dimension {dim}") });
    }
    let mut p = Parser { src: text.as_bytes(), pos: 0, dim };
    let terms = p.expr()?;
    let mut kind = None;
    for t in &terms {
        if let Some((sym, _)) = &t.basis {
            match kind {
                None => kind = Some(*sym),
                Some(k) if k != *sym => {
                    return Err(Error::KindMismatch { left: "dx", right: "@" });
                }
                _ => {}
            }
        }
    }
    Ok(match kind {
        None => {
            let mut poly = Polynomial::zero(dim);
            for t in terms {
                poly.add_term(t.mono, t.coeff);
            }
            Expr::Polynomial(poly)
        }
        Some(BasisSym::Form) => Expr::Form(build(dim, terms)),
        Some(BasisSym::Vector) => Expr::Polyvector(build(dim, terms)),
    })
}

pub fn parse_polynomial(text: &str, dim: usize) -> Result<Polynomial> {
    match parse_expression(text, dim)? {
        Expr::Polynomial(p) => Ok(p),
        _ => Err(Error::KindMismatch { left: "polynomial", right: "basis element" }),
    }
}

/// Parses a differential form; a bare polynomial is read as a 0-form.
pub fn parse_form(text: &str, dim: usize) -> Result<DifferentialForm> {
    match parse_expression(text, dim)? {
        Expr::Polynomial(p) => Ok(DifferentialForm::scalar(p)),
        Expr::Form(f) => Ok(f),
        Expr::Polyvector(_) => Err(Error::KindMismatch { left: "dx", right: "@" }),
    }
}

/// Parses a polyvector; a bare polynomial is read as a 0-vector.
pub fn parse_polyvector(text: &str, dim: usize) -> Result<Polyvector> {
    match parse_expression(text, dim)? {
        Expr::Polynomial(p) => Ok(Polyvector::scalar(p)),
        Expr::Polyvector(v) => Ok(v),
        Expr::Form(_) => Err(Error::KindMismatch { left: "@", right: "dx" }),
    }
}

impl std::fmt::Display for Expr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Expr::Polynomial(p) => p.fmt(f),
            Expr::Form(w) => w.fmt(f),
            Expr::Polyvector(v) => v.fmt(f),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symcore::q;

    #[test]
    fn single_rational_term() {
        let p = parse_polynomial("3/2*x1^2", 2).unwrap();
        assert_eq!(p, Polynomial::term(q(3, 2), Monomial::from_exponents(vec![2, 0])));
        assert_eq!(p.len(), 1);
    }

    #[test]
    fn two_form_with_two_terms() {
        let w = parse_form("x3 dx1^dx2 + x1 dx2^dx3", 3).unwrap();
        assert_eq!(w.homogeneous_degree(), Some(2));
        assert_eq!(w.monomial_terms().count(), 2);
        assert_eq!(w.to_string(), "x3 dx1^dx2 + x1 dx2^dx3");
    }

    #[test]
    fn bivector() {
        let e = parse_expression("x3 @1^@2", 3).unwrap();
        let Expr::Polyvector(v) = e else { panic!("expected polyvector") };
        assert_eq!(v.to_string(), "x3 @1^@2");
    }

    #[test]
    fn canonical_rendering() {
        assert_eq!(parse_form("0", 2).unwrap().to_string(), "0");
        assert_eq!(parse_form("dx2^dx1", 2).unwrap().to_string(), "-1 dx1^dx2");
        assert_eq!(parse_form("1/2 x1 dx1 + 1/2*x1 dx1", 2).unwrap().to_string(), "x1 dx1");
        assert_eq!(parse_form("dx1^dx1", 2).unwrap().to_string(), "0");
    }

    #[test]
    fn whitespace_and_stars() {
        let a = parse_polynomial("2 * x1 * x2 ^ 3 - x2", 2).unwrap();
        let b = parse_polynomial("2x1x2^3-x2", 2).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "2*x1*x2^3 - x2");
    }

    #[test]
    fn diagnostics_carry_positions() {
        match parse_expression("x1 + x5", 3) {
            Err(Error::Parse { pos, msg }) => {
                assert_eq!(pos, 6);
                assert!(msg.contains("out of range"));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_expression("x1 +", 2), Err(Error::Parse { .. })));
        assert!(matches!(parse_expression("3/0", 2), Err(Error::Parse { .. })));
        assert!(matches!(parse_expression("dx1 + @1", 2), Err(Error::KindMismatch { .. })));
        assert!(matches!(parse_expression("x1 )", 2), Err(Error::Parse { pos: 3, .. })));
    }
}
