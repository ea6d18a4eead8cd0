use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exterior::{same_dim, Basis, DifferentialForm};
use crate::symcore::{Monomial, Polynomial, Rational};

use super::sign::permutation_sign;

/// A suspended basis form `s(m dx_I)` with unit coefficient.
///
/// Its degree is `|I| - 1`, so suspended functions have degree `-1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    basis: Basis,
    monomial: Monomial,
}

impl Letter {
    pub fn new(basis: Basis, monomial: Monomial) -> Self {
        Letter { basis, monomial }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn monomial(&self) -> &Monomial {
        &self.monomial
    }

    pub fn dim(&self) -> usize {
        self.monomial.dim()
    }

    /// Suspended degree.
    pub fn degree(&self) -> i64 {
        self.basis.grade() as i64 - 1
    }

    /// Degree of the underlying form.
    pub fn form_degree(&self) -> usize {
        self.basis.grade()
    }

    /// The underlying (desuspended) form.
    pub fn form(&self) -> DifferentialForm {
        DifferentialForm::from_term(self.basis, Polynomial::term(Rational::one(), self.monomial.clone()))
    }

    /// Splits a form into `(coefficient, letter)` pairs.
    pub fn expand(form: &DifferentialForm) -> Vec<(Rational, Letter)> {
        form.monomial_terms().map(|(b, m, c)| (c.clone(), Letter::new(b, m.clone()))).collect()
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.form())
    }
}

/// Brings `letters` into canonical order, returning the sign-adjusted
/// coefficient, or `None` when the word vanishes (an even letter repeated).
pub fn normalize_word(mut letters: Vec<Letter>, coeff: Rational) -> Result<Option<(Vec<Letter>, Rational)>> {
    if letters.is_empty() {
        return Err(Error::EmptyWord);
    }
    let dim = letters[0].dim();
    for l in &letters {
        same_dim(dim, l.dim())?;
    }
    if coeff.is_zero() {
        return Ok(None);
    }
    let degrees: Vec<i64> = letters.iter().map(Letter::degree).collect();
    let mut order: Vec<usize> = (0..letters.len()).collect();
    order.sort_by(|&a, &b| letters[a].cmp(&letters[b]));
    let neg = permutation_sign(&degrees, &order);
    let mut sorted: Vec<Letter> = order.iter().map(|&i| letters[i].clone()).collect();
    if sorted.windows(2).any(|w| w[0] == w[1] && w[0].degree() % 2 == 0) {
        return Ok(None);
    }
    letters.clear();
    std::mem::swap(&mut letters, &mut sorted);
    Ok(Some((letters, if neg { -coeff } else { coeff })))
}

/// A finite linear combination of canonically ordered words in `Λ*ΣΩ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordSum {
    dim: usize,
    terms: BTreeMap<Vec<Letter>, Rational>,
}

impl WordSum {
    pub fn zero(dim: usize) -> Self {
        WordSum { dim, terms: BTreeMap::new() }
    }

    /// `coeff · l_1 ∧ ... ∧ l_n`, normalized.
    pub fn word(letters: Vec<Letter>, coeff: Rational) -> Result<Self> {
        let dim = letters.first().map(Letter::dim).ok_or(Error::EmptyWord)?;
        let mut out = WordSum::zero(dim);
        if let Some((l, c)) = normalize_word(letters, coeff)? {
            out.terms.insert(l, c);
        }
        Ok(out)
    }

    /// `s ω` as a sum of length-1 words.
    pub fn suspend(form: &DifferentialForm) -> Self {
        let mut out = WordSum::zero(form.dim());
        for (c, l) in Letter::expand(form) {
            out.add_term(vec![l], c);
        }
        out
    }

    /// `sω_1 ∧ ... ∧ sω_n`.
    pub fn wedge_of(forms: &[DifferentialForm]) -> Result<Self> {
        let (first, rest) = forms.split_first().ok_or(Error::EmptyWord)?;
        let mut out = Self::suspend(first);
        for f in rest {
            same_dim(out.dim, f.dim())?;
            out = out.wedge(&Self::suspend(f));
        }
        Ok(out)
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

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Letter>, &Rational)> {
        self.terms.iter()
    }

    /// Longest word length present (0 for the zero sum).
    pub fn max_length(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    /// Words of length exactly `n`.
    pub fn length_part(&self, n: usize) -> Self {
        WordSum {
            dim: self.dim,
            terms: self.terms.iter().filter(|(k, _)| k.len() == n).map(|(k, v)| (k.clone(), v.clone())).collect(),
        }
    }

    /// Desuspends a sum of length-1 words.
    pub fn desuspend(&self) -> Result<DifferentialForm> {
        let mut out = DifferentialForm::zero(self.dim);
        for (w, c) in &self.terms {
            if w.len() != 1 {
                return Err(Error::WordLength(w.len()));
            }
            out.add_assign_ref(&w[0].form().scale(c));
        }
        Ok(out)
    }

    /// Adds an already canonical word.
    pub(crate) fn add_term(&mut self, letters: Vec<Letter>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(letters) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Adds an arbitrary (not yet ordered) word.
    pub(crate) fn add_raw(&mut self, letters: Vec<Letter>, c: Rational) {
        if let Some((l, c)) = normalize_word(letters, c).expect("nonempty word of matching dimension") {
            self.add_term(l, c);
        }
    }

    pub fn add_assign_ref(&mut self, other: &WordSum) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = WordSum::zero(self.dim);
        if c.is_zero() {
            return out;
        }
        for (w, v) in &self.terms {
            out.terms.insert(w.clone(), v * c);
        }
        out
    }

    /// Product in `Λ*`: concatenation followed by normalization.
    pub fn wedge(&self, other: &WordSum) -> WordSum {
        let mut out = WordSum::zero(self.dim);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut w = a.clone();
                w.extend(b.iter().cloned());
                out.add_raw(w, ca * cb);
            }
        }
        out
    }

    /// Sum of suspended letter degrees of a word.
    pub fn word_degree(word: &[Letter]) -> i64 {
        word.iter().map(Letter::degree).sum()
    }
}

impl std::ops::Add for &WordSum {
    type Output = WordSum;
    fn add(self, rhs: &WordSum) -> WordSum {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl std::ops::Sub for &WordSum {
    type Output = WordSum;
    fn sub(self, rhs: &WordSum) -> WordSum {
        self + &(-rhs)
    }
}

impl std::ops::Neg for &WordSum {
    type Output = WordSum;
    fn neg(self) -> WordSum {
        self.scale(&-Rational::one())
    }
}

impl std::ops::Neg for WordSum {
    type Output = WordSum;
    fn neg(self) -> WordSum {
        -&self
    }
}

/// Renders a single word as `<l_1, ..., l_n>`.
pub(crate) fn word_string(word: &[Letter]) -> String {
    let inner: Vec<String> = word.iter().map(Letter::to_string).collect();
    format!("<{}>", inner.join(", "))
}

impl fmt::Display for WordSum {
    /// `c <l_1, ..., l_n> + ...`, words in canonical order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts = self.terms.iter().map(|(w, c)| {
            let neg = c < &Rational::zero();
            let mag = crate::symcore::fmt_rational(&if neg { -c } else { c.clone() });
            (neg, format!("{} {}", mag, word_string(w)))
        });
        write!(f, "{}", crate::symcore::polynomial_join(parts))
    }
}
