use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::marker::PhantomData;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use super::basis::{Basis, MAX_DIM};
use crate::error::{Error, Result};
use crate::symcore::{Monomial, Polynomial, Rational};

/// Marker for which exterior algebra a [`Multivector`] lives in.
pub trait Kind: Copy + Clone + fmt::Debug + Send + Sync + 'static {
    /// Basis symbol in the expression grammar (`dx` or `@`).
    const SYMBOL: &'static str;
    const NAME: &'static str;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FormKind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VectorKind;

impl Kind for FormKind {
    const SYMBOL: &'static str = "dx";
    const NAME: &'static str = "differential form";
}

impl Kind for VectorKind {
    const SYMBOL: &'static str = "@";
    const NAME: &'static str = "polyvector";
}

/// Finite sum `Σ_I f_I e_I` with polynomial coefficients, where `e_I` is a
/// wedge of coordinate covectors (`dx`) or coordinate fields (`@`).
pub struct Multivector<K: Kind> {
    dim: usize,
    terms: BTreeMap<Basis, Polynomial>,
    _kind: PhantomData<K>,
}

/// Element of `Ω*(ℝⁿ)` with polynomial coefficients.
pub type DifferentialForm = Multivector<FormKind>;
/// Element of `Γ(Λ*Tℝⁿ)` with polynomial coefficients.
pub type Polyvector = Multivector<VectorKind>;

impl<K: Kind> Clone for Multivector<K> {
    fn clone(&self) -> Self {
        Multivector { dim: self.dim, terms: self.terms.clone(), _kind: PhantomData }
    }
}

impl<K: Kind> PartialEq for Multivector<K> {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.terms == other.terms
    }
}

impl<K: Kind> Eq for Multivector<K> {}

impl<K: Kind> Hash for Multivector<K> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.dim.hash(state);
        self.terms.hash(state);
    }
}

impl<K: Kind> fmt::Debug for Multivector<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", K::NAME, self)
    }
}

impl<K: Kind> Multivector<K> {
    pub fn zero(dim: usize) -> Self {
        assert!(dim <= MAX_DIM, "dimension {dim} exceeds {MAX_DIM}");
        Multivector { dim, terms: BTreeMap::new(), _kind: PhantomData }
    }

    /// Degree-0 element `f`.
    pub fn scalar(f: Polynomial) -> Self {
        Self::from_term(Basis::EMPTY, f)
    }

    pub fn from_term(basis: Basis, f: Polynomial) -> Self {
        let mut out = Self::zero(f.dim());
        out.add_poly(basis, f);
        out
    }

    /// `e_{i1}^...^e_{ik}` from 0-based indices in any order.
    pub fn basis_element(dim: usize, idx: &[usize]) -> Self {
        match Basis::from_indices(idx) {
            None => Self::zero(dim),
            Some((neg, b)) => {
                let one = Polynomial::one(dim);
                Self::from_term(b, if neg { -one } else { one })
            }
        }
    }

    /// The single coordinate element `e_{i+1}`.
    pub fn coordinate(dim: usize, i: usize) -> Self {
        Self::basis_element(dim, &[i])
    }

    pub fn monomial_term(c: Rational, m: Monomial, basis: Basis) -> Self {
        Self::from_term(basis, Polynomial::term(c, m))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Basis, &Polynomial)> {
        self.terms.iter().map(|(b, p)| (*b, p))
    }

    /// Every `(basis, monomial, coefficient)` triple.
    pub fn monomial_terms(&self) -> impl Iterator<Item = (Basis, &Monomial, &Rational)> {
        self.terms.iter().flat_map(|(b, p)| p.terms().map(move |(m, c)| (*b, m, c)))
    }

    pub fn coefficient(&self, basis: Basis) -> Polynomial {
        self.terms.get(&basis).cloned().unwrap_or_else(|| Polynomial::zero(self.dim))
    }

    /// Sorted list of grades with a nonzero component.
    pub fn grades(&self) -> Vec<usize> {
        let mut g: Vec<usize> = self.terms.keys().map(|b| b.grade()).collect();
        g.dedup();
        g.sort_unstable();
        g.dedup();
        g
    }

    /// `Some(k)` when every term has grade `k`; zero is homogeneous of any
    /// degree and reports `None`.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        match self.grades().as_slice() {
            [k] => Some(*k),
            _ => None,
        }
    }

    /// Checks that the element is zero or of pure grade `k`.
    pub fn expect_degree(&self, k: usize) -> Result<()> {
        let g = self.grades();
        if g.iter().all(|&d| d == k) {
            Ok(())
        } else {
            Err(Error::Degree {
                expected: k,
                found: format!("{g:?}"),
            })
        }
    }

    pub fn component(&self, k: usize) -> Self {
        let mut out = Self::zero(self.dim);
        for (b, p) in &self.terms {
            if b.grade() == k {
                out.terms.insert(*b, p.clone());
            }
        }
        out
    }

    /// Splits into homogeneous components `(grade, part)`.
    pub fn homogeneous_parts(&self) -> Vec<(usize, Self)> {
        self.grades().into_iter().map(|k| (k, self.component(k))).collect()
    }

    pub(crate) fn add_poly(&mut self, basis: Basis, f: Polynomial) {
        debug_assert_eq!(f.dim(), self.dim);
        if f.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(basis) {
            Entry::Vacant(v) => {
                v.insert(f);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &f;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub(crate) fn add_signed(&mut self, negative: bool, basis: Basis, f: Polynomial) {
        self.add_poly(basis, if negative { -f } else { f });
    }

    pub(crate) fn add_assign_ref(&mut self, other: &Self) {
        for (b, p) in &other.terms {
            self.add_poly(*b, p.clone());
        }
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: other.dim });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = self.clone();
        out.add_assign_ref(other);
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.dim);
        if c.is_zero() {
            return out;
        }
        for (b, p) in &self.terms {
            out.terms.insert(*b, p.scale(c));
        }
        out
    }

    /// Multiplication by a function.
    pub fn mul_poly(&self, f: &Polynomial) -> Self {
        let mut out = Self::zero(self.dim);
        for (b, p) in &self.terms {
            out.add_poly(*b, p * f);
        }
        out
    }

    pub fn checked_wedge(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = Self::zero(self.dim);
        for (b1, p1) in &self.terms {
            for (b2, p2) in &other.terms {
                if let Some((neg, b)) = b1.wedge(*b2) {
                    out.add_signed(neg, b, p1 * p2);
                }
            }
        }
        Ok(out)
    }

    pub fn wedge(&self, other: &Self) -> Self {
        self.checked_wedge(other).expect("wedge of mismatched dimensions")
    }

    /// Degree-0 part as a polynomial.
    pub fn scalar_part(&self) -> Polynomial {
        self.coefficient(Basis::EMPTY)
    }

    /// Writes `f e_I` as the ordered letters `(f e_{i1}), e_{i2}, ..., e_{ik}`
    /// whose wedge product is the term. The empty basis yields no letters.
    pub fn term_letters(dim: usize, basis: Basis, f: &Polynomial) -> Vec<Self> {
        basis
            .indices()
            .into_iter()
            .enumerate()
            .map(|(pos, i)| {
                let e = Self::coordinate(dim, i);
                if pos == 0 {
                    e.mul_poly(f)
                } else {
                    e
                }
            })
            .collect()
    }

    fn basis_string(basis: Basis) -> String {
        basis
            .indices()
            .iter()
            .map(|i| format!("{}{}", K::SYMBOL, i + 1))
            .collect::<Vec<_>>()
            .join("^")
    }
}

impl<K: Kind> fmt::Display for Multivector<K> {
    /// Canonical grammar rendering: bases ordered by grade then lexicographically,
    /// monomials in descending graded-lex order within each basis.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = self.terms.iter().flat_map(|(b, p)| {
            let suffix = Self::basis_string(*b);
            p.signed_terms(&suffix)
        });
        f.write_str(&crate::symcore::polynomial_join(parts))
    }
}

impl<K: Kind> Add for &Multivector<K> {
    type Output = Multivector<K>;
    fn add(self, rhs: Self) -> Multivector<K> {
        self.checked_add(rhs).expect("sum of mismatched dimensions")
    }
}

impl<K: Kind> Sub for &Multivector<K> {
    type Output = Multivector<K>;
    fn sub(self, rhs: Self) -> Multivector<K> {
        self.checked_add(&-rhs).expect("difference of mismatched dimensions")
    }
}

impl<K: Kind> Neg for &Multivector<K> {
    type Output = Multivector<K>;
    fn neg(self) -> Multivector<K> {
        self.scale(&-Rational::one())
    }
}

impl<K: Kind> Add for Multivector<K> {
    type Output = Multivector<K>;
    fn add(self, rhs: Self) -> Multivector<K> {
        &self + &rhs
    }
}

impl<K: Kind> Sub for Multivector<K> {
    type Output = Multivector<K>;
    fn sub(self, rhs: Self) -> Multivector<K> {
        &self - &rhs
    }
}

impl<K: Kind> Neg for Multivector<K> {
    type Output = Multivector<K>;
    fn neg(self) -> Multivector<K> {
        -&self
    }
}

impl<K: Kind> std::iter::Sum for Multivector<K> {
    /// Panics on an empty iterator (the dimension is unknown); use a fold with
    /// [`Multivector::zero`] when the sum may be empty.
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        let mut iter = iter;
        let first = iter.next().expect("sum of an empty iterator");
        iter.fold(first, |acc, x| &acc + &x)
    }
}

/// Checks dimensions of two operands.
pub(crate) fn same_dim(a: usize, b: usize) -> Result<()> {
    if a != b {
        Err(Error::DimensionMismatch { left: a, right: b })
    } else {
        Ok(())
    }
}

