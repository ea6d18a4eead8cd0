use std::fmt;
use std::sync::Arc;

use num_traits::One;

use crate::error::{Error, Result};
use crate::symcore::Rational;

use super::word::WordSum;

/// Bidegree of a map on `Λ*`: change of total suspended degree, change of
/// word length.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Bidegree {
    pub first: i64,
    pub second: i64,
}

impl Bidegree {
    pub const fn new(first: i64, second: i64) -> Self {
        Bidegree { first, second }
    }

    pub fn total(self) -> i64 {
        self.first - self.second
    }

    pub fn plus(self, other: Bidegree) -> Bidegree {
        Bidegree::new(self.first + other.first, self.second + other.second)
    }

    /// Parity of `|A||B| + |A|'|B|'`.
    pub fn bigraded_odd(self, other: Bidegree) -> bool {
        (self.first * other.first + self.second * other.second).rem_euclid(2) == 1
    }

    /// Parity of the product of total degrees.
    pub fn total_odd(self, other: Bidegree) -> bool {
        (self.total() * other.total()).rem_euclid(2) == 1
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.first, self.second)
    }
}

type MapFn = dyn Fn(&WordSum) -> WordSum + Send + Sync;

/// A linear map `Λ*ΣΩ → Λ*ΣΩ`, optionally bihomogeneous.
#[derive(Clone)]
pub struct Operator {
    bidegree: Option<Bidegree>,
    map: Arc<MapFn>,
}

impl fmt::Debug for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Operator").field("bidegree", &self.bidegree).finish_non_exhaustive()
    }
}

impl Operator {
    pub fn new(bidegree: Option<Bidegree>, map: impl Fn(&WordSum) -> WordSum + Send + Sync + 'static) -> Self {
        Operator { bidegree, map: Arc::new(map) }
    }

    pub fn identity() -> Self {
        Operator::new(Some(Bidegree::new(0, 0)), |w| w.clone())
    }

    pub fn zero() -> Self {
        Operator::new(None, |w| WordSum::zero(w.dim()))
    }

    pub fn bidegree(&self) -> Option<Bidegree> {
        self.bidegree
    }

    pub fn require_bidegree(&self) -> Result<Bidegree> {
        self.bidegree.ok_or(Error::MissingBidegree)
    }

    pub fn apply(&self, w: &WordSum) -> WordSum {
        (self.map)(w)
    }

    /// `self ∘ other`.
    pub fn then_after(&self, other: &Operator) -> Operator {
        let (a, b) = (self.clone(), other.clone());
        let bideg = match (a.bidegree, b.bidegree) {
            (Some(x), Some(y)) => Some(x.plus(y)),
            _ => None,
        };
        Operator::new(bideg, move |w| a.apply(&b.apply(w)))
    }

    pub fn scale(&self, c: Rational) -> Operator {
        let a = self.clone();
        Operator::new(self.bidegree, move |w| a.apply(w).scale(&c))
    }

    /// `self + other`; bihomogeneous only when both bidegrees agree.
    pub fn plus(&self, other: &Operator) -> Operator {
        let (a, b) = (self.clone(), other.clone());
        let bideg = if a.bidegree == b.bidegree { a.bidegree } else { None };
        Operator::new(bideg, move |w| &a.apply(w) + &b.apply(w))
    }

    pub fn minus(&self, other: &Operator) -> Operator {
        self.plus(&other.scale(-Rational::one()))
    }

    /// `[A, B] = AB - (-1)^{|A||B| + |A|'|B|'} BA`.
    pub fn bigraded_commutator(&self, other: &Operator) -> Result<Operator> {
        let (x, y) = (self.require_bidegree()?, other.require_bidegree()?);
        Ok(self.graded_difference(other, x.bigraded_odd(y)))
    }

    /// `{A, B} = (-1)^{|A||B|'} [A, B]`.
    pub fn modified_commutator(&self, other: &Operator) -> Result<Operator> {
        let (x, y) = (self.require_bidegree()?, other.require_bidegree()?);
        let c = self.bigraded_commutator(other)?;
        Ok(if (x.first * y.second).rem_euclid(2) == 1 { c.scale(-Rational::one()) } else { c })
    }

    /// `[A, B]_tot = AB - (-1)^{tot(A) tot(B)} BA`.
    pub fn total_commutator(&self, other: &Operator) -> Result<Operator> {
        let (x, y) = (self.require_bidegree()?, other.require_bidegree()?);
        Ok(self.graded_difference(other, x.total_odd(y)))
    }

    fn graded_difference(&self, other: &Operator, odd: bool) -> Operator {
        let ab = self.then_after(other);
        let ba = other.then_after(self);
        if odd {
            ab.plus(&ba)
        } else {
            ab.minus(&ba)
        }
    }

    /// The skewed map `D̄(α) = (-1)^{|D||α|'} D(α)`.
    pub fn bar(&self) -> Result<Operator> {
        let b = self.require_bidegree()?;
        let a = self.clone();
        Ok(Operator::new(self.bidegree, move |w| {
            if b.first.rem_euclid(2) == 0 {
                return a.apply(w);
            }
            let mut out = WordSum::zero(w.dim());
            for n in 1..=w.max_length() {
                let part = a.apply(&w.length_part(n));
                out.add_assign_ref(&if n % 2 == 1 { -part } else { part });
            }
            out
        }))
    }
}

/// `Σ_j (±1)^j C^j / j!` applied to `w`; `C` must strictly lower word length.
pub fn exp_nilpotent(c: &Operator, w: &WordSum, sign: i32) -> Result<WordSum> {
    let b = c.require_bidegree()?;
    if b.second >= 0 || sign.abs() != 1 {
        return Err(Error::NotLengthLowering);
    }
    let mut out = w.clone();
    let mut term = w.clone();
    let mut j = 0i64;
    while !term.is_zero() {
        j += 1;
        let factor = Rational::new((sign as i64).into(), j.into());
        term = c.apply(&term).scale(&factor);
        out.add_assign_ref(&term);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symcore::{parse_form, q};

    #[test]
    fn degrees() {
        let d = Bidegree::new(1, 0);
        let p = Bidegree::new(-1, -1);
        assert!(d.bigraded_odd(p));
        assert_eq!(p.total(), 0);
        assert_eq!(d.plus(p), Bidegree::new(0, -1));
    }

    #[test]
    fn scaling_and_bar() {
        let two = Operator::identity().scale(q(2, 1));
        let w = WordSum::suspend(&parse_form("x1 dx2", 2).unwrap());
        assert_eq!(two.apply(&w), w.scale(&q(2, 1)));
        let odd = Operator::new(Some(Bidegree::new(1, 0)), |w| w.clone());
        assert_eq!(odd.bar().unwrap().apply(&w), -w.clone());
        assert!(Operator::zero().bar().is_err());
    }

    #[test]
    fn exp_rejects_non_lowering() {
        let w = WordSum::suspend(&parse_form("dx1", 2).unwrap());
        assert!(matches!(exp_nilpotent(&Operator::identity(), &w, 1), Err(Error::NotLengthLowering)));
    }
}
