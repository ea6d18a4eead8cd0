use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::symcore::Rational;

use super::operator::{Bidegree, Operator};
use super::sign::{permutation_sign, shuffles};
use super::word::{word_string, Letter, WordSum};

/// Sign convention of the comultiplication.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShuffleSign {
    /// `(-1)^σ` only.
    Shuffle,
    /// `(-1)^{σ + kl}` for a `(k, l)` split.
    ShuffleTimesLengths,
}

/// A linear combination of `N`-fold tensors of words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorSum {
    dim: usize,
    terms: BTreeMap<Vec<Vec<Letter>>, Rational>,
}

impl TensorSum {
    pub fn zero(dim: usize) -> Self {
        TensorSum { dim, terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Vec<Letter>>, &Rational)> {
        self.terms.iter()
    }

    pub(crate) fn add_term(&mut self, factors: Vec<Vec<Letter>>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(factors) {
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

    pub fn add_assign_ref(&mut self, other: &TensorSum) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &Rational) -> TensorSum {
        let mut out = TensorSum::zero(self.dim);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v * c);
        }
        out
    }

    pub fn minus(&self, other: &TensorSum) -> TensorSum {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), -c.clone());
        }
        out
    }

    /// Applies `op` to factor `i`, with the Koszul sign
    /// `(-1)^{|op||x| + |op|'|x|'}` for the factors `x` in front of it.
    pub fn apply_at(&self, i: usize, op: &Operator) -> TensorSum {
        let b = op.bidegree().unwrap_or(Bidegree::new(0, 0));
        let mut out = TensorSum::zero(self.dim);
        for (factors, c) in &self.terms {
            let (m, n): (i64, i64) = factors[..i]
                .iter()
                .map(|w| (WordSum::word_degree(w), w.len() as i64))
                .fold((0, 0), |acc, x| (acc.0 + x.0, acc.1 + x.1));
            let neg = (b.first * m + b.second * n).rem_euclid(2) == 1;
            let sign = if neg { -c.clone() } else { c.clone() };
            let mut single = WordSum::zero(self.dim);
            single.add_term(factors[i].clone(), Rational::one());
            for (w, wc) in op.apply(&single).terms() {
                let mut f = factors.clone();
                f[i] = w.clone();
                out.add_term(f, &sign * wc);
            }
        }
        out
    }

    /// Applies the comultiplication to factor `i`.
    pub fn comultiply_at(&self, i: usize, convention: ShuffleSign) -> TensorSum {
        let mut out = TensorSum::zero(self.dim);
        for (factors, c) in &self.terms {
            for (pair, pc) in split(&factors[i], convention) {
                let mut f = factors[..i].to_vec();
                f.extend(pair);
                f.extend(factors[i + 1..].iter().cloned());
                out.add_term(f, c * pc);
            }
        }
        out
    }

    /// Multiplies each term by `(-1)^{|x_(1)||x_(2)|'}` (two-fold tensors).
    pub fn deform(&self) -> TensorSum {
        let mut out = TensorSum::zero(self.dim);
        for (f, c) in &self.terms {
            let neg = (WordSum::word_degree(&f[0]) * f[1].len() as i64).rem_euclid(2) == 1;
            out.add_term(f.clone(), if neg { -c.clone() } else { c.clone() });
        }
        out
    }
}

/// All `(k, l)` splits of one word with their signs.
fn split(word: &[Letter], convention: ShuffleSign) -> Vec<(Vec<Vec<Letter>>, Rational)> {
    let n = word.len();
    let degrees: Vec<i64> = word.iter().map(Letter::degree).collect();
    let mut out = Vec::new();
    for k in 1..n {
        let l = n - k;
        for order in shuffles(n, k) {
            let mut neg = permutation_sign(&degrees, &order);
            if convention == ShuffleSign::ShuffleTimesLengths && (k * l) % 2 == 1 {
                neg = !neg;
            }
            let left = order[..k].iter().map(|&i| word[i].clone()).collect();
            let right = order[k..].iter().map(|&i| word[i].clone()).collect();
            out.push((vec![left, right], if neg { -Rational::one() } else { Rational::one() }));
        }
    }
    out
}

/// `∇` with the chosen sign convention. Words of length 1 are primitive.
pub fn comultiplication_with(w: &WordSum, convention: ShuffleSign) -> TensorSum {
    let mut out = TensorSum::zero(w.dim());
    for (word, c) in w.terms() {
        for (pair, pc) in split(word, convention) {
            out.add_term(pair, c * pc);
        }
    }
    out
}

/// `∇(a_1∧...∧a_n) = Σ_k Σ_{σ ∈ Sh(k,n-k)} (-1)^σ a_σ(1)..a_σ(k) ⊗ a_σ(k+1)..a_σ(n)`.
pub fn comultiplication(w: &WordSum) -> TensorSum {
    comultiplication_with(w, ShuffleSign::Shuffle)
}

/// `(∇ ⊗ 1)∇w - (1 ⊗ ∇)∇w`.
pub fn coassociativity_defect(w: &WordSum) -> TensorSum {
    let once = comultiplication(w);
    once.comultiply_at(0, ShuffleSign::Shuffle).minus(&once.comultiply_at(1, ShuffleSign::Shuffle))
}

/// `∇Dw - (D ⊗ 1 + 1 ⊗ D)∇w`, zero exactly when `D` acts on `w` as a coderivation.
pub fn coderivation_defect(op: &Operator, w: &WordSum) -> TensorSum {
    let once = comultiplication(w);
    let mut rhs = once.apply_at(0, op);
    rhs.add_assign_ref(&once.apply_at(1, op));
    comultiplication(&op.apply(w)).minus(&rhs)
}

impl fmt::Display for TensorSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts = self.terms.iter().map(|(k, c)| {
            let neg = c < &Rational::zero();
            let mag = crate::symcore::fmt_rational(&if neg { -c } else { c.clone() });
            let body: Vec<String> = k.iter().map(|w| word_string(w)).collect();
            (neg, format!("{} {}", mag, body.join(" (x) ")))
        });
        write!(f, "{}", crate::symcore::polynomial_join(parts))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symcore::parse_form;

    #[test]
    fn two_letters() {
        let a = parse_form("dx1", 2).unwrap();
        let b = parse_form("dx2", 2).unwrap();
        let w = WordSum::wedge_of(&[a, b]).unwrap();
        let plain = comultiplication(&w);
        assert_eq!(plain.to_string(), "1 <1 dx1> (x) <1 dx2> - 1 <1 dx2> (x) <1 dx1>");
        let printed = comultiplication_with(&w, ShuffleSign::ShuffleTimesLengths);
        assert_eq!(printed.to_string(), "-1 <1 dx1> (x) <1 dx2> + 1 <1 dx2> (x) <1 dx1>");
    }

    #[test]
    fn coassociative_on_three_letters() {
        let fs: Vec<_> = ["dx1", "x2", "dx1^dx2"].iter().map(|t| parse_form(t, 2).unwrap()).collect();
        let w = WordSum::wedge_of(&fs).unwrap();
        assert!(coassociativity_defect(&w).is_zero());
    }

    #[test]
    fn primitive_letters() {
        let w = WordSum::suspend(&parse_form("x1 dx2", 2).unwrap());
        assert!(comultiplication(&w).is_zero());
    }
}
