use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coalgebra::{Component, Letter, WordSum};
use crate::exterior::{exterior_derivative, interior, Basis, DifferentialForm, Kind, Multivector, Polyvector};
use crate::symcore::{Monomial, Polynomial, Rational};

/// Seeded source of random polynomials, forms and polyvectors.
///
/// Coefficients are small integers and halves; monomials have degree at
/// most `max_degree`. Everything is determined by the seed.
pub struct Sampler {
    rng: ChaCha8Rng,
    dim: usize,
    max_degree: u32,
    max_terms: usize,
}

impl Sampler {
    pub fn new(seed: u64, dim: usize, max_degree: u32) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed), dim, max_degree, max_terms: 3 }
    }

    pub fn with_max_terms(mut self, max_terms: usize) -> Self {
        self.max_terms = max_terms.max(1);
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn coefficient(&mut self) -> Rational {
        let num = loop {
            let v: i64 = self.rng.gen_range(-3..=3);
            if v != 0 {
                break v;
            }
        };
        let den = if self.rng.gen_bool(0.2) { 2 } else { 1 };
        Rational::new(num.into(), den.into())
    }

    pub fn monomial(&mut self) -> Monomial {
        let deg = self.rng.gen_range(0..=self.max_degree);
        let mut exps = vec![0u32; self.dim];
        for _ in 0..deg {
            exps[self.rng.gen_range(0..self.dim)] += 1;
        }
        Monomial::from_exponents(exps)
    }

    pub fn polynomial(&mut self) -> Polynomial {
        let terms = self.rng.gen_range(1..=self.max_terms);
        let mut p = Polynomial::zero(self.dim);
        for _ in 0..terms {
            p = &p + &Polynomial::term(self.coefficient(), self.monomial());
        }
        p
    }

    pub fn basis(&mut self, grade: usize) -> Basis {
        let mut idx: Vec<usize> = (0..self.dim).collect();
        idx.shuffle(&mut self.rng);
        idx.truncate(grade.min(self.dim));
        Basis::from_indices(&idx).expect("distinct indices").1
    }

    fn multivector<K: Kind>(&mut self, grade: usize) -> Multivector<K> {
        let terms = self.rng.gen_range(1..=self.max_terms);
        let mut out = Multivector::zero(self.dim);
        if grade > self.dim {
            return out;
        }
        for _ in 0..terms {
            let b = self.basis(grade);
            let f = Polynomial::term(self.coefficient(), self.monomial());
            out = &out + &Multivector::from_term(b, f);
        }
        out
    }

    /// A random form of pure degree `k`.
    pub fn form(&mut self, k: usize) -> DifferentialForm {
        self.multivector(k)
    }

    /// A random polyvector of pure degree `k`.
    pub fn polyvector(&mut self, k: usize) -> Polyvector {
        self.multivector(k)
    }

    pub fn vector_field(&mut self) -> Polyvector {
        self.polyvector(1)
    }

    /// A random closed form of degree `k`: `d` of a random `(k-1)`-form, or a
    /// constant for `k = 0`.
    pub fn closed_form(&mut self, k: usize) -> DifferentialForm {
        if k == 0 {
            let c = self.coefficient();
            return DifferentialForm::scalar(Polynomial::constant(self.dim, c));
        }
        // bump the degree so the derivative keeps some variable dependence
        let saved = self.max_degree;
        self.max_degree += 1;
        let mut w = exterior_derivative(&self.form(k - 1));
        for _ in 0..4 {
            if !w.is_zero() {
                break;
            }
            w = exterior_derivative(&self.form(k - 1));
        }
        self.max_degree = saved;
        w
    }

    /// A random graded-antisymmetric component of the given arity:
    /// the antisymmetrization of `a_1..a_k ↦ s(ι_X? d? (ρ ∧ a_1 ∧ ... ∧ a_k))`.
    pub fn component(&mut self, arity: usize) -> Component {
        let r = self.degree(1);
        let rho = self.form(r);
        let use_d = self.rng.gen_bool(0.5);
        let x = if self.rng.gen_bool(0.5) { Some(self.vector_field()) } else { None };
        let degree = r as i64 + arity as i64 - 1 + i64::from(use_d) - i64::from(x.is_some());
        let dim = self.dim;
        Component::new(dim, arity, degree, move |letters| {
            let mut w = rho.clone();
            for l in letters {
                w = w.wedge(&l.form());
            }
            if use_d {
                w = exterior_derivative(&w);
            }
            if let Some(x) = &x {
                w = interior(x, &w);
            }
            w
        })
        .antisymmetrized()
    }

    /// A random letter with form degree at most `max_form_degree`.
    pub fn letter(&mut self, max_form_degree: usize) -> Letter {
        let k = self.degree(max_form_degree);
        Letter::new(self.basis(k), self.monomial())
    }

    /// A random word of the given length with a random coefficient;
    /// resampled a few times if it normalizes to zero.
    pub fn word(&mut self, len: usize, max_form_degree: usize) -> WordSum {
        let mut w = WordSum::zero(self.dim);
        for _ in 0..8 {
            let letters: Vec<Letter> = (0..len).map(|_| self.letter(max_form_degree)).collect();
            let c = self.coefficient();
            w = WordSum::word(letters, c).expect("nonempty word");
            if !w.is_zero() {
                break;
            }
        }
        w
    }

    /// A word of suspended closed forms.
    pub fn closed_word(&mut self, len: usize, max_form_degree: usize) -> WordSum {
        let mut w = WordSum::zero(self.dim);
        for _ in 0..8 {
            let forms: Vec<DifferentialForm> = (0..len)
                .map(|_| {
                    let k = self.degree(max_form_degree);
                    self.closed_form(k)
                })
                .collect();
            w = WordSum::wedge_of(&forms).expect("nonempty word");
            if !w.is_zero() {
                break;
            }
        }
        w
    }

    /// A form degree in `0..=max`, capped by the dimension.
    pub fn degree(&mut self, max: usize) -> usize {
        self.rng.gen_range(0..=max.min(self.dim))
    }
}
