use std::fmt;
use std::sync::Arc;

use num_traits::One;

use crate::exterior::DifferentialForm;
use crate::symcore::Rational;

use super::operator::{Bidegree, Operator};
use super::sign::{factorial, permutation_sign, permutations};
use super::word::{Letter, WordSum};

type EvalFn = dyn Fn(&[Letter]) -> DifferentialForm + Send + Sync;

/// A multilinear map `Λ^k ΣΩ → ΣΩ` given on letters.
///
/// `eval` returns the desuspended value: for letters `a_i` it yields the
/// form `ω` with `φ(a_1 ∧ ... ∧ a_k) = sω`.
#[derive(Clone)]
pub struct Component {
    dim: usize,
    arity: usize,
    degree: i64,
    eval: Arc<EvalFn>,
}

impl fmt::Debug for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Component")
            .field("arity", &self.arity)
            .field("degree", &self.degree)
            .finish_non_exhaustive()
    }
}

impl Component {
    /// `degree` is the change of suspended degree.
    pub fn new(
        dim: usize,
        arity: usize,
        degree: i64,
        eval: impl Fn(&[Letter]) -> DifferentialForm + Send + Sync + 'static,
    ) -> Self {
        assert!(arity >= 1, "components have positive arity");
        Component { dim, arity, degree, eval: Arc::new(eval) }
    }

    /// A letter map `sα ↦ s f(α)`.
    pub fn unary(
        dim: usize,
        degree: i64,
        f: impl Fn(&DifferentialForm) -> DifferentialForm + Send + Sync + 'static,
    ) -> Self {
        Component::new(dim, 1, degree, move |l| f(&l[0].form()))
    }

    /// A binary map `sα ∧ sβ ↦ s f(α, β)`.
    pub fn binary(
        dim: usize,
        degree: i64,
        f: impl Fn(&DifferentialForm, &DifferentialForm) -> DifferentialForm + Send + Sync + 'static,
    ) -> Self {
        Component::new(dim, 2, degree, move |l| f(&l[0].form(), &l[1].form()))
    }

    pub fn zero(dim: usize, arity: usize, degree: i64) -> Self {
        Component::new(dim, arity, degree, move |_| DifferentialForm::zero(dim))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    /// Bidegree of the extended coderivation.
    pub fn bidegree(&self) -> Bidegree {
        Bidegree::new(self.degree, 1 - self.arity as i64)
    }

    pub fn eval_letters(&self, letters: &[Letter]) -> DifferentialForm {
        debug_assert_eq!(letters.len(), self.arity);
        (self.eval)(letters)
    }

    /// Evaluates on the length-`arity` words of `w`, desuspended.
    pub fn apply(&self, w: &WordSum) -> DifferentialForm {
        let mut out = DifferentialForm::zero(self.dim);
        for (word, c) in w.terms() {
            if word.len() == self.arity {
                out.add_assign_ref(&self.eval_letters(word).scale(c));
            }
        }
        out
    }

    /// Evaluates on forms `sω_1 ∧ ... ∧ sω_k`, expanding multilinearly.
    pub fn apply_forms(&self, forms: &[DifferentialForm]) -> DifferentialForm {
        let mut out = DifferentialForm::zero(self.dim);
        let expanded: Vec<Vec<(Rational, Letter)>> = forms.iter().map(Letter::expand).collect();
        multilinear(&expanded, &mut Vec::new(), Rational::one(), &mut |ls, c| {
            out.add_assign_ref(&self.eval_letters(ls).scale(&c));
        });
        out
    }

    /// Sum of two components of the same arity and degree.
    pub fn plus(&self, other: &Component) -> Component {
        assert_eq!((self.arity, self.degree), (other.arity, other.degree));
        let (a, b) = (self.clone(), other.clone());
        Component::new(self.dim, self.arity, self.degree, move |l| &a.eval_letters(l) + &b.eval_letters(l))
    }

    pub fn scale(&self, c: Rational) -> Component {
        let a = self.clone();
        Component::new(self.dim, self.arity, self.degree, move |l| a.eval_letters(l).scale(&c))
    }

    /// Graded antisymmetrization `Σ_σ (-1)^σ/k! f(a_σ(1), ..., a_σ(k))`.
    pub fn antisymmetrized(&self) -> Component {
        let a = self.clone();
        let norm = Rational::new(1.into(), (factorial(self.arity) as i64).into());
        Component::new(self.dim, self.arity, self.degree, move |l| signed_sum(l, norm.clone(), |p, _| a.eval_letters(p)))
    }

    /// The coderivation extending this component.
    pub fn extend(&self) -> Operator {
        Coderivation::new(vec![self.clone()]).operator()
    }
}

/// Runs `f` over every choice of one letter per slot.
fn multilinear(
    slots: &[Vec<(Rational, Letter)>],
    chosen: &mut Vec<Letter>,
    c: Rational,
    f: &mut dyn FnMut(&[Letter], Rational),
) {
    if chosen.len() == slots.len() {
        f(chosen, c);
        return;
    }
    for (k, l) in &slots[chosen.len()] {
        chosen.push(l.clone());
        multilinear(slots, chosen, &c * k, f);
        chosen.pop();
    }
}

/// A family `{f_k}` and its extension to a coderivation
/// `F(a_1..a_n) = Σ_{k≤n} Σ_{σ∈S_n} (-1)^σ/(k!(n-k)!) f_k(a_σ(1)..a_σ(k)) ∧ a_σ(k+1)..a_σ(n)`.
#[derive(Clone, Debug)]
pub struct Coderivation {
    components: Vec<Component>,
}

impl Coderivation {
    pub fn new(components: Vec<Component>) -> Self {
        Coderivation { components }
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// Common bidegree of all components, if any.
    pub fn bidegree(&self) -> Option<Bidegree> {
        let first = self.components.first()?.bidegree();
        self.components.iter().all(|c| c.bidegree() == first).then_some(first)
    }

    pub fn apply(&self, w: &WordSum) -> WordSum {
        let mut out = WordSum::zero(w.dim());
        for c in &self.components {
            out.add_assign_ref(&extend_apply(c, w));
        }
        out
    }

    pub fn operator(&self) -> Operator {
        let me = self.clone();
        Operator::new(self.bidegree(), move |w| me.apply(w))
    }

    /// The skewed coderivation, summed over bihomogeneous components.
    pub fn bar(&self) -> Operator {
        let ops: Vec<Operator> = self.components.iter().map(|c| c.extend().bar().expect("bihomogeneous")).collect();
        let bideg = self.bidegree();
        Operator::new(bideg, move |w| {
            let mut out = WordSum::zero(w.dim());
            for op in &ops {
                out.add_assign_ref(&op.apply(w));
            }
            out
        })
    }
}

fn extend_apply(f: &Component, w: &WordSum) -> WordSum {
    let k = f.arity();
    let mut out = WordSum::zero(w.dim());
    for (word, c) in w.terms() {
        let n = word.len();
        if n < k {
            continue;
        }
        let degrees: Vec<i64> = word.iter().map(Letter::degree).collect();
        let norm = Rational::new(1.into(), ((factorial(k) * factorial(n - k)) as i64).into());
        for order in permutations(n) {
            let head: Vec<Letter> = order[..k].iter().map(|&i| word[i].clone()).collect();
            let value = f.eval_letters(&head);
            if value.is_zero() {
                continue;
            }
            let mut coeff = c * &norm;
            if permutation_sign(&degrees, &order) {
                coeff = -coeff;
            }
            for (vc, letter) in Letter::expand(&value) {
                let mut new_word = vec![letter];
                new_word.extend(order[k..].iter().map(|&i| word[i].clone()));
                out.add_raw(new_word, &coeff * &vc);
            }
        }
    }
    out
}

/// Sum over `S_n` of `(-1)^σ g(a_σ(1), ..., a_σ(n))`, scaled by `norm`.
fn signed_sum(
    letters: &[Letter],
    norm: Rational,
    mut g: impl FnMut(&[Letter], &[usize]) -> DifferentialForm,
) -> DifferentialForm {
    let dim = letters[0].dim();
    let degrees: Vec<i64> = letters.iter().map(Letter::degree).collect();
    let mut out = DifferentialForm::zero(dim);
    for order in permutations(letters.len()) {
        let permuted: Vec<Letter> = order.iter().map(|&i| letters[i].clone()).collect();
        let v = g(&permuted, &order);
        if v.is_zero() {
            continue;
        }
        let v = v.scale(&norm);
        if permutation_sign(&degrees, &order) {
            out = &out - &v;
        } else {
            out.add_assign_ref(&v);
        }
    }
    out
}

/// Applies `outer` to `(inner value) ∧ rest`, expanding the inner value.
fn nest(outer: &Component, inner_value: &DifferentialForm, rest: &[Letter]) -> DifferentialForm {
    let mut out = DifferentialForm::zero(outer.dim());
    for (c, l) in Letter::expand(inner_value) {
        let mut args = vec![l];
        args.extend_from_slice(rest);
        out.add_assign_ref(&outer.eval_letters(&args).scale(&c));
    }
    out
}

/// The component `[φ, ψ]` of arity `k + l - 1` whose extension is the
/// bigraded commutator of the extensions of `φ` and `ψ`:
///
/// `Σ_σ (-1)^σ/(l!(k-1)!) φ(ψ(a_σ..) ∧ ..) - (-1)^ε Σ_σ (-1)^σ/((l-1)!k!) ψ(φ(a_σ..) ∧ ..)`,
/// `ε = |φ||ψ| + (k-1)(l-1)`.
pub fn component_commutator(phi: &Component, psi: &Component) -> Component {
    let (k, l) = (phi.arity(), psi.arity());
    let eps_odd = (phi.degree() * psi.degree() + ((k - 1) * (l - 1)) as i64).rem_euclid(2) == 1;
    let n1 = Rational::new(1.into(), ((factorial(l) * factorial(k - 1)) as i64).into());
    let n2 = Rational::new(1.into(), ((factorial(l - 1) * factorial(k)) as i64).into());
    let (phi, psi) = (phi.clone(), psi.clone());
    let dim = phi.dim();
    Component::new(dim, k + l - 1, phi.degree() + psi.degree(), move |letters| {
        let a = signed_sum(letters, n1.clone(), |p, _| nest(&phi, &psi.eval_letters(&p[..l]), &p[l..]));
        let b = signed_sum(letters, n2.clone(), |p, _| nest(&psi, &phi.eval_letters(&p[..k]), &p[k..]));
        if eps_odd {
            &a + &b
        } else {
            &a - &b
        }
    })
}

/// The cup product `φ ∪ ψ` of arity `k + l` and degree `|φ| + |ψ| + 1`:
///
/// `1/(k!l!) Σ_σ (-1)^{σ'} φ(a_σ(1)..a_σ(k)) · ψ(a_σ(k+1)..a_σ(k+l))` with
/// `σ' = σ + (|ψ|+1) Σ_{i≤k} |a_σ(i)| + (k-1)(l-1) + |φ|`, where `·` is the
/// product of the underlying forms.
pub fn cup_product(phi: &Component, psi: &Component) -> Component {
    let (k, l) = (phi.arity(), psi.arity());
    let norm = Rational::new(1.into(), ((factorial(k) * factorial(l)) as i64).into());
    let fixed = ((k - 1) * (l - 1)) as i64 + phi.degree();
    let (phi, psi) = (phi.clone(), psi.clone());
    let dim = phi.dim();
    Component::new(dim, k + l, phi.degree() + psi.degree() + 1, move |letters| {
        signed_sum(letters, norm.clone(), |p, _| {
            let head: i64 = p[..k].iter().map(Letter::degree).sum();
            let v = phi.eval_letters(&p[..k]).wedge(&psi.eval_letters(&p[k..]));
            if ((psi.degree() + 1) * head + fixed).rem_euclid(2) == 1 {
                -v
            } else {
                v
            }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::exterior_derivative;
    use crate::symcore::parse_form;

    fn forms(xs: &[&str]) -> Vec<DifferentialForm> {
        xs.iter().map(|s| parse_form(s, 3).unwrap()).collect()
    }

    #[test]
    fn unary_extension_is_a_derivation() {
        // d̃ sα = -s dα extended to a∧b gives d̃a∧b + (-1)^{|a|} a∧d̃b
        let dt = Component::unary(3, 1, |a| -exterior_derivative(a));
        let fs = forms(&["x1^2 dx2", "x2 x3"]);
        let w = WordSum::wedge_of(&fs).unwrap();
        let got = dt.extend().apply(&w);
        let da = WordSum::suspend(&-exterior_derivative(&fs[0]));
        let db = WordSum::suspend(&-exterior_derivative(&fs[1]));
        let a = WordSum::suspend(&fs[0]);
        let b = WordSum::suspend(&fs[1]);
        // |a| = 0
        let expected = &da.wedge(&b) + &a.wedge(&db);
        assert_eq!(got, expected);
    }

    #[test]
    fn binary_on_two_letters_is_itself() {
        let m = Component::binary(3, 1, |a, b| a.wedge(b));
        let fs = forms(&["x1 dx2", "x3 dx1"]);
        let w = WordSum::wedge_of(&fs).unwrap();
        assert_eq!(m.extend().apply(&w), WordSum::suspend(&m.apply_forms(&fs)));
        assert!(m.extend().apply(&WordSum::suspend(&fs[0])).is_zero());
    }
}
