use poisson_formality::coalgebra::{
    coassociativity_defect, coderivation_defect, comultiplication, component_commutator, cup_product,
    exp_nilpotent, Component, TensorSum,
};
use poisson_formality::exterior::{
    exterior_derivative, interior, lie_derivative, schouten_bracket, vector_commutator, Basis, DifferentialForm,
    Polyvector,
};
use poisson_formality::formality::{derivation_tilde, OperatorKind};
use poisson_formality::poisson::fixtures;
use poisson_formality::symcore::{parse_expression, parse_form, parse_polynomial, parse_polyvector, q, Monomial, Polynomial};
use poisson_formality::verify::Sampler;
use proptest::prelude::*;

const N: usize = 3;

fn polynomial() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-5i64..=5, 1i64..=4, prop::collection::vec(0u32..=2, N)), 0..4).prop_map(|terms| {
        terms
            .into_iter()
            .fold(Polynomial::zero(N), |acc, (a, b, e)| acc + Polynomial::term(q(a, b), Monomial::from_exponents(e)))
    })
}

fn basis(k: usize) -> impl Strategy<Value = Basis> {
    prop::sample::subsequence((0..N).collect::<Vec<_>>(), k).prop_map(|idx| Basis::from_indices(&idx).unwrap().1)
}

fn form(k: usize) -> impl Strategy<Value = DifferentialForm> {
    prop::collection::vec((basis(k), polynomial()), 1..3).prop_map(|terms| {
        terms.into_iter().map(|(b, f)| DifferentialForm::from_term(b, f)).sum()
    })
}

fn any_form() -> impl Strategy<Value = DifferentialForm> {
    (0..=N).prop_flat_map(form)
}

fn vector_field() -> impl Strategy<Value = Polyvector> {
    prop::collection::vec((basis(1), polynomial()), 1..3)
        .prop_map(|terms| terms.into_iter().map(|(b, f)| Polyvector::from_term(b, f)).sum())
}

fn bivector() -> impl Strategy<Value = Polyvector> {
    prop::collection::vec((basis(2), polynomial()), 1..3)
        .prop_map(|terms| terms.into_iter().map(|(b, f)| Polyvector::from_term(b, f)).sum())
}

fn deg(w: &DifferentialForm) -> usize {
    w.homogeneous_degree().unwrap_or(0)
}

fn sign(odd: bool) -> poisson_formality::symcore::Rational {
    if odd {
        q(-1, 1)
    } else {
        q(1, 1)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(f in polynomial(), g in polynomial(), h in polynomial()) {
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn partials_commute_and_obey_leibniz(f in polynomial(), g in polynomial(), i in 0..N, j in 0..N) {
        prop_assert_eq!(f.partial(i).partial(j), f.partial(j).partial(i));
        prop_assert_eq!((&f * &g).partial(i), &(&f.partial(i) * &g) + &(&f * &g.partial(i)));
    }

    #[test]
    fn d_squared_vanishes(w in any_form()) {
        prop_assert!(exterior_derivative(&exterior_derivative(&w)).is_zero());
    }

    #[test]
    fn d_is_a_graded_derivation(a in any_form(), b in any_form()) {
        let lhs = exterior_derivative(&a.wedge(&b));
        let rhs = &exterior_derivative(&a).wedge(&b) + &a.wedge(&exterior_derivative(&b)).scale(&sign(deg(&a) % 2 == 1));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn interior_is_an_odd_derivation(x in vector_field(), a in any_form(), b in any_form()) {
        let lhs = interior(&x, &a.wedge(&b));
        let rhs = &interior(&x, &a).wedge(&b) + &a.wedge(&interior(&x, &b)).scale(&sign(deg(&a) % 2 == 1));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn cartan_identities_on_forms(x in vector_field(), y in vector_field(), w in any_form()) {
        let lx = lie_derivative(&x, &w).unwrap();
        prop_assert_eq!(&lx, &(&exterior_derivative(&interior(&x, &w)) + &interior(&x, &exterior_derivative(&w))));
        prop_assert_eq!(lie_derivative(&x, &exterior_derivative(&w)).unwrap(), exterior_derivative(&lx));
        let xy = vector_commutator(&x, &y);
        let lhs = &lie_derivative(&x, &interior(&y, &w)).unwrap() - &interior(&y, &lx);
        prop_assert_eq!(lhs, interior(&xy, &w));
        prop_assert!(interior(&x, &interior(&x, &w)).is_zero());
    }

    #[test]
    fn schouten_of_bivectors_is_symmetric_and_jacobi_for_fields(p in bivector(), r in bivector(),
                                                               x in vector_field(), y in vector_field(), z in vector_field()) {
        prop_assert_eq!(schouten_bracket(&p, &r).unwrap(), schouten_bracket(&r, &p).unwrap());
        let c = |a: &Polyvector, b: &Polyvector| vector_commutator(a, b);
        let jac = &(&c(&x, &c(&y, &z)) + &c(&y, &c(&z, &x))) + &c(&z, &c(&x, &y));
        prop_assert!(jac.is_zero());
    }

    #[test]
    fn form_render_parse_round_trip(w in any_form()) {
        prop_assert_eq!(parse_form(&w.to_string(), N).unwrap(), w);
    }

    #[test]
    fn polynomial_and_polyvector_round_trip(f in polynomial(), p in bivector()) {
        prop_assert_eq!(parse_polynomial(&f.to_string(), N).unwrap(), f.clone());
        prop_assert_eq!(parse_polyvector(&p.to_string(), N).unwrap(), p);
        prop_assert_eq!(parse_expression(&f.to_string(), N).unwrap().to_string(), f.to_string());
    }

    #[test]
    fn poisson_bracket_identities(i in 0usize..4, a in form(1), b in form(1), f in polynomial(), g in polynomial()) {
        let (_, s) = &fixtures::poisson()[i];
        if s.dim() != N {
            return Ok(());
        }
        let df = exterior_derivative(&DifferentialForm::scalar(f.clone()));
        let dg = exterior_derivative(&DifferentialForm::scalar(g.clone()));
        prop_assert_eq!(
            s.koszul_bracket(&df, &dg).unwrap(),
            exterior_derivative(&DifferentialForm::scalar(s.function_bracket(&f, &g).unwrap()))
        );
        prop_assert_eq!(s.koszul_bracket(&a, &b).unwrap(), -s.koszul_bracket(&b, &a).unwrap());
        prop_assert_eq!(s.koszul_bracket(&a, &b).unwrap(), s.nikonov_bracket(&a, &b).unwrap());
        prop_assert_eq!(s.tilde_pi(&a, &b).unwrap(), s.tilde_pi_contraction(&a, &b).unwrap());
        prop_assert_eq!(
            vector_commutator(&s.anchor(&a).unwrap(), &s.anchor(&b).unwrap()),
            s.anchor(&s.koszul_bracket(&a, &b).unwrap()).unwrap()
        );
    }

    #[test]
    fn graded_jacobi_on_poisson_fixtures(i in 0usize..4, ka in 0..=2usize, kb in 0..=2usize, kc in 0..=2usize, seed in any::<u64>()) {
        let (_, s) = &fixtures::poisson()[i];
        let mut g = Sampler::new(seed, s.dim(), 2).with_max_terms(2);
        let (a, b, c) = (g.form(ka), g.form(kb), g.form(kc));
        prop_assert!(s.jacobiator(&a, &b, &c).unwrap().is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn comultiplication_is_coassociative(seed in any::<u64>(), len in 1usize..=4) {
        let mut g = Sampler::new(seed, N, 1).with_max_terms(2);
        let w = g.word(len, N);
        prop_assert!(coassociativity_defect(&w).is_zero());
    }

    #[test]
    fn extended_components_are_coderivations(seed in any::<u64>(), arity in 1usize..=3, len in 1usize..=4) {
        let mut g = Sampler::new(seed, N, 1).with_max_terms(2);
        let c = g.component(arity);
        let w = g.word(len, N);
        prop_assert!(coderivation_defect(&c.extend(), &w).is_zero());
    }

    #[test]
    fn commutator_of_extensions_is_extension_of_commutator(seed in any::<u64>(), k in 1usize..=2, l in 1usize..=2, len in 1usize..=3) {
        let mut g = Sampler::new(seed, N, 1).with_max_terms(2);
        let (phi, psi) = (g.component(k), g.component(l));
        let w = g.word(len, N);
        let lhs = component_commutator(&phi, &psi).extend().apply(&w);
        let rhs = phi.extend().bigraded_commutator(&psi.extend()).unwrap().apply(&w);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn cup_is_associative_and_graded_commutative_up_to_sign(seed in any::<u64>(), k in 1usize..=2, l in 1usize..=2) {
        let mut g = Sampler::new(seed, N, 1).with_max_terms(2);
        let (a, b, c) = (g.component(k), g.component(l), g.component(1));
        let w3 = g.word(k + l + 1, N);
        let shift = (1 + a.degree() + k as i64 + 1).rem_euclid(2) == 1;
        prop_assert_eq!(
            cup_product(&cup_product(&a, &b), &c).apply(&w3),
            cup_product(&a, &cup_product(&b, &c)).apply(&w3).scale(&sign(shift))
        );
        let w2 = g.word(k + l, N);
        let odd = (a.degree() * b.degree() + (k * l) as i64 + 1).rem_euclid(2) == 1;
        prop_assert_eq!(cup_product(&a, &b).apply(&w2), cup_product(&b, &a).apply(&w2).scale(&sign(odd)));
    }

    #[test]
    fn derivations_act_on_cups_by_leibniz(seed in any::<u64>(), kinds in prop::collection::vec(0usize..3, 5), k in 1usize..=2, l in 1usize..=2) {
        let mut g = Sampler::new(seed, N, 1).with_max_terms(2);
        let mut next = |i: usize| derivation(kinds[i], g.vector_field());
        let delta = next(0);
        let phi = if k == 1 { next(1) } else { cup_product(&next(1), &next(2)) };
        let psi = if l == 1 { next(3) } else { cup_product(&next(4), &next(3)) };
        let w = g.word(k + l, N);
        let lhs = component_commutator(&delta, &cup_product(&phi, &psi)).apply(&w);
        let odd = (delta.degree() * (phi.degree() + 1)).rem_euclid(2) == 1;
        let rhs = &cup_product(&component_commutator(&delta, &phi), &psi).apply(&w).scale(&sign(delta.degree() % 2 != 0))
            + &cup_product(&phi, &component_commutator(&delta, &psi)).apply(&w).scale(&sign(odd));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn commutator_of_cups_expands_in_four_terms(seed in any::<u64>(), kinds in prop::collection::vec(0usize..3, 4)) {
        let mut g = Sampler::new(seed, N, 2).with_max_terms(2);
        let [a, b, c, d]: [Component; 4] = std::array::from_fn(|i| derivation(kinds[i], g.vector_field()));
        let w = g.word(3, N);
        let (da, db, dc, dd) = (a.degree(), b.degree(), c.degree(), d.degree());
        let cup3 = |x: &Component, y: &Component, z: &Component| cup_product(&cup_product(x, y), z);
        let br = component_commutator;
        let lhs = br(&cup_product(&a, &b), &cup_product(&c, &d)).apply(&w);
        let odd = |e: i64| e.rem_euclid(2) == 1;
        let terms = [
            (false, cup3(&a, &br(&b, &c), &d)),
            (odd(db * dc), cup3(&a, &c, &br(&b, &d))),
            (odd(da * dc + db * (dc + dd)), cup3(&c, &br(&a, &d), &b)),
            (odd(db * (dc + dd)), cup3(&br(&a, &c), &d, &b)),
        ];
        let mut rhs = DifferentialForm::zero(N);
        for (neg, t) in &terms {
            rhs = &rhs + &t.apply(&w).scale(&sign(*neg));
        }
        prop_assert_eq!(lhs, rhs.scale(&sign(odd(da + db))));
    }

    #[test]
    fn exp_pi_is_a_coalgebra_morphism(i in 0usize..4, seed in any::<u64>(), len in 1usize..=3) {
        let (_, s) = &fixtures::poisson()[i];
        let pi = OperatorKind::Pi(s.clone()).component(s.dim()).unwrap().extend();
        let mut g = Sampler::new(seed, s.dim(), 1).with_max_terms(2);
        let w = g.word(len, s.dim().min(3));
        let lhs = comultiplication(&exp_nilpotent(&pi, &w, 1).unwrap());
        // e^Π ⊗ e^Π, each factor exponentiated with its Koszul signs
        let mut rhs = TensorSum::zero(s.dim());
        let mut outer = comultiplication(&w);
        for j in 1..=len + 1 {
            let mut inner = outer.clone();
            for k in 1..=len + 1 {
                rhs.add_assign_ref(&inner);
                inner = inner.apply_at(1, &pi).scale(&q(1, k as i64));
            }
            outer = outer.apply_at(0, &pi).scale(&q(1, j as i64));
        }
        prop_assert!(lhs.minus(&rhs).is_zero());
    }
}

/// `d̃`, `ĩ_X` or `L̃_X`.
fn derivation(which: usize, x: Polyvector) -> Component {
    match which {
        0 => derivation_tilde(N, 1, exterior_derivative),
        1 => derivation_tilde(N, -1, move |a| interior(&x, a)),
        _ => derivation_tilde(N, 0, move |a| lie_derivative(&x, a).unwrap()),
    }
}
