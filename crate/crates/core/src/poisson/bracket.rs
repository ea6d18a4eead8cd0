use crate::error::Result;
use crate::exterior::{
    apply_vector_field, differential, exterior_derivative, interior_product, leibniz_extend, lie_derivative,
    same_dim, Basis, DifferentialForm, Polyvector,
};
use crate::symcore::Polynomial;

use super::PoissonStructure;

impl PoissonStructure {
    /// `{f, g} = π(df, dg)`.
    pub fn function_bracket(&self, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
        same_dim(self.dim(), f.dim())?;
        same_dim(self.dim(), g.dim())?;
        Ok(self.pair(&differential(f), &differential(g)))
    }

    /// The anchor `π♯α`, the vector field with `π♯α(g) = π(α, dg)`.
    pub fn anchor(&self, alpha: &DifferentialForm) -> Result<Polyvector> {
        same_dim(self.dim(), alpha.dim())?;
        alpha.expect_degree(1)?;
        let n = self.dim();
        let mut out = Polyvector::zero(n);
        for (b, p) in self.bivector().terms() {
            let idx = b.indices();
            let (i, j) = (idx[0], idx[1]);
            let ai = alpha.coefficient(Basis::single(i));
            let aj = alpha.coefficient(Basis::single(j));
            out.add_poly(Basis::single(j), p * &ai);
            out.add_poly(Basis::single(i), -(p * &aj));
        }
        Ok(out)
    }

    /// Koszul bracket of 1-forms:
    /// `{α, β} = L_{π♯α} β - L_{π♯β} α - d π(α, β)`.
    pub fn koszul_bracket_1(&self, alpha: &DifferentialForm, beta: &DifferentialForm) -> Result<DifferentialForm> {
        same_dim(self.dim(), beta.dim())?;
        beta.expect_degree(1)?;
        let xa = self.anchor(alpha)?;
        let xb = self.anchor(beta)?;
        let d_pair = differential(&self.pair(alpha, beta));
        Ok(&(&lie_derivative(&xa, beta)? - &lie_derivative(&xb, alpha)?) - &d_pair)
    }

    /// Koszul bracket on all forms, extended from 1-forms as a graded
    /// biderivation of degree -1 with `{f, g} = 0` and `{α, g} = π♯α(g)`.
    pub fn koszul_bracket(&self, w1: &DifferentialForm, w2: &DifferentialForm) -> Result<DifferentialForm> {
        same_dim(self.dim(), w1.dim())?;
        same_dim(self.dim(), w2.dim())?;
        let n = self.dim();
        let base = |a: &DifferentialForm, b: &DifferentialForm| {
            self.koszul_bracket_1(a, b).expect("1-form letters")
        };
        let mut out = DifferentialForm::zero(n);
        for (b1, f) in w1.terms() {
            for (b2, g) in w2.terms() {
                let a = DifferentialForm::term_letters(n, b1, f);
                let b = DifferentialForm::term_letters(n, b2, g);
                let term = match (a.len(), b.len()) {
                    (0, 0) => continue,
                    // {ω, g} = Σ_m (-1)^{k+m} π♯α_m(g) α_1..α̂_m..α_k
                    (k, 0) => self.with_function(&a, g, |m| (k + m) % 2 == 1),
                    // {f, ω} = Σ_n (-1)^n π♯β_n(f) β_1..β̂_n..β_l
                    (0, _) => self.with_function(&b, f, |m| m % 2 == 1),
                    _ => leibniz_extend(n, &a, &b, &base),
                };
                out.add_assign_ref(&term);
            }
        }
        Ok(out)
    }

    /// `Σ_m ± π♯α_m(g) α_1..α̂_m..`, sign chosen from the 1-based position.
    fn with_function(&self, letters: &[DifferentialForm], g: &Polynomial, negative: impl Fn(usize) -> bool) -> DifferentialForm {
        let n = self.dim();
        let mut out = DifferentialForm::zero(n);
        for (m, am) in letters.iter().enumerate() {
            let c = apply_vector_field(&self.anchor(am).expect("1-form letter"), g);
            if c.is_zero() {
                continue;
            }
            let mut acc = DifferentialForm::scalar(c);
            for (i, ai) in letters.iter().enumerate() {
                if i != m {
                    acc = acc.wedge(ai);
                }
            }
            if negative(m + 1) {
                acc = -acc;
            }
            out.add_assign_ref(&acc);
        }
        out
    }

    /// Graded Jacobiator
    /// `(-1)^{d1 d3} {{ω1,ω2},ω3} + (-1)^{d2 d1} {{ω2,ω3},ω1} + (-1)^{d3 d2} {{ω3,ω1},ω2}`
    /// with `d_i = |ω_i| - 1`, expanded trilinearly over homogeneous parts.
    pub fn jacobiator(
        &self,
        w1: &DifferentialForm,
        w2: &DifferentialForm,
        w3: &DifferentialForm,
    ) -> Result<DifferentialForm> {
        let mut out = DifferentialForm::zero(self.dim());
        for (k1, a) in w1.homogeneous_parts() {
            for (k2, b) in w2.homogeneous_parts() {
                for (k3, c) in w3.homogeneous_parts() {
                    // parity of d_i d_j with d = k - 1
                    let odd = |x: usize, y: usize| x.is_multiple_of(2) && y.is_multiple_of(2);
                    let cyclic = [(&a, &b, &c, odd(k1, k3)), (&b, &c, &a, odd(k2, k1)), (&c, &a, &b, odd(k3, k2))];
                    for (x, y, z, neg) in cyclic {
                        let t = self.koszul_bracket(&self.koszul_bracket(x, y)?, z)?;
                        out = if neg { &out - &t } else { &out + &t };
                    }
                }
            }
        }
        Ok(out)
    }

    /// `π ⊢ ω`.
    pub fn contract(&self, omega: &DifferentialForm) -> Result<DifferentialForm> {
        interior_product(self.bivector(), omega)
    }

    /// `∂_π = ι_π d - d ι_π`.
    pub fn koszul_differential(&self, omega: &DifferentialForm) -> Result<DifferentialForm> {
        let a = self.contract(&exterior_derivative(omega))?;
        let b = exterior_derivative(&self.contract(omega)?);
        Ok(&a - &b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poisson::fixtures;
    use crate::symcore::parse_form;

    #[test]
    fn symplectic_plane() {
        let s = fixtures::r2_symplectic();
        let x1 = Polynomial::var(2, 0);
        let x2 = Polynomial::var(2, 1);
        assert_eq!(s.function_bracket(&x1, &x2).unwrap(), Polynomial::one(2));
        let dx1 = parse_form("dx1", 2).unwrap();
        assert_eq!(s.anchor(&dx1).unwrap().to_string(), "1 @2");
    }

    #[test]
    fn bracket_of_exact_forms_is_exact() {
        let s = fixtures::so3();
        let x1 = Polynomial::var(3, 0);
        let x2 = Polynomial::var(3, 1);
        let lhs = s.koszul_bracket(&differential(&x1), &differential(&x2)).unwrap();
        let rhs = differential(&s.function_bracket(&x1, &x2).unwrap());
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.to_string(), "1 dx3");
    }

    #[test]
    fn form_function_cases() {
        let s = fixtures::so3();
        let a = parse_form("x1 dx2", 3).unwrap();
        let g = parse_form("x1", 3).unwrap();
        let ag = s.koszul_bracket(&a, &g).unwrap();
        let ga = s.koszul_bracket(&g, &a).unwrap();
        assert_eq!(ag, -ga.clone());
        let expected = apply_vector_field(&s.anchor(&a).unwrap(), &Polynomial::var(3, 0));
        assert_eq!(ag.scalar_part(), expected);
        let f = parse_form("x2", 3).unwrap();
        assert!(s.koszul_bracket(&f, &g).unwrap().is_zero());
    }
}
