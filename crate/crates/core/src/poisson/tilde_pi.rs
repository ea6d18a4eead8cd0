use crate::error::Result;
use crate::exterior::{exterior_derivative, same_dim, DifferentialForm};

use super::PoissonStructure;

impl PoissonStructure {
    /// The extension `π̃` of `π` to pairs of forms.
    ///
    /// On decomposables `π̃(α_1..α_k, β_1..β_l) = Σ_{i,j} (-1)^{i+j} π(α_i, β_j) α_1..α̂_i..α_k ^ β_1..β̂_j..β_l`;
    /// it vanishes as soon as one argument is a function.
    pub fn tilde_pi(&self, w1: &DifferentialForm, w2: &DifferentialForm) -> Result<DifferentialForm> {
        same_dim(self.dim(), w1.dim())?;
        same_dim(self.dim(), w2.dim())?;
        let n = self.dim();
        let mut out = DifferentialForm::zero(n);
        for (b1, f) in w1.terms() {
            let a = DifferentialForm::term_letters(n, b1, f);
            for (b2, g) in w2.terms() {
                let b = DifferentialForm::term_letters(n, b2, g);
                for (i, ai) in a.iter().enumerate() {
                    for (j, bj) in b.iter().enumerate() {
                        let c = self.pair(ai, bj);
                        if c.is_zero() {
                            continue;
                        }
                        let mut acc = DifferentialForm::scalar(c);
                        for (m, am) in a.iter().enumerate() {
                            if m != i {
                                acc = acc.wedge(am);
                            }
                        }
                        for (m, bm) in b.iter().enumerate() {
                            if m != j {
                                acc = acc.wedge(bm);
                            }
                        }
                        if (i + j) % 2 == 1 {
                            acc = -acc;
                        }
                        out.add_assign_ref(&acc);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `π̃` through contractions:
    /// `(-1)^{k+1} (π⊢(ω1^ω2) - (π⊢ω1)^ω2 - ω1^(π⊢ω2))` for `ω1` of degree `k`.
    pub fn tilde_pi_contraction(&self, w1: &DifferentialForm, w2: &DifferentialForm) -> Result<DifferentialForm> {
        same_dim(self.dim(), w1.dim())?;
        same_dim(self.dim(), w2.dim())?;
        let mut out = DifferentialForm::zero(self.dim());
        for (k, part) in w1.homogeneous_parts() {
            let whole = self.contract(&part.wedge(w2))?;
            let left = self.contract(&part)?.wedge(w2);
            let right = part.wedge(&self.contract(w2)?);
            let defect = &(&whole - &left) - &right;
            if k % 2 == 0 {
                out = &out - &defect;
            } else {
                out = &out + &defect;
            }
        }
        Ok(out)
    }

    /// The Koszul bracket rebuilt from `π̃`:
    /// `d π̃(ω1, ω2) + π̃(dω1, ω2) - (-1)^k π̃(ω1, dω2)`.
    pub fn nikonov_bracket(&self, w1: &DifferentialForm, w2: &DifferentialForm) -> Result<DifferentialForm> {
        let d2 = exterior_derivative(w2);
        let mut out = exterior_derivative(&self.tilde_pi(w1, w2)?);
        out = &out + &self.tilde_pi(&exterior_derivative(w1), w2)?;
        for (k, part) in w1.homogeneous_parts() {
            let t = self.tilde_pi(&part, &d2)?;
            if k % 2 == 0 {
                out = &out - &t;
            } else {
                out = &out + &t;
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use crate::poisson::fixtures;
    use crate::symcore::parse_form;

    #[test]
    fn restricts_to_pi_on_one_forms() {
        let s = fixtures::so3();
        let a = parse_form("dx1", 3).unwrap();
        let b = parse_form("dx2", 3).unwrap();
        assert_eq!(s.tilde_pi(&a, &b).unwrap().to_string(), "x3");
        assert_eq!(s.tilde_pi_contraction(&a, &b).unwrap().to_string(), "x3");
    }

    #[test]
    fn vanishes_on_functions() {
        let s = fixtures::so3();
        let f = parse_form("x1^2", 3).unwrap();
        let b = parse_form("x2 dx1^dx3", 3).unwrap();
        assert!(s.tilde_pi(&f, &b).unwrap().is_zero());
        assert!(s.tilde_pi(&b, &f).unwrap().is_zero());
        assert!(s.tilde_pi_contraction(&f, &b).unwrap().is_zero());
    }

    #[test]
    fn one_form_and_two_form() {
        let s = fixtures::r4_symplectic();
        let a = parse_form("dx1", 4).unwrap();
        let b = parse_form("dx2^dx3", 4).unwrap();
        // π(dx1, dx2) dx3 for π = @1^@2 + @3^@4
        assert_eq!(s.tilde_pi(&a, &b).unwrap().to_string(), "1 dx3");
        assert_eq!(s.tilde_pi_contraction(&a, &b).unwrap().to_string(), "1 dx3");
    }
}
