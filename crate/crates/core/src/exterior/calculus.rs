//! Cartan calculus on polynomial forms and the Schouten bracket.

use super::basis::Basis;
use super::multivector::{same_dim, DifferentialForm, Kind, Multivector, Polyvector};
use crate::error::{Error, Result};
use crate::symcore::Polynomial;

/// Exterior derivative.
pub fn exterior_derivative(omega: &DifferentialForm) -> DifferentialForm {
    let n = omega.dim();
    let mut out = DifferentialForm::zero(n);
    for (b, f) in omega.terms() {
        for k in 0..n {
            if b.contains(k) {
                continue;
            }
            let df = f.partial(k);
            if df.is_zero() {
                continue;
            }
            if let Some((neg, nb)) = Basis::single(k).wedge(b) {
                out.add_signed(neg, nb, df);
            }
        }
    }
    out
}

/// `d` of a function, as a 1-form.
pub fn differential(f: &Polynomial) -> DifferentialForm {
    exterior_derivative(&DifferentialForm::scalar(f.clone()))
}

/// Contraction of `omega` with the coordinate field `@_{a+1}`.
fn contract_coordinate(a: usize, omega: &DifferentialForm) -> DifferentialForm {
    let mut out = DifferentialForm::zero(omega.dim());
    for (b, f) in omega.terms() {
        if let Some((neg, nb)) = b.remove(a) {
            out.add_signed(neg, nb, f.clone());
        }
    }
    out
}

/// Interior product `P ⊢ ω`.
///
/// A decomposable `g @_{j1}^...^@_{jk}` acts as `g ι_{jk} ∘ ... ∘ ι_{j1}`: the
/// first factor contracts first, so that `(@1^@2) ⊢ (dx1^dx2) = 1`.
/// Contraction of a `k`-vector into a form of degree below `k` gives zero.
pub fn interior_product(p: &Polyvector, omega: &DifferentialForm) -> Result<DifferentialForm> {
    same_dim(p.dim(), omega.dim())?;
    let mut out = DifferentialForm::zero(omega.dim());
    for (b, g) in p.terms() {
        let mut acc = omega.clone();
        for j in b.indices() {
            if acc.is_zero() {
                break;
            }
            acc = contract_coordinate(j, &acc);
        }
        out.add_assign_ref(&acc.mul_poly(g));
    }
    Ok(out)
}

/// Contraction `ι_X` with a vector field; higher components of `x` are contracted as in
/// [`interior_product`].
pub fn interior(x: &Polyvector, omega: &DifferentialForm) -> DifferentialForm {
    interior_product(x, omega).expect("interior product of mismatched dimensions")
}

fn expect_vector_field(x: &Polyvector) -> Result<()> {
    x.expect_degree(1)
}

/// `X(f)` for a vector field `X`.
pub fn apply_vector_field(x: &Polyvector, f: &Polynomial) -> Polynomial {
    let mut out = Polynomial::zero(f.dim());
    for (b, g) in x.terms() {
        if b.grade() != 1 {
            continue;
        }
        let a = b.indices()[0];
        out = &out + &(g * &f.partial(a));
    }
    out
}

/// Lie derivative via Cartan's formula `L_X = d ι_X + ι_X d`.
pub fn lie_derivative(x: &Polyvector, omega: &DifferentialForm) -> Result<DifferentialForm> {
    expect_vector_field(x)?;
    same_dim(x.dim(), omega.dim())?;
    let a = exterior_derivative(&interior(x, omega));
    let b = interior(x, &exterior_derivative(omega));
    Ok(&a + &b)
}

/// Commutator of vector fields, `[X,Y]^b = X(Y^b) - Y(X^b)`.
pub fn vector_commutator(x: &Polyvector, y: &Polyvector) -> Polyvector {
    let n = x.dim();
    let mut out = Polyvector::zero(n);
    for b in 0..n {
        let xb = x.coefficient(Basis::single(b));
        let yb = y.coefficient(Basis::single(b));
        let c = &apply_vector_field(x, &yb) - &apply_vector_field(y, &xb);
        out.add_poly(Basis::single(b), c);
    }
    out
}

/// Extends a bracket of degree-1 letters to decomposable elements:
/// `[a_1^...^a_k, b_1^...^b_l] = Σ_{m,n} (-1)^{m+n} [a_m,b_n] ^ a_1..â_m..a_k ^ b_1..b̂_n..b_l`.
pub(crate) fn leibniz_extend<K: Kind>(
    dim: usize,
    a: &[Multivector<K>],
    b: &[Multivector<K>],
    base: &dyn Fn(&Multivector<K>, &Multivector<K>) -> Multivector<K>,
) -> Multivector<K> {
    let mut out = Multivector::zero(dim);
    for (m, am) in a.iter().enumerate() {
        for (n, bn) in b.iter().enumerate() {
            let mut acc = base(am, bn);
            if acc.is_zero() {
                continue;
            }
            for (i, ai) in a.iter().enumerate() {
                if i != m {
                    acc = acc.wedge(ai);
                }
            }
            for (j, bj) in b.iter().enumerate() {
                if j != n {
                    acc = acc.wedge(bj);
                }
            }
            if (m + n) % 2 == 1 {
                acc = -acc;
            }
            out.add_assign_ref(&acc);
        }
    }
    out
}

/// `[Y_1^...^Y_q, f] = Σ_j (-1)^{q-j} Y_j(f) Y_1..Ŷ_j..Y_q`.
fn schouten_with_function(dim: usize, ys: &[Polyvector], f: &Polynomial) -> Polyvector {
    let q = ys.len();
    let mut out = Polyvector::zero(dim);
    for (j, yj) in ys.iter().enumerate() {
        let c = apply_vector_field(yj, f);
        if c.is_zero() {
            continue;
        }
        let mut acc = Polyvector::scalar(c);
        for (i, yi) in ys.iter().enumerate() {
            if i != j {
                acc = acc.wedge(yi);
            }
        }
        // j is 0-based here: exponent q - (j+1)
        if (q - j - 1) % 2 == 1 {
            acc = -acc;
        }
        out.add_assign_ref(&acc);
    }
    out
}

/// Schouten–Nijenhuis bracket.
///
/// Bilinear expansion over decomposable terms; on vector fields it is the
/// commutator, `[X, f] = X(f)`, and it is a graded derivation in each slot.
pub fn schouten_bracket(p: &Polyvector, q: &Polyvector) -> Result<Polyvector> {
    same_dim(p.dim(), q.dim())?;
    let n = p.dim();
    let mut out = Polyvector::zero(n);
    for (bp, f) in p.terms() {
        for (bq, g) in q.terms() {
            let term = match (bp.grade(), bq.grade()) {
                (0, 0) => continue,
                (_, 0) => {
                    let ps = Polyvector::term_letters(n, bp, f);
                    schouten_with_function(n, &ps, g)
                }
                (0, k) => {
                    let qs = Polyvector::term_letters(n, bq, g);
                    let r = schouten_with_function(n, &qs, f);
                    // [f, Q] = -(-1)^{(0-1)(k-1)} [Q, f]
                    if k % 2 == 1 {
                        -r
                    } else {
                        r
                    }
                }
                _ => {
                    let ps = Polyvector::term_letters(n, bp, f);
                    let qs = Polyvector::term_letters(n, bq, g);
                    leibniz_extend(n, &ps, &qs, &vector_commutator)
                }
            };
            out.add_assign_ref(&term);
        }
    }
    Ok(out)
}

/// Rejects anything that is not a pure 1-vector.
pub fn as_vector_field(x: &Polyvector) -> Result<&Polyvector> {
    if x.is_zero() {
        return Ok(x);
    }
    match x.homogeneous_degree() {
        Some(1) => Ok(x),
        _ => Err(Error::Degree { expected: 1, found: format!("{:?}", x.grades()) }),
    }
}
