use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exterior::{schouten_bracket, Basis, DifferentialForm, Polyvector};
use crate::symcore::{parse_polynomial, Polynomial};

/// A bivector on ℝⁿ together with its Schouten square.
///
/// The square is computed once at construction; `is_poisson` is exactly
/// the statement that it vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoissonStructure {
    bivector: Polyvector,
    schouten_square: Polyvector,
}

impl PoissonStructure {
    pub fn new(bivector: Polyvector) -> Result<Self> {
        if !bivector.grades().iter().all(|&g| g == 2) {
            return Err(Error::InvalidStructure(format!(
                "bivector must have pure degree 2, found degrees {:?}",
                bivector.grades()
            )));
        }
        let schouten_square = schouten_bracket(&bivector, &bivector)?;
        Ok(PoissonStructure { bivector, schouten_square })
    }

    /// Builds `Σ c_ij @_i^@_j` from 1-based `(i, j, c_ij)` entries.
    pub fn from_entries(dim: usize, entries: &[(usize, usize, Polynomial)]) -> Result<Self> {
        let mut pi = Polyvector::zero(dim);
        for (i, j, c) in entries {
            for &k in [i, j] {
                if k == 0 || k > dim {
                    return Err(Error::IndexOutOfRange { index: k, dim });
                }
            }
            if c.dim() != dim {
                return Err(Error::DimensionMismatch { left: dim, right: c.dim() });
            }
            let e = Polyvector::basis_element(dim, &[i - 1, j - 1]).mul_poly(c);
            pi = &pi + &e;
        }
        Self::new(pi)
    }

    pub fn dim(&self) -> usize {
        self.bivector.dim()
    }

    pub fn bivector(&self) -> &Polyvector {
        &self.bivector
    }

    /// `[π, π]`.
    pub fn schouten_square(&self) -> &Polyvector {
        &self.schouten_square
    }

    pub fn is_poisson(&self) -> bool {
        self.schouten_square.is_zero()
    }

    /// Coefficient `π^{ij}` (0-based, antisymmetric in `i, j`).
    pub fn entry(&self, i: usize, j: usize) -> Polynomial {
        match Basis::from_indices(&[i, j]) {
            None => Polynomial::zero(self.dim()),
            Some((neg, b)) => {
                let c = self.bivector.coefficient(b);
                if neg {
                    -c
                } else {
                    c
                }
            }
        }
    }

    /// Decomposition `π = Σ_k X_k ^ Y_k` read off the monomial terms:
    /// `c m @_i^@_j` becomes `X = c m @_i`, `Y = @_j`.
    pub fn decomposition(&self) -> Vec<(Polyvector, Polyvector)> {
        let n = self.dim();
        self.bivector
            .monomial_terms()
            .map(|(b, m, c)| {
                let idx = b.indices();
                let x = Polyvector::monomial_term(c.clone(), m.clone(), Basis::single(idx[0]));
                let y = Polyvector::coordinate(n, idx[1]);
                (x, y)
            })
            .collect()
    }

    /// Parses the JSON structure file format.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: StructureFile =
            serde_json::from_str(text).map_err(|e| Error::Io(format!("invalid structure file: {e}")))?;
        file.build()
    }

    pub fn to_json(&self) -> String {
        let entries = self
            .bivector
            .terms()
            .map(|(b, c)| {
                let idx = b.indices();
                Entry { i: idx[0] + 1, j: idx[1] + 1, c: c.to_string() }
            })
            .collect();
        let file = StructureFile { dim: self.dim(), bivector: entries };
        serde_json::to_string_pretty(&file).expect("serializable structure")
    }

    /// Evaluates `π(α, β)` on 1-forms as `π ⊢ (α ^ β)`.
    pub fn pair(&self, alpha: &DifferentialForm, beta: &DifferentialForm) -> Polynomial {
        let ab = alpha.wedge(beta);
        crate::exterior::interior(&self.bivector, &ab).scalar_part()
    }
}

/// On-disk representation: `{"dim": 3, "bivector": [{"i": 1, "j": 2, "c": "x3"}, ...]}`.
#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    pub dim: usize,
    pub bivector: Vec<Entry>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub i: usize,
    pub j: usize,
    pub c: String,
}

impl StructureFile {
    pub fn build(&self) -> Result<PoissonStructure> {
        if self.dim == 0 || self.dim > crate::exterior::MAX_DIM {
            return Err(Error::InvalidStructure(format!("unsupported dimension {}", self.dim)));
        }
        let entries = self
            .bivector
            .iter()
            .map(|e| Ok((e.i, e.j, parse_polynomial(&e.c, self.dim)?)))
            .collect::<Result<Vec<_>>>()?;
        PoissonStructure::from_entries(self.dim, &entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_and_orientation() {
        let text = r#"{ "dim": 3, "bivector": [ {"i": 1, "j": 2, "c": "x3"}, {"i": 2, "j": 3, "c": "x1"}, {"i": 3, "j": 1, "c": "x2"} ] }"#;
        let s = PoissonStructure::from_json(text).unwrap();
        assert_eq!(s.bivector().to_string(), "x3 @1^@2 - x2 @1^@3 + x1 @2^@3");
        let again = PoissonStructure::from_json(&s.to_json()).unwrap();
        assert_eq!(s, again);
        assert_eq!(s.entry(2, 0), Polynomial::var(3, 1));
    }

    #[test]
    fn rejects_bad_files() {
        assert!(PoissonStructure::from_json(r#"{"dim": 2, "bivector": [{"i": 1, "j": 3, "c": "1"}]}"#).is_err());
        assert!(PoissonStructure::from_json(r#"{"dim": 2, "bivector": [{"i": 1, "j": 2, "c": "x3"}]}"#).is_err());
        assert!(PoissonStructure::from_json(r#"{"dim": 2, "bivector": [], "extra": 1}"#).is_err());
        assert!(PoissonStructure::new(Polyvector::coordinate(2, 0)).is_err());
    }
}
