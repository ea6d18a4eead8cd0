use std::fmt::{self, Display};
use std::str::FromStr;

use serde::Serialize;

use crate::coalgebra::{
    coassociativity_defect, coderivation_defect, component_commutator, Component, Operator,
};
use crate::error::{Error, Result};
use crate::exterior::{apply_vector_field, exterior_derivative, vector_commutator, DifferentialForm};
use crate::formality::{
    bracket_from_cartan, dgla_family, f2, f3, f3_from_exponential, formality_defect, linfty_defect,
    main_theorem_sides, make_coderivation, pi3, pi_from_decomposition, OperatorKind, PoissonCoderivations,
    Variant,
};
use crate::poisson::PoissonStructure;

use super::Sampler;

/// The named property suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    Jacobi,
    ModuleRule,
    AnchorHom,
    DDerivation,
    WellDefined,
    Nikonov,
    TildePiDual,
    Coalgebra,
    Cartan,
    MCentral,
    PiD,
    MainTheorem,
    Homotopy,
    Linfty,
}

impl Check {
    pub const ALL: [Check; 14] = [
        Check::Jacobi,
        Check::ModuleRule,
        Check::AnchorHom,
        Check::DDerivation,
        Check::WellDefined,
        Check::Nikonov,
        Check::TildePiDual,
        Check::Coalgebra,
        Check::Cartan,
        Check::MCentral,
        Check::PiD,
        Check::MainTheorem,
        Check::Homotopy,
        Check::Linfty,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Jacobi => "jacobi",
            Check::ModuleRule => "module-rule",
            Check::AnchorHom => "anchor-hom",
            Check::DDerivation => "d-derivation",
            Check::WellDefined => "well-defined",
            Check::Nikonov => "nikonov",
            Check::TildePiDual => "tilde-pi-dual",
            Check::Coalgebra => "coalgebra",
            Check::Cartan => "cartan",
            Check::MCentral => "m-central",
            Check::PiD => "lemma-pi-d",
            Check::MainTheorem => "main-theorem",
            Check::Homotopy => "homotopy",
            Check::Linfty => "linfty",
        }
    }
}

impl Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| Error::Parse {
            pos: 0,
            msg: format!("unknown check '{s}'"),
        })
    }
}

/// Size bounds and seed for a suite run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub trials: usize,
    pub seed: u64,
    pub max_word_length: usize,
    pub max_poly_degree: u32,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { trials: 50, seed: 0, max_word_length: 3, max_poly_degree: 2 }
    }
}

/// Outcome of one suite: the first counterexample, if any.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BracketReport {
    pub check: String,
    pub seed: u64,
    pub trials: usize,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl BracketReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data")
    }
}

impl Display for BracketReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "check: {}", self.check)?;
        writeln!(f, "seed: {}", self.seed)?;
        writeln!(f, "trials: {}", self.trials)?;
        write!(f, "result: {}", if self.pass { "PASS" } else { "FAIL" })?;
        if let Some(c) = &self.counterexample {
            write!(f, "\ncounterexample: {c}")?;
        }
        Ok(())
    }
}

/// Runs `check` against `s` for `cfg.trials` seeded trials, stopping at the
/// first counterexample.
pub fn run_check(check: Check, s: &PoissonStructure, cfg: &SuiteConfig) -> Result<BracketReport> {
    let mut g = Sampler::new(cfg.seed, s.dim(), cfg.max_poly_degree).with_max_terms(2);
    let suite = Suite::new(check, s, cfg)?;
    let mut counterexample = None;
    for t in 0..cfg.trials {
        if let Some(c) = suite.trial(&mut g, t)? {
            counterexample = Some(format!("trial {t}: {c}"));
            break;
        }
    }
    Ok(BracketReport {
        check: check.name().to_string(),
        seed: cfg.seed,
        trials: cfg.trials,
        pass: counterexample.is_none(),
        counterexample,
    })
}

fn mismatch(inputs: &[(&str, &dyn Display)], lhs: &dyn Display, rhs: &dyn Display) -> String {
    let args: Vec<String> = inputs.iter().map(|(k, v)| format!("{k} = {v}")).collect();
    format!("{}; lhs = {lhs}; rhs = {rhs}", args.join(", "))
}

fn compare<T: PartialEq + Display>(inputs: &[(&str, &dyn Display)], lhs: T, rhs: T) -> Option<String> {
    (lhs != rhs).then(|| mismatch(inputs, &lhs, &rhs))
}

fn neg_if(odd: bool, w: DifferentialForm) -> DifferentialForm {
    if odd {
        -w
    } else {
        w
    }
}

struct Suite<'a> {
    check: Check,
    s: &'a PoissonStructure,
    dim: usize,
    max_len: usize,
    ops: Option<PoissonCoderivations>,
}

impl<'a> Suite<'a> {
    fn new(check: Check, s: &'a PoissonStructure, cfg: &SuiteConfig) -> Result<Self> {
        let ops = match check {
            Check::MainTheorem | Check::Homotopy => Some(PoissonCoderivations::new(s)?),
            _ => None,
        };
        Ok(Suite { check, s, dim: s.dim(), max_len: cfg.max_word_length.clamp(1, 4), ops })
    }

    /// Form degrees drawn up to this bound.
    fn max_form(&self) -> usize {
        self.dim.min(3)
    }

    /// Word lengths cycle through `1..=max_len`, so every length is covered.
    fn length(&self, t: usize) -> usize {
        1 + t % self.max_len
    }

    fn random_form(&self, g: &mut Sampler) -> DifferentialForm {
        let k = g.degree(self.max_form());
        g.form(k)
    }

    fn trial(&self, g: &mut Sampler, t: usize) -> Result<Option<String>> {
        let s = self.s;
        Ok(match self.check {
            Check::Jacobi => {
                let ws: Vec<_> = (0..3).map(|_| self.random_form(g)).collect();
                let j = s.jacobiator(&ws[0], &ws[1], &ws[2])?;
                let zero = DifferentialForm::zero(self.dim);
                compare(&[("w1", &ws[0]), ("w2", &ws[1]), ("w3", &ws[2])], j, zero)
            }
            Check::ModuleRule => {
                let (a, b, f) = (g.form(1), g.form(1), g.polynomial());
                let fb = b.mul_poly(&f);
                let lhs = s.koszul_bracket(&a, &fb)?;
                let xf = apply_vector_field(&s.anchor(&a)?, &f);
                let rhs = &s.koszul_bracket(&a, &b)?.mul_poly(&f) + &b.mul_poly(&xf);
                compare(&[("alpha", &a), ("beta", &b), ("f", &f)], lhs, rhs)
            }
            Check::AnchorHom => {
                let (a, b) = (g.form(1), g.form(1));
                let lhs = vector_commutator(&s.anchor(&a)?, &s.anchor(&b)?);
                let rhs = s.anchor(&s.koszul_bracket(&a, &b)?)?;
                compare(&[("alpha", &a), ("beta", &b)], lhs, rhs)
            }
            Check::DDerivation => {
                let (a, b) = (self.random_form(g), self.random_form(g));
                let ka = a.homogeneous_degree().unwrap_or(0);
                let lhs = exterior_derivative(&s.koszul_bracket(&a, &b)?);
                let first = s.koszul_bracket(&exterior_derivative(&a), &b)?;
                // d1 = |a| - 1
                let second = neg_if(ka % 2 == 0, s.koszul_bracket(&a, &exterior_derivative(&b))?);
                compare(&[("w1", &a), ("w2", &b)], lhs, &first + &second)
            }
            Check::WellDefined => self.well_defined(g)?,
            Check::Nikonov => {
                let (a, b) = (self.random_form(g), self.random_form(g));
                let ins: [(&str, &dyn Display); 2] = [("w1", &a), ("w2", &b)];
                if let Some(c) = compare(&ins, s.koszul_bracket(&a, &b)?, s.nikonov_bracket(&a, &b)?) {
                    return Ok(Some(c));
                }
                let (ka, kb) = (g.degree(self.max_form()), g.degree(self.max_form()));
                let (ca, cb) = (g.closed_form(ka), g.closed_form(kb));
                let lhs = s.koszul_bracket(&ca, &cb)?;
                let rhs = exterior_derivative(&s.tilde_pi(&ca, &cb)?);
                compare(&[("closed w1", &ca), ("closed w2", &cb)], lhs, rhs)
            }
            Check::TildePiDual => {
                let (a, b) = (self.random_form(g), self.random_form(g));
                let ins: [(&str, &dyn Display); 2] = [("w1", &a), ("w2", &b)];
                if let Some(c) = compare(&ins, s.tilde_pi(&a, &b)?, s.tilde_pi_contraction(&a, &b)?) {
                    return Ok(Some(c));
                }
                let (a1, b1) = (g.form(1), g.form(1));
                let lhs = s.tilde_pi(&a1, &b1)?;
                let rhs = DifferentialForm::scalar(s.pair(&a1, &b1));
                compare(&[("alpha", &a1), ("beta", &b1)], lhs, rhs)
            }
            Check::Coalgebra => self.coalgebra(g, t)?,
            Check::Cartan => self.cartan(g, t)?,
            Check::MCentral => self.m_central(g, t)?,
            Check::PiD => self.pi_d(g)?,
            Check::MainTheorem => self.main_theorem(g)?,
            Check::Homotopy => self.homotopy(g)?,
            Check::Linfty => {
                let w = g.word(self.length(t), self.dim);
                let r = linfty_defect(&dgla_family(s)?, &w);
                (!r.zero).then(|| format!("word = {}; defect = {}", r.word, r.difference))
            }
        })
    }

    /// Leibniz expansion with the function factor on either side of the wedge
    /// agrees with the direct bracket.
    fn well_defined(&self, g: &mut Sampler) -> Result<Option<String>> {
        let s = self.s;
        let w1 = self.random_form(g);
        let (k2, k3) = (g.degree(2), g.degree(2));
        let (w2, w3, f) = (g.form(k2), g.form(k3), g.polynomial());
        let leibniz = |x: &DifferentialForm, y: &DifferentialForm| -> Result<DifferentialForm> {
            let d1 = w1.homogeneous_degree().unwrap_or(0) as i64 - 1;
            let d2 = x.homogeneous_degree().unwrap_or(0) as i64 - 1;
            let a = s.koszul_bracket(&w1, x)?.wedge(y);
            let b = x.wedge(&s.koszul_bracket(&w1, y)?);
            Ok(&a + &neg_if((d1 * (d2 + 1)).rem_euclid(2) == 1, b))
        };
        let left = leibniz(&w2.mul_poly(&f), &w3)?;
        let right = leibniz(&w2, &w3.mul_poly(&f))?;
        let ins: [(&str, &dyn Display); 4] = [("w1", &w1), ("w2", &w2), ("w3", &w3), ("f", &f)];
        if let Some(c) = compare(&ins, left.clone(), right) {
            return Ok(Some(c));
        }
        let direct = s.koszul_bracket(&w1, &w2.mul_poly(&f).wedge(&w3))?;
        Ok(compare(&ins, direct, left))
    }

    fn coalgebra(&self, g: &mut Sampler, t: usize) -> Result<Option<String>> {
        let len = self.length(t).max(2);
        let w = g.word(len, self.dim);
        let d = coassociativity_defect(&w);
        if !d.is_zero() {
            return Ok(Some(format!("coassociativity: word = {w}; defect = {d}")));
        }
        let (ka, kb) = (1 + t % 3, 1 + (t / 3) % 2);
        let (phi, psi) = (g.component(ka), g.component(kb));
        let (fp, fq) = (phi.extend(), psi.extend());
        let d = coderivation_defect(&fp, &w);
        if !d.is_zero() {
            return Ok(Some(format!("coderivation diagram (arity {ka}): word = {w}; defect = {d}")));
        }
        let ext = component_commutator(&phi, &psi).extend().apply(&w);
        let com = fp.bigraded_commutator(&fq)?.apply(&w);
        if ext != com {
            return Ok(Some(format!(
                "commutator extension (arities {ka}, {kb}): word = {w}; extension = {ext}; commutator = {com}"
            )));
        }
        let lhs = fp.bar()?.total_commutator(&fq.bar()?)?.apply(&w);
        let rhs = fp.modified_commutator(&fq)?.bar()?.apply(&w);
        Ok((lhs != rhs).then(|| format!("bar intertwining: word = {w}; lhs = {lhs}; rhs = {rhs}")))
    }

    fn operator(&self, kind: OperatorKind) -> Result<Operator> {
        Ok(make_coderivation(&kind, self.dim)?.operator())
    }

    fn cartan(&self, g: &mut Sampler, t: usize) -> Result<Option<String>> {
        let (x, y) = (g.vector_field(), g.vector_field());
        let w = g.word(self.length(t), self.dim);
        let d = self.operator(OperatorKind::D)?;
        let (lx, ly) = (self.operator(OperatorKind::Lie(x.clone()))?, self.operator(OperatorKind::Lie(y.clone()))?);
        let (ix, iy) = (self.operator(OperatorKind::Interior(x.clone()))?, self.operator(OperatorKind::Interior(y.clone()))?);
        let xy = vector_commutator(&x, &y);
        let lxy = self.operator(OperatorKind::Lie(xy.clone()))?;
        let ixy = self.operator(OperatorKind::Interior(xy))?;
        let zero = Operator::zero();
        let cases: [(&str, Operator, &Operator); 6] = [
            ("[L_X, L_Y] = L_[X,Y]", lx.bigraded_commutator(&ly)?, &lxy),
            ("[I_X, I_Y] = 0", ix.bigraded_commutator(&iy)?, &zero),
            ("[L_X, I_Y] = I_[X,Y]", lx.bigraded_commutator(&iy)?, &ixy),
            ("[D, L_X] = 0", d.bigraded_commutator(&lx)?, &zero),
            ("[D, I_X] = L_X", d.bigraded_commutator(&ix)?, &lx),
            ("D^2 = 0", d.then_after(&d), &zero),
        ];
        for (name, lhs, rhs) in cases {
            let (a, b) = (lhs.apply(&w), rhs.apply(&w));
            if a != b {
                return Ok(Some(format!("{name}: X = {x}, Y = {y}, word = {w}; lhs = {a}; rhs = {b}")));
            }
        }
        Ok(None)
    }

    fn m_central(&self, g: &mut Sampler, t: usize) -> Result<Option<String>> {
        let x = g.vector_field();
        let w = g.word(self.length(t).max(2), self.dim);
        let m = self.operator(OperatorKind::M)?;
        let others = [
            ("D", self.operator(OperatorKind::D)?),
            ("L_X", self.operator(OperatorKind::Lie(x.clone()))?),
            ("I_X", self.operator(OperatorKind::Interior(x.clone()))?),
        ];
        for (name, op) in others {
            let v = m.bigraded_commutator(&op)?.apply(&w);
            if !v.is_zero() {
                return Ok(Some(format!("[M, {name}]: X = {x}, word = {w}; value = {v}")));
            }
        }
        Ok(None)
    }

    fn pi_d(&self, g: &mut Sampler) -> Result<Option<String>> {
        let s = self.s;
        let n = self.dim;
        let w = g.word(2, n);
        let pi = OperatorKind::Pi(s.clone()).component(n)?;
        let br = OperatorKind::BracketExt(s.clone()).component(n)?;
        let d = OperatorKind::D.component(n)?;
        let pairs = s.decomposition();
        let cases: [(&str, Component, &Component); 3] = [
            ("[pi~~, d~] = s{}", component_commutator(&pi, &d), &br),
            ("sum i~X cup i~Y = pi~~", pi_from_decomposition(n, &pairs)?, &pi),
            ("sum (i~X cup L~Y - L~X cup i~Y) = s{}", bracket_from_cartan(n, &pairs)?, &br),
        ];
        for (name, lhs, rhs) in cases {
            let (a, b) = (lhs.apply(&w), rhs.apply(&w));
            if a != b {
                return Ok(Some(format!("{name}: word = {w}; lhs = {a}; rhs = {b}")));
            }
        }
        Ok(None)
    }

    /// Every length up to the bound is tested in each trial.
    fn main_theorem(&self, g: &mut Sampler) -> Result<Option<String>> {
        let ops = self.ops.as_ref().expect("built for this check");
        for len in 1..=self.max_len {
            let w = g.word(len, self.dim);
            for variant in [Variant::Skewed, Variant::Plain] {
                let (lhs, rhs) = main_theorem_sides(ops, &w, variant)?;
                if lhs != rhs {
                    let diff = &lhs - &rhs;
                    return Ok(Some(format!("{variant:?} variant: word = {w}; defect = {diff}")));
                }
            }
            let cw = g.closed_word(len, self.max_form());
            let r = formality_defect(ops, &cw)?;
            if !r.zero {
                return Ok(Some(format!("(D + B) e^-Pi: closed word = {}; value = {}", r.word, r.difference)));
            }
        }
        Ok(None)
    }

    fn homotopy(&self, g: &mut Sampler) -> Result<Option<String>> {
        let s = self.s;
        let ops = self.ops.as_ref().expect("built for this check");
        let fs: Vec<DifferentialForm> = (0..3)
            .map(|_| {
                let k = 1 + g.degree(self.max_form() - 1);
                g.closed_form(k)
            })
            .collect();
        let (a, b, c) = (&fs[0], &fs[1], &fs[2]);
        let ins: [(&str, &dyn Display); 3] = [("a", a), ("b", b), ("c", c)];
        let checks = [
            ("d f2 = {a, b}", exterior_derivative(&f2(s, a, b)?), s.koszul_bracket(a, b)?),
            ("d f3 = pi3", exterior_derivative(&f3(s, a, b, c)?), pi3(s, a, b, c)?),
            ("f3 from e^-Pi", f3_from_exponential(ops, a, b, c)?, f3(s, a, b, c)?),
        ];
        for (name, lhs, rhs) in checks {
            if let Some(m) = compare(&ins, lhs, rhs) {
                return Ok(Some(format!("{name}: {m}")));
            }
        }
        Ok(None)
    }
}
