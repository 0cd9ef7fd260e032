//! Identity suites for both Weil algebras: every relation is checked by exact
//! equality on generators plus seeded random samples.

use std::fmt;
use std::sync::Arc;

use crate::classical::{plain, ClassicalElement, ClassicalWeil, Operator};
use crate::error::Result;
use crate::kernels::{ExtMonomial, SymMonomial};
use crate::lie::AlgebraDef;
use crate::linalg::{Matrix, Scalar};
use crate::quantum::{self, QuantumElement, QuantumWeil};
use crate::random;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    pub passed: bool,
    /// Number of inputs the identity was evaluated on.
    pub cases: usize,
    /// First counterexample, if any.
    pub detail: Option<String>,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub context: &'static str,
    pub algebra: String,
    pub rep: String,
    pub checks: Vec<IdentityCheck>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {} rep={}", self.context, self.algebra, self.rep)?;
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let status = if c.passed { "pass" } else { "FAIL" };
            write!(f, "  {status}  {:<width$}  ({} cases)", c.name, c.cases)?;
            if let Some(d) = &c.detail {
                write!(f, "  counterexample: {d}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub samples: usize,
    pub max_degree: usize,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            samples: 200,
            max_degree: 4,
            seed: 0,
        }
    }
}

/// Accumulates pass/fail over many inputs for one named identity.
struct Tally {
    name: String,
    cases: usize,
    detail: Option<String>,
}

impl Tally {
    fn new(name: impl Into<String>) -> Self {
        Tally {
            name: name.into(),
            cases: 0,
            detail: None,
        }
    }

    fn record(&mut self, ok: bool, input: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.detail.is_none() {
            let mut s = input();
            if s.len() > 200 {
                let cut = (0..=200).rev().find(|&i| s.is_char_boundary(i)).unwrap_or(0);
                s.truncate(cut);
                s.push_str("...");
            }
            self.detail = Some(s);
        }
    }

    fn finish(self) -> IdentityCheck {
        IdentityCheck {
            name: self.name,
            passed: self.detail.is_none(),
            cases: self.cases,
            detail: self.detail,
        }
    }
}

fn matrix_units(d: usize) -> Vec<Matrix> {
    let mut out = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            out.push(Matrix::unit(d, i, j));
        }
    }
    out
}

fn classical_generators(w: &Arc<ClassicalWeil>) -> Vec<ClassicalElement> {
    let mut out = vec![ClassicalElement::one(w)];
    for a in 0..w.dim() {
        out.push(ClassicalElement::v(w, a).expect("index in range"));
        out.push(ClassicalElement::y(w, a).expect("index in range"));
    }
    for m in matrix_units(w.dim_v()) {
        out.push(ClassicalElement::matrix(w, m).expect("shape"));
    }
    out
}

/// Σ_c f^c_{ab} ι_c x.
fn classical_bracket_rhs(w: &Arc<ClassicalWeil>, a: usize, b: usize, x: &ClassicalElement) -> ClassicalElement {
    w.lie().bracket(a, b).iter().fold(ClassicalElement::zero(w), |acc, (c, f)| {
        &acc + &x.contraction(*c).expect("index in range").scale(f)
    })
}

/// The scalar-coefficient image of an element whose matrices are all scalar.
fn to_plain(x: &ClassicalElement) -> Option<plain::PlainElement> {
    x.terms()
        .iter()
        .map(|(k, m)| {
            m.as_scalar_multiple()
                .map(|c| ((k.sym.exponents().to_vec(), k.ext.indices().to_vec()), c))
        })
        .collect()
}

/// Forces every matrix part to the identity, keeping the first diagonal entry.
fn with_identity_matrices(x: &ClassicalElement) -> ClassicalElement {
    let d = x.algebra().dim_v();
    let terms = x
        .terms()
        .iter()
        .map(|(k, m)| {
            let c = if m.get(0, 0).is_zero() { Scalar::one() } else { m.get(0, 0).clone() };
            (k.clone(), Matrix::scalar(d, c))
        })
        .collect();
    ClassicalElement::from_terms(x.algebra(), terms)
}

/// Random symmetric polynomial (no exterior factor) with identity matrix part.
fn random_symmetric(w: &Arc<ClassicalWeil>, rng: &mut random::Rng64, max_degree: u32) -> ClassicalElement {
    use rand::Rng;
    let n = w.dim();
    let mut terms = crate::classical::ClassicalTerms::zero();
    for _ in 0..4 {
        let deg = rng.gen_range(0..=max_degree);
        let mut e = vec![0u32; n];
        for _ in 0..deg {
            e[rng.gen_range(0..n)] += 1;
        }
        terms.add_term(
            crate::classical::ClassicalKey::new(SymMonomial::from_exponents(e), ExtMonomial::one()),
            Matrix::scalar(w.dim_v(), random::scalar(rng)),
        );
    }
    ClassicalElement::from_terms(w, terms)
}

pub const CLASSICAL_CARTAN: &str = "[iota_a, d] = L_a";
pub const CLASSICAL_LIE_D: &str = "[L_a, d] = 0";
pub const CLASSICAL_LIE_IOTA: &str = "[L_a, iota_b] = f^c_ab iota_c";
pub const CLASSICAL_CURVED: &str = "d(d(x)) = [C, x]";
pub const CLASSICAL_BIANCHI: &str = "d(C) = 0";
pub const CLASSICAL_RESTRICTION: &str = "identity-matrix part: d = Weil differential";
pub const CLASSICAL_RESTRICTION_SQUARE: &str = "identity-matrix part: d(d(x)) = 0";
pub const CLASSICAL_LEMMA: &str = "v^a L_a f = 0 on S(g*)";
pub const CLASSICAL_DEGREES: &str = "L, iota, d have degrees 0, -1, +1";

/// Runs every classical identity on `(def, rep)`.
pub fn classical_suite(def: &AlgebraDef, rep: &str, cfg: &SuiteConfig) -> Result<SuiteReport> {
    let w = ClassicalWeil::new(def.lie.clone(), def.rep(rep)?.clone())?;
    let n = w.dim();
    let mut rng = random::rng(cfg.seed);
    let mut inputs = classical_generators(&w);
    for _ in 0..cfg.samples {
        inputs.push(random::classical(&w, &mut rng, cfg.max_degree));
    }
    let c = ClassicalElement::curvature(&w);

    let mut cartan = Tally::new(CLASSICAL_CARTAN);
    let mut lie_d = Tally::new(CLASSICAL_LIE_D);
    let mut lie_iota = Tally::new(CLASSICAL_LIE_IOTA);
    let mut curved = Tally::new(CLASSICAL_CURVED);
    let mut degrees = Tally::new(CLASSICAL_DEGREES);
    for x in &inputs {
        let dx = x.differential();
        let iotas: Vec<ClassicalElement> = (0..n).map(|a| x.contraction(a).expect("in range")).collect();
        let lies: Vec<ClassicalElement> = (0..n).map(|a| x.lie_derivative(a).expect("in range")).collect();
        for a in 0..n {
            let lhs = &dx.contraction(a)? + &iotas[a].differential();
            cartan.record(lhs == lies[a], || format!("a={} x={x}", a + 1));
            let comm = &dx.lie_derivative(a)? - &lies[a].differential();
            lie_d.record(comm.is_zero(), || format!("a={} x={x}", a + 1));
            for b in 0..n {
                let lhs = &iotas[b].lie_derivative(a)? - &lies[a].contraction(b)?;
                let ok = lhs == classical_bracket_rhs(&w, a, b, x);
                lie_iota.record(ok, || format!("a={} b={} x={x}", a + 1, b + 1));
            }
        }
        curved.record(dx.differential() == c.supercommutator(x)?, || x.to_string());
        for deg in 0..=cfg.max_degree {
            let h = x.component(deg);
            if h.is_zero() {
                continue;
            }
            for op in [Operator::Lie(0), Operator::Contraction(n - 1), Operator::Differential] {
                let img = h.apply(op)?;
                let ok = img.is_zero() || img.degree() == Some((deg as i32 + op.degree()) as usize);
                degrees.record(ok, || format!("{op:?} on {h}"));
            }
        }
    }

    let mut bianchi = Tally::new(CLASSICAL_BIANCHI);
    bianchi.record(c.differential().is_zero(), || c.to_string());

    let mut restriction = Tally::new(CLASSICAL_RESTRICTION);
    let mut restriction_sq = Tally::new(CLASSICAL_RESTRICTION_SQUARE);
    let mut rng = random::rng(cfg.seed.wrapping_add(1));
    let restricted_samples = (cfg.samples / 2).max(1);
    for _ in 0..restricted_samples {
        let x = with_identity_matrices(&random::classical(&w, &mut rng, cfg.max_degree));
        let dx = x.differential();
        let expect = plain::differential(w.lie(), &to_plain(&x).expect("scalar matrices"));
        restriction.record(to_plain(&dx).as_ref() == Some(&expect), || x.to_string());
        restriction_sq.record(dx.differential().is_zero(), || x.to_string());
    }

    let mut lemma = Tally::new(CLASSICAL_LEMMA);
    let mut rng = random::rng(cfg.seed.wrapping_add(2));
    for _ in 0..restricted_samples {
        let f = random_symmetric(&w, &mut rng, cfg.max_degree as u32);
        let sum = (0..n).fold(ClassicalElement::zero(&w), |acc, a| {
            let v = ClassicalElement::v(&w, a).expect("in range");
            &acc + &(&v * &f.lie_derivative(a).expect("in range"))
        });
        lemma.record(sum.is_zero(), || f.to_string());
    }

    Ok(SuiteReport {
        context: "classical",
        algebra: def.name.clone(),
        rep: rep.to_string(),
        checks: [cartan, lie_d, lie_iota, curved, bianchi, restriction, restriction_sq, lemma, degrees]
            .into_iter()
            .map(Tally::finish)
            .collect(),
    })
}

pub const QUANTUM_X_G: &str = "[x_a, g_b] = -f_bac x_c";
pub const QUANTUM_X_GAMMA: &str = "[x_a, gamma] = g_a";
pub const QUANTUM_X_DIRAC: &str = "[x_a, Dirac] = u_a + g_a";
pub const QUANTUM_UG_DIRAC: &str = "[u_a + g_a, Dirac] = 0";
pub const QUANTUM_DIRAC_SQUARE: &str = "Dirac^2 = 1/2 u_a u_a + gamma^2";
pub const QUANTUM_GAMMA_SQUARE: &str = "gamma^2 = -1/48 f_abc f_abc";
pub const QUANTUM_CASIMIR: &str = "u_a u_a is central";
pub const QUANTUM_LIE_ON_X: &str = "L_a x_b = f_cab x_c";
pub const QUANTUM_CARTAN: &str = "[iota_a, d] = L_a";
pub const QUANTUM_LIE_D: &str = "[L_a, d] = 0";
pub const QUANTUM_LIE_IOTA: &str = "[L_a, iota_b] = f_abc iota_c";
pub const QUANTUM_CURVED: &str = "d(d(x)) = [QC, x]";
pub const QUANTUM_BIANCHI: &str = "d(QC) = 0";
pub const QUANTUM_CURVATURE_FORMULA: &str = "QC = 1/2 [Dirac + x_a tau_a, Dirac + x_a tau_a]";
pub const QUANTUM_RESTRICTION: &str = "identity-matrix part: L, iota untwisted, d = d^W + iota_a tau_a";
pub const QUANTUM_RESTRICTION_WITNESS: &str = "d differs from d^W at x1 when tau != 0";
pub const QUANTUM_FILTRATION: &str = "L, iota, d shift filtration by 0, -1, +1";

fn quantum_generators(w: &Arc<QuantumWeil>) -> Vec<QuantumElement> {
    let mut out = vec![QuantumElement::one(w)];
    for a in 0..w.dim() {
        out.push(QuantumElement::u(w, a).expect("index in range"));
        out.push(QuantumElement::x(w, a).expect("index in range"));
    }
    for m in matrix_units(w.dim_v()) {
        out.push(QuantumElement::matrix(w, m).expect("shape"));
    }
    out
}

/// Runs every quantum identity on `(def, rep)`. Requires an orthonormal form.
pub fn quantum_suite(def: &AlgebraDef, rep: &str, cfg: &SuiteConfig) -> Result<SuiteReport> {
    let w = QuantumWeil::new(def.lie.clone(), def.form.as_ref(), def.rep(rep)?.clone())?;
    let n = w.dim();
    let lie = w.lie().clone();
    let u = |a: usize| QuantumElement::u(&w, a).expect("in range");
    let x = |a: usize| QuantumElement::x(&w, a).expect("in range");
    let dist = w.distinguished();
    let g = &dist.g;
    let dirac = &dist.dirac;
    let zero = QuantumElement::zero(&w);

    let mut x_g = Tally::new(QUANTUM_X_G);
    let mut x_gamma = Tally::new(QUANTUM_X_GAMMA);
    let mut x_dirac = Tally::new(QUANTUM_X_DIRAC);
    let mut ug_dirac = Tally::new(QUANTUM_UG_DIRAC);
    let mut lie_on_x = Tally::new(QUANTUM_LIE_ON_X);
    for a in 0..n {
        for b in 0..n {
            let lhs = x(a).supercommutator(&g[b])?;
            let rhs = (0..n).fold(zero.clone(), |acc, c| &acc - &x(c).scale(&lie.f(b, a, c)));
            x_g.record(lhs == rhs, || format!("a={} b={}", a + 1, b + 1));
            let lhs = x(b).lie_derivative(a)?;
            let rhs = (0..n).fold(zero.clone(), |acc, c| &acc + &x(c).scale(&lie.f(c, a, b)));
            lie_on_x.record(lhs == rhs, || format!("a={} b={}", a + 1, b + 1));
        }
        x_gamma.record(x(a).supercommutator(&dist.gamma)? == g[a], || format!("a={}", a + 1));
        let ug = &u(a) + &g[a];
        x_dirac.record(x(a).supercommutator(dirac)? == ug, || format!("a={}", a + 1));
        ug_dirac.record(ug.supercommutator(dirac)?.is_zero(), || format!("a={}", a + 1));
    }

    let casimir = quantum::casimir_check(&def.lie, def.form.as_ref())?;
    let mut dirac_sq = Tally::new(QUANTUM_DIRAC_SQUARE);
    dirac_sq.record(casimir.dirac_square, || dirac.to_string());
    let mut gamma_sq = Tally::new(QUANTUM_GAMMA_SQUARE);
    let formula = QuantumWeil::gamma_squared_formula(&lie);
    gamma_sq.record(w.gamma_squared() == formula, || {
        format!("gamma^2 = {}, formula {formula}", w.gamma_squared())
    });
    let mut central = Tally::new(QUANTUM_CASIMIR);
    central.record(casimir.central_in_u && casimir.commutes_with_x, String::new);

    let qc = QuantumElement::curvature(&w);
    let mut rng = random::rng(cfg.seed);
    let mut inputs = quantum_generators(&w);
    for _ in 0..cfg.samples {
        inputs.push(random::quantum(&w, &mut rng, cfg.max_degree, 4));
    }
    let mut cartan = Tally::new(QUANTUM_CARTAN);
    let mut lie_d = Tally::new(QUANTUM_LIE_D);
    let mut lie_iota = Tally::new(QUANTUM_LIE_IOTA);
    let mut curved = Tally::new(QUANTUM_CURVED);
    let mut filtration = Tally::new(QUANTUM_FILTRATION);
    for el in &inputs {
        let dx = el.differential();
        let iotas: Vec<QuantumElement> = (0..n).map(|a| el.contraction(a).expect("in range")).collect();
        let lies: Vec<QuantumElement> = (0..n).map(|a| el.lie_derivative(a).expect("in range")).collect();
        for a in 0..n {
            let lhs = &dx.contraction(a)? + &iotas[a].differential();
            cartan.record(lhs == lies[a], || format!("a={} x={el}", a + 1));
            let comm = &dx.lie_derivative(a)? - &lies[a].differential();
            lie_d.record(comm.is_zero(), || format!("a={} x={el}", a + 1));
            for b in 0..n {
                let lhs = &iotas[b].lie_derivative(a)? - &lies[a].contraction(b)?;
                let rhs = (0..n).fold(zero.clone(), |acc, c| &acc + &iotas[c].scale(&lie.f(a, b, c)));
                lie_iota.record(lhs == rhs, || format!("a={} b={} x={el}", a + 1, b + 1));
            }
        }
        curved.record(dx.differential() == qc.supercommutator(el)?, || el.to_string());
        if let Some(deg) = el.filtration_degree() {
            let within = |img: &QuantumElement, shift: i32| {
                img.filtration_degree()
                    .is_none_or(|d| d as i32 <= deg as i32 + shift)
            };
            let ok = within(&lies[0], 0) && within(&iotas[0], -1) && within(&dx, 1);
            filtration.record(ok, || el.to_string());
        }
    }

    let mut bianchi = Tally::new(QUANTUM_BIANCHI);
    bianchi.record(qc.differential().is_zero(), || qc.to_string());
    let mut formula_check = Tally::new(QUANTUM_CURVATURE_FORMULA);
    let half = dist.dirac_tau.supercommutator(&dist.dirac_tau)?.scale(&Scalar::ratio(1, 2));
    formula_check.record(half == qc, || half.to_string());

    let mut restriction = Tally::new(QUANTUM_RESTRICTION);
    let mut rng = random::rng(cfg.seed.wrapping_add(1));
    let mut restricted: Vec<QuantumElement> = (0..n).flat_map(|a| [u(a), x(a)]).collect();
    for _ in 0..(cfg.samples / 2).max(1) {
        let el = random::quantum(&w, &mut rng, cfg.max_degree, 4);
        let terms = el
            .terms()
            .iter()
            .map(|(k, m)| (k.clone(), Matrix::scalar(w.dim_v(), m.get(0, 0).clone())))
            .collect();
        restricted.push(QuantumElement::from_terms(&w, terms));
    }
    for el in &restricted {
        let mut ok = true;
        let mut twist = el.untwisted_differential();
        for a in 0..n {
            let untwisted_lie = (&u(a) + &g[a]).supercommutator(el)?;
            ok &= el.lie_derivative(a)? == untwisted_lie;
            let ia = el.contraction(a)?;
            let tau = QuantumElement::matrix(&w, w.rep().tau(a).clone())?;
            twist = &twist + &(&ia * &tau);
        }
        ok &= el.differential() == twist;
        restriction.record(ok, || el.to_string());
    }

    let mut witness = Tally::new(QUANTUM_RESTRICTION_WITNESS);
    if w.rep().matrices().iter().any(|t| !t.is_zero()) {
        let x1 = x(0);
        witness.record(x1.differential() != x1.untwisted_differential(), || x1.to_string());
    }

    let mut checks: Vec<IdentityCheck> = [
        x_g, x_gamma, x_dirac, ug_dirac, dirac_sq, gamma_sq, central, lie_on_x, cartan, lie_d,
        lie_iota, curved, bianchi, formula_check, restriction,
    ]
    .into_iter()
    .map(Tally::finish)
    .collect();
    if witness.cases > 0 {
        checks.push(witness.finish());
    }
    checks.push(filtration.finish());
    Ok(SuiteReport {
        context: "quantum",
        algebra: def.name.clone(),
        rep: rep.to_string(),
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::builtin;

    fn small() -> SuiteConfig {
        SuiteConfig {
            samples: 10,
            max_degree: 3,
            seed: 5,
        }
    }

    #[test]
    fn classical_suite_passes_on_so3_adjoint() {
        let r = classical_suite(&builtin("so3").unwrap(), "adjoint", &small()).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.checks.len(), 9);
    }

    #[test]
    fn quantum_suite_passes_on_so3_adjoint() {
        let r = quantum_suite(&builtin("so3").unwrap(), "adjoint", &small()).unwrap();
        assert!(r.passed(), "{r}");
        assert!(r.check(QUANTUM_RESTRICTION_WITNESS).is_some());
    }

    #[test]
    fn quantum_suite_needs_orthonormal_form() {
        assert!(quantum_suite(&builtin("sl2").unwrap(), "adjoint", &small()).is_err());
    }

    #[test]
    fn report_lines_name_failures() {
        let r = SuiteReport {
            context: "classical",
            algebra: "x".into(),
            rep: "trivial".into(),
            checks: vec![IdentityCheck {
                name: "n".into(),
                passed: false,
                cases: 3,
                detail: Some("v1".into()),
            }],
        };
        assert!(!r.passed());
        assert!(r.to_string().contains("FAIL  n  (3 cases)  counterexample: v1"));
    }
}
