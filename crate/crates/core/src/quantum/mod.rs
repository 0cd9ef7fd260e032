//! The quantum covariant Weil algebra `𝒲_τ(g) = U(g) ⊗ Cl(g) ⊗ End V_τ`.
//!
//! Requires an orthonormal invariant form, so `f_{abc} = f^c_{ab}` is totally
//! antisymmetric. All three operators are inner: `L_a = ad(u_a + g_a + τ_a)`,
//! `ι_a = ad(x_a)`, `d = ad(𝔇 + x_a τ_a)`, where `ad` is the super-commutator
//! graded by Clifford parity.

mod element;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Result, WeilError};
use crate::kernels::{clifford, pbw, CliffMonomial, PbwMonomial, Poly};
use crate::lie::{BilinearForm, LieData, RepData};
use crate::linalg::{Matrix, Scalar};

pub use crate::classical::Operator;
pub use element::QuantumElement;

/// `(PBW part, Clifford part)` of a quantum term.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct QuantumKey {
    pub pbw: PbwMonomial,
    pub cl: CliffMonomial,
}

impl QuantumKey {
    pub fn new(pbw: PbwMonomial, cl: CliffMonomial) -> Self {
        QuantumKey { pbw, cl }
    }

    /// Filtration degree `2·(PBW degree) + (Clifford length)`.
    pub fn degree(&self) -> usize {
        2 * self.pbw.degree() as usize + self.cl.len()
    }

    pub fn is_odd(&self) -> bool {
        self.cl.is_odd()
    }
}

pub type QuantumTerms = Poly<QuantumKey, Matrix>;

type Expansion<M> = Arc<Vec<(Scalar, M)>>;

/// Raw terms of `g_a`, `γ`, `𝔇`, `𝔇 + x_a τ_a`, the `L_a` generators and `𝒞`.
struct Distinguished {
    g: Vec<QuantumTerms>,
    gamma: QuantumTerms,
    gamma_squared: Scalar,
    dirac: QuantumTerms,
    dirac_tau: QuantumTerms,
    lie_gen: Vec<QuantumTerms>,
    x: Vec<QuantumTerms>,
    curvature: QuantumTerms,
}

/// The distinguished elements as algebra elements.
#[derive(Clone, Debug)]
pub struct DistinguishedElements {
    pub g: Vec<QuantumElement>,
    pub gamma: QuantumElement,
    pub dirac: QuantumElement,
    pub dirac_tau: QuantumElement,
}

pub struct QuantumWeil {
    lie: Arc<LieData>,
    form: BilinearForm,
    rep: RepData,
    pbw_cache: Mutex<HashMap<(PbwMonomial, PbwMonomial), Expansion<PbwMonomial>>>,
    cliff_cache: Mutex<HashMap<(CliffMonomial, CliffMonomial), Expansion<CliffMonomial>>>,
    distinguished: OnceLock<Distinguished>,
}

impl std::fmt::Debug for QuantumWeil {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("QuantumWeil")
            .field("dim", &self.lie.dim())
            .field("rep", &self.rep.name())
            .field("dim_v", &self.rep.dim_v())
            .finish()
    }
}

impl QuantumWeil {
    /// Builds the algebra and its distinguished elements, checking
    /// `γ = ⅓ x_a g_a`, that `γ²` is the scalar `−(1/48) Σ f_{abc}²`, and that
    /// the four-term curvature equals `½[𝔇 + x_a τ_a, 𝔇 + x_a τ_a]`.
    pub fn new(lie: Arc<LieData>, form: Option<&BilinearForm>, rep: RepData) -> Result<Arc<Self>> {
        let form = match form {
            Some(b) if b.dim() == lie.dim() && b.is_orthonormal() => b.clone(),
            Some(_) => {
                return Err(WeilError::NonOrthonormalForm(
                    "the quantum algebra needs B = identity in the chosen basis".into(),
                ))
            }
            None => {
                return Err(WeilError::NonOrthonormalForm(
                    "the Lie algebra ships no invariant form".into(),
                ))
            }
        };
        if rep.len() != lie.dim() {
            return Err(WeilError::Definition(format!(
                "representation {} has {} matrices for a Lie algebra of dimension {}",
                rep.name(),
                rep.len(),
                lie.dim()
            )));
        }
        let alg = Arc::new(QuantumWeil {
            lie,
            form,
            rep,
            pbw_cache: Mutex::new(HashMap::new()),
            cliff_cache: Mutex::new(HashMap::new()),
            distinguished: OnceLock::new(),
        });
        let dist = alg.build_distinguished()?;
        let _ = alg.distinguished.set(dist);
        Ok(alg)
    }

    pub fn lie(&self) -> &Arc<LieData> {
        &self.lie
    }

    pub fn form(&self) -> &BilinearForm {
        &self.form
    }

    pub fn rep(&self) -> &RepData {
        &self.rep
    }

    pub fn dim(&self) -> usize {
        self.lie.dim()
    }

    pub fn dim_v(&self) -> usize {
        self.rep.dim_v()
    }

    pub(crate) fn check_index(&self, a: usize) -> Result<()> {
        if a >= self.dim() {
            return Err(WeilError::IndexOutOfRange {
                index: a + 1,
                dim: self.dim(),
            });
        }
        Ok(())
    }

    pub(crate) fn identity_matrix(&self) -> Matrix {
        Matrix::identity(self.dim_v())
    }

    pub(crate) fn unit_key(&self) -> QuantumKey {
        QuantumKey::new(PbwMonomial::one(self.dim()), CliffMonomial::one())
    }

    fn pbw_mul(&self, a: &PbwMonomial, b: &PbwMonomial) -> Expansion<PbwMonomial> {
        let key = (a.clone(), b.clone());
        if let Some(hit) = self.pbw_cache.lock().expect("cache poisoned").get(&key) {
            return hit.clone();
        }
        let value = Arc::new(pbw::mono_mul(a, b, &self.lie));
        self.pbw_cache
            .lock()
            .expect("cache poisoned")
            .insert(key, value.clone());
        value
    }

    fn cliff_mul(&self, a: &CliffMonomial, b: &CliffMonomial) -> Expansion<CliffMonomial> {
        let key = (a.clone(), b.clone());
        if let Some(hit) = self.cliff_cache.lock().expect("cache poisoned").get(&key) {
            return hit.clone();
        }
        let value = Arc::new(clifford::mono_mul(a, b, &self.form));
        self.cliff_cache
            .lock()
            .expect("cache poisoned")
            .insert(key, value.clone());
        value
    }

    /// Product of raw term maps. `U(g)` and `End V` are even and the factors
    /// commute, so no sign arises.
    pub(crate) fn mul_terms(&self, a: &QuantumTerms, b: &QuantumTerms) -> QuantumTerms {
        let mut out = QuantumTerms::zero();
        for (ka, ma) in a.iter() {
            for (kb, mb) in b.iter() {
                let m = ma * mb;
                if m.is_zero() {
                    continue;
                }
                let cl = self.cliff_mul(&ka.cl, &kb.cl);
                if cl.is_empty() {
                    continue;
                }
                let pb = self.pbw_mul(&ka.pbw, &kb.pbw);
                for (sp, p) in pb.iter() {
                    for (sc, c) in cl.iter() {
                        out.add_term(QuantumKey::new(p.clone(), c.clone()), m.scale(&(sp * sc)));
                    }
                }
            }
        }
        out
    }

    /// Super-commutator of raw terms, split over parity components.
    pub(crate) fn supercommutator_terms(&self, a: &QuantumTerms, b: &QuantumTerms) -> QuantumTerms {
        let (ae, ao) = split_parity(a);
        let (be, bo) = split_parity(b);
        let mut out = QuantumTerms::zero();
        for (x, xodd) in [(&ae, false), (&ao, true)] {
            for (y, yodd) in [(&be, false), (&bo, true)] {
                if x.is_zero() || y.is_zero() {
                    continue;
                }
                let xy = self.mul_terms(x, y);
                let yx = self.mul_terms(y, x);
                out.add_poly(&if xodd && yodd { xy.plus(&yx) } else { xy.minus(&yx) });
            }
        }
        out
    }

    fn dist(&self) -> &Distinguished {
        self.distinguished.get().expect("built in the constructor")
    }

    /// The element `E` with `op = ad(E)`.
    pub(crate) fn operator_terms(&self, op: Operator) -> &QuantumTerms {
        match op {
            Operator::Lie(a) => &self.dist().lie_gen[a],
            Operator::Contraction(a) => &self.dist().x[a],
            Operator::Differential => &self.dist().dirac_tau,
        }
    }

    pub(crate) fn apply(&self, op: Operator, x: &QuantumTerms) -> QuantumTerms {
        self.supercommutator_terms(self.operator_terms(op), x)
    }

    /// `d^𝒲 = ad(𝔇)`, the differential without the representation twist.
    pub(crate) fn apply_untwisted_differential(&self, x: &QuantumTerms) -> QuantumTerms {
        self.supercommutator_terms(&self.dist().dirac, x)
    }

    /// `γ²`, a scalar.
    pub fn gamma_squared(&self) -> Scalar {
        self.dist().gamma_squared.clone()
    }

    pub(crate) fn curvature_terms(&self) -> &QuantumTerms {
        &self.dist().curvature
    }

    pub(crate) fn gamma_terms(&self) -> &QuantumTerms {
        &self.dist().gamma
    }

    pub(crate) fn dirac_terms(&self) -> &QuantumTerms {
        &self.dist().dirac
    }

    pub(crate) fn g_terms(&self, a: usize) -> &QuantumTerms {
        &self.dist().g[a]
    }

    fn gen_u(&self, a: usize, m: Matrix) -> QuantumTerms {
        QuantumTerms::term(
            QuantumKey::new(PbwMonomial::generator(self.dim(), a), CliffMonomial::one()),
            m,
        )
    }

    fn gen_x(&self, a: usize, m: Matrix) -> QuantumTerms {
        QuantumTerms::term(
            QuantumKey::new(PbwMonomial::one(self.dim()), CliffMonomial::generator(a)),
            m,
        )
    }

    fn matrix_terms(&self, m: Matrix) -> QuantumTerms {
        QuantumTerms::term(self.unit_key(), m)
    }

    /// `−(1/48) Σ f_{abc}²`.
    pub fn gamma_squared_formula(lie: &LieData) -> Scalar {
        let sum: Scalar = lie.entries().map(|(_, f)| f * f).sum();
        sum * Scalar::ratio(-1, 48)
    }

    fn build_distinguished(&self) -> Result<Distinguished> {
        let n = self.dim();
        let id = self.identity_matrix();
        let x: Vec<QuantumTerms> = (0..n).map(|a| self.gen_x(a, id.clone())).collect();
        let xx = |r: usize, s: usize| self.mul_terms(&x[r], &x[s]);

        let g: Vec<QuantumTerms> = (0..n)
            .map(|a| {
                let mut out = QuantumTerms::zero();
                for r in 0..n {
                    for s in 0..n {
                        let f = self.lie.f(a, r, s);
                        if !f.is_zero() {
                            out.add_poly(&xx(r, s).scaled(&(f * Scalar::ratio(-1, 2))));
                        }
                    }
                }
                out
            })
            .collect();

        let mut gamma = QuantumTerms::zero();
        for ((a, b, c), f) in self.lie.entries() {
            let word = self.mul_terms(&xx(*a, *b), &x[*c]);
            gamma.add_poly(&word.scaled(&(f * &Scalar::ratio(-1, 6))));
        }
        let mut third = QuantumTerms::zero();
        for a in 0..n {
            third.add_poly(&self.mul_terms(&x[a], &g[a]));
        }
        if third.scaled(&Scalar::ratio(1, 3)) != gamma {
            return Err(WeilError::InternalConsistency(
                "gamma differs from (1/3) x_a g_a".into(),
            ));
        }

        let gg = self.mul_terms(&gamma, &gamma);
        let gamma_squared = match gg.iter().next() {
            None => Scalar::zero(),
            Some((k, m)) if gg.len() == 1 && *k == self.unit_key() => m
                .as_scalar_multiple()
                .ok_or_else(|| WeilError::InternalConsistency("gamma^2 has a non-scalar matrix part".into()))?,
            Some(_) => {
                return Err(WeilError::InternalConsistency("gamma^2 is not a scalar".into()));
            }
        };
        if gamma_squared != Self::gamma_squared_formula(&self.lie) {
            return Err(WeilError::InternalConsistency(format!(
                "gamma^2 = {gamma_squared} disagrees with -(1/48) sum f^2"
            )));
        }

        let mut dirac = gamma.clone();
        let mut dirac_tau = gamma.clone();
        for a in 0..n {
            let xu = self.mul_terms(&x[a], &self.gen_u(a, id.clone()));
            dirac.add_poly(&xu);
            dirac_tau.add_poly(&xu);
            dirac_tau.add_poly(&self.gen_x(a, self.rep.tau(a).clone()));
        }

        let lie_gen = (0..n)
            .map(|a| {
                let mut e = self.gen_u(a, id.clone());
                e.add_poly(&g[a]);
                e.add_poly(&self.matrix_terms(self.rep.tau(a).clone()));
                e
            })
            .collect();

        // 𝒞 = ½(u_a u_a + 2 u_a τ_a + τ_a τ_a + 2γ²)
        let mut four = QuantumTerms::zero();
        for a in 0..n {
            let ua = self.gen_u(a, id.clone());
            let tau = self.rep.tau(a);
            four.add_poly(&self.mul_terms(&ua, &ua));
            four.add_poly(&self.gen_u(a, tau.scale(&Scalar::from_int(2))));
            four.add_poly(&self.matrix_terms(tau * tau));
        }
        four.add_poly(&self.matrix_terms(Matrix::scalar(self.dim_v(), &gamma_squared * &Scalar::from_int(2))));
        let curvature = four.scaled(&Scalar::ratio(1, 2));
        let half_bracket = self
            .supercommutator_terms(&dirac_tau, &dirac_tau)
            .scaled(&Scalar::ratio(1, 2));
        if half_bracket != curvature {
            return Err(WeilError::InternalConsistency(
                "curvature formula disagrees with (1/2)[D + x_a tau_a, D + x_a tau_a]".into(),
            ));
        }

        Ok(Distinguished {
            g,
            gamma,
            gamma_squared,
            dirac,
            dirac_tau,
            lie_gen,
            x,
            curvature,
        })
    }

    pub fn distinguished(self: &Arc<Self>) -> DistinguishedElements {
        let d = self.dist();
        DistinguishedElements {
            g: d.g.iter().map(|t| QuantumElement::from_terms(self, t.clone())).collect(),
            gamma: QuantumElement::from_terms(self, d.gamma.clone()),
            dirac: QuantumElement::from_terms(self, d.dirac.clone()),
            dirac_tau: QuantumElement::from_terms(self, d.dirac_tau.clone()),
        }
    }
}

pub(crate) fn split_parity(t: &QuantumTerms) -> (QuantumTerms, QuantumTerms) {
    let mut even = QuantumTerms::zero();
    let mut odd = QuantumTerms::zero();
    for (k, m) in t.iter() {
        if k.is_odd() {
            odd.add_term(k.clone(), m.clone());
        } else {
            even.add_term(k.clone(), m.clone());
        }
    }
    (even, odd)
}

/// Outcome of the Casimir checks.
#[derive(Clone, Debug)]
pub struct CasimirReport {
    /// `[Σ u_a u_a, u_b] = 0` for every `b`.
    pub central_in_u: bool,
    /// `[Σ u_a u_a, x_b] = 0` for every `b`.
    pub commutes_with_x: bool,
    /// `𝔇² = ½ Σ u_a u_a + γ²`.
    pub dirac_square: bool,
    pub gamma_squared: Scalar,
}

impl CasimirReport {
    pub fn passed(&self) -> bool {
        self.central_in_u && self.commutes_with_x && self.dirac_square
    }
}

/// Casimir checks in the untwisted algebra `U(g) ⊗ Cl(g)`.
pub fn casimir_check(lie: &Arc<LieData>, form: Option<&BilinearForm>) -> Result<CasimirReport> {
    let alg = QuantumWeil::new(lie.clone(), form, RepData::trivial(lie, 1))?;
    let n = alg.dim();
    let casimir = (0..n).fold(QuantumElement::zero(&alg), |acc, a| {
        let u = QuantumElement::u(&alg, a).expect("index in range");
        &acc + &(&u * &u)
    });
    let mut central_in_u = true;
    let mut commutes_with_x = true;
    for b in 0..n {
        let u = QuantumElement::u(&alg, b)?;
        let x = QuantumElement::x(&alg, b)?;
        central_in_u &= casimir.supercommutator(&u)?.is_zero();
        commutes_with_x &= casimir.supercommutator(&x)?.is_zero();
    }
    let dirac = alg.distinguished().dirac;
    let expect = &casimir.scale(&Scalar::ratio(1, 2)) + &QuantumElement::scalar(&alg, alg.gamma_squared());
    Ok(CasimirReport {
        central_in_u,
        commutes_with_x,
        dirac_square: &dirac * &dirac == expect,
        gamma_squared: alg.gamma_squared(),
    })
}
