//! The classical covariant Weil algebra `W_τ(g*) = S g* ⊗ ∧ g* ⊗ End V_τ`.
//!
//! Degrees: `v^a` has degree 2, `y^a` degree 1, matrices degree 0. Only the
//! exterior factor is odd, so the Koszul sign of a term is fixed by its
//! exterior degree. The three operators are derivations given on generators
//! and extended by the (graded) Leibniz rule:
//!
//! | operator | `y^c`                        | `v^c`                  | `A`                 |
//! |----------|------------------------------|------------------------|---------------------|
//! | `L_a`    | `−f^c_{ab} y^b`              | `−f^c_{ab} v^b`        | `[τ_a, A]`          |
//! | `ι_a`    | `δ_{ac}`                     | `0`                    | `0`                 |
//! | `d`      | `v^c − ½ f^c_{jk} y^j y^k`   | `−f^c_{jk} y^j v^k`    | `y^a ⊗ [τ_a, A]`    |

mod element;
pub mod plain;

use std::sync::Arc;

use crate::error::{Result, WeilError};
use crate::kernels::{ExtMonomial, Poly, SymMonomial};
use crate::lie::{LieData, RepData};
use crate::linalg::{Matrix, Scalar};

pub use element::ClassicalElement;

/// Monomial `(symmetric part, exterior part)` of a classical term.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ClassicalKey {
    pub sym: SymMonomial,
    pub ext: ExtMonomial,
}

impl ClassicalKey {
    pub fn new(sym: SymMonomial, ext: ExtMonomial) -> Self {
        ClassicalKey { sym, ext }
    }

    /// `2·(symmetric degree) + (exterior degree)`.
    pub fn degree(&self) -> usize {
        2 * self.sym.degree() as usize + self.ext.degree()
    }

    pub fn is_odd(&self) -> bool {
        self.ext.is_odd()
    }

    pub fn mul(&self, other: &ClassicalKey) -> Option<(bool, ClassicalKey)> {
        let (neg, ext) = self.ext.mul(&other.ext)?;
        Some((neg, ClassicalKey::new(self.sym.mul(&other.sym), ext)))
    }
}

pub type ClassicalTerms = Poly<ClassicalKey, Matrix>;

/// Which of the three structural derivations to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Operator {
    Lie(usize),
    Contraction(usize),
    Differential,
}

impl Operator {
    pub fn is_odd(self) -> bool {
        !matches!(self, Operator::Lie(_))
    }

    /// Degree shift on homogeneous elements.
    pub fn degree(self) -> i32 {
        match self {
            Operator::Lie(_) => 0,
            Operator::Contraction(_) => -1,
            Operator::Differential => 1,
        }
    }
}

/// Generator images of one derivation.
struct GeneratorTable {
    on_v: Vec<ClassicalTerms>,
    on_y: Vec<ClassicalTerms>,
}

/// A classical covariant Weil algebra for a fixed Lie algebra and representation.
pub struct ClassicalWeil {
    lie: Arc<LieData>,
    rep: RepData,
    lie_tables: Vec<GeneratorTable>,
    diff_table: GeneratorTable,
}

impl std::fmt::Debug for ClassicalWeil {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ClassicalWeil")
            .field("dim", &self.lie.dim())
            .field("rep", &self.rep.name())
            .field("dim_v", &self.rep.dim_v())
            .finish()
    }
}

impl ClassicalWeil {
    pub fn new(lie: Arc<LieData>, rep: RepData) -> Result<Arc<Self>> {
        if rep.len() != lie.dim() {
            return Err(WeilError::Definition(format!(
                "representation {} has {} matrices for a Lie algebra of dimension {}",
                rep.name(),
                rep.len(),
                lie.dim()
            )));
        }
        let n = lie.dim();
        let d = rep.dim_v();
        let id = Matrix::identity(d);
        let key = |sym: SymMonomial, ext: ExtMonomial| ClassicalKey::new(sym, ext);
        let v = |a: usize| key(SymMonomial::generator(n, a), ExtMonomial::one());
        let y = |a: usize| key(SymMonomial::one(n), ExtMonomial::generator(a));

        let lie_tables = (0..n)
            .map(|a| {
                let mut on_v = Vec::with_capacity(n);
                let mut on_y = Vec::with_capacity(n);
                for c in 0..n {
                    let mut tv = ClassicalTerms::zero();
                    let mut ty = ClassicalTerms::zero();
                    for b in 0..n {
                        let f = lie.f(a, b, c);
                        if !f.is_zero() {
                            tv.add_term(v(b), id.scale(&-&f));
                            ty.add_term(y(b), id.scale(&-&f));
                        }
                    }
                    on_v.push(tv);
                    on_y.push(ty);
                }
                GeneratorTable { on_v, on_y }
            })
            .collect();

        let half = Scalar::ratio(1, 2);
        let mut on_v = Vec::with_capacity(n);
        let mut on_y = Vec::with_capacity(n);
        for c in 0..n {
            // d y^c = v^c − ½ f^c_{jk} y^j y^k
            let mut ty = ClassicalTerms::term(v(c), id.clone());
            // d v^c = −f^c_{jk} y^j v^k
            let mut tv = ClassicalTerms::zero();
            for j in 0..n {
                for k in 0..n {
                    let f = lie.f(j, k, c);
                    if f.is_zero() {
                        continue;
                    }
                    if let Some((neg, e)) = ExtMonomial::generator(j).mul(&ExtMonomial::generator(k)) {
                        let s = if neg { &f * &half } else { -(&f * &half) };
                        ty.add_term(key(SymMonomial::one(n), e), id.scale(&s));
                    }
                    tv.add_term(
                        key(SymMonomial::generator(n, k), ExtMonomial::generator(j)),
                        id.scale(&-&f),
                    );
                }
            }
            on_v.push(tv);
            on_y.push(ty);
        }
        Ok(Arc::new(ClassicalWeil {
            lie,
            rep,
            lie_tables,
            diff_table: GeneratorTable { on_v, on_y },
        }))
    }

    pub fn lie(&self) -> &Arc<LieData> {
        &self.lie
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

    pub(crate) fn unit_key(&self) -> ClassicalKey {
        ClassicalKey::new(SymMonomial::one(self.dim()), ExtMonomial::one())
    }

    /// Product of raw term maps.
    pub(crate) fn mul_terms(&self, a: &ClassicalTerms, b: &ClassicalTerms) -> ClassicalTerms {
        a.product_with(b, |x, y| match x.mul(y) {
            None => Vec::new(),
            Some((neg, k)) => vec![(if neg { -Scalar::one() } else { Scalar::one() }, k)],
        })
    }

    /// Applies one of the structural derivations to raw terms.
    pub(crate) fn apply(&self, op: Operator, x: &ClassicalTerms) -> ClassicalTerms {
        let n = self.dim();
        let odd = op.is_odd();
        let mut out = ClassicalTerms::zero();
        for (key, m) in x.iter() {
            let ext_part = |e: ExtMonomial, m: Matrix| {
                ClassicalTerms::term(ClassicalKey::new(SymMonomial::one(n), e), m)
            };
            // symmetric factor: v's are even and central
            for a in 0..n {
                let Some(rest) = key.sym.without(a) else { continue };
                let k = key.sym.exponents()[a];
                let image = self.on_v(op, a);
                if image.is_zero() {
                    continue;
                }
                let left = ClassicalTerms::term(
                    ClassicalKey::new(rest, ExtMonomial::one()),
                    self.identity_matrix().scale(&Scalar::from_int(k as i64)),
                );
                let t = self.mul_terms(&self.mul_terms(&left, &image), &ext_part(key.ext.clone(), m.clone()));
                out.add_poly(&t);
            }
            // exterior factor, with the Koszul sign of everything passed
            let idx = key.ext.indices();
            for (pos, &b) in idx.iter().enumerate() {
                let image = self.on_y(op, b);
                if image.is_zero() {
                    continue;
                }
                let before = ExtMonomial::from_sorted(idx[..pos].to_vec());
                let after = ExtMonomial::from_sorted(idx[pos + 1..].to_vec());
                let sign = if odd && pos % 2 == 1 { -Scalar::one() } else { Scalar::one() };
                let left = ClassicalTerms::term(
                    ClassicalKey::new(key.sym.clone(), before),
                    self.identity_matrix().scale(&sign),
                );
                let t = self.mul_terms(&self.mul_terms(&left, &image), &ext_part(after, m.clone()));
                out.add_poly(&t);
            }
            // matrix factor
            let image = self.on_matrix(op, m);
            if !image.is_zero() {
                let sign = if odd && key.ext.is_odd() { -Scalar::one() } else { Scalar::one() };
                let left = ClassicalTerms::term(key.clone(), self.identity_matrix().scale(&sign));
                out.add_poly(&self.mul_terms(&left, &image));
            }
        }
        out
    }

    fn on_v(&self, op: Operator, a: usize) -> ClassicalTerms {
        match op {
            Operator::Lie(l) => self.lie_tables[l].on_v[a].clone(),
            Operator::Contraction(_) => ClassicalTerms::zero(),
            Operator::Differential => self.diff_table.on_v[a].clone(),
        }
    }

    fn on_y(&self, op: Operator, a: usize) -> ClassicalTerms {
        match op {
            Operator::Lie(l) => self.lie_tables[l].on_y[a].clone(),
            Operator::Contraction(c) if c == a => {
                ClassicalTerms::term(self.unit_key(), self.identity_matrix())
            }
            Operator::Contraction(_) => ClassicalTerms::zero(),
            Operator::Differential => self.diff_table.on_y[a].clone(),
        }
    }

    fn on_matrix(&self, op: Operator, m: &Matrix) -> ClassicalTerms {
        let n = self.dim();
        match op {
            Operator::Lie(a) => ClassicalTerms::term(
                self.unit_key(),
                self.rep.tau(a).commutator(m).expect("square matrices"),
            ),
            Operator::Contraction(_) => ClassicalTerms::zero(),
            Operator::Differential => (0..n)
                .map(|a| {
                    (
                        ClassicalKey::new(SymMonomial::one(n), ExtMonomial::generator(a)),
                        self.rep.tau(a).commutator(m).expect("square matrices"),
                    )
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests;
