//! Lie algebras by structure constants, invariant forms and representations.
//!
//! Indices are 0-based in this API; everything user-facing (reports, files,
//! the expression language) is 1-based.

mod catalog;
mod file;
mod validate;

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Result, WeilError};
use crate::linalg::{Matrix, Scalar};

pub use catalog::{builtin, builtin_names, catalog};
pub use file::{load_definition, parse_definition};
pub use validate::{validate_form, validate_lie, validate_rep, ReportKind, ValidationReport, Violation};

/// Structure constants `f^c_{ab}` of a Lie algebra, `[e_a, e_b] = f^c_{ab} e_c`.
#[derive(Clone, Debug, PartialEq)]
pub struct LieData {
    dim: usize,
    names: Vec<String>,
    /// `(a, b, c) -> f^c_{ab}`, nonzero entries only.
    f: BTreeMap<(usize, usize, usize), Scalar>,
    /// `brackets[a][b]` lists the nonzero `(c, f^c_{ab})`.
    brackets: Vec<Vec<Vec<(usize, Scalar)>>>,
}

impl LieData {
    /// Builds from entries with `a < b`; the `(b, a)` partners are
    /// synthesized with the opposite sign.
    pub fn from_upper<I>(names: Vec<String>, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, Scalar)>,
    {
        let dim = names.len();
        let mut f = BTreeMap::new();
        for (a, b, c, v) in entries {
            check_index(a, dim)?;
            check_index(b, dim)?;
            check_index(c, dim)?;
            if a >= b {
                return Err(WeilError::Definition(format!(
                    "structure constant ({}, {}, {}) must have a < b",
                    a + 1,
                    b + 1,
                    c + 1
                )));
            }
            if f.contains_key(&(a, b, c)) {
                return Err(WeilError::Definition(format!(
                    "duplicate structure constant ({}, {}, {})",
                    a + 1,
                    b + 1,
                    c + 1
                )));
            }
            if v.is_zero() {
                continue;
            }
            f.insert((b, a, c), -&v);
            f.insert((a, b, c), v);
        }
        Ok(Self::assemble(names, f))
    }

    /// Builds from entries exactly as given, with no antisymmetric partners
    /// synthesized. Used to represent (and then reject) malformed input.
    pub fn from_raw<I>(names: Vec<String>, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, Scalar)>,
    {
        let dim = names.len();
        let mut f = BTreeMap::new();
        for (a, b, c, v) in entries {
            check_index(a, dim)?;
            check_index(b, dim)?;
            check_index(c, dim)?;
            if f.contains_key(&(a, b, c)) {
                return Err(WeilError::Definition(format!(
                    "duplicate structure constant ({}, {}, {})",
                    a + 1,
                    b + 1,
                    c + 1
                )));
            }
            if !v.is_zero() {
                f.insert((a, b, c), v);
            }
        }
        Ok(Self::assemble(names, f))
    }

    /// The abelian algebra of dimension `n`.
    pub fn abelian(n: usize) -> Self {
        Self::assemble(default_names(n), BTreeMap::new())
    }

    fn assemble(names: Vec<String>, f: BTreeMap<(usize, usize, usize), Scalar>) -> Self {
        let dim = names.len();
        let mut brackets = vec![vec![Vec::new(); dim]; dim];
        for (&(a, b, c), v) in &f {
            brackets[a][b].push((c, v.clone()));
        }
        LieData {
            dim,
            names,
            f,
            brackets,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    /// `f^c_{ab}`.
    pub fn f(&self, a: usize, b: usize, c: usize) -> Scalar {
        self.f.get(&(a, b, c)).cloned().unwrap_or_default()
    }

    /// Nonzero `(c, f^c_{ab})` for the bracket `[e_a, e_b]`.
    pub fn bracket(&self, a: usize, b: usize) -> &[(usize, Scalar)] {
        &self.brackets[a][b]
    }

    /// All stored nonzero entries `((a, b, c), f^c_{ab})`.
    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize, usize), &Scalar)> {
        self.f.iter()
    }

    pub fn is_abelian(&self) -> bool {
        self.f.is_empty()
    }

    /// `g ⊕ h`, with the basis of `h` shifted after that of `g`.
    pub fn direct_sum(&self, other: &LieData) -> LieData {
        let shift = self.dim;
        let mut names = self.names.clone();
        names.extend(other.names.iter().map(|n| format!("{n}'")));
        let mut f = self.f.clone();
        for (&(a, b, c), v) in &other.f {
            f.insert((a + shift, b + shift, c + shift), v.clone());
        }
        Self::assemble(names, f)
    }
}

fn check_index(i: usize, dim: usize) -> Result<()> {
    if i >= dim {
        return Err(WeilError::IndexOutOfRange { index: i + 1, dim });
    }
    Ok(())
}

pub(crate) fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

/// A symmetric bilinear form on the Lie algebra, by its Gram matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct BilinearForm {
    matrix: Matrix,
}

impl BilinearForm {
    pub fn new(matrix: Matrix) -> Self {
        BilinearForm { matrix }
    }

    pub fn identity(n: usize) -> Self {
        BilinearForm {
            matrix: Matrix::identity(n),
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn get(&self, a: usize, b: usize) -> &Scalar {
        self.matrix.get(a, b)
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn is_orthonormal(&self) -> bool {
        self.matrix == Matrix::identity(self.matrix.rows())
    }
}

/// Matrices `τ_a = τ(e_a)` of a finite-dimensional representation.
#[derive(Clone, Debug, PartialEq)]
pub struct RepData {
    name: String,
    dim_v: usize,
    tau: Vec<Matrix>,
}

impl RepData {
    /// All matrices must be square of the same size; `dim_v` is needed for
    /// the zero-dimensional Lie algebra edge case.
    pub fn new(name: impl Into<String>, dim_v: usize, tau: Vec<Matrix>) -> Result<Self> {
        for m in &tau {
            if m.shape() != (dim_v, dim_v) {
                return Err(WeilError::ShapeMismatch {
                    op: "representation matrix",
                    left: (dim_v, dim_v),
                    right: m.shape(),
                });
            }
        }
        Ok(RepData {
            name: name.into(),
            dim_v,
            tau,
        })
    }

    /// Every generator acts by zero on a `dim_v`-dimensional space.
    pub fn trivial(lie: &LieData, dim_v: usize) -> Self {
        RepData {
            name: "trivial".into(),
            dim_v,
            tau: vec![Matrix::zeros(dim_v, dim_v); lie.dim()],
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn tau(&self, a: usize) -> &Matrix {
        &self.tau[a]
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.tau
    }

    pub fn len(&self) -> usize {
        self.tau.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tau.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.tau.iter().all(Matrix::is_zero)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

/// The adjoint representation, `(τ_a)_{cb} = f^c_{ab}`.
pub fn adjoint_rep(lie: &LieData) -> RepData {
    let n = lie.dim();
    let tau = (0..n)
        .map(|a| {
            let mut m = Matrix::zeros(n, n);
            for b in 0..n {
                for (c, v) in lie.bracket(a, b) {
                    m.set(*c, b, v.clone());
                }
            }
            m
        })
        .collect();
    RepData {
        name: "adjoint".into(),
        dim_v: n,
        tau,
    }
}

/// A Lie algebra with its optional invariant form and named representations.
#[derive(Clone, Debug)]
pub struct AlgebraDef {
    pub name: String,
    pub lie: Arc<LieData>,
    pub form: Option<BilinearForm>,
    pub reps: BTreeMap<String, RepData>,
}

impl AlgebraDef {
    pub fn rep(&self, name: &str) -> Result<&RepData> {
        self.reps
            .get(name)
            .ok_or_else(|| WeilError::UnknownRep(name.to_string()))
    }

    /// Runs all three validations; the form report is absent when no form ships.
    pub fn validate(&self) -> Vec<ValidationReport> {
        let mut out = vec![validate_lie(&self.lie)];
        if let Some(form) = &self.form {
            out.push(validate_form(&self.lie, form));
        }
        for rep in self.reps.values() {
            out.push(validate_rep(&self.lie, rep));
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().iter().all(ValidationReport::is_ok)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn upper_entries_synthesize_partners() {
        let lie = LieData::from_upper(
            default_names(3),
            [(0, 1, 2, Scalar::one()), (1, 2, 0, Scalar::one()), (0, 2, 1, Scalar::from_int(-1))],
        )
        .unwrap();
        assert_eq!(lie.f(1, 0, 2), Scalar::from_int(-1));
        assert_eq!(lie.f(2, 0, 1), Scalar::one());
        assert_eq!(lie.bracket(0, 0), &[]);
    }

    #[test]
    fn upper_rejects_bad_orientation_and_duplicates() {
        assert!(LieData::from_upper(default_names(2), [(1, 0, 0, Scalar::one())]).is_err());
        assert!(LieData::from_upper(default_names(2), [(0, 0, 1, Scalar::one())]).is_err());
        assert!(LieData::from_upper(
            default_names(2),
            [(0, 1, 0, Scalar::one()), (0, 1, 0, Scalar::one())]
        )
        .is_err());
        assert!(LieData::from_upper(default_names(2), [(0, 1, 2, Scalar::one())]).is_err());
    }

    #[test]
    fn adjoint_of_abelian_is_zero() {
        let rep = adjoint_rep(&LieData::abelian(3));
        assert!(rep.is_trivial());
        assert_eq!(rep.dim_v(), 3);
    }

    #[test]
    fn so3_adjoint_first_matrix() {
        let def = builtin("so3").unwrap();
        let rep = adjoint_rep(&def.lie);
        assert_eq!(
            rep.tau(0),
            &Matrix::from_i64(&[&[0, 0, 0], &[0, 0, -1], &[0, 1, 0]])
        );
    }

    #[test]
    fn rep_shape_checked() {
        assert!(RepData::new("bad", 2, vec![Matrix::zeros(2, 3)]).is_err());
    }
}
