//! Normal-form multiplication for the four generator algebras.
//!
//! Every algebra stores elements as a [`Poly`]: a map from canonical
//! monomials (ascending basis index everywhere) to nonzero coefficients. The
//! coefficient ring is either [`Scalar`] or [`Matrix`] (for `End V` valued
//! elements); the monomial products themselves always have scalar
//! coefficients.

pub mod clifford;
pub mod ext;
pub mod pbw;
pub mod sym;

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::linalg::{Matrix, Scalar};

pub use clifford::{mul_clifford, CliffMonomial};
pub use ext::{mul_ext, ExtMonomial};
pub use pbw::{mul_pbw, PbwMonomial, RewriteStrategy};
pub use sym::{mul_sym, SymMonomial};

/// A coefficient ring with exact equality.
pub trait Coefficient: Clone + PartialEq + fmt::Debug {
    fn is_zero(&self) -> bool;
    fn add_assign(&mut self, other: &Self);
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, s: &Scalar) -> Self;
}

impl Coefficient for Scalar {
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, s: &Scalar) -> Self {
        self * s
    }
}

/// Matrix coefficients must share one square shape; mixing shapes panics.
impl Coefficient for Matrix {
    fn is_zero(&self) -> bool {
        Matrix::is_zero(self)
    }
    fn add_assign(&mut self, other: &Self) {
        Matrix::add_assign(self, other);
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, s: &Scalar) -> Self {
        Matrix::scale(self, s)
    }
}

/// Sparse linear combination of monomials; zero coefficients are never stored.
#[derive(Clone, PartialEq)]
pub struct Poly<M: Ord, C> {
    terms: BTreeMap<M, C>,
}

impl<M: Ord + Clone, C: Coefficient> Default for Poly<M, C> {
    fn default() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }
}

impl<M: Ord + Clone + fmt::Debug, C: Coefficient> fmt::Debug for Poly<M, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl<M: Ord + Clone, C: Coefficient> Poly<M, C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(m: M, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&M, &C)> {
        self.terms.iter()
    }

    pub fn get(&self, m: &M) -> Option<&C> {
        self.terms.get(m)
    }

    pub fn into_terms(self) -> BTreeMap<M, C> {
        self.terms
    }

    /// Adds `c·m`, removing the entry if it cancels.
    pub fn add_term(&mut self, m: M, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                o.get_mut().add_assign(&c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_poly(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_poly(other);
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.neg());
        }
        out
    }

    pub fn negated(&self) -> Self {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn scaled(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.scale(s))).collect(),
        }
    }

    /// Bilinear extension of a monomial product with scalar structure
    /// coefficients.
    pub fn product_with<F>(&self, other: &Self, mut mono: F) -> Self
    where
        F: FnMut(&M, &M) -> Vec<(Scalar, M)>,
    {
        let mut out = Self::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let expansion = mono(ma, mb);
                if expansion.is_empty() {
                    continue;
                }
                let c = ca.mul(cb);
                if c.is_zero() {
                    continue;
                }
                for (s, m) in expansion {
                    out.add_term(m, c.scale(&s));
                }
            }
        }
        out
    }

    pub fn map_monomials<N: Ord + Clone, F>(&self, mut f: F) -> Poly<N, C>
    where
        F: FnMut(&M) -> N,
    {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            out.add_term(f(m), c.clone());
        }
        out
    }
}

impl<M: Ord + Clone, C: Coefficient> FromIterator<(M, C)> for Poly<M, C> {
    fn from_iter<I: IntoIterator<Item = (M, C)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }
}

/// Renders `letter{i}^{k}` factors joined by `*`, or `1` for the empty word.
pub(crate) fn render_exponents(letter: char, exps: &[u32]) -> String {
    let parts: Vec<String> = exps
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| {
            if k == 1 {
                format!("{letter}{}", i + 1)
            } else {
                format!("{letter}{}^{k}", i + 1)
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

pub(crate) fn render_indices(letter: char, idx: &[usize]) -> String {
    if idx.is_empty() {
        return "1".into();
    }
    idx.iter()
        .map(|i| format!("{letter}{}", i + 1))
        .collect::<Vec<_>>()
        .join("*")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_terms_are_dropped() {
        let mut p: Poly<u8, Scalar> = Poly::zero();
        p.add_term(1, Scalar::one());
        p.add_term(1, Scalar::from_int(-1));
        p.add_term(2, Scalar::zero());
        assert!(p.is_zero());
    }

    #[test]
    fn matrix_coefficients_cancel() {
        let mut p: Poly<u8, Matrix> = Poly::term(0, Matrix::identity(2));
        p.add_term(0, -&Matrix::identity(2));
        assert!(p.is_zero());
    }
}
