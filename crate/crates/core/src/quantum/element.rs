use std::cmp::Reverse;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::{split_parity, Operator, QuantumKey, QuantumTerms, QuantumWeil};
use crate::error::{Result, WeilError};
use crate::kernels::{CliffMonomial, PbwMonomial};
use crate::linalg::{Matrix, Scalar};
use crate::render::{join_factors, render_terms, TENSOR};

/// An element of a [`QuantumWeil`] algebra.
#[derive(Clone)]
pub struct QuantumElement {
    alg: Arc<QuantumWeil>,
    terms: QuantumTerms,
}

impl PartialEq for QuantumElement {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.alg, &other.alg) && self.terms == other.terms
    }
}

impl fmt::Debug for QuantumElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuantumElement({self})")
    }
}

impl QuantumElement {
    pub fn from_terms(alg: &Arc<QuantumWeil>, terms: QuantumTerms) -> Self {
        QuantumElement {
            alg: alg.clone(),
            terms,
        }
    }

    pub fn zero(alg: &Arc<QuantumWeil>) -> Self {
        Self::from_terms(alg, QuantumTerms::zero())
    }

    pub fn scalar(alg: &Arc<QuantumWeil>, c: Scalar) -> Self {
        Self::from_terms(alg, QuantumTerms::term(alg.unit_key(), Matrix::scalar(alg.dim_v(), c)))
    }

    pub fn one(alg: &Arc<QuantumWeil>) -> Self {
        Self::scalar(alg, Scalar::one())
    }

    pub fn matrix(alg: &Arc<QuantumWeil>, m: Matrix) -> Result<Self> {
        let d = alg.dim_v();
        if m.shape() != (d, d) {
            return Err(WeilError::ShapeMismatch {
                op: "matrix element",
                left: (d, d),
                right: m.shape(),
            });
        }
        Ok(Self::from_terms(alg, QuantumTerms::term(alg.unit_key(), m)))
    }

    /// The even generator `u_a` of `U(g)` (0-based).
    pub fn u(alg: &Arc<QuantumWeil>, a: usize) -> Result<Self> {
        alg.check_index(a)?;
        let key = QuantumKey::new(PbwMonomial::generator(alg.dim(), a), CliffMonomial::one());
        Ok(Self::from_terms(alg, QuantumTerms::term(key, alg.identity_matrix())))
    }

    /// The odd generator `x_a` of `Cl(g)` (0-based).
    pub fn x(alg: &Arc<QuantumWeil>, a: usize) -> Result<Self> {
        alg.check_index(a)?;
        let key = QuantumKey::new(PbwMonomial::one(alg.dim()), CliffMonomial::generator(a));
        Ok(Self::from_terms(alg, QuantumTerms::term(key, alg.identity_matrix())))
    }

    /// `g_a = −½ f_{ars} x_r x_s` (0-based).
    pub fn g(alg: &Arc<QuantumWeil>, a: usize) -> Result<Self> {
        alg.check_index(a)?;
        Ok(Self::from_terms(alg, alg.g_terms(a).clone()))
    }

    pub fn gamma(alg: &Arc<QuantumWeil>) -> Self {
        Self::from_terms(alg, alg.gamma_terms().clone())
    }

    pub fn dirac(alg: &Arc<QuantumWeil>) -> Self {
        Self::from_terms(alg, alg.dirac_terms().clone())
    }

    /// Quantum curvature `𝒞`.
    pub fn curvature(alg: &Arc<QuantumWeil>) -> Self {
        Self::from_terms(alg, alg.curvature_terms().clone())
    }

    pub fn algebra(&self) -> &Arc<QuantumWeil> {
        &self.alg
    }

    pub fn terms(&self) -> &QuantumTerms {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    fn same_algebra(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.alg, &other.alg) {
            Ok(())
        } else {
            Err(WeilError::AlgebraMismatch)
        }
    }

    fn with_terms(&self, terms: QuantumTerms) -> Self {
        Self::from_terms(&self.alg, terms)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        Ok(self.with_terms(self.terms.plus(&other.terms)))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        Ok(self.with_terms(self.terms.minus(&other.terms)))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        Ok(self.with_terms(self.alg.mul_terms(&self.terms, &other.terms)))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        self.with_terms(self.terms.scaled(c))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(&self.alg);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn supercommutator(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        Ok(self.with_terms(self.alg.supercommutator_terms(&self.terms, &other.terms)))
    }

    pub fn apply(&self, op: Operator) -> Result<Self> {
        match op {
            Operator::Lie(a) | Operator::Contraction(a) => self.alg.check_index(a)?,
            Operator::Differential => {}
        }
        Ok(self.with_terms(self.alg.apply(op, &self.terms)))
    }

    pub fn lie_derivative(&self, a: usize) -> Result<Self> {
        self.apply(Operator::Lie(a))
    }

    pub fn contraction(&self, a: usize) -> Result<Self> {
        self.apply(Operator::Contraction(a))
    }

    pub fn differential(&self) -> Self {
        self.with_terms(self.alg.apply(Operator::Differential, &self.terms))
    }

    /// `ad(𝔇) x`, ignoring the representation.
    pub fn untwisted_differential(&self) -> Self {
        self.with_terms(self.alg.apply_untwisted_differential(&self.terms))
    }

    pub fn parity_parts(&self) -> (Self, Self) {
        let (e, o) = split_parity(&self.terms);
        (self.with_terms(e), self.with_terms(o))
    }

    /// `Some(true)` for odd, `Some(false)` for even, `None` when mixed.
    pub fn parity(&self) -> Option<bool> {
        let mut it = self.terms.iter().map(|(k, _)| k.is_odd());
        let first = it.next().unwrap_or(false);
        it.all(|p| p == first).then_some(first)
    }

    /// Highest filtration degree present, `None` for zero.
    pub fn filtration_degree(&self) -> Option<usize> {
        self.terms.iter().map(|(k, _)| k.degree()).max()
    }

    /// True when every matrix part is a multiple of the identity.
    pub fn has_scalar_matrices(&self) -> bool {
        self.terms.iter().all(|(_, m)| m.as_scalar_multiple().is_some())
    }

    pub fn sorted_terms(&self) -> Vec<(&QuantumKey, &Matrix)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_key(|(k, _)| (k.degree(), Reverse(k.pbw.clone()), k.cl.clone()));
        v
    }
}

impl fmt::Display for QuantumElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted_terms().into_iter().map(|(k, m)| {
            (join_factors(&[k.pbw.to_string(), k.cl.to_string()], TENSOR), m)
        });
        f.write_str(&render_terms(terms))
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $try:ident) => {
        impl $tr<&QuantumElement> for &QuantumElement {
            type Output = QuantumElement;
            fn $m(self, rhs: &QuantumElement) -> QuantumElement {
                self.$try(rhs).expect("elements of different algebras")
            }
        }
        impl $tr for QuantumElement {
            type Output = QuantumElement;
            fn $m(self, rhs: QuantumElement) -> QuantumElement {
                (&self).$m(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &QuantumElement {
    type Output = QuantumElement;
    fn neg(self) -> QuantumElement {
        self.with_terms(self.terms.negated())
    }
}

impl Neg for QuantumElement {
    type Output = QuantumElement;
    fn neg(self) -> QuantumElement {
        -&self
    }
}
