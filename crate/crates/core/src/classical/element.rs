use std::cmp::Reverse;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::{ClassicalKey, ClassicalTerms, ClassicalWeil, Operator};
use crate::error::{Result, WeilError};
use crate::kernels::{ExtMonomial, SymMonomial};
use crate::linalg::{Matrix, Scalar};
use crate::render::{join_factors, render_terms};

/// An element of a [`ClassicalWeil`] algebra.
#[derive(Clone)]
pub struct ClassicalElement {
    alg: Arc<ClassicalWeil>,
    terms: ClassicalTerms,
}

impl PartialEq for ClassicalElement {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.alg, &other.alg) && self.terms == other.terms
    }
}

impl fmt::Debug for ClassicalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ClassicalElement({self})")
    }
}

impl ClassicalElement {
    pub fn from_terms(alg: &Arc<ClassicalWeil>, terms: ClassicalTerms) -> Self {
        ClassicalElement {
            alg: alg.clone(),
            terms,
        }
    }

    pub fn zero(alg: &Arc<ClassicalWeil>) -> Self {
        Self::from_terms(alg, ClassicalTerms::zero())
    }

    pub fn scalar(alg: &Arc<ClassicalWeil>, c: Scalar) -> Self {
        Self::from_terms(alg, ClassicalTerms::term(alg.unit_key(), Matrix::scalar(alg.dim_v(), c)))
    }

    pub fn one(alg: &Arc<ClassicalWeil>) -> Self {
        Self::scalar(alg, Scalar::one())
    }

    /// `1 ⊗ 1 ⊗ m`.
    pub fn matrix(alg: &Arc<ClassicalWeil>, m: Matrix) -> Result<Self> {
        let d = alg.dim_v();
        if m.shape() != (d, d) {
            return Err(WeilError::ShapeMismatch {
                op: "matrix element",
                left: (d, d),
                right: m.shape(),
            });
        }
        Ok(Self::from_terms(alg, ClassicalTerms::term(alg.unit_key(), m)))
    }

    /// The even generator `v^a` (0-based).
    pub fn v(alg: &Arc<ClassicalWeil>, a: usize) -> Result<Self> {
        alg.check_index(a)?;
        let key = ClassicalKey::new(SymMonomial::generator(alg.dim(), a), ExtMonomial::one());
        Ok(Self::from_terms(alg, ClassicalTerms::term(key, alg.identity_matrix())))
    }

    /// The odd generator `y^a` (0-based).
    pub fn y(alg: &Arc<ClassicalWeil>, a: usize) -> Result<Self> {
        alg.check_index(a)?;
        let key = ClassicalKey::new(SymMonomial::one(alg.dim()), ExtMonomial::generator(a));
        Ok(Self::from_terms(alg, ClassicalTerms::term(key, alg.identity_matrix())))
    }

    /// Curvature `C = Σ v^a ⊗ τ_a`.
    pub fn curvature(alg: &Arc<ClassicalWeil>) -> Self {
        let n = alg.dim();
        let terms = (0..n)
            .map(|a| {
                (
                    ClassicalKey::new(SymMonomial::generator(n, a), ExtMonomial::one()),
                    alg.rep().tau(a).clone(),
                )
            })
            .collect();
        Self::from_terms(alg, terms)
    }

    pub fn algebra(&self) -> &Arc<ClassicalWeil> {
        &self.alg
    }

    pub fn terms(&self) -> &ClassicalTerms {
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

    fn with_terms(&self, terms: ClassicalTerms) -> Self {
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

    pub fn apply(&self, op: Operator) -> Result<Self> {
        match op {
            Operator::Lie(a) | Operator::Contraction(a) => self.alg.check_index(a)?,
            Operator::Differential => {}
        }
        Ok(self.with_terms(self.alg.apply(op, &self.terms)))
    }

    /// `L_a`, 0-based.
    pub fn lie_derivative(&self, a: usize) -> Result<Self> {
        self.apply(Operator::Lie(a))
    }

    /// `ι_a`, 0-based.
    pub fn contraction(&self, a: usize) -> Result<Self> {
        self.apply(Operator::Contraction(a))
    }

    pub fn differential(&self) -> Self {
        self.with_terms(self.alg.apply(Operator::Differential, &self.terms))
    }

    /// Splits into `(even, odd)` parts.
    pub fn parity_parts(&self) -> (Self, Self) {
        let mut even = ClassicalTerms::zero();
        let mut odd = ClassicalTerms::zero();
        for (k, m) in self.terms.iter() {
            if k.is_odd() {
                odd.add_term(k.clone(), m.clone());
            } else {
                even.add_term(k.clone(), m.clone());
            }
        }
        (self.with_terms(even), self.with_terms(odd))
    }

    /// `Some(true)` for odd, `Some(false)` for even, `None` when mixed; zero
    /// counts as even.
    pub fn parity(&self) -> Option<bool> {
        let mut it = self.terms.iter().map(|(k, _)| k.is_odd());
        let first = it.next().unwrap_or(false);
        it.all(|p| p == first).then_some(first)
    }

    /// Homogeneous degree, `None` for zero or mixed elements.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.iter().map(|(k, _)| k.degree());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.iter().map(|(k, _)| k.degree()).max()
    }

    pub fn component(&self, degree: usize) -> Self {
        self.with_terms(
            self.terms
                .iter()
                .filter(|(k, _)| k.degree() == degree)
                .map(|(k, m)| (k.clone(), m.clone()))
                .collect(),
        )
    }

    /// Graded commutator `xy − (−1)^{|x||y|} yx`, extended bilinearly over
    /// parity components.
    pub fn supercommutator(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        let (xe, xo) = self.parity_parts();
        let (ye, yo) = other.parity_parts();
        let mut out = Self::zero(&self.alg);
        for (x, xodd) in [(&xe, false), (&xo, true)] {
            for (y, yodd) in [(&ye, false), (&yo, true)] {
                if x.is_zero() || y.is_zero() {
                    continue;
                }
                let xy = x * y;
                let yx = y * x;
                out = if xodd && yodd { &out + &(&xy + &yx) } else { &out + &(&xy - &yx) };
            }
        }
        Ok(out)
    }

    /// Terms in display order: degree, then `v` exponents descending, then
    /// `y` indices ascending.
    pub fn sorted_terms(&self) -> Vec<(&ClassicalKey, &Matrix)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_key(|(k, _)| (k.degree(), Reverse(k.sym.clone()), k.ext.clone()));
        v
    }
}

impl fmt::Display for ClassicalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted_terms().into_iter().map(|(k, m)| {
            (join_factors(&[k.sym.to_string(), k.ext.to_string()], "*"), m)
        });
        f.write_str(&render_terms(terms))
    }
}

// Operator impls panic on elements of different algebras; use the `try_*`
// methods where that can happen.
macro_rules! binop {
    ($tr:ident, $m:ident, $try:ident) => {
        impl $tr<&ClassicalElement> for &ClassicalElement {
            type Output = ClassicalElement;
            fn $m(self, rhs: &ClassicalElement) -> ClassicalElement {
                self.$try(rhs).expect("elements of different algebras")
            }
        }
        impl $tr for ClassicalElement {
            type Output = ClassicalElement;
            fn $m(self, rhs: ClassicalElement) -> ClassicalElement {
                (&self).$m(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &ClassicalElement {
    type Output = ClassicalElement;
    fn neg(self) -> ClassicalElement {
        self.with_terms(self.terms.negated())
    }
}

impl Neg for ClassicalElement {
    type Output = ClassicalElement;
    fn neg(self) -> ClassicalElement {
        -&self
    }
}
