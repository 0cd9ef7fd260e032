use std::sync::Arc;

use super::plain::{self, PlainElement};
use super::*;
use crate::lie::builtin;
use crate::random;

fn algebra(name: &str, rep: &str) -> Arc<ClassicalWeil> {
    let def = builtin(name).unwrap();
    ClassicalWeil::new(def.lie.clone(), def.rep(rep).unwrap().clone()).unwrap()
}

fn v(alg: &Arc<ClassicalWeil>, a: usize) -> ClassicalElement {
    ClassicalElement::v(alg, a).unwrap()
}

fn y(alg: &Arc<ClassicalWeil>, a: usize) -> ClassicalElement {
    ClassicalElement::y(alg, a).unwrap()
}

fn tau(alg: &Arc<ClassicalWeil>, a: usize) -> ClassicalElement {
    ClassicalElement::matrix(alg, alg.rep().tau(a).clone()).unwrap()
}

#[test]
fn generator_formulas_so3() {
    let w = algebra("so3", "adjoint");
    assert_eq!(y(&w, 0).differential().to_string(), "v1 - y2*y3");
    assert_eq!(v(&w, 0).differential().to_string(), "v2*y3 - v3*y2");
    assert_eq!(v(&w, 2).lie_derivative(0).unwrap(), -v(&w, 1));
    let y12 = &y(&w, 0) * &y(&w, 1);
    assert_eq!(y12.contraction(0).unwrap(), y(&w, 1));
    assert_eq!(y12.contraction(1).unwrap(), -y(&w, 0));
    assert!(tau(&w, 0).lie_derivative(0).unwrap().is_zero());
}

#[test]
fn products_and_commutators() {
    let w = algebra("so3", "adjoint");
    let t = &(&tau(&w, 0) * &tau(&w, 1)) - &(&tau(&w, 1) * &tau(&w, 0));
    assert_eq!(t, tau(&w, 2));
    assert!((&y(&w, 0) * &y(&w, 0)).is_zero());
    let yy = y(&w, 0).supercommutator(&y(&w, 1)).unwrap();
    assert!(yy.is_zero());
    let c = ClassicalElement::curvature(&w);
    assert!(c.supercommutator(&y(&w, 0)).unwrap().is_zero());
    assert_eq!(c.degree(), Some(2));
    assert!(c.differential().is_zero());
}

#[test]
fn curvature_bracket_with_matrix() {
    let w = algebra("so3", "adjoint");
    let c = ClassicalElement::curvature(&w);
    let a = tau(&w, 0);
    let expect = (0..3).fold(ClassicalElement::zero(&w), |acc, b| {
        let m = w.rep().tau(b).commutator(w.rep().tau(0)).unwrap();
        &acc + &(&v(&w, b) * &ClassicalElement::matrix(&w, m).unwrap())
    });
    assert_eq!(c.supercommutator(&a).unwrap(), expect);
    assert_eq!(a.differential().differential(), expect);
}

#[test]
fn trivial_rep_curvature_vanishes() {
    let w = algebra("sl2", "trivial");
    assert!(ClassicalElement::curvature(&w).is_zero());
}

#[test]
fn degrees_shift_as_expected() {
    let w = algebra("heisenberg3", "standard");
    let mut rng = random::rng(3);
    for deg in 0..=4 {
        let x = random::classical_homogeneous(&w, &mut rng, deg, 3);
        if x.is_zero() {
            continue;
        }
        for (op, shift) in [(Operator::Lie(1), 0i32), (Operator::Contraction(2), -1), (Operator::Differential, 1)] {
            let img = x.apply(op).unwrap();
            if let Some(d) = img.degree() {
                assert_eq!(d as i32, deg as i32 + shift);
            }
            assert_eq!(op.degree(), shift);
        }
    }
}

#[test]
fn cross_algebra_arithmetic_is_rejected() {
    let a = algebra("so3", "adjoint");
    let b = algebra("so3", "adjoint");
    assert!(matches!(
        v(&a, 0).try_add(&v(&b, 0)),
        Err(WeilError::AlgebraMismatch)
    ));
    assert!(ClassicalElement::v(&a, 3).is_err());
}

fn to_plain(x: &ClassicalElement) -> PlainElement {
    x.terms()
        .iter()
        .map(|(k, m)| {
            (
                (k.sym.exponents().to_vec(), k.ext.indices().to_vec()),
                m.get(0, 0).clone(),
            )
        })
        .collect()
}

#[test]
fn trivial_rep_matches_plain_weil_differential() {
    for name in ["abelian(2)", "heisenberg3", "so3", "sl2"] {
        let w = algebra(name, "trivial");
        let mut rng = random::rng(11);
        for _ in 0..20 {
            let x = random::classical(&w, &mut rng, 4);
            let dx = x.differential();
            assert_eq!(to_plain(&dx), plain::differential(&w.lie, &to_plain(&x)), "{name}: {x}");
            assert!(dx.differential().is_zero());
        }
    }
}

#[test]
fn rendering_orders_terms() {
    let w = algebra("so3", "trivial");
    let x = &(&(&y(&w, 1) * &y(&w, 2)) + &(&v(&w, 0) * &v(&w, 0))) + &(&v(&w, 0) * &v(&w, 1));
    let x = &x + &ClassicalElement::scalar(&w, Scalar::ratio(-1, 2));
    assert_eq!(x.to_string(), "-1/2 + y2*y3 + v1^2 + v1*v2");
    let s = algebra("heisenberg3", "standard");
    let m = &v(&s, 0) * &tau(&s, 1);
    assert_eq!(m.to_string(), "v1 ⊗ [[0,0,0],[0,0,1],[0,0,0]]");
}
