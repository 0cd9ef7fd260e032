//! Evaluation of parsed expressions inside one session: a fixed algebra,
//! representation and context.

use std::fmt;
use std::sync::Arc;

use weil_core::classical::{ClassicalElement, ClassicalWeil, Operator};
use weil_core::flat::Context;
use weil_core::lie::AlgebraDef;
use weil_core::quantum::{QuantumElement, QuantumWeil};
use weil_core::{Matrix, Result as CoreResult, Scalar, WeilError};

use crate::error::{CliError, EvalError};
use crate::lexer::Pos;
use crate::parser::{parse, Const, Expr, ExprKind, Gen};

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Classical(ClassicalElement),
    Quantum(QuantumElement),
}

impl Value {
    pub fn is_zero(&self) -> bool {
        match self {
            Value::Classical(x) => x.is_zero(),
            Value::Quantum(x) => x.is_zero(),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Classical(x) => x.fmt(f),
            Value::Quantum(x) => x.fmt(f),
        }
    }
}

enum Algebra {
    Classical(Arc<ClassicalWeil>),
    Quantum(Arc<QuantumWeil>),
}

pub struct Session {
    pub def: AlgebraDef,
    pub rep: String,
    pub context: Context,
    algebra: Algebra,
}

impl Session {
    /// Fails for unknown reps and, in the quantum context, without an
    /// orthonormal form.
    pub fn new(def: AlgebraDef, rep: &str, context: Context) -> CoreResult<Self> {
        let r = def.rep(rep)?.clone();
        let algebra = match context {
            Context::Classical => Algebra::Classical(ClassicalWeil::new(def.lie.clone(), r)?),
            Context::Quantum => Algebra::Quantum(QuantumWeil::new(def.lie.clone(), def.form.as_ref(), r)?),
        };
        Ok(Session {
            def,
            rep: rep.to_string(),
            context,
            algebra,
        })
    }

    pub fn eval_str(&self, src: &str) -> Result<Value, CliError> {
        Ok(self.eval(&parse(src)?)?)
    }

    pub fn eval(&self, e: &Expr) -> Result<Value, EvalError> {
        match &self.algebra {
            Algebra::Classical(w) => eval_in(&ClassicalBackend(w.clone()), e).map(Value::Classical),
            Algebra::Quantum(w) => eval_in(&QuantumBackend(w.clone()), e).map(Value::Quantum),
        }
    }
}

/// What evaluation needs from each algebra. `None` marks a construct that
/// does not exist in this context.
trait Backend {
    type E: Clone;
    const CONTEXT: &'static str;

    fn dim(&self) -> usize;
    fn scalar(&self, s: Scalar) -> Self::E;
    fn matrix(&self, m: Matrix) -> CoreResult<Self::E>;
    fn tau(&self, a: usize) -> Self::E;
    fn generator(&self, g: Gen, a: usize) -> Option<Self::E>;
    fn g(&self, a: usize) -> Option<Self::E>;
    fn constant(&self, c: Const) -> Option<Self::E>;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    fn pow(&self, a: &Self::E, k: u32) -> Self::E;
    fn comm(&self, a: &Self::E, b: &Self::E) -> CoreResult<Self::E>;
    fn apply(&self, op: Operator, a: &Self::E) -> CoreResult<Self::E>;
}

struct ClassicalBackend(Arc<ClassicalWeil>);
struct QuantumBackend(Arc<QuantumWeil>);

impl Backend for ClassicalBackend {
    type E = ClassicalElement;
    const CONTEXT: &'static str = "classical";

    fn dim(&self) -> usize {
        self.0.dim()
    }
    fn scalar(&self, s: Scalar) -> ClassicalElement {
        ClassicalElement::scalar(&self.0, s)
    }
    fn matrix(&self, m: Matrix) -> CoreResult<ClassicalElement> {
        ClassicalElement::matrix(&self.0, m)
    }
    fn tau(&self, a: usize) -> ClassicalElement {
        ClassicalElement::matrix(&self.0, self.0.rep().tau(a).clone()).expect("rep matrices fit V")
    }
    fn generator(&self, g: Gen, a: usize) -> Option<ClassicalElement> {
        match g {
            Gen::V => ClassicalElement::v(&self.0, a).ok(),
            Gen::Y => ClassicalElement::y(&self.0, a).ok(),
            Gen::U | Gen::X => None,
        }
    }
    fn g(&self, _: usize) -> Option<ClassicalElement> {
        None
    }
    fn constant(&self, c: Const) -> Option<ClassicalElement> {
        match c {
            Const::C => Some(ClassicalElement::curvature(&self.0)),
            Const::I => Some(ClassicalElement::one(&self.0)),
            Const::QC | Const::Gamma | Const::Dirac => None,
        }
    }
    fn add(&self, a: &ClassicalElement, b: &ClassicalElement) -> ClassicalElement {
        a + b
    }
    fn sub(&self, a: &ClassicalElement, b: &ClassicalElement) -> ClassicalElement {
        a - b
    }
    fn mul(&self, a: &ClassicalElement, b: &ClassicalElement) -> ClassicalElement {
        a * b
    }
    fn neg(&self, a: &ClassicalElement) -> ClassicalElement {
        -a
    }
    fn pow(&self, a: &ClassicalElement, k: u32) -> ClassicalElement {
        a.pow(k)
    }
    fn comm(&self, a: &ClassicalElement, b: &ClassicalElement) -> CoreResult<ClassicalElement> {
        a.supercommutator(b)
    }
    fn apply(&self, op: Operator, a: &ClassicalElement) -> CoreResult<ClassicalElement> {
        a.apply(op)
    }
}

impl Backend for QuantumBackend {
    type E = QuantumElement;
    const CONTEXT: &'static str = "quantum";

    fn dim(&self) -> usize {
        self.0.dim()
    }
    fn scalar(&self, s: Scalar) -> QuantumElement {
        QuantumElement::scalar(&self.0, s)
    }
    fn matrix(&self, m: Matrix) -> CoreResult<QuantumElement> {
        QuantumElement::matrix(&self.0, m)
    }
    fn tau(&self, a: usize) -> QuantumElement {
        QuantumElement::matrix(&self.0, self.0.rep().tau(a).clone()).expect("rep matrices fit V")
    }
    fn generator(&self, g: Gen, a: usize) -> Option<QuantumElement> {
        match g {
            Gen::U => QuantumElement::u(&self.0, a).ok(),
            Gen::X => QuantumElement::x(&self.0, a).ok(),
            Gen::V | Gen::Y => None,
        }
    }
    fn g(&self, a: usize) -> Option<QuantumElement> {
        QuantumElement::g(&self.0, a).ok()
    }
    fn constant(&self, c: Const) -> Option<QuantumElement> {
        Some(match c {
            Const::C | Const::QC => QuantumElement::curvature(&self.0),
            Const::Gamma => QuantumElement::gamma(&self.0),
            Const::Dirac => QuantumElement::dirac(&self.0),
            Const::I => QuantumElement::one(&self.0),
        })
    }
    fn add(&self, a: &QuantumElement, b: &QuantumElement) -> QuantumElement {
        a + b
    }
    fn sub(&self, a: &QuantumElement, b: &QuantumElement) -> QuantumElement {
        a - b
    }
    fn mul(&self, a: &QuantumElement, b: &QuantumElement) -> QuantumElement {
        a * b
    }
    fn neg(&self, a: &QuantumElement) -> QuantumElement {
        -a
    }
    fn pow(&self, a: &QuantumElement, k: u32) -> QuantumElement {
        a.pow(k)
    }
    fn comm(&self, a: &QuantumElement, b: &QuantumElement) -> CoreResult<QuantumElement> {
        a.supercommutator(b)
    }
    fn apply(&self, op: Operator, a: &QuantumElement) -> CoreResult<QuantumElement> {
        a.apply(op)
    }
}

fn core_err(pos: Pos) -> impl Fn(WeilError) -> EvalError {
    move |source| EvalError::Core { source, pos }
}

/// 1-based index from the source to a 0-based one.
fn index<B: Backend>(b: &B, i: usize, pos: Pos) -> Result<usize, EvalError> {
    if i == 0 || i > b.dim() {
        return Err(EvalError::IndexOutOfRange { index: i, dim: b.dim(), pos });
    }
    Ok(i - 1)
}

fn mismatch<B: Backend>(what: String, pos: Pos) -> EvalError {
    EvalError::ContextMismatch {
        what,
        context: B::CONTEXT,
        pos,
    }
}

fn eval_in<B: Backend>(b: &B, e: &Expr) -> Result<B::E, EvalError> {
    let pos = e.pos;
    Ok(match &e.kind {
        ExprKind::Scalar(s) => b.scalar(s.clone()),
        ExprKind::Gen(g, i) => {
            let what = || format!("{}{i}", g.letter());
            // context is checked before the index so u7 in a classical
            // session reports the real problem
            if b.generator(*g, 0).is_none() {
                return Err(mismatch::<B>(what(), pos));
            }
            let a = index(b, *i, pos)?;
            b.generator(*g, a).expect("index checked")
        }
        ExprKind::Tau(i) => b.tau(index(b, *i, pos)?),
        ExprKind::G(i) => {
            if b.g(0).is_none() {
                return Err(mismatch::<B>(format!("g({i})"), pos));
            }
            b.g(index(b, *i, pos)?).expect("index checked")
        }
        ExprKind::Matrix(rows) => {
            let m = Matrix::from_rows(rows.clone()).map_err(core_err(pos))?;
            b.matrix(m).map_err(core_err(pos))?
        }
        ExprKind::Const(c) => b.constant(*c).ok_or_else(|| mismatch::<B>(e.to_string(), pos))?,
        ExprKind::Neg(x) => b.neg(&eval_in(b, x)?),
        ExprKind::Add(x, y) => b.add(&eval_in(b, x)?, &eval_in(b, y)?),
        ExprKind::Sub(x, y) => b.sub(&eval_in(b, x)?, &eval_in(b, y)?),
        ExprKind::Mul(x, y) => b.mul(&eval_in(b, x)?, &eval_in(b, y)?),
        ExprKind::Pow(x, k) => b.pow(&eval_in(b, x)?, *k),
        ExprKind::Comm(x, y) => b.comm(&eval_in(b, x)?, &eval_in(b, y)?).map_err(core_err(pos))?,
        ExprKind::D(x) => b.apply(Operator::Differential, &eval_in(b, x)?).map_err(core_err(pos))?,
        ExprKind::L(i, x) => {
            let a = index(b, *i, pos)?;
            b.apply(Operator::Lie(a), &eval_in(b, x)?).map_err(core_err(pos))?
        }
        ExprKind::Iota(i, x) => {
            let a = index(b, *i, pos)?;
            b.apply(Operator::Contraction(a), &eval_in(b, x)?).map_err(core_err(pos))?
        }
    })
}

#[cfg(test)]
mod tests {
    use weil_core::lie::builtin;

    use super::*;

    fn session(name: &str, rep: &str, context: Context) -> Session {
        Session::new(builtin(name).unwrap(), rep, context).unwrap()
    }

    fn eval(s: &Session, src: &str) -> String {
        s.eval_str(src).unwrap().to_string()
    }

    #[test]
    fn classical_examples() {
        let s = session("so3", "adjoint", Context::Classical);
        assert_eq!(eval(&s, "d(y1)"), "v1 - y2*y3");
        assert_eq!(eval(&s, "d(C)"), "0");
        assert_eq!(eval(&s, "d(d(tau(1))) - comm(C, tau(1))"), "0");
        assert_eq!(eval(&s, "comm(tau(1), tau(2)) - tau(3)"), "0");
        assert_eq!(eval(&s, "L(1, v3) + v2"), "0");
        assert_eq!(eval(&s, "iota(2, y2*y1)"), "y1");
        assert_eq!(eval(&s, "iota(2, y1*y2)"), "-y1");
        let a = session("abelian(2)", "trivial", Context::Classical);
        assert_eq!(eval(&a, "d(d(y1))"), "0");
    }

    #[test]
    fn quantum_examples() {
        let s = session("so3", "trivial", Context::Quantum);
        assert_eq!(eval(&s, "gamma*gamma"), "-1/8");
        assert_eq!(eval(&s, "Dirac^2 - 1/2*(u1^2 + u2^2 + u3^2) - gamma^2"), "0");
        assert_eq!(eval(&s, "comm(QC, u1)"), "0");
        assert_eq!(eval(&s, "C - QC"), "0");
        let a = session("abelian(2)", "trivial", Context::Quantum);
        assert_eq!(eval(&a, "comm(QC, u1)"), "0");
        assert_eq!(eval(&a, "x1 ⊗ x1"), "1/2");
    }

    #[test]
    fn context_and_index_errors() {
        let c = session("so3", "adjoint", Context::Classical);
        let err = c.eval_str("v1 + u1").unwrap_err().to_string();
        assert_eq!(err, "evaluation error at line 1, column 6: u1 is not available in the classical context");
        assert!(c.eval_str("gamma").unwrap_err().to_string().contains("gamma is not available"));
        let err = c.eval_str("y4").unwrap_err().to_string();
        assert!(err.contains("index 4 out of range 1..=3"), "{err}");
        assert!(c.eval_str("L(0, y1)").is_err());
        assert!(c.eval_str("[[1,0],[0,1]]").unwrap_err().to_string().contains("shape"));

        let q = session("so3", "adjoint", Context::Quantum);
        assert!(q.eval_str("y1").unwrap_err().to_string().contains("quantum context"));
    }

    #[test]
    fn quantum_needs_orthonormal_form() {
        assert!(matches!(
            Session::new(builtin("sl2").unwrap(), "adjoint", Context::Quantum),
            Err(WeilError::NonOrthonormalForm(_))
        ));
        assert!(Session::new(builtin("so3").unwrap(), "spin", Context::Classical).is_err());
    }

    /// Evaluating the rendering of a value gives the value back.
    #[test]
    fn rendering_reparses() {
        let s = session("so3", "adjoint", Context::Classical);
        for src in ["d(y1*tau(2))", "C^2", "d(v1*y2*y3) - 1/3*tau(1)*y1", "comm(tau(1), y2) + 5/7"] {
            let v = s.eval_str(src).unwrap();
            let again = s.eval_str(&v.to_string()).unwrap();
            assert_eq!(v, again, "{src} -> {v}");
        }
        let q = session("so3", "adjoint", Context::Quantum);
        for src in ["QC", "d(u1*x2)", "Dirac^2*tau(3) - g(1)"] {
            let v = q.eval_str(src).unwrap();
            let again = q.eval_str(&v.to_string()).unwrap();
            assert_eq!(v, again, "{src} -> {v}");
        }
    }
}
