//! Builtin Lie algebras: `abelian(n)`, `heisenberg3`, `so3`, `sl2`.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Result, WeilError};
use crate::lie::{adjoint_rep, default_names, AlgebraDef, BilinearForm, LieData, RepData};
use crate::linalg::{Matrix, Scalar};

/// The catalog used by `report --all-builtins`.
pub fn builtin_names() -> &'static [&'static str] {
    &["abelian(2)", "heisenberg3", "so3", "sl2"]
}

pub fn catalog() -> Vec<AlgebraDef> {
    builtin_names()
        .iter()
        .map(|n| builtin(n).expect("catalog entries are builtin"))
        .collect()
}

pub fn builtin(name: &str) -> Result<AlgebraDef> {
    let name = name.trim();
    if let Some(n) = name
        .strip_prefix("abelian(")
        .and_then(|rest| rest.strip_suffix(')'))
    {
        let n: usize = n
            .trim()
            .parse()
            .map_err(|_| WeilError::UnknownBuiltin(name.to_string()))?;
        return Ok(abelian(n));
    }
    match name {
        "heisenberg3" => Ok(heisenberg3()),
        "so3" => Ok(so3()),
        "sl2" => Ok(sl2()),
        _ => Err(WeilError::UnknownBuiltin(name.to_string())),
    }
}

fn reps(lie: &LieData, standard: RepData) -> BTreeMap<String, RepData> {
    let mut out = BTreeMap::new();
    out.insert("trivial".to_string(), RepData::trivial(lie, 1));
    out.insert("standard".to_string(), standard.with_name("standard"));
    out.insert("adjoint".to_string(), adjoint_rep(lie));
    out
}

fn abelian(n: usize) -> AlgebraDef {
    let lie = LieData::abelian(n);
    // diagonal embedding into gl(n)
    let standard = RepData::new("standard", n, (0..n).map(|a| Matrix::unit(n, a, a)).collect())
        .expect("square");
    AlgebraDef {
        name: format!("abelian({n})"),
        reps: reps(&lie, standard),
        form: Some(BilinearForm::identity(n)),
        lie: Arc::new(lie),
    }
}

/// Basis `p, q, z` with `[p, q] = z`.
fn heisenberg3() -> AlgebraDef {
    let lie = LieData::from_upper(
        vec!["p".into(), "q".into(), "z".into()],
        [(0, 1, 2, Scalar::one())],
    )
    .expect("valid constants");
    let standard = RepData::new(
        "standard",
        3,
        vec![Matrix::unit(3, 0, 1), Matrix::unit(3, 1, 2), Matrix::unit(3, 0, 2)],
    )
    .expect("square");
    AlgebraDef {
        name: "heisenberg3".into(),
        reps: reps(&lie, standard),
        form: None,
        lie: Arc::new(lie),
    }
}

/// `f^c_{ab} = ε_{abc}` with `B = δ`; the standard representation is the
/// adjoint one.
fn so3() -> AlgebraDef {
    let lie = LieData::from_upper(
        default_names(3),
        [
            (0, 1, 2, Scalar::one()),
            (1, 2, 0, Scalar::one()),
            (0, 2, 1, Scalar::from_int(-1)),
        ],
    )
    .expect("valid constants");
    let standard = adjoint_rep(&lie);
    AlgebraDef {
        name: "so3".into(),
        reps: reps(&lie, standard),
        form: Some(BilinearForm::identity(3)),
        lie: Arc::new(lie),
    }
}

/// Basis `e, f, h` with `[h, e] = 2e`, `[h, f] = −2f`, `[e, f] = h`. Ships the
/// trace form of the defining representation, which is invariant but not
/// orthonormal, so `sl2` is classical-only.
fn sl2() -> AlgebraDef {
    let lie = LieData::from_upper(
        vec!["e".into(), "f".into(), "h".into()],
        [
            (0, 1, 2, Scalar::one()),
            (0, 2, 0, Scalar::from_int(-2)),
            (1, 2, 1, Scalar::from_int(2)),
        ],
    )
    .expect("valid constants");
    let standard = RepData::new(
        "standard",
        2,
        vec![
            Matrix::from_i64(&[&[0, 1], &[0, 0]]),
            Matrix::from_i64(&[&[0, 0], &[1, 0]]),
            Matrix::from_i64(&[&[1, 0], &[0, -1]]),
        ],
    )
    .expect("square");
    let trace_form = Matrix::from_i64(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 2]]);
    AlgebraDef {
        name: "sl2".into(),
        reps: reps(&lie, standard),
        form: Some(BilinearForm::new(trace_form)),
        lie: Arc::new(lie),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{validate_lie, validate_rep};

    #[test]
    fn every_builtin_validates() {
        for def in catalog().into_iter().chain([builtin("abelian(4)").unwrap()]) {
            for report in def.validate() {
                assert!(report.is_ok(), "{}: {report}", def.name);
            }
        }
    }

    #[test]
    fn so3_constants() {
        let def = builtin("so3").unwrap();
        assert_eq!(def.lie.dim(), 3);
        assert_eq!(def.lie.f(0, 1, 2), Scalar::one());
        assert_eq!(def.lie.f(1, 2, 0), Scalar::one());
        assert_eq!(def.lie.f(2, 0, 1), Scalar::one());
        assert!(def.form.unwrap().is_orthonormal());
        assert_eq!(def.reps["standard"].matrices(), def.reps["adjoint"].matrices());
    }

    #[test]
    fn sl2_brackets_and_standard_rep() {
        let def = builtin("sl2").unwrap();
        let (e, f, h) = (0, 1, 2);
        assert_eq!(def.lie.bracket(h, e), &[(e, Scalar::from_int(2))]);
        assert_eq!(def.lie.bracket(h, f), &[(f, Scalar::from_int(-2))]);
        assert_eq!(def.lie.bracket(e, f), &[(h, Scalar::one())]);
        assert!(validate_lie(&def.lie).is_ok());
        assert!(validate_rep(&def.lie, &def.reps["standard"]).is_ok());
        assert!(!def.form.unwrap().is_orthonormal());
    }

    #[test]
    fn abelian_two() {
        let def = builtin("abelian(2)").unwrap();
        assert_eq!(def.lie.dim(), 2);
        assert!(def.lie.is_abelian());
    }

    #[test]
    fn unknown_names() {
        for bad in ["so4", "abelian(x)", "abelian", ""] {
            assert!(matches!(builtin(bad), Err(WeilError::UnknownBuiltin(_))), "{bad}");
        }
    }
}
