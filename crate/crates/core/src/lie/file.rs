//! JSON Lie-algebra definition files.
//!
//! ```json
//! {
//!   "dim": 3,
//!   "names": ["e1", "e2", "e3"],
//!   "f": [[1, 2, 3, "1"], [2, 3, 1, "1"], [1, 3, 2, "-1"]],
//!   "B": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
//!   "reps": {"adjoint": {"dim_v": 3, "matrices": [[[0,0,0],[0,0,-1],[0,1,0]], ...]}}
//! }
//! ```
//!
//! Indices are 1-based and only `a < b` entries are listed in `f`; the
//! `b > a` partners are implied. Alternatively `f_full` lists the whole table,
//! both orders, exactly as stored, so a broken antisymmetry is kept and
//! reported by validation. Numbers may be JSON integers or `"p/q"` strings.
//! `names` is optional.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::Deserialize;
use serde_json::Value;

use crate::error::{Result, WeilError};
use crate::lie::{default_names, AlgebraDef, BilinearForm, LieData, RepData};
use crate::linalg::{Matrix, Scalar};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDef {
    dim: usize,
    #[serde(default)]
    names: Option<Vec<String>>,
    #[serde(default)]
    f: Vec<(usize, usize, usize, Value)>,
    #[serde(default)]
    f_full: Option<Vec<(usize, usize, usize, Value)>>,
    #[serde(rename = "B", default)]
    b: Option<Vec<Vec<Value>>>,
    #[serde(default)]
    reps: BTreeMap<String, RawRep>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRep {
    dim_v: usize,
    matrices: Vec<Vec<Vec<Value>>>,
}

fn scalar(v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => s.parse(),
        Value::Number(n) if n.is_i64() => Ok(Scalar::from_int(n.as_i64().expect("checked"))),
        other => Err(WeilError::Definition(format!(
            "expected an integer or \"p/q\" string, found {other}"
        ))),
    }
}

fn matrix(rows: &[Vec<Value>]) -> Result<Matrix> {
    let rows = rows
        .iter()
        .map(|r| r.iter().map(scalar).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(rows)
}

fn to_zero_based(i: usize, dim: usize) -> Result<usize> {
    if i == 0 || i > dim {
        return Err(WeilError::IndexOutOfRange { index: i, dim });
    }
    Ok(i - 1)
}

pub fn parse_definition(name: &str, text: &str) -> Result<AlgebraDef> {
    let raw: RawDef = serde_json::from_str(text)?;
    let dim = raw.dim;
    let names = match raw.names {
        Some(n) if n.len() != dim => {
            return Err(WeilError::Definition(format!(
                "{} names given for dimension {dim}",
                n.len()
            )))
        }
        Some(n) => n,
        None => default_names(dim),
    };
    if raw.f_full.is_some() && !raw.f.is_empty() {
        return Err(WeilError::Definition("give either f or f_full, not both".into()));
    }
    let entries = raw
        .f_full
        .as_ref()
        .unwrap_or(&raw.f)
        .iter()
        .map(|(a, b, c, v)| {
            Ok((
                to_zero_based(*a, dim)?,
                to_zero_based(*b, dim)?,
                to_zero_based(*c, dim)?,
                scalar(v)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let lie = if raw.f_full.is_some() {
        LieData::from_raw(names, entries)?
    } else {
        LieData::from_upper(names, entries)?
    };
    let form = raw.b.as_deref().map(matrix).transpose()?.map(BilinearForm::new);
    let mut reps = BTreeMap::new();
    for (rep_name, r) in raw.reps {
        let tau = r
            .matrices
            .iter()
            .map(|m| matrix(m))
            .collect::<Result<Vec<_>>>()?;
        reps.insert(rep_name.clone(), RepData::new(rep_name, r.dim_v, tau)?);
    }
    if !reps.contains_key("trivial") {
        reps.insert("trivial".into(), RepData::trivial(&lie, 1));
    }
    if !reps.contains_key("adjoint") {
        reps.insert("adjoint".into(), crate::lie::adjoint_rep(&lie));
    }
    Ok(AlgebraDef {
        name: name.to_string(),
        lie: Arc::new(lie),
        form,
        reps,
    })
}

pub fn load_definition(path: &Path) -> Result<AlgebraDef> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| WeilError::Definition(format!("{}: {e}", path.display())))?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "file".into());
    parse_definition(&name, &text)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SO3: &str = r#"{
        "dim": 3,
        "f": [[1, 2, 3, "1"], [2, 3, 1, 1], [1, 3, 2, "-1"]],
        "B": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
        "reps": {"spin": {"dim_v": 3, "matrices": [
            [[0,0,0],[0,0,-1],[0,1,0]],
            [[0,0,1],[0,0,0],[-1,0,0]],
            [[0,-1,0],[1,0,0],[0,0,0]]]}}
    }"#;

    #[test]
    fn loads_so3() {
        let def = parse_definition("so3", SO3).unwrap();
        assert_eq!(def.lie.f(1, 0, 2), Scalar::from_int(-1));
        assert!(def.form.as_ref().unwrap().is_orthonormal());
        assert!(def.is_valid());
        assert_eq!(def.reps["spin"].matrices(), def.reps["adjoint"].matrices());
    }

    #[test]
    fn rejects_duplicates_and_lower_entries() {
        let dup = r#"{"dim": 2, "f": [[1, 2, 1, "1"], [1, 2, 1, "1"]]}"#;
        assert!(parse_definition("x", dup).is_err());
        let lower = r#"{"dim": 2, "f": [[2, 1, 1, "1"]]}"#;
        assert!(parse_definition("x", lower).is_err());
        let range = r#"{"dim": 2, "f": [[1, 2, 3, "1"]]}"#;
        assert!(matches!(
            parse_definition("x", range),
            Err(WeilError::IndexOutOfRange { index: 3, dim: 2 })
        ));
        let zero = r#"{"dim": 2, "f": [[0, 2, 1, "1"]]}"#;
        assert!(parse_definition("x", zero).is_err());
    }

    #[test]
    fn corrupted_constant_fails_validation() {
        let bad = SO3.replace(r#"[1, 2, 3, "1"]"#, r#"[1, 2, 3, "2"]"#);
        let def = parse_definition("bad", &bad).unwrap();
        assert!(!def.is_valid());
    }

    #[test]
    fn full_table_keeps_broken_antisymmetry() {
        let full = r#"{"dim": 3, "f_full": [
            [1, 2, 3, "1"], [2, 1, 3, "-1"], [2, 3, 1, "1"], [3, 2, 1, "-1"],
            [3, 1, 2, "1"], [1, 3, 2, "-1"]]}"#;
        let def = parse_definition("x", full).unwrap();
        assert!(def.is_valid());
        let bad = full.replace(r#"[2, 1, 3, "-1"]"#, r#"[2, 1, 3, "-2"]"#);
        let reports = parse_definition("x", &bad).unwrap().validate();
        let text = reports[0].to_string();
        assert!(text.contains("antisymmetry violation at (1, 2, 3)"), "{text}");
        let both = r#"{"dim": 2, "f": [[1, 2, 1, "1"]], "f_full": [[1, 2, 1, "1"]]}"#;
        assert!(parse_definition("x", both).is_err());
    }

    #[test]
    fn rational_entries() {
        let text = r#"{"dim": 1, "B": [["1/2"]]}"#;
        let def = parse_definition("x", text).unwrap();
        assert_eq!(def.form.unwrap().get(0, 0), &Scalar::ratio(1, 2));
        assert!(parse_definition("x", r#"{"dim": 1, "B": [[0.5]]}"#).is_err());
    }
}
