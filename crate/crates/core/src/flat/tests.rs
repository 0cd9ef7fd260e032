use super::*;
use crate::lie::builtin;
use crate::linalg::nullspace;
use crate::quantum::QuantumElement;

#[test]
fn so3_adjoint_degree_zero_is_scalars() {
    let def = builtin("so3").unwrap();
    let basic = basic_subspace(Context::Classical, &def, "adjoint", 0).unwrap();
    assert_eq!(basic.dims(), vec![1]);
    let flat = flat_subspace(Context::Classical, &def, "adjoint", 0).unwrap();
    assert_eq!(flat.dims(), vec![1]);
    assert_eq!(flat.blocks[0].basis[0].to_string(), "1");
}

#[test]
fn trivial_rep_everything_is_flat() {
    let def = builtin("sl2").unwrap();
    let flat = flat_subspace(Context::Classical, &def, "trivial", 2).unwrap();
    assert_eq!(flat.dims(), vec![1, 3, 6]);
    let basic = basic_subspace(Context::Classical, &def, "trivial", 1).unwrap();
    // constants, and no invariant linear forms
    assert_eq!(basic.dims(), vec![1, 0]);
}

#[test]
fn classical_inclusion_so3_adjoint() {
    let def = builtin("so3").unwrap();
    let rows = inclusion_report(Context::Classical, &def, "adjoint", 2).unwrap();
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|r| r.basic_subset_flat));
    assert!(rows.iter().all(|r| r.basic_subset_flat_status == "theorem"));
    assert_eq!(rows[0].dim_hor, 9);
}

#[test]
fn abelian_basic_equals_flat() {
    let def = builtin("abelian(2)").unwrap();
    for rep in ["trivial", "standard", "adjoint"] {
        for r in inclusion_report(Context::Classical, &def, rep, 2).unwrap() {
            assert_eq!(r.dim_basic, r.dim_flat, "{rep} {r:?}");
            assert!(r.basic_subset_flat);
        }
    }
}

#[test]
fn classical_decomposition_so3_adjoint() {
    let def = builtin("so3").unwrap();
    let rows = decomposition_check(Context::Classical, &def, "adjoint", 1).unwrap();
    for r in rows {
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.odd_factor_dim, 8);
    }
}

#[test]
fn closure_so3_adjoint() {
    let def = builtin("so3").unwrap();
    let r = closure_check(Context::Classical, &def, "adjoint", 2, 50, 9).unwrap();
    assert!(r.passed(), "{r:?}");
    assert_eq!(r.samples, 50);
}

/// Dense `[𝒞, −]` matrix on `U^{≤1} ⊗ End V`, solved with the plain
/// nullspace routine.
#[test]
fn quantum_flat_matches_dense_oracle() {
    let def = builtin("so3").unwrap();
    let w = QuantumWeil::new(def.lie.clone(), def.form.as_ref(), def.rep("adjoint").unwrap().clone()).unwrap();
    let qc = QuantumElement::curvature(&w);
    let mut columns: Vec<QuantumElement> = Vec::new();
    let mut monos = vec![QuantumElement::one(&w)];
    for a in 0..3 {
        monos.push(QuantumElement::u(&w, a).unwrap());
    }
    for m in &monos {
        for i in 0..3 {
            for j in 0..3 {
                let e = QuantumElement::matrix(&w, Matrix::unit(3, i, j)).unwrap();
                columns.push(m * &e);
            }
        }
    }
    let images: Vec<QuantumElement> = columns.iter().map(|c| qc.supercommutator(c).unwrap()).collect();
    let mut row_keys = std::collections::BTreeSet::new();
    for img in &images {
        for (k, _) in img.terms().iter() {
            for i in 0..3 {
                for j in 0..3 {
                    row_keys.insert((k.clone(), i, j));
                }
            }
        }
    }
    let row_keys: Vec<_> = row_keys.into_iter().collect();
    let mut dense = Matrix::zeros(row_keys.len().max(1), columns.len());
    for (c, img) in images.iter().enumerate() {
        for (r, (k, i, j)) in row_keys.iter().enumerate() {
            if let Some(m) = img.terms().get(k) {
                dense.set(r, c, m.get(*i, *j).clone());
            }
        }
    }
    let oracle = nullspace(&dense).len();
    let flat = flat_subspace(Context::Quantum, &def, "adjoint", 1).unwrap();
    assert_eq!(flat.dims()[1], oracle);
}

#[test]
fn quantum_report_is_evidence_only() {
    let def = builtin("so3").unwrap();
    let report = flat_report(Context::Quantum, &def, "adjoint", 1, 5, 3).unwrap();
    assert!(report.per_degree.iter().all(|r| r.basic_subset_flat_status == "observed"));
    let json = report.to_json().unwrap();
    assert!(json.contains("\"schema\": 1"));
    assert!(json.contains("\"N\": 1"));
    let again = flat_report(Context::Quantum, &def, "adjoint", 1, 5, 3).unwrap().to_json().unwrap();
    assert_eq!(json, again);
    assert!(report.decomposition.iter().all(DecompositionRow::passed));
}
