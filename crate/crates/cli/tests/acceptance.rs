//! Acceptance run: one line per criterion, each with a wall-clock limit.
//! Runs without the libtest harness so the lines always print.

use std::path::PathBuf;
use std::process::{Command, ExitCode, Output};
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::Rng;
use weil_core::classical::plain::{self, PlainElement};
use weil_core::classical::{ClassicalElement, ClassicalTerms, ClassicalWeil};
use weil_core::flat::{decomposition_check, flat_subspace, inclusion_report, Context};
use weil_core::identities::{self as ids, classical_suite, quantum_suite, SuiteConfig, SuiteReport};
use weil_core::kernels::pbw::normalize_word;
use weil_core::kernels::RewriteStrategy;
use weil_core::lie::{builtin, builtin_names, AlgebraDef};
use weil_core::linalg::nullspace;
use weil_core::quantum::{QuantumElement, QuantumWeil};
use weil_core::{random, Matrix, Scalar};

const WEIL: &str = env!("CARGO_BIN_EXE_weil");
const REPS: [&str; 3] = ["trivial", "standard", "adjoint"];

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn def(name: &str) -> AlgebraDef {
    builtin(name).expect("builtin")
}

fn require(report: &SuiteReport, names: &[&str]) -> Result<usize, String> {
    let mut cases = 0;
    for name in names {
        let c = report
            .check(name)
            .ok_or_else(|| format!("{} {} {}: no check {name:?}", report.context, report.algebra, report.rep))?;
        ensure(c.passed, || {
            format!(
                "{} {} {}: {name} failed: {}",
                report.context,
                report.algebra,
                report.rep,
                c.detail.clone().unwrap_or_default()
            )
        })?;
        cases += c.cases;
    }
    Ok(cases)
}

fn criterion_1() -> Check {
    let names = [
        ids::CLASSICAL_CARTAN,
        ids::CLASSICAL_LIE_D,
        ids::CLASSICAL_LIE_IOTA,
        ids::CLASSICAL_CURVED,
        ids::CLASSICAL_BIANCHI,
    ];
    let cfg = SuiteConfig::default();
    let mut cases = 0;
    for name in builtin_names() {
        let d = def(name);
        for rep in REPS {
            let report = classical_suite(&d, rep, &cfg).map_err(|e| e.to_string())?;
            cases += require(&report, &names)?;
        }
    }
    Ok(format!("12 algebra/rep pairs, {} samples each, {cases} identity cases", cfg.samples))
}

fn to_plain(x: &ClassicalElement) -> PlainElement {
    x.terms()
        .iter()
        .map(|(k, m)| {
            let c = m.as_scalar_multiple().expect("identity matrix part");
            ((k.sym.exponents().to_vec(), k.ext.indices().to_vec()), c)
        })
        .collect()
}

/// Replaces every matrix part by `c * I` with `c` its top-left entry.
fn with_identity(w: &Arc<ClassicalWeil>, x: &ClassicalElement) -> ClassicalElement {
    let mut out = ClassicalTerms::zero();
    for (k, m) in x.terms().iter() {
        out.add_term(k.clone(), Matrix::scalar(w.dim_v(), m.get(0, 0).clone()));
    }
    ClassicalElement::from_terms(w, out)
}

fn criterion_2() -> Check {
    for name in builtin_names() {
        let d = def(name);
        let w = ClassicalWeil::new(d.lie.clone(), d.rep("adjoint").unwrap().clone()).unwrap();
        let mut rng = random::rng(2);
        let mut tested = 0;
        while tested < 100 {
            let x = with_identity(&w, &random::classical(&w, &mut rng, 4));
            if x.is_zero() {
                continue;
            }
            tested += 1;
            let dx = x.differential();
            ensure(to_plain(&dx) == plain::differential(&d.lie, &to_plain(&x)), || {
                format!("{name}: d differs from the Weil differential on {x}")
            })?;
            ensure(dx.differential().is_zero(), || format!("{name}: d(d(x)) != 0 for {x}"))?;
        }
    }
    Ok("100 identity-matrix elements per algebra".into())
}

fn criterion_3() -> Check {
    for name in builtin_names() {
        let d = def(name);
        let w = ClassicalWeil::new(d.lie.clone(), d.rep("trivial").unwrap().clone()).unwrap();
        let n = w.dim();
        let mut rng = random::rng(3);
        let mut tested = 0;
        while tested < 100 {
            let mut f = ClassicalElement::zero(&w);
            for _ in 0..3 {
                let mut mono = ClassicalElement::scalar(&w, random::scalar(&mut rng));
                for _ in 0..rng.gen_range(0..=4) {
                    mono = &mono * &ClassicalElement::v(&w, rng.gen_range(0..n)).unwrap();
                }
                f = &f + &mono;
            }
            if f.is_zero() {
                continue;
            }
            tested += 1;
            let sum = (0..n).fold(ClassicalElement::zero(&w), |acc, a| {
                &acc + &(&ClassicalElement::v(&w, a).unwrap() * &f.lie_derivative(a).unwrap())
            });
            ensure(sum.is_zero(), || format!("{name}: v^a L_a f = {sum} for f = {f}"))?;
        }
    }
    Ok("100 symmetric polynomials per algebra".into())
}

fn criterion_4() -> Check {
    let names = [
        ids::QUANTUM_X_G,
        ids::QUANTUM_X_GAMMA,
        ids::QUANTUM_X_DIRAC,
        ids::QUANTUM_UG_DIRAC,
        ids::QUANTUM_DIRAC_SQUARE,
        ids::QUANTUM_GAMMA_SQUARE,
    ];
    let cfg = SuiteConfig {
        samples: 20,
        ..SuiteConfig::default()
    };
    for name in ["so3", "abelian(2)"] {
        let d = def(name);
        require(&quantum_suite(&d, "trivial", &cfg).map_err(|e| e.to_string())?, &names)?;
        let w = QuantumWeil::new(d.lie.clone(), d.form.as_ref(), d.rep("trivial").unwrap().clone()).unwrap();
        let gamma = QuantumElement::gamma(&w);
        let sq = &gamma * &gamma;
        let sum_f2: Scalar = d.lie.entries().map(|(_, v)| v * v).sum();
        let expect = -(sum_f2 / Scalar::from_int(48));
        ensure(sq == QuantumElement::scalar(&w, expect.clone()), || {
            format!("{name}: gamma^2 = {sq}, expected {expect}")
        })?;
    }
    // by hand: x1x2x3x1x2x3 = x1x1 x2x3x2x3 = 1/2 (-x2x2 x3x3) = -1/8
    let d = def("so3");
    let w = QuantumWeil::new(d.lie.clone(), d.form.as_ref(), d.rep("trivial").unwrap().clone()).unwrap();
    let x: Vec<QuantumElement> = (0..3).map(|a| QuantumElement::x(&w, a).unwrap()).collect();
    let word = &(&(&(&(&x[0] * &x[1]) * &x[2]) * &x[0]) * &x[1]) * &x[2];
    ensure(word == QuantumElement::scalar(&w, Scalar::ratio(-1, 8)), || {
        format!("so3: (x1x2x3)^2 = {word}")
    })?;
    ensure(QuantumElement::gamma(&w) == -&(&(&x[0] * &x[1]) * &x[2]), || "so3: gamma != -x1x2x3".into())?;
    Ok("so3 and abelian(2); so3 gamma^2 = -1/8".into())
}

fn criterion_5() -> Check {
    let names = [
        ids::QUANTUM_CARTAN,
        ids::QUANTUM_LIE_D,
        ids::QUANTUM_LIE_IOTA,
        ids::QUANTUM_CURVED,
        ids::QUANTUM_BIANCHI,
        ids::QUANTUM_CURVATURE_FORMULA,
        ids::QUANTUM_RESTRICTION,
    ];
    let d = def("so3");
    let cfg = SuiteConfig::default();
    let mut cases = 0;
    for rep in ["trivial", "adjoint"] {
        let report = quantum_suite(&d, rep, &cfg).map_err(|e| e.to_string())?;
        cases += require(&report, &names)?;
        if rep == "adjoint" {
            cases += require(&report, &[ids::QUANTUM_RESTRICTION_WITNESS])?;
        }
    }
    let w = QuantumWeil::new(d.lie.clone(), d.form.as_ref(), d.rep("adjoint").unwrap().clone()).unwrap();
    let x1 = QuantumElement::x(&w, 0).unwrap();
    ensure(x1.differential() != x1.untwisted_differential(), || "d = d^W at x1".into())?;
    Ok(format!("so3 trivial and adjoint, {} samples each, {cases} identity cases", cfg.samples))
}

fn criterion_6() -> Check {
    let lie = def("so3").lie;
    let mut rng = random::rng(6);
    for _ in 0..500 {
        let len = rng.gen_range(0..=5);
        let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..3)).collect();
        let left = normalize_word(&word, &lie, RewriteStrategy::Leftmost);
        let right = normalize_word(&word, &lie, RewriteStrategy::Rightmost);
        ensure(left == right, || format!("strategies disagree on word {word:?}"))?;
    }
    Ok("500 words of length <= 5".into())
}

/// Dimension of `{M : [tau_a, M] = 0 for all a}` from one dense system.
fn commutant_dim(d: &AlgebraDef, rep: &str) -> usize {
    let r = d.rep(rep).unwrap();
    let dv = r.dim_v();
    let n = d.lie.dim();
    let mut m = Matrix::zeros((n * dv * dv).max(1), dv * dv);
    for col in 0..dv * dv {
        let e = Matrix::unit(dv, col / dv, col % dv);
        for a in 0..n {
            let c = r.tau(a).commutator(&e).unwrap();
            for i in 0..dv {
                for j in 0..dv {
                    m.set(a * dv * dv + i * dv + j, col, c.get(i, j).clone());
                }
            }
        }
    }
    nullspace(&m).len()
}

fn criterion_7() -> Check {
    for name in ["so3", "sl2"] {
        let d = def(name);
        for rep in ["adjoint", "standard"] {
            for row in inclusion_report(Context::Classical, &d, rep, 2).map_err(|e| e.to_string())? {
                ensure(row.basic_subset_flat, || format!("{name} {rep}: basic not in flat at degree {}", row.deg))?;
            }
        }
    }
    for row in decomposition_check(Context::Classical, &def("so3"), "adjoint", 1).map_err(|e| e.to_string())? {
        ensure(row.dim_full_flat == row.odd_factor_dim * row.dim_hor_flat && row.passed(), || {
            format!("decomposition fails: {row:?}")
        })?;
    }
    let mut compared = 0;
    for name in builtin_names() {
        let d = def(name);
        for rep in REPS {
            let flat = flat_subspace(Context::Classical, &d, rep, 0).map_err(|e| e.to_string())?;
            let oracle = commutant_dim(&d, rep);
            ensure(flat.dims()[0] == oracle, || {
                format!("{name} {rep}: degree-0 flat {} vs commutant {oracle}", flat.dims()[0])
            })?;
            compared += 1;
        }
    }
    Ok(format!("inclusion on 4 pairs, decomposition, {compared} commutant comparisons"))
}

fn weil(args: &[&str]) -> Output {
    Command::new(WEIL).args(args).output().expect("run weil")
}

fn criterion_8() -> Check {
    let args = [
        "flat", "--quantum", "--builtin", "so3", "--rep", "adjoint", "--max-degree", "2", "--json",
    ];
    let first = weil(&args);
    let second = weil(&args);
    ensure(first.status.success(), || {
        format!("exit {:?}: {}", first.status.code(), String::from_utf8_lossy(&first.stderr))
    })?;
    ensure(first.stdout == second.stdout, || "runs differ".into())?;
    let json: serde_json::Value = serde_json::from_slice(&first.stdout).map_err(|e| e.to_string())?;
    ensure(json["schema"] == 1, || "schema is not 1".into())?;
    let rows = json["per_degree"].as_array().ok_or("no per_degree")?;
    ensure(rows.len() == 3, || format!("{} degree rows", rows.len()))?;
    let dims: Vec<String> = rows.iter().map(|r| r["dim_flat"].to_string()).collect();
    for r in rows {
        ensure(r["basic_subset_flat_status"] == "observed", || "status is not observed".into())?;
    }
    Ok(format!("schema 1, byte-identical reruns, flat dims {}", dims.join("/")))
}

fn so3_file(f_key: &str, entries: &str) -> String {
    format!(
        r#"{{"dim": 3, "{f_key}": [{entries}], "B": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]}}"#
    )
}

fn criterion_9() -> Check {
    for flag in ["--classical", "--quantum"] {
        let out = weil(&["check", "--builtin", "so3", "--rep", "adjoint", flag]);
        ensure(out.status.code() == Some(0), || {
            format!("check {flag} exit {:?}:\n{}", out.status.code(), String::from_utf8_lossy(&out.stdout))
        })?;
    }
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let upper = r#"[1, 2, 3, "1"], [2, 3, 1, "1"], [1, 3, 2, "-1"]"#;
    let full = r#"[1, 2, 3, "1"], [2, 1, 3, "-1"], [2, 3, 1, "1"], [3, 2, 1, "-1"], [3, 1, 2, "1"], [1, 3, 2, "-1"]"#;
    let cases = [
        ("upper", so3_file("f", upper), r#"[2, 3, 1, "1"]"#, r#"[2, 3, 1, "2"]"#, "(2, 3, 1)"),
        ("full", so3_file("f_full", full), r#"[2, 1, 3, "-1"]"#, r#"[2, 1, 3, "-2"]"#, "(1, 2, 3)"),
    ];
    for (label, good, from, to, triple) in cases {
        let good_path = dir.join(format!("so3_{label}.json"));
        let bad_path = dir.join(format!("so3_{label}_corrupt.json"));
        std::fs::write(&good_path, &good).map_err(|e| e.to_string())?;
        std::fs::write(&bad_path, good.replace(from, to)).map_err(|e| e.to_string())?;
        let ok = weil(&["validate", good_path.to_str().unwrap()]);
        ensure(ok.status.code() == Some(0), || format!("{label}: clean file does not validate"))?;
        let bad = weil(&["validate", bad_path.to_str().unwrap()]);
        let text = String::from_utf8_lossy(&bad.stdout);
        ensure(bad.status.code() == Some(1), || format!("{label}: corrupted file exit {:?}", bad.status.code()))?;
        ensure(text.contains(triple), || format!("{label}: triple {triple} not named in:\n{text}"))?;
    }
    Ok("check exits 0 in both contexts; corrupted upper and full tables exit 1".into())
}

fn main() -> ExitCode {
    // (number, description, limit in seconds, body)
    type Criterion = (u32, &'static str, u64, fn() -> Check);
    let criteria: [Criterion; 9] = [
        (1, "classical identity suite", 30, criterion_1),
        (2, "classical restriction", 5, criterion_2),
        (3, "lemma v^a L_a f = 0", 5, criterion_3),
        (4, "quantum structural lemmas", 10, criterion_4),
        (5, "quantum operator suite", 60, criterion_5),
        (6, "PBW confluence", 10, criterion_6),
        (7, "flat-solver theorems", 120, criterion_7),
        (8, "quantum flat evidence artifact", 180, criterion_8),
        (9, "CLI contract", 30, criterion_9),
    ];
    let mut failed = 0;
    for (n, what, limit, run) in criteria {
        let start = Instant::now();
        let result = run();
        let took = start.elapsed();
        let in_time = took <= Duration::from_secs(limit);
        let (status, detail) = match (&result, in_time) {
            (Ok(d), true) => ("PASS", d.clone()),
            (Ok(d), false) => ("FAIL", format!("over time limit; {d}")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {n}: {status}  {what}  ({:.2}s, limit {limit}s)  {detail}",
            took.as_secs_f64()
        );
    }
    println!("acceptance: {} of 9 criteria pass", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
