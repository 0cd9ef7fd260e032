//! Command bodies. Each returns the text to print and an exit status, so the
//! binary only has to parse flags and write output.

use std::fmt::Write as _;
use std::path::Path;

use weil_core::flat::{flat_report, Context, FlatReport};
use weil_core::identities::{classical_suite, quantum_suite, SuiteConfig};
use weil_core::lie::{builtin, builtin_names, load_definition, AlgebraDef};
use weil_core::quantum::casimir_check;
use weil_core::WeilError;

use crate::error::CliError;
use crate::eval::Session;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub code: u8,
}

impl Outcome {
    fn new(text: String, ok: bool) -> Self {
        Outcome {
            text,
            code: if ok { EXIT_OK } else { EXIT_FAILED },
        }
    }
}

/// Where the algebra comes from.
#[derive(Clone, Debug)]
pub enum Source {
    Builtin(String),
    File(String),
}

impl Source {
    pub fn load(&self) -> Result<AlgebraDef, CliError> {
        Ok(match self {
            Source::Builtin(name) => builtin(name)?,
            Source::File(path) => load_definition(Path::new(path))?,
        })
    }
}

fn validation_text(def: &AlgebraDef) -> (String, bool) {
    let mut out = String::new();
    let mut ok = true;
    for r in def.validate() {
        ok &= r.is_ok();
        let _ = writeln!(out, "{r}");
    }
    (out, ok)
}

pub fn validate(source: &Source) -> Result<Outcome, CliError> {
    let def = source.load()?;
    let (mut text, ok) = validation_text(&def);
    let _ = writeln!(text, "{}: {}", def.name, if ok { "valid" } else { "INVALID" });
    Ok(Outcome::new(text, ok))
}

/// Validates, then runs the identity suite. A definition that fails
/// validation never reaches the suite.
pub fn check(source: &Source, rep: &str, context: Context, cfg: &SuiteConfig) -> Result<Outcome, CliError> {
    let def = source.load()?;
    let (text, ok) = validation_text(&def);
    if !ok {
        return Ok(Outcome::new(format!("{text}validation failed; identity suite not run\n"), false));
    }
    check_valid(&def, rep, context, cfg)
}

fn check_valid(def: &AlgebraDef, rep: &str, context: Context, cfg: &SuiteConfig) -> Result<Outcome, CliError> {
    let report = match context {
        Context::Classical => classical_suite(def, rep, cfg)?,
        Context::Quantum => quantum_suite(def, rep, cfg)?,
    };
    let mut text = report.to_string();
    let mut ok = report.passed();
    if context == Context::Quantum {
        let c = casimir_check(&def.lie, def.form.as_ref())?;
        ok &= c.passed();
        let _ = writeln!(text, "  gamma^2 = {}", c.gamma_squared);
    }
    let _ = writeln!(text, "{}", if ok { "all identities pass" } else { "identity failures" });
    Ok(Outcome::new(text, ok))
}

pub fn eval(source: &Source, rep: &str, context: Context, expr: &str) -> Result<Outcome, CliError> {
    let session = Session::new(source.load()?, rep, context)?;
    let value = session.eval_str(expr)?;
    Ok(Outcome::new(format!("{value}\n"), true))
}

pub struct FlatOptions {
    pub max_degree: usize,
    pub samples: usize,
    pub seed: u64,
    pub json: bool,
}

/// Classical rows are theorems, so a failed row fails the command; quantum
/// rows are evidence and only reported.
pub fn flat(source: &Source, rep: &str, context: Context, opts: &FlatOptions) -> Result<Outcome, CliError> {
    let def = source.load()?;
    let report = flat_report(context, &def, rep, opts.max_degree, opts.samples, opts.seed)?;
    let ok = context == Context::Quantum || flat_passed(&report);
    let text = if opts.json {
        report.to_json()? + "\n"
    } else {
        flat_text(&report)
    };
    Ok(Outcome::new(text, ok))
}

fn flat_passed(r: &FlatReport) -> bool {
    r.per_degree.iter().all(|row| row.basic_subset_flat)
        && r.decomposition.iter().all(|row| row.passed())
        && r.closure.passed()
}

fn yes(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

/// Fixed-width columns; `table` pads every column to its widest cell.
fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.len());
        }
    }
    let mut out = String::new();
    let line = |cells: Vec<&str>, out: &mut String| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        let _ = writeln!(out, "  {}", padded.join("  ").trim_end());
    };
    line(header.to_vec(), &mut out);
    for r in rows {
        line(r.iter().map(String::as_str).collect(), &mut out);
    }
    out
}

pub fn flat_text(r: &FlatReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{} {} rep={} N={} ({})",
        r.algebra.name(),
        r.lie,
        r.rep,
        r.n,
        r.grading
    );
    let rows: Vec<Vec<String>> = r
        .per_degree
        .iter()
        .map(|row| {
            vec![
                row.deg.to_string(),
                row.dim_hor.to_string(),
                row.dim_basic.to_string(),
                row.dim_flat.to_string(),
                yes(row.basic_subset_flat).into(),
                row.basic_subset_flat_status.into(),
                yes(row.s_basic_equals_flat).into(),
            ]
        })
        .collect();
    out += &table(
        &["deg", "hor", "basic", "flat", "basic<=flat", "status", "S*basic=flat"],
        &rows,
    );
    let _ = writeln!(out, "decomposition");
    let rows: Vec<Vec<String>> = r
        .decomposition
        .iter()
        .map(|row| {
            vec![
                row.deg.to_string(),
                row.dim_full_flat.to_string(),
                row.dim_hor_flat.to_string(),
                row.odd_factor_dim.to_string(),
                yes(row.dimensions_match).into(),
                yes(row.contains_products).into(),
            ]
        })
        .collect();
    out += &table(&["deg", "full", "hor", "odd", "dims", "products"], &rows);
    let c = &r.closure;
    let _ = writeln!(
        out,
        "closure ({} samples, seed {}): products {}, L {}, iota {}, d {}",
        c.samples, c.seed, c.products_flat, c.lie_images_flat, c.contraction_images_flat, c.differential_images_flat
    );
    out
}

/// `check` and `flat` over every builtin, rep and supported context.
pub fn report_all(cfg: &SuiteConfig, opts: &FlatOptions) -> Result<Outcome, CliError> {
    let mut text = String::new();
    let mut ok = true;
    for name in builtin_names() {
        let def = builtin(name)?;
        let (v, valid) = validation_text(&def);
        text += &v;
        ok &= valid;
        if !valid {
            continue;
        }
        for rep in def.reps.keys() {
            for context in [Context::Classical, Context::Quantum] {
                let checked = match check_valid(&def, rep, context, cfg) {
                    Err(CliError::Core(WeilError::NonOrthonormalForm(why))) => {
                        let _ = writeln!(text, "quantum {name} rep={rep}: skipped ({why})\n");
                        continue;
                    }
                    other => other?,
                };
                ok &= checked.code == EXIT_OK;
                text += &checked.text;
                let report = flat_report(context, &def, rep, opts.max_degree, opts.samples, opts.seed)?;
                ok &= context == Context::Quantum || flat_passed(&report);
                text += &flat_text(&report);
                text.push('\n');
            }
        }
    }
    let _ = writeln!(text, "{}", if ok { "report: all pass" } else { "report: failures" });
    Ok(Outcome::new(text, ok))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn so3() -> Source {
        Source::Builtin("so3".into())
    }

    #[test]
    fn validate_builtin() {
        let out = validate(&so3()).unwrap();
        assert_eq!(out.code, EXIT_OK);
        assert!(out.text.contains("so3: valid"));
        assert!(out.text.contains("orthonormal: yes"));
    }

    #[test]
    fn eval_renders() {
        let out = eval(&so3(), "trivial", Context::Quantum, "gamma*gamma").unwrap();
        assert_eq!(out.text, "-1/8\n");
        assert!(matches!(
            eval(&so3(), "trivial", Context::Quantum, "v1"),
            Err(CliError::Eval(_))
        ));
        assert!(matches!(
            eval(&so3(), "trivial", Context::Quantum, "v1 +"),
            Err(CliError::Parse(_))
        ));
    }

    #[test]
    fn check_small_suite() {
        let cfg = SuiteConfig {
            samples: 5,
            max_degree: 3,
            seed: 1,
        };
        let out = check(&so3(), "adjoint", Context::Quantum, &cfg).unwrap();
        assert_eq!(out.code, EXIT_OK, "{}", out.text);
        assert!(out.text.contains("gamma^2 = -1/8"));
        assert!(!out.text.contains("FAIL"));
    }

    #[test]
    fn flat_trivial_rep_is_everything() {
        let opts = FlatOptions {
            max_degree: 1,
            samples: 5,
            seed: 0,
            json: false,
        };
        let out = flat(&Source::Builtin("sl2".into()), "trivial", Context::Classical, &opts).unwrap();
        assert_eq!(out.code, EXIT_OK);
        // hor = flat = all of S^k(g*) at each degree
        assert!(out.text.contains("  0    1    1      1     true"), "{}", out.text);
        assert!(out.text.contains("  1    3    0      3     true"), "{}", out.text);
    }

    #[test]
    fn unknown_sources() {
        assert!(matches!(
            Source::Builtin("e8".into()).load(),
            Err(CliError::Core(WeilError::UnknownBuiltin(_)))
        ));
        assert!(Source::File("/nonexistent/def.json".into()).load().is_err());
    }
}
