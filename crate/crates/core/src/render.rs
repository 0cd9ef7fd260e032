//! Canonical text form shared by both Weil algebras.
//!
//! A term whose matrix part is `c·I` prints as `c*mono` (or just `c`, or
//! `mono`); any other matrix part prints as `mono ⊗ [[..]]`. The output is
//! valid input for the expression language, where `⊗` is a product.

use crate::linalg::{Matrix, Scalar};

pub(crate) const TENSOR: &str = " \u{2297} ";

pub(crate) fn render_terms<'a, I>(terms: I) -> String
where
    I: IntoIterator<Item = (String, &'a Matrix)>,
{
    let mut out = String::new();
    for (i, (mono, m)) in terms.into_iter().enumerate() {
        let (negative, body) = render_term(&mono, m);
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn render_term(mono: &str, m: &Matrix) -> (bool, String) {
    let is_one = mono == "1";
    match m.as_scalar_multiple() {
        Some(c) => {
            let neg = c.is_negative();
            let abs = c.abs();
            let body = if is_one {
                abs.to_string()
            } else if abs == Scalar::one() {
                mono.to_string()
            } else {
                format!("{abs}*{mono}")
            };
            (neg, body)
        }
        None if is_one => (false, m.to_string()),
        None => (false, format!("{mono}{TENSOR}{m}")),
    }
}

/// Joins two monomial renderings, dropping trivial `1` factors.
pub(crate) fn join_factors(parts: &[String], sep: &str) -> String {
    let nontrivial: Vec<&str> = parts
        .iter()
        .map(String::as_str)
        .filter(|p| *p != "1")
        .collect();
    if nontrivial.is_empty() {
        "1".into()
    } else {
        nontrivial.join(sep)
    }
}
