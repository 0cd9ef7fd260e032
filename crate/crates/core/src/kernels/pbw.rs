//! Universal enveloping algebra `U(g)` in PBW normal form.
//!
//! Monomials are ordered products `u_1^{k_1} … u_n^{k_n}`. Straightening uses
//! `u_b u_a = u_a u_b + f^c_{ba} u_c` for `b > a`.

use std::collections::BTreeMap;
use std::fmt;

use super::{render_exponents, Coefficient, Poly};
use crate::lie::LieData;
use crate::Scalar;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PbwMonomial(Vec<u32>);

impl PbwMonomial {
    pub fn one(n: usize) -> Self {
        PbwMonomial(vec![0; n])
    }

    pub fn generator(n: usize, a: usize) -> Self {
        let mut e = vec![0; n];
        e[a] = 1;
        PbwMonomial(e)
    }

    pub fn from_exponents(e: Vec<u32>) -> Self {
        PbwMonomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&k| k == 0)
    }

    /// The ordered word `1…1 2…2 …` spelled out.
    pub fn word(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &k)| std::iter::repeat_n(i, k as usize))
            .collect()
    }

    fn max_index(&self) -> Option<usize> {
        self.0.iter().rposition(|&k| k > 0)
    }

    fn bump(&self, a: usize, by: i64) -> PbwMonomial {
        let mut e = self.0.clone();
        e[a] = (e[a] as i64 + by) as u32;
        PbwMonomial(e)
    }

    /// All monomials of exactly `degree`, lex order on exponent vectors.
    pub fn all_of_degree(n: usize, degree: u32) -> Vec<PbwMonomial> {
        super::SymMonomial::all_of_degree(n, degree)
            .into_iter()
            .map(|m| PbwMonomial(m.exponents().to_vec()))
            .collect()
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_exponents('u', &self.0))
    }
}

impl fmt::Debug for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

type Expansion = BTreeMap<PbwMonomial, Scalar>;

fn add_into(acc: &mut Expansion, m: PbwMonomial, c: Scalar) {
    if c.is_zero() {
        return;
    }
    let e = acc.entry(m).or_insert_with(Scalar::zero);
    *e += &c;
}

/// `m · u_k`, moving `u_k` left past every larger generator.
fn append(m: &PbwMonomial, k: usize, lie: &LieData, coeff: &Scalar, out: &mut Expansion) {
    match m.max_index() {
        Some(j) if j > k => {
            // m u_k = p u_j u_k = (p u_k) u_j + f^c_{jk} p u_c
            let prefix = m.bump(j, -1);
            let mut moved = Expansion::new();
            append(&prefix, k, lie, &Scalar::one(), &mut moved);
            for (w, c) in moved {
                // bracket terms inside `moved` may carry indices above j
                append(&w, j, lie, &(coeff * &c), out);
            }
            for (c_idx, f) in lie.bracket(j, k) {
                append(&prefix, *c_idx, lie, &(coeff * f), out);
            }
        }
        _ => add_into(out, m.bump(k, 1), coeff.clone()),
    }
}

/// Normal form of the product of two PBW monomials.
pub fn mono_mul(a: &PbwMonomial, b: &PbwMonomial, lie: &LieData) -> Vec<(Scalar, PbwMonomial)> {
    let mut acc = Expansion::new();
    acc.insert(a.clone(), Scalar::one());
    for k in b.word() {
        let mut next = Expansion::new();
        for (m, c) in &acc {
            append(m, k, lie, c, &mut next);
        }
        next.retain(|_, c| !c.is_zero());
        acc = next;
    }
    acc.into_iter().map(|(m, c)| (c, m)).collect()
}

pub fn mul_pbw<C: Coefficient>(
    a: &Poly<PbwMonomial, C>,
    b: &Poly<PbwMonomial, C>,
    lie: &LieData,
) -> Poly<PbwMonomial, C> {
    a.product_with(b, |x, y| mono_mul(x, y, lie))
}

/// Which out-of-order adjacent pair to rewrite next when straightening a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RewriteStrategy {
    Leftmost,
    Rightmost,
}

/// Straightens an arbitrary word `u_{w_1} … u_{w_k}` by repeatedly rewriting
/// one descent `u_b u_a → u_a u_b + f^c_{ba} u_c`, chosen by `pick` from the
/// list of descent positions. Independent of [`mono_mul`].
pub fn normalize_word_with<F>(word: &[usize], lie: &LieData, pick: &mut F) -> Poly<PbwMonomial, Scalar>
where
    F: FnMut(&[usize]) -> usize,
{
    let n = lie.dim();
    let mut out: Poly<PbwMonomial, Scalar> = Poly::zero();
    let mut stack: Vec<(Scalar, Vec<usize>)> = vec![(Scalar::one(), word.to_vec())];
    while let Some((c, w)) = stack.pop() {
        let descents: Vec<usize> = (0..w.len().saturating_sub(1)).filter(|&i| w[i] > w[i + 1]).collect();
        if descents.is_empty() {
            let mut e = vec![0u32; n];
            for &i in &w {
                e[i] += 1;
            }
            out.add_term(PbwMonomial(e), c);
            continue;
        }
        let i = pick(&descents);
        let (b, a) = (w[i], w[i + 1]);
        let mut swapped = w.clone();
        swapped.swap(i, i + 1);
        for (k, f) in lie.bracket(b, a) {
            let mut shorter = w[..i].to_vec();
            shorter.push(*k);
            shorter.extend_from_slice(&w[i + 2..]);
            stack.push((&c * f, shorter));
        }
        stack.push((c, swapped));
    }
    out
}

pub fn normalize_word(word: &[usize], lie: &LieData, strategy: RewriteStrategy) -> Poly<PbwMonomial, Scalar> {
    match strategy {
        RewriteStrategy::Leftmost => normalize_word_with(word, lie, &mut |d: &[usize]| d[0]),
        RewriteStrategy::Rightmost => normalize_word_with(word, lie, &mut |d: &[usize]| d[d.len() - 1]),
    }
}
