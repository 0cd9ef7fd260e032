//! Clifford algebra `Cl(g)` with relation `x_a x_b + x_b x_a = B_{ab}`.
//!
//! Note the normalisation: generator squares are `B_{aa}/2`, not `B_{aa}`.

use std::collections::BTreeMap;
use std::fmt;

use super::{render_indices, Coefficient, Poly};
use crate::lie::BilinearForm;
use crate::Scalar;

/// `x_{a_1} … x_{a_k}` with strictly increasing indices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CliffMonomial(Vec<usize>);

impl CliffMonomial {
    pub fn one() -> Self {
        CliffMonomial(Vec::new())
    }

    pub fn generator(a: usize) -> Self {
        CliffMonomial(vec![a])
    }

    /// Panics unless `idx` is strictly increasing.
    pub fn from_sorted(idx: Vec<usize>) -> Self {
        assert!(idx.windows(2).all(|w| w[0] < w[1]), "indices must be strictly increasing");
        CliffMonomial(idx)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_odd(&self) -> bool {
        self.0.len() % 2 == 1
    }

    /// Every subset of `0..n` in order of (size, lex).
    pub fn all(n: usize) -> Vec<CliffMonomial> {
        super::ExtMonomial::all(n)
            .into_iter()
            .map(|m| CliffMonomial(m.indices().to_vec()))
            .collect()
    }
}

impl fmt::Display for CliffMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_indices('x', &self.0))
    }
}

impl fmt::Debug for CliffMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `m · x_k` for a normal-ordered word `m`, by moving `x_k` leftwards:
/// `x_j x_k = −x_k x_j + B_{jk}` for `j > k`, `x_k x_k = B_{kk}/2`.
fn append(m: &[usize], k: usize, form: &BilinearForm) -> Vec<(Scalar, Vec<usize>)> {
    match m.split_last() {
        None => vec![(Scalar::one(), vec![k])],
        Some((&j, _)) if j < k => {
            let mut w = m.to_vec();
            w.push(k);
            vec![(Scalar::one(), w)]
        }
        Some((&j, prefix)) if j == k => {
            let half = form.get(k, k) * &Scalar::ratio(1, 2);
            if half.is_zero() {
                Vec::new()
            } else {
                vec![(half, prefix.to_vec())]
            }
        }
        Some((&j, prefix)) => {
            // every index in `prefix` and `k` is below `j`, so re-appending
            // x_j keeps the words ordered
            let mut out: Vec<(Scalar, Vec<usize>)> = append(prefix, k, form)
                .into_iter()
                .map(|(c, mut w)| {
                    w.push(j);
                    (-c, w)
                })
                .collect();
            let b = form.get(j, k);
            if !b.is_zero() {
                out.push((b.clone(), prefix.to_vec()));
            }
            out
        }
    }
}

/// Normal form of the product of two Clifford monomials.
pub fn mono_mul(a: &CliffMonomial, b: &CliffMonomial, form: &BilinearForm) -> Vec<(Scalar, CliffMonomial)> {
    let mut acc: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
    acc.insert(a.0.clone(), Scalar::one());
    for &k in &b.0 {
        let mut next: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
        for (w, c) in &acc {
            for (s, w2) in append(w, k, form) {
                let e = next.entry(w2).or_insert_with(Scalar::zero);
                *e += &(c * &s);
            }
        }
        next.retain(|_, c| !c.is_zero());
        acc = next;
    }
    acc.into_iter().map(|(w, c)| (c, CliffMonomial(w))).collect()
}

/// Normal form of an arbitrary word of generators.
pub fn word(w: &[usize], form: &BilinearForm) -> Vec<(Scalar, CliffMonomial)> {
    let gens: Vec<CliffMonomial> = w.iter().map(|&a| CliffMonomial::generator(a)).collect();
    let mut acc: Poly<CliffMonomial, Scalar> = Poly::term(CliffMonomial::one(), Scalar::one());
    for g in gens {
        acc = acc.product_with(&Poly::term(g, Scalar::one()), |x, y| mono_mul(x, y, form));
    }
    acc.into_terms().into_iter().map(|(m, c)| (c, m)).collect()
}

pub fn mul_clifford<C: Coefficient>(
    a: &Poly<CliffMonomial, C>,
    b: &Poly<CliffMonomial, C>,
    form: &BilinearForm,
) -> Poly<CliffMonomial, C> {
    a.product_with(b, |x, y| mono_mul(x, y, form))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Matrix;
    use proptest::prelude::*;

    fn x(a: usize) -> Poly<CliffMonomial, Scalar> {
        Poly::term(CliffMonomial::generator(a), Scalar::one())
    }

    fn scalar(c: Scalar) -> Poly<CliffMonomial, Scalar> {
        Poly::term(CliffMonomial::one(), c)
    }

    /// Independent oracle: leftmost adjacent-transposition rewriting on
    /// whole words, no insertion recursion.
    fn rewrite_oracle(w: Vec<usize>, form: &BilinearForm) -> BTreeMap<Vec<usize>, Scalar> {
        let mut out = BTreeMap::new();
        let mut stack = vec![(Scalar::one(), w)];
        while let Some((c, w)) = stack.pop() {
            match (0..w.len().saturating_sub(1)).find(|&i| w[i] >= w[i + 1]) {
                None => {
                    let e = out.entry(w).or_insert_with(Scalar::zero);
                    *e += &c;
                }
                Some(i) => {
                    let (p, q) = (w[i], w[i + 1]);
                    let mut rest = w[..i].to_vec();
                    rest.extend_from_slice(&w[i + 2..]);
                    if p == q {
                        stack.push((&c * form.get(p, p) * Scalar::ratio(1, 2), rest));
                    } else {
                        let mut swapped = w.clone();
                        swapped.swap(i, i + 1);
                        stack.push((-&c, swapped));
                        stack.push((&c * form.get(p, q), rest));
                    }
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    #[test]
    fn generator_relations_delta() {
        let b = BilinearForm::identity(3);
        let x21 = mul_clifford(&x(1), &x(0), &b);
        let x12 = mul_clifford(&x(0), &x(1), &b);
        assert_eq!(x21, x12.negated());
        assert_eq!(mul_clifford(&x(0), &x(0), &b), scalar(Scalar::ratio(1, 2)));
    }

    #[test]
    fn top_monomial_squared_so3_normalisation() {
        let b = BilinearForm::identity(3);
        let top = Poly::term(CliffMonomial::from_sorted(vec![0, 1, 2]), Scalar::one());
        assert_eq!(mul_clifford(&top, &top, &b), scalar(Scalar::ratio(-1, 8)));
    }

    #[test]
    fn anticommutator_recovers_form() {
        let b = BilinearForm::new(Matrix::from_i64(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 2]]));
        for p in 0..3 {
            for q in 0..3 {
                let s = mul_clifford(&x(p), &x(q), &b).plus(&mul_clifford(&x(q), &x(p), &b));
                assert_eq!(s, scalar(b.get(p, q).clone()), "({p},{q})");
            }
        }
    }

    fn small_word() -> impl Strategy<Value = Vec<usize>> {
        proptest::collection::vec(0usize..3, 0..=3)
    }

    fn normal(w: &[usize], b: &BilinearForm) -> Poly<CliffMonomial, Scalar> {
        word(w, b).into_iter().map(|(c, m)| (m, c)).collect()
    }

    proptest! {
        #[test]
        fn matches_rewrite_oracle(w in proptest::collection::vec(0usize..4, 0..=6)) {
            let b = BilinearForm::new(Matrix::from_i64(&[
                &[1, 0, 2, 0], &[0, 1, 0, 0], &[2, 0, 1, 1], &[0, 0, 1, 2],
            ]));
            let got: BTreeMap<Vec<usize>, Scalar> =
                word(&w, &b).into_iter().map(|(c, m)| (m.0, c)).collect();
            prop_assert_eq!(got, rewrite_oracle(w, &b));
        }

        #[test]
        fn associative(a in small_word(), bw in small_word(), c in small_word()) {
            let b = BilinearForm::identity(3);
            let (pa, pb, pc) = (normal(&a, &b), normal(&bw, &b), normal(&c, &b));
            let left = mul_clifford(&mul_clifford(&pa, &pb, &b), &pc, &b);
            let right = mul_clifford(&pa, &mul_clifford(&pb, &pc, &b), &b);
            prop_assert_eq!(left, right);
        }

        #[test]
        fn filtration_degree_does_not_grow(a in small_word(), bw in small_word()) {
            let b = BilinearForm::identity(3);
            let p = mul_clifford(&normal(&a, &b), &normal(&bw, &b), &b);
            for (m, _) in p.iter() {
                prop_assert!(m.len() <= a.len() + bw.len());
            }
        }
    }
}
