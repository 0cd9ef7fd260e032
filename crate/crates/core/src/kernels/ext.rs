//! Exterior algebra `∧ g*`: anticommuting odd generators `y^a`.

use std::fmt;

use super::{render_indices, Coefficient, Poly};
use crate::Scalar;

/// `y^{a_1} ∧ … ∧ y^{a_k}` with strictly increasing indices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtMonomial(Vec<usize>);

impl ExtMonomial {
    pub fn one() -> Self {
        ExtMonomial(Vec::new())
    }

    pub fn generator(a: usize) -> Self {
        ExtMonomial(vec![a])
    }

    /// Panics unless `idx` is strictly increasing.
    pub fn from_sorted(idx: Vec<usize>) -> Self {
        assert!(idx.windows(2).all(|w| w[0] < w[1]), "indices must be strictly increasing");
        ExtMonomial(idx)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_odd(&self) -> bool {
        self.0.len() % 2 == 1
    }

    /// `self ∧ other` as `(negative?, monomial)`, or `None` when an index
    /// repeats. The sign is the parity of the merge permutation.
    pub fn mul(&self, other: &ExtMonomial) -> Option<(bool, ExtMonomial)> {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let mut inversions = 0usize;
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => {
                    out.push(self.0[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    // other[j] jumps over the remaining self.0[i..]
                    inversions += self.0.len() - i;
                    out.push(other.0[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => return None,
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Some((inversions % 2 == 1, ExtMonomial(out)))
    }

    /// Removes the generator at `pos`, returning the sign `(−1)^pos` of
    /// moving it to the front.
    pub fn remove_at(&self, pos: usize) -> (bool, ExtMonomial) {
        let mut idx = self.0.clone();
        idx.remove(pos);
        (pos % 2 == 1, ExtMonomial(idx))
    }

    /// Every subset of `0..n` in order of (size, lex).
    pub fn all(n: usize) -> Vec<ExtMonomial> {
        let mut out: Vec<ExtMonomial> = (0u64..(1u64 << n))
            .map(|mask| ExtMonomial((0..n).filter(|i| mask & (1 << i) != 0).collect()))
            .collect();
        out.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
        out
    }
}

impl fmt::Display for ExtMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_indices('y', &self.0))
    }
}

impl fmt::Debug for ExtMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn mul_ext<C: Coefficient>(
    a: &Poly<ExtMonomial, C>,
    b: &Poly<ExtMonomial, C>,
) -> Poly<ExtMonomial, C> {
    a.product_with(b, |x, y| match x.mul(y) {
        None => Vec::new(),
        Some((neg, m)) => vec![(if neg { -Scalar::one() } else { Scalar::one() }, m)],
    })
}
