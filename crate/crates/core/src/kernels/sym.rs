//! Symmetric algebra `S g*`: commuting even generators `v^a`.

use std::fmt;

use super::{render_exponents, Coefficient, Poly};

/// `Π (v^a)^{k_a}` as its exponent vector.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymMonomial(Vec<u32>);

impl SymMonomial {
    pub fn one(n: usize) -> Self {
        SymMonomial(vec![0; n])
    }

    pub fn generator(n: usize, a: usize) -> Self {
        let mut e = vec![0; n];
        e[a] = 1;
        SymMonomial(e)
    }

    pub fn from_exponents(e: Vec<u32>) -> Self {
        SymMonomial(e)
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

    pub fn mul(&self, other: &SymMonomial) -> SymMonomial {
        SymMonomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / v^a`, if `v^a` divides.
    pub fn without(&self, a: usize) -> Option<SymMonomial> {
        if self.0[a] == 0 {
            return None;
        }
        let mut e = self.0.clone();
        e[a] -= 1;
        Some(SymMonomial(e))
    }

    /// All monomials of exactly `degree` in `n` variables, in lex order of
    /// exponent vectors (descending powers of `v1` first).
    pub fn all_of_degree(n: usize, degree: u32) -> Vec<SymMonomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; n];
        fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<SymMonomial>) {
            let n = cur.len();
            if n == 0 {
                if left == 0 {
                    out.push(SymMonomial(Vec::new()));
                }
                return;
            }
            if i == n - 1 {
                cur[i] = left;
                out.push(SymMonomial(cur.clone()));
                cur[i] = 0;
                return;
            }
            for k in (0..=left).rev() {
                cur[i] = k;
                rec(i + 1, left - k, cur, out);
            }
            cur[i] = 0;
        }
        rec(0, degree, &mut cur, &mut out);
        out
    }
}

impl fmt::Display for SymMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_exponents('v', &self.0))
    }
}

impl fmt::Debug for SymMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn mul_sym<C: Coefficient>(
    a: &Poly<SymMonomial, C>,
    b: &Poly<SymMonomial, C>,
) -> Poly<SymMonomial, C> {
    a.product_with(b, |x, y| vec![(crate::Scalar::one(), x.mul(y))])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Scalar;

    fn v(n: usize, a: usize) -> Poly<SymMonomial, Scalar> {
        Poly::term(SymMonomial::generator(n, a), Scalar::one())
    }

    #[test]
    fn products() {
        let p = mul_sym(&v(2, 0), &v(2, 1));
        assert_eq!(p, Poly::term(SymMonomial::from_exponents(vec![1, 1]), Scalar::one()));
        let sq = mul_sym(&v(2, 0), &v(2, 0));
        assert_eq!(sq.iter().next().unwrap().0.to_string(), "v1^2");
        let sum = v(2, 0).plus(&v(2, 1));
        let diff = v(2, 0).minus(&v(2, 1));
        let expect = mul_sym(&v(2, 0), &v(2, 0)).minus(&mul_sym(&v(2, 1), &v(2, 1)));
        assert_eq!(mul_sym(&sum, &diff), expect);
    }

    #[test]
    fn enumeration_counts() {
        // C(n + k - 1, k)
        assert_eq!(SymMonomial::all_of_degree(3, 0).len(), 1);
        assert_eq!(SymMonomial::all_of_degree(3, 2).len(), 6);
        assert_eq!(SymMonomial::all_of_degree(3, 4).len(), 15);
        assert_eq!(SymMonomial::all_of_degree(0, 0).len(), 1);
        assert_eq!(SymMonomial::all_of_degree(0, 1).len(), 0);
        let d2 = SymMonomial::all_of_degree(2, 2);
        let names: Vec<_> = d2.iter().map(ToString::to_string).collect();
        assert_eq!(names, ["v1^2", "v1*v2", "v2^2"]);
    }
}
