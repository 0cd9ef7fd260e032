//! The ordinary Weil algebra `W(g*) = S g* ⊗ ∧ g*` with scalar coefficients,
//! differential written as `d = Σ v^a ι_a + Σ y^a (L^S_a + ½ L^∧_a)`.
//!
//! This is deliberately separate from the derivation engine in the parent
//! module: monomials are raw exponent/index vectors, signs come from a
//! bubble sort, and nothing is shared beyond the structure constants. It
//! serves as an oracle for the trivial-representation case.

use std::collections::BTreeMap;

use crate::lie::LieData;
use crate::linalg::Scalar;

/// `(v exponents, sorted y indices) -> coefficient`.
pub type PlainElement = BTreeMap<(Vec<u32>, Vec<usize>), Scalar>;

fn add(out: &mut PlainElement, key: (Vec<u32>, Vec<usize>), c: Scalar) {
    if c.is_zero() {
        return;
    }
    let e = out.entry(key.clone()).or_insert_with(Scalar::zero);
    *e += &c;
    if e.is_zero() {
        out.remove(&key);
    }
}

/// Sorts a word of odd generators; `None` if a generator repeats.
fn sort_odd(mut w: Vec<usize>) -> Option<(Scalar, Vec<usize>)> {
    let mut sign = Scalar::one();
    for i in 0..w.len() {
        for j in 0..w.len().saturating_sub(1 + i) {
            if w[j] > w[j + 1] {
                w.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    if w.windows(2).any(|p| p[0] == p[1]) {
        None
    } else {
        Some((sign, w))
    }
}

/// `ι_a` on a single monomial.
fn contract(a: usize, sym: &[u32], ext: &[usize], c: &Scalar, out: &mut PlainElement) {
    if let Some(pos) = ext.iter().position(|&b| b == a) {
        let mut rest = ext.to_vec();
        rest.remove(pos);
        let s = if pos % 2 == 1 { -c } else { c.clone() };
        add(out, (sym.to_vec(), rest), s);
    }
}

/// `L^S_a`, acting on the symmetric factor only.
fn lie_sym(lie: &LieData, a: usize, sym: &[u32], ext: &[usize], c: &Scalar, out: &mut PlainElement) {
    let n = lie.dim();
    for col in 0..n {
        if sym[col] == 0 {
            continue;
        }
        for b in 0..n {
            let f = lie.f(a, b, col);
            if f.is_zero() {
                continue;
            }
            let mut e = sym.to_vec();
            e[col] -= 1;
            e[b] += 1;
            add(out, (e, ext.to_vec()), -(c * &f) * Scalar::from_int(sym[col] as i64));
        }
    }
}

/// `L^∧_a`, acting on the exterior factor only.
fn lie_ext(lie: &LieData, a: usize, sym: &[u32], ext: &[usize], c: &Scalar, out: &mut PlainElement) {
    let n = lie.dim();
    for pos in 0..ext.len() {
        for b in 0..n {
            let f = lie.f(a, b, ext[pos]);
            if f.is_zero() {
                continue;
            }
            let mut w = ext.to_vec();
            w[pos] = b;
            if let Some((s, w)) = sort_odd(w) {
                add(out, (sym.to_vec(), w), -(c * &f) * s);
            }
        }
    }
}

fn left_mul_v(a: usize, x: PlainElement, out: &mut PlainElement) {
    for ((mut sym, ext), c) in x {
        sym[a] += 1;
        add(out, (sym, ext), c);
    }
}

fn left_mul_y(a: usize, x: PlainElement, out: &mut PlainElement) {
    for ((sym, ext), c) in x {
        let mut w = vec![a];
        w.extend(ext);
        if let Some((s, w)) = sort_odd(w) {
            add(out, (sym, w), c * s);
        }
    }
}

pub fn differential(lie: &LieData, x: &PlainElement) -> PlainElement {
    let n = lie.dim();
    let half = Scalar::ratio(1, 2);
    let mut out = PlainElement::new();
    for a in 0..n {
        let mut iota = PlainElement::new();
        let mut lie_part = PlainElement::new();
        for ((sym, ext), c) in x {
            contract(a, sym, ext, c, &mut iota);
            lie_sym(lie, a, sym, ext, c, &mut lie_part);
            lie_ext(lie, a, sym, ext, &(c * &half), &mut lie_part);
        }
        left_mul_v(a, iota, &mut out);
        left_mul_y(a, lie_part, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::builtin;

    #[test]
    fn squares_to_zero_on_generators() {
        for name in ["so3", "sl2", "heisenberg3"] {
            let lie = builtin(name).unwrap().lie;
            for a in 0..3 {
                for odd in [false, true] {
                    let mut x = PlainElement::new();
                    let mut sym = vec![0; 3];
                    let mut ext = Vec::new();
                    if odd {
                        ext.push(a);
                    } else {
                        sym[a] = 1;
                    }
                    x.insert((sym, ext), Scalar::one());
                    let dd = differential(&lie, &differential(&lie, &x));
                    assert!(dd.is_empty(), "{name} generator {a}");
                }
            }
        }
    }
}
