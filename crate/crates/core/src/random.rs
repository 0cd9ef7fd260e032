//! Seeded random elements for identity sampling.

use std::sync::Arc;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

use crate::classical::{ClassicalElement, ClassicalKey, ClassicalTerms, ClassicalWeil};
use crate::kernels::{CliffMonomial, ExtMonomial, PbwMonomial, SymMonomial};
use crate::linalg::{Matrix, Scalar};
use crate::quantum::{QuantumElement, QuantumKey, QuantumTerms, QuantumWeil};

pub type Rng64 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small nonzero rational, numerators in `-3..=3`, denominators `1..=2`.
pub fn scalar(rng: &mut Rng64) -> Scalar {
    loop {
        let p = rng.gen_range(-3..=3);
        if p != 0 {
            return Scalar::ratio(p, rng.gen_range(1..=2));
        }
    }
}

/// Either a scalar multiple of the identity or a sparse random matrix.
pub fn matrix(rng: &mut Rng64, d: usize) -> Matrix {
    if d == 1 || rng.gen_bool(0.4) {
        return Matrix::scalar(d, scalar(rng));
    }
    let mut m = Matrix::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            if rng.gen_bool(0.4) {
                m.set(i, j, scalar(rng));
            }
        }
    }
    if m.is_zero() {
        m.set(0, 0, Scalar::one());
    }
    m
}

fn exponents(rng: &mut Rng64, n: usize, degree: u32) -> Vec<u32> {
    let mut e = vec![0u32; n];
    for _ in 0..degree {
        e[rng.gen_range(0..n)] += 1;
    }
    e
}

fn subset(rng: &mut Rng64, n: usize, size: usize) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..n).collect();
    for i in 0..size.min(n) {
        let j = rng.gen_range(i..n);
        idx.swap(i, j);
    }
    let mut out = idx[..size.min(n)].to_vec();
    out.sort_unstable();
    out
}

/// A homogeneous classical element of `degree` with at most `terms` terms.
pub fn classical_homogeneous(
    alg: &Arc<ClassicalWeil>,
    rng: &mut Rng64,
    degree: usize,
    terms: usize,
) -> ClassicalElement {
    let n = alg.dim();
    let mut out = ClassicalTerms::zero();
    for _ in 0..terms {
        let max_ext = degree.min(n);
        let candidates: Vec<usize> = (0..=max_ext).filter(|e| (degree - e).is_multiple_of(2)).collect();
        let ext_deg = candidates[rng.gen_range(0..candidates.len())];
        let sym = exponents(rng, n, ((degree - ext_deg) / 2) as u32);
        let ext = subset(rng, n, ext_deg);
        out.add_term(
            ClassicalKey::new(SymMonomial::from_exponents(sym), ExtMonomial::from_sorted(ext)),
            matrix(rng, alg.dim_v()),
        );
    }
    ClassicalElement::from_terms(alg, out)
}

/// A classical element mixing degrees up to `max_degree`.
pub fn classical(alg: &Arc<ClassicalWeil>, rng: &mut Rng64, max_degree: usize) -> ClassicalElement {
    let mut out = ClassicalElement::zero(alg);
    for deg in 0..=max_degree {
        if rng.gen_bool(0.6) {
            out = &out + &classical_homogeneous(alg, rng, deg, 2);
        }
    }
    out
}

/// A quantum element of filtration degree at most `max_filtration` with up
/// to `terms` terms.
pub fn quantum(alg: &Arc<QuantumWeil>, rng: &mut Rng64, max_filtration: usize, terms: usize) -> QuantumElement {
    let n = alg.dim();
    let mut out = QuantumTerms::zero();
    for _ in 0..terms {
        let size = rng.gen_range(0..=n.min(max_filtration));
        let deg = rng.gen_range(0..=(max_filtration - size) / 2) as u32;
        let pbw = exponents(rng, n, deg);
        let cl = subset(rng, n, size);
        out.add_term(
            QuantumKey::new(PbwMonomial::from_exponents(pbw), CliffMonomial::from_sorted(cl)),
            matrix(rng, alg.dim_v()),
        );
    }
    QuantumElement::from_terms(alg, out)
}

/// A quantum element of a single parity.
pub fn quantum_of_parity(
    alg: &Arc<QuantumWeil>,
    rng: &mut Rng64,
    max_filtration: usize,
    terms: usize,
    odd: bool,
) -> QuantumElement {
    let x = quantum(alg, rng, max_filtration, terms);
    let (even, oddp) = x.parity_parts();
    if odd {
        oddp
    } else {
        even
    }
}
