//! Truncated coordinate spaces `(monomial, matrix unit)` and the two
//! algebras seen through a common set of linear operations.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::Hash;
use std::sync::Arc;

use crate::classical::{ClassicalElement, ClassicalKey, ClassicalTerms, ClassicalWeil, Operator};
use crate::kernels::{CliffMonomial, ExtMonomial, PbwMonomial, Poly, SymMonomial};
use crate::linalg::SparseRows;
use crate::linalg::{Matrix, Scalar};
use crate::quantum::{QuantumElement, QuantumKey, QuantumTerms, QuantumWeil};

/// An element returned by the solver, in either algebra.
#[derive(Clone, Debug, PartialEq)]
pub enum FlatElement {
    Classical(ClassicalElement),
    Quantum(QuantumElement),
}

impl fmt::Display for FlatElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FlatElement::Classical(x) => x.fmt(f),
            FlatElement::Quantum(x) => x.fmt(f),
        }
    }
}

/// What the solver needs from an algebra.
pub(crate) trait WeilOps {
    type Key: Ord + Clone + Hash + fmt::Debug;

    fn dim(&self) -> usize;
    fn dim_v(&self) -> usize;
    /// Horizontal keys of exactly this symmetric/PBW degree.
    fn hor_keys(&self, degree: usize) -> Vec<Self::Key>;
    /// All keys of this symmetric/PBW degree, any exterior/Clifford part.
    fn full_keys(&self, degree: usize) -> Vec<Self::Key>;
    /// Exterior or Clifford monomial count, `2^n`.
    fn odd_factor_dim(&self) -> usize {
        1 << self.dim()
    }
    /// Multiplies a horizontal element by every exterior/Clifford monomial.
    fn odd_multiples(&self, x: &Poly<Self::Key, Matrix>) -> Vec<Poly<Self::Key, Matrix>>;
    fn apply(&self, op: Operator, x: &Poly<Self::Key, Matrix>) -> Poly<Self::Key, Matrix>;
    /// `[curvature, x]`.
    fn curvature_bracket(&self, x: &Poly<Self::Key, Matrix>) -> Poly<Self::Key, Matrix>;
    fn mul(&self, a: &Poly<Self::Key, Matrix>, b: &Poly<Self::Key, Matrix>) -> Poly<Self::Key, Matrix>;
    /// The horizontal generator monomials of degree `k`, identity matrix part.
    fn hor_monomials(&self, degree: usize) -> Vec<Poly<Self::Key, Matrix>> {
        self.hor_keys(degree)
            .into_iter()
            .map(|k| Poly::term(k, Matrix::identity(self.dim_v())))
            .collect()
    }
    fn wrap(&self, x: Poly<Self::Key, Matrix>) -> FlatElement;
}

pub(crate) struct ClassicalOps(pub Arc<ClassicalWeil>);
pub(crate) struct QuantumOps(pub Arc<QuantumWeil>);

impl WeilOps for ClassicalOps {
    type Key = ClassicalKey;

    fn dim(&self) -> usize {
        self.0.dim()
    }

    fn dim_v(&self) -> usize {
        self.0.dim_v()
    }

    fn hor_keys(&self, degree: usize) -> Vec<ClassicalKey> {
        SymMonomial::all_of_degree(self.dim(), degree as u32)
            .into_iter()
            .map(|s| ClassicalKey::new(s, ExtMonomial::one()))
            .collect()
    }

    fn full_keys(&self, degree: usize) -> Vec<ClassicalKey> {
        let ext = ExtMonomial::all(self.dim());
        SymMonomial::all_of_degree(self.dim(), degree as u32)
            .into_iter()
            .flat_map(|s| ext.iter().map(move |e| ClassicalKey::new(s.clone(), e.clone())))
            .collect()
    }

    fn odd_multiples(&self, x: &ClassicalTerms) -> Vec<ClassicalTerms> {
        ExtMonomial::all(self.dim())
            .into_iter()
            .map(|e| {
                let k = ClassicalKey::new(SymMonomial::one(self.dim()), e);
                self.0.mul_terms(&Poly::term(k, Matrix::identity(self.dim_v())), x)
            })
            .collect()
    }

    fn apply(&self, op: Operator, x: &ClassicalTerms) -> ClassicalTerms {
        self.0.apply(op, x)
    }

    fn curvature_bracket(&self, x: &ClassicalTerms) -> ClassicalTerms {
        let c = ClassicalElement::curvature(&self.0);
        let x = ClassicalElement::from_terms(&self.0, x.clone());
        c.supercommutator(&x).expect("same algebra").terms().clone()
    }

    fn mul(&self, a: &ClassicalTerms, b: &ClassicalTerms) -> ClassicalTerms {
        self.0.mul_terms(a, b)
    }

    fn wrap(&self, x: ClassicalTerms) -> FlatElement {
        FlatElement::Classical(ClassicalElement::from_terms(&self.0, x))
    }
}

impl WeilOps for QuantumOps {
    type Key = QuantumKey;

    fn dim(&self) -> usize {
        self.0.dim()
    }

    fn dim_v(&self) -> usize {
        self.0.dim_v()
    }

    fn hor_keys(&self, degree: usize) -> Vec<QuantumKey> {
        PbwMonomial::all_of_degree(self.dim(), degree as u32)
            .into_iter()
            .map(|p| QuantumKey::new(p, CliffMonomial::one()))
            .collect()
    }

    fn full_keys(&self, degree: usize) -> Vec<QuantumKey> {
        let cl = CliffMonomial::all(self.dim());
        PbwMonomial::all_of_degree(self.dim(), degree as u32)
            .into_iter()
            .flat_map(|p| cl.iter().map(move |c| QuantumKey::new(p.clone(), c.clone())))
            .collect()
    }

    fn odd_multiples(&self, x: &QuantumTerms) -> Vec<QuantumTerms> {
        CliffMonomial::all(self.dim())
            .into_iter()
            .map(|c| {
                let k = QuantumKey::new(PbwMonomial::one(self.dim()), c);
                self.0.mul_terms(&Poly::term(k, Matrix::identity(self.dim_v())), x)
            })
            .collect()
    }

    fn apply(&self, op: Operator, x: &QuantumTerms) -> QuantumTerms {
        self.0.apply(op, x)
    }

    fn curvature_bracket(&self, x: &QuantumTerms) -> QuantumTerms {
        self.0.supercommutator_terms(self.0.curvature_terms(), x)
    }

    fn mul(&self, a: &QuantumTerms, b: &QuantumTerms) -> QuantumTerms {
        self.0.mul_terms(a, b)
    }

    fn wrap(&self, x: QuantumTerms) -> FlatElement {
        FlatElement::Quantum(QuantumElement::from_terms(&self.0, x))
    }
}

/// Coordinates over `(key, i, j)` for a fixed list of keys.
pub(crate) struct Space<K> {
    coords: Vec<(K, usize, usize)>,
    index: HashMap<(K, usize, usize), usize>,
    dim_v: usize,
}

impl<K: Ord + Clone + Hash> Space<K> {
    /// Keys are laid out in the order given, then matrix units row-major.
    pub fn new(keys: Vec<K>, dim_v: usize) -> Self {
        let mut coords = Vec::with_capacity(keys.len() * dim_v * dim_v);
        for k in keys {
            for i in 0..dim_v {
                for j in 0..dim_v {
                    coords.push((k.clone(), i, j));
                }
            }
        }
        let index = coords.iter().cloned().enumerate().map(|(n, c)| (c, n)).collect();
        Space { coords, index, dim_v }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn basis_element(&self, n: usize) -> Poly<K, Matrix> {
        let (k, i, j) = &self.coords[n];
        Poly::term(k.clone(), Matrix::unit(self.dim_v, *i, *j))
    }

    pub fn element(&self, v: &[Scalar]) -> Poly<K, Matrix> {
        let mut grouped: BTreeMap<&K, Matrix> = BTreeMap::new();
        for (c, (k, i, j)) in v.iter().zip(&self.coords) {
            if c.is_zero() {
                continue;
            }
            grouped
                .entry(k)
                .or_insert_with(|| Matrix::zeros(self.dim_v, self.dim_v))
                .set(*i, *j, c.clone());
        }
        grouped.into_iter().map(|(k, m)| (k.clone(), m)).collect()
    }

    /// Coordinates of `x`, or `None` if it leaves the space.
    pub fn coords_of(&self, x: &Poly<K, Matrix>) -> Option<Vec<Scalar>> {
        let mut v = vec![Scalar::zero(); self.len()];
        for (k, m) in x.iter() {
            for i in 0..self.dim_v {
                for j in 0..self.dim_v {
                    let e = m.get(i, j);
                    if e.is_zero() {
                        continue;
                    }
                    let n = *self.index.get(&(k.clone(), i, j))?;
                    v[n] = e.clone();
                }
            }
        }
        Some(v)
    }
}

/// Kernel of the stacked linear maps `maps[r]` on `space`; the codomain is
/// unrestricted, so there is no truncation in the image.
pub(crate) fn kernel<K, F>(space: &Space<K>, maps: &[F]) -> Vec<Vec<Scalar>>
where
    K: Ord + Clone + Hash,
    F: Fn(&Poly<K, Matrix>) -> Poly<K, Matrix>,
{
    let dim_v = space.dim_v;
    // row key: (map, monomial, i, j)
    type Rows<K> = BTreeMap<(usize, K, usize, usize), Vec<(usize, Scalar)>>;
    let mut rows: Rows<K> = BTreeMap::new();
    for col in 0..space.len() {
        let b = space.basis_element(col);
        for (r, f) in maps.iter().enumerate() {
            for (k, m) in f(&b).iter() {
                for i in 0..dim_v {
                    for j in 0..dim_v {
                        let e = m.get(i, j);
                        if !e.is_zero() {
                            rows.entry((r, k.clone(), i, j)).or_default().push((col, e.clone()));
                        }
                    }
                }
            }
        }
    }
    let mut sys = SparseRows::new(space.len());
    for (_, row) in rows {
        sys.push_row(row);
    }
    sys.kernel()
}
