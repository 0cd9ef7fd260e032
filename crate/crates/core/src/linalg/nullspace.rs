//! Exact kernels and ranks by fraction-free Gauss-Jordan elimination.
//!
//! Rows are cleared of denominators and reduced over the integers; after each
//! combination a row is divided by the gcd of its entries so coefficients
//! stay small. Pivots are chosen in the leftmost column that still has a
//! nonzero entry, taking the lowest-indexed remaining row. The returned
//! kernel basis is the one read off the reduced echelon form (each free
//! column gets a vector with a 1 in that position), so it does not depend on
//! elimination order.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::linalg::{Matrix, Scalar};

/// A sparse row-oriented linear system: `rows[i]` lists `(column, value)`.
#[derive(Clone, Debug, Default)]
pub struct SparseRows {
    pub cols: usize,
    pub rows: Vec<Vec<(usize, Scalar)>>,
}

impl SparseRows {
    pub fn new(cols: usize) -> Self {
        SparseRows {
            cols,
            rows: Vec::new(),
        }
    }

    pub fn push_row(&mut self, row: Vec<(usize, Scalar)>) {
        let row: Vec<_> = row.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        if !row.is_empty() {
            self.rows.push(row);
        }
    }

    pub fn push_dense(&mut self, row: &[Scalar]) {
        self.push_row(
            row.iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(j, v)| (j, v.clone()))
                .collect(),
        );
    }

    /// Right kernel as dense vectors of length `cols`, ordered by free column.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let mut out: Vec<(usize, Vec<Scalar>)> = Vec::new();
        for block in self.blocks() {
            let local = dense_integer_rows(&block.rows, block.cols.len());
            let reduced = Echelon::reduce(local, block.cols.len());
            for (free, v) in reduced.kernel() {
                let mut full = vec![Scalar::zero(); self.cols];
                for (k, x) in v.into_iter().enumerate() {
                    full[block.cols[k]] = x;
                }
                out.push((block.cols[free], full));
            }
        }
        for c in self.untouched_columns() {
            let mut full = vec![Scalar::zero(); self.cols];
            full[c] = Scalar::one();
            out.push((c, full));
        }
        out.sort_by_key(|(c, _)| *c);
        out.into_iter().map(|(_, v)| v).collect()
    }

    pub fn rank(&self) -> usize {
        self.blocks()
            .into_iter()
            .map(|b| Echelon::reduce(dense_integer_rows(&b.rows, b.cols.len()), b.cols.len()).pivots.len())
            .sum()
    }

    fn untouched_columns(&self) -> Vec<usize> {
        let mut seen = vec![false; self.cols];
        for row in &self.rows {
            for (c, _) in row {
                seen[*c] = true;
            }
        }
        (0..self.cols).filter(|&c| !seen[c]).collect()
    }

    /// Splits the system into independent diagonal blocks: connected
    /// components of the column graph where two columns are linked when they
    /// share a row.
    fn blocks(&self) -> Vec<Block> {
        let mut parent: Vec<usize> = (0..self.cols).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for row in &self.rows {
            let first = row[0].0;
            for (c, _) in &row[1..] {
                let (ra, rb) = (find(&mut parent, first), find(&mut parent, *c));
                if ra != rb {
                    parent[ra.max(rb)] = ra.min(rb);
                }
            }
        }
        let mut root_block = vec![usize::MAX; self.cols];
        let mut blocks: Vec<Block> = Vec::new();
        let mut col_local = vec![0usize; self.cols];
        let mut used = vec![false; self.cols];
        for row in &self.rows {
            for (c, _) in row {
                used[*c] = true;
            }
        }
        for c in 0..self.cols {
            if !used[c] {
                continue;
            }
            let r = find(&mut parent, c);
            if root_block[r] == usize::MAX {
                root_block[r] = blocks.len();
                blocks.push(Block::default());
            }
            let b = &mut blocks[root_block[r]];
            col_local[c] = b.cols.len();
            b.cols.push(c);
        }
        for row in &self.rows {
            let r = find(&mut parent, row[0].0);
            let b = &mut blocks[root_block[r]];
            b.rows
                .push(row.iter().map(|(c, v)| (col_local[*c], v.clone())).collect());
        }
        blocks
    }
}

#[derive(Default)]
struct Block {
    cols: Vec<usize>,
    rows: Vec<Vec<(usize, Scalar)>>,
}

/// Clears denominators row by row.
fn dense_integer_rows(rows: &[Vec<(usize, Scalar)>], cols: usize) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|row| {
            let lcm = row
                .iter()
                .fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
            let mut dense = vec![BigInt::zero(); cols];
            for (c, v) in row {
                dense[*c] = v.numer() * (&lcm / v.denom());
            }
            dense
        })
        .collect()
}

struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    cols: usize,
}

impl Echelon {
    fn reduce(mut rows: Vec<Vec<BigInt>>, cols: usize) -> Echelon {
        rows.retain(|r| r.iter().any(|x| !x.is_zero()));
        let mut pivots = Vec::new();
        let mut top = 0;
        for c in 0..cols {
            if top == rows.len() {
                break;
            }
            let Some(found) = (top..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(top, found);
            normalize(&mut rows[top], c);
            let pivot_row = rows[top].clone();
            let a = &pivot_row[c];
            for (k, row) in rows.iter_mut().enumerate() {
                if k == top || row[c].is_zero() {
                    continue;
                }
                let g = a.gcd(&row[c]);
                let ka = a / &g;
                let kb = &row[c] / &g;
                for j in 0..cols {
                    if pivot_row[j].is_zero() {
                        if !row[j].is_zero() {
                            row[j] = &row[j] * &ka;
                        }
                    } else {
                        row[j] = &row[j] * &ka - &kb * &pivot_row[j];
                    }
                }
                normalize(row, usize::MAX);
            }
            pivots.push(c);
            top += 1;
        }
        rows.truncate(top);
        Echelon { rows, pivots, cols }
    }

    fn kernel(&self) -> Vec<(usize, Vec<Scalar>)> {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[f] = Scalar::one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    if !row[f].is_zero() {
                        v[p] = -Scalar::from_bigints(row[f].clone(), row[p].clone())
                            .expect("pivot is nonzero");
                    }
                }
                (f, v)
            })
            .collect()
    }
}

/// Divides a row by the gcd of its entries; makes the entry at `sign_col`
/// positive when that index is in range.
fn normalize(row: &mut [BigInt], sign_col: usize) {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return;
    }
    let flip = sign_col < row.len() && row[sign_col].is_negative();
    if g.is_one() && !flip {
        return;
    }
    let g = if flip { -g } else { g };
    for x in row.iter_mut() {
        if !x.is_zero() {
            *x = &*x / &g;
        }
    }
}

/// Basis of the right kernel of `m`, as column vectors.
pub fn nullspace(m: &Matrix) -> Vec<Matrix> {
    let mut sys = SparseRows::new(m.cols());
    for i in 0..m.rows() {
        sys.push_dense(m.row(i));
    }
    let rows: Vec<Vec<(usize, Scalar)>> = sys.rows;
    let reduced = Echelon::reduce(dense_integer_rows(&rows, m.cols()), m.cols());
    reduced
        .kernel()
        .into_iter()
        .map(|(_, v)| Matrix::column(v))
        .collect()
}

pub fn rank(m: &Matrix) -> usize {
    let mut sys = SparseRows::new(m.cols());
    for i in 0..m.rows() {
        sys.push_dense(m.row(i));
    }
    sys.rank()
}

/// Dimension of the span of a set of equal-length vectors.
pub fn span_rank(vectors: &[Vec<Scalar>]) -> usize {
    let cols = vectors.first().map_or(0, Vec::len);
    let mut sys = SparseRows::new(cols);
    for v in vectors {
        sys.push_dense(v);
    }
    sys.rank()
}

/// Whether `span(inner) ⊆ span(outer)`.
pub fn span_contains(outer: &[Vec<Scalar>], inner: &[Vec<Scalar>]) -> bool {
    if inner.is_empty() {
        return true;
    }
    let base = span_rank(outer);
    let mut all = outer.to_vec();
    all.extend_from_slice(inner);
    span_rank(&all) == base
}

#[cfg(test)]
mod tests {
    use super::*;

    fn apply(m: &Matrix, v: &Matrix) -> Matrix {
        m.mat_mul(v).unwrap()
    }

    #[test]
    fn identity_has_trivial_kernel() {
        assert!(nullspace(&Matrix::identity(4)).is_empty());
        assert_eq!(rank(&Matrix::identity(4)), 4);
    }

    #[test]
    fn zero_matrix_kernel_is_everything() {
        let k = nullspace(&Matrix::zeros(2, 2));
        assert_eq!(k.len(), 2);
        assert_eq!(k[0], Matrix::column(vec![Scalar::one(), Scalar::zero()]));
        assert_eq!(k[1], Matrix::column(vec![Scalar::zero(), Scalar::one()]));
    }

    #[test]
    fn rational_kernel_is_rref_normalised() {
        // x + 2y + 3z = 0, 2x + 4y + 7z = 0  =>  z = 0, x = -2y
        let m = Matrix::from_rows(vec![
            vec![Scalar::ratio(1, 2), Scalar::one(), Scalar::ratio(3, 2)],
            vec![2.into(), 4.into(), 7.into()],
        ])
        .unwrap();
        let k = nullspace(&m);
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], Matrix::column(vec![(-2).into(), 1.into(), 0.into()]));
        assert!(apply(&m, &k[0]).is_zero());
    }

    #[test]
    fn block_decomposition_matches_dense() {
        let m = Matrix::from_i64(&[
            &[1, 1, 0, 0, 0],
            &[0, 0, 2, -2, 0],
            &[3, 3, 0, 0, 0],
        ]);
        let mut sys = SparseRows::new(5);
        for i in 0..3 {
            sys.push_dense(m.row(i));
        }
        let sparse: Vec<Matrix> = sys.kernel().into_iter().map(Matrix::column).collect();
        assert_eq!(sparse, nullspace(&m));
        assert_eq!(sparse.len(), 3);
        assert_eq!(sys.rank(), 2);
    }

    #[test]
    fn span_containment() {
        let a = vec![vec![1.into(), 0.into(), 1.into()], vec![0.into(), 1.into(), 1.into()]];
        let inside = vec![vec![Scalar::from_int(2), Scalar::from_int(-1), Scalar::one()]];
        let outside = vec![vec![Scalar::one(), Scalar::zero(), Scalar::zero()]];
        assert!(span_contains(&a, &inside));
        assert!(!span_contains(&a, &outside));
        assert_eq!(span_rank(&a), 2);
    }
}
