//! Exact rational scalars, dense matrices and kernels.

mod matrix;
mod nullspace;
mod scalar;

pub use matrix::Matrix;
pub use nullspace::{nullspace, rank, span_contains, span_rank, SparseRows};
pub use scalar::Scalar;
