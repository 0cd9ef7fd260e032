//! Exact computer algebra for classical and quantum covariant Weil algebras.
//!
//! The classical algebra is `S g* ⊗ ∧ g* ⊗ End V`, the quantum one
//! `U(g) ⊗ Cl(g) ⊗ End V`, both built from a Lie algebra `g` given by
//! structure constants and a representation `V`. All arithmetic is over the
//! rationals and every identity is checked by exact equality.

pub mod classical;
pub mod error;
pub mod flat;
pub mod identities;
pub mod kernels;
pub mod lie;
pub mod linalg;
pub mod quantum;
pub mod random;
mod render;

pub use error::{Result, WeilError};
pub use linalg::{Matrix, Scalar};
