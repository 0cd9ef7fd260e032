use thiserror::Error;

#[derive(Debug, Error)]
pub enum WeilError {
    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot parse {0:?} as a rational number")]
    ParseScalar(String),

    #[error("shape mismatch in {op}: {left:?} vs {right:?}")]
    ShapeMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("basis index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("elements belong to different algebras")]
    AlgebraMismatch,

    #[error("unknown builtin Lie algebra {0:?}")]
    UnknownBuiltin(String),

    #[error("unknown representation {0:?}")]
    UnknownRep(String),

    #[error("quantum construction needs the orthonormal form B = identity: {0}")]
    NonOrthonormalForm(String),

    #[error("invalid definition: {0}")]
    Definition(String),

    #[error("validation failed:\n{0}")]
    Validation(String),

    #[error("internal consistency check failed: {0}")]
    InternalConsistency(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = WeilError> = std::result::Result<T, E>;
