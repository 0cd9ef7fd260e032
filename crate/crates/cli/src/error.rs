use thiserror::Error;
use weil_core::WeilError;

use crate::lexer::Pos;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("{pos}: unexpected character {ch:?}")]
    UnexpectedChar { ch: char, pos: Pos },

    #[error("{pos}: expected {}, found {found}", expected.join(" or "))]
    Unexpected {
        pos: Pos,
        expected: Vec<String>,
        found: String,
    },

    #[error("{pos}: unknown identifier {name:?}")]
    UnknownIdent { name: String, pos: Pos },

    #[error("{pos}: bad number {text:?}: {reason}")]
    BadNumber { text: String, reason: String, pos: Pos },
}

impl ParseError {
    pub fn pos(&self) -> Pos {
        match self {
            ParseError::UnexpectedChar { pos, .. }
            | ParseError::Unexpected { pos, .. }
            | ParseError::UnknownIdent { pos, .. }
            | ParseError::BadNumber { pos, .. } => *pos,
        }
    }
}

#[derive(Debug, Error)]
pub enum EvalError {
    #[error("{pos}: {what} is not available in the {context} context")]
    ContextMismatch {
        what: String,
        context: &'static str,
        pos: Pos,
    },

    #[error("{pos}: index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize, pos: Pos },

    #[error("{pos}: {source}")]
    Core {
        #[source]
        source: WeilError,
        pos: Pos,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),

    #[error("evaluation error at {0}")]
    Eval(#[from] EvalError),

    #[error(transparent)]
    Core(#[from] WeilError),

    #[error("{0}")]
    Usage(String),
}
