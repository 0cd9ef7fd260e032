//! Expression language and commands for the `weil` binary.

pub mod commands;
pub mod error;
pub mod eval;
pub mod lexer;
pub mod parser;

pub use error::{CliError, EvalError, ParseError};
pub use eval::{Session, Value};
pub use parser::{parse, Expr};
