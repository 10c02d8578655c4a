//! The textual description language, its printer, and the commands behind
//! the command line tool.
//!
//! ```text
//! field Q
//!
//! algebra L lie basis e, f, h {
//!   e*f = h;
//!   f*e = -h;
//! }
//!
//! algebra M = Mat(2);
//! action assoc ad = self(M);
//! xmod assoc X = identity(M);
//! braiding B = commutator(M);
//! ```

pub mod ast;
pub mod build;
pub mod commands;
pub mod emit;
pub mod lexer;
pub mod parser;
pub mod printer;

use thiserror::Error;

use crate::error::Error;

pub use ast::Document;
pub use build::{build, Binding, Env, Object};
pub use commands::{ConstructKind, Format, Outcome};
pub use emit::emit_object;
pub use parser::parse;

/// A source position. Positions never take part in AST equality, so a
/// document and its reprint compare equal.
#[derive(Clone, Copy, Debug, Default, Eq)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

impl PartialEq for Pos {
    fn eq(&self, _: &Pos) -> bool {
        true
    }
}

#[derive(Debug, Error)]
pub enum FrontendError {
    #[error("SyntaxError at {line}:{column}: expected {}; found {found}", .expected.join(" or "))]
    Syntax { line: usize, column: usize, expected: Vec<String>, found: String },
    #[error("UnknownReference at {line}:{column}: `{name}` is not declared")]
    UnknownReference { line: usize, column: usize, name: String },
    #[error("FieldMismatch at {line}:{column}: {message}")]
    FieldMismatch { line: usize, column: usize, message: String },
    #[error("DimensionMismatch at {line}:{column}: {message}")]
    DimensionMismatch { line: usize, column: usize, message: String },
    #[error("InvalidDeclaration at {line}:{column}: {message}")]
    Invalid { line: usize, column: usize, message: String },
    #[error("{source}{at}")]
    Core { at: String, source: Error },
}

impl FrontendError {
    pub(crate) fn invalid(pos: Pos, message: impl Into<String>) -> Self {
        FrontendError::Invalid { line: pos.line, column: pos.column, message: message.into() }
    }

    pub(crate) fn unknown(pos: Pos, name: &str) -> Self {
        FrontendError::UnknownReference { line: pos.line, column: pos.column, name: name.to_string() }
    }

    /// Attach a position to a core error, keeping the shape errors in the
    /// frontend's own vocabulary.
    pub(crate) fn core(pos: Option<Pos>, subject: &str, e: Error) -> Self {
        match (pos, e) {
            (Some(p), Error::DimensionMismatch(message)) => FrontendError::DimensionMismatch {
                line: p.line,
                column: p.column,
                message: format!("in `{subject}`: {message}"),
            },
            (Some(p), Error::FieldMismatch { expected, found }) => FrontendError::FieldMismatch {
                line: p.line,
                column: p.column,
                message: format!("in `{subject}`: expected {expected}, found {found}"),
            },
            (Some(p), source) => {
                FrontendError::Core { at: format!(" (in `{subject}` at {}:{})", p.line, p.column), source }
            }
            (None, source) => FrontendError::Core { at: format!(" (in `{subject}`)"), source },
        }
    }

    /// The failing report behind this error, if any.
    pub fn report(&self) -> Option<&crate::report::ValidationReport> {
        match self {
            FrontendError::Core { source, .. } => source.report(),
            _ => None,
        }
    }

    /// 1 when the error carries a failing report, 2 for every structural error.
    pub fn exit_code(&self) -> i32 {
        if self.report().is_some() {
            1
        } else {
            2
        }
    }
}
