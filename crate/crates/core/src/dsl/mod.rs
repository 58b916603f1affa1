//! A small session language for rings, polynomials and ideals.

mod ast;
mod eval;
mod lexer;
mod parser;
#[cfg(test)]
mod tests;

use std::fmt;

use thiserror::Error;

use crate::coeff::CoeffError;
use crate::groebner::GroebnerError;
use crate::poly::PolyError;
use crate::rings::RingsError;

pub use ast::{BinOp, DeclType, Expr, ExprKind, Script, Stmt, StmtKind};
pub use eval::{
    hilbert_table, jacobian_ideal, monomial_word, render_value, Session, Value, SYZYGY_WARNING,
};
pub use lexer::{tokenize, Tok, Token};
pub use parser::parse;

/// A 1-based source position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.col)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("unknown identifier `{0}`")]
    UnknownIdentifier(String),
    #[error("unsupported builtin `{0}`")]
    UnsupportedBuiltin(String),
    #[error("`{name}` expects {expected} argument(s), got {found}")]
    Arity {
        name: String,
        expected: String,
        found: usize,
    },
    #[error("type error: {0}")]
    Type(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("no ring has been declared")]
    NoRing,
    #[error("a ring has already been declared")]
    RingRedefined,
    #[error("parameter `{0}` needs a minpoly before use")]
    MissingMinpoly(String),
    #[error("minpoly needs a fresh ring with a parameter")]
    MinpolyWithoutParameter,
    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: i64, len: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("division by a non-constant polynomial")]
    NonConstantDivisor,
    #[error("negative exponent")]
    NegativeExponent,
    #[error("integer overflow")]
    Overflow,
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Rings(#[from] RingsError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DslError {
    #[error("{pos}: lexical error: {msg}")]
    Lex { pos: Pos, msg: String },
    #[error("{pos}: syntax error: {msg}")]
    Syntax { pos: Pos, msg: String },
    #[error("{pos}: {kind}")]
    Eval { pos: Pos, kind: EvalError },
}

impl DslError {
    pub fn lex(pos: Pos, msg: String) -> Self {
        DslError::Lex { pos, msg }
    }

    pub fn syntax(pos: Pos, msg: String) -> Self {
        DslError::Syntax { pos, msg }
    }

    pub fn pos(&self) -> Pos {
        match self {
            DslError::Lex { pos, .. }
            | DslError::Syntax { pos, .. }
            | DslError::Eval { pos, .. } => *pos,
        }
    }

    /// Lexical and syntax errors, as opposed to evaluation errors.
    pub fn is_parse_error(&self) -> bool {
        !matches!(self, DslError::Eval { .. })
    }
}

/// Parses and runs a script, returning its transcript.
pub fn run(src: &str) -> Result<String, DslError> {
    let script = parse(src)?;
    let mut session = Session::new();
    session.run(&script)?;
    Ok(session.into_transcript())
}
