use thiserror::Error;

/// Errors produced anywhere in the resolution pipeline.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("context mismatch: expected {expected} variables, found {found}")]
    ContextMismatch { expected: usize, found: usize },

    #[error("invalid variable context: {0}")]
    InvalidContext(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("exponent overflow in variable {var}")]
    ExponentOverflow { var: usize },

    #[error("the zero ideal has no generators")]
    EmptyIdeal,

    #[error("S/M is zero for the unit ideal; it has no resolution to compute")]
    UnitIdeal,

    #[error(
        "{q} generators exceeds the cap of {cap} (2^{q} Taylor symbols); \
         raise the cap explicitly (--max-gens) to proceed"
    )]
    CapExceeded { q: usize, cap: usize },

    #[error("ideal is not its own twin: generator {generator} has exponent {exponent} in variable {var}, expected 0 or {alpha}")]
    NotTwin {
        generator: String,
        var: String,
        exponent: u32,
        alpha: u32,
    },

    #[error("infeasible parameters: {0}")]
    Infeasible(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("scalars from different fields: {0} and {1}")]
    FieldMismatch(String, String),

    #[error("complex is not minimal: invertible entry in f_{s}")]
    NotMinimal { s: usize },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
