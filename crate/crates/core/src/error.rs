use thiserror::Error;

use crate::presentation::Word;

/// Errors raised anywhere in the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("undeclared generator `{0}`")]
    UndeclaredGenerator(String),

    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),

    #[error("negative exponent at line {line}, column {column}")]
    NegativeExponent { line: usize, column: usize },

    #[error("word has {found} entries but the binoid has {expected} generators")]
    WordLength { expected: usize, found: usize },

    #[error("group order must be at least 2, got {0}")]
    GroupOrder(u64),

    #[error("invalid simplicial complex: {0}")]
    InvalidComplex(String),

    #[error("completion budget of {budget} critical pairs exhausted; unresolved pair ({left}, {right})")]
    CompletionBudget {
        budget: usize,
        left: String,
        right: String,
    },

    #[error("enumeration cap of {0} elements exceeded")]
    EnumerationCap(usize),

    #[error("{generators} generators exceed the subset enumeration cap of {cap}")]
    SubsetCap { generators: usize, cap: usize },

    #[error("ideal is not primary: {0}")]
    NotPrimary(String),

    #[error("unit group order could not be determined")]
    UnknownUnitGroup,

    #[error("hypothesis not met: {0}")]
    UnmetHypothesis(String),

    #[error("exact volume is limited to dimension {cap}, got {dimension}")]
    ExactDimension { dimension: usize, cap: usize },

    #[error("cone is not pointed")]
    NotPointed,

    #[error("cannot combine an exact value with an estimate")]
    ModeMismatch,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn word_mismatch(expected: usize, w: &Word) -> Error {
    Error::WordLength {
        expected,
        found: w.len(),
    }
}
