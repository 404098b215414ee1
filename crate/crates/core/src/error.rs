//! Error type shared by the whole crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot parse partition {0:?}: expected \"-\" or comma separated positive parts")]
    ParsePartition(String),

    #[error("partitions have different sizes: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("polynomials use different variables: {0} vs {1}")]
    VariableMismatch(&'static str, &'static str),

    #[error("division by zero")]
    DivisionByZero,

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("value is not a polynomial in b: nonzero remainder {witness} in {context}")]
    NonPolynomial { context: String, witness: String },

    #[error("polynomial in b has a non-integer coefficient {witness} in {context}")]
    NonIntegral { context: String, witness: String },

    #[error("resource guard: {what} needs {requested} but the limit is {limit}")]
    GuardExceeded {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("computed data contradicts a proved identity: {0}")]
    Inconsistent(String),

    #[error("integer overflow while serializing {0}")]
    Overflow(String),

    #[error("cache: {0}")]
    Cache(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
