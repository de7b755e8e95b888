//! Crate-wide error type.

use thiserror::Error;

/// Everything that can go wrong while parsing inputs or evaluating a model.
#[derive(Debug, Error)]
pub enum Error {
    /// A spec document failed to parse.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A parsed value violates a type invariant. Names the offending field.
    #[error("invariant violation on `{field}`: {msg}")]
    Invariant { field: String, msg: String },

    /// A CSV dataset does not match the expected header.
    #[error("dataset schema mismatch: {msg}")]
    Schema { msg: String },

    /// A CSV cell failed to parse. Names the row and column.
    #[error("dataset row {row}, column `{column}`: {msg}")]
    Cell {
        row: usize,
        column: String,
        msg: String,
    },

    /// A name did not resolve to a bundled asset or readable file.
    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },

    /// Rank count is not a multiple of the first communicator extent.
    #[error("total ranks {total_ranks} is not a multiple of n_toroidal {n_toroidal}")]
    Divisibility { total_ranks: u64, n_toroidal: u32 },

    /// Placement slots and rank count disagree, or the machine is too small.
    #[error("{0}")]
    Capacity(String),

    /// A scenario does not fit in the machine's memory.
    #[error("infeasible: {0}")]
    Infeasible(String),

    /// A fit was asked for with insufficient or degenerate data.
    #[error("fit error: {0}")]
    Fit(String),

    /// Domain violation in a pure computation (e.g. fraction of a zero step).
    #[error("domain error: {0}")]
    Domain(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    pub fn invariant(field: impl Into<String>, msg: impl Into<String>) -> Self {
        Error::Invariant {
            field: field.into(),
            msg: msg.into(),
        }
    }
}
