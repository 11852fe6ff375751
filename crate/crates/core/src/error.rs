//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Two objects that must share a length or degree do not.
    #[error("dimension mismatch: {context} (expected {expected}, got {got})")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        got: usize,
    },

    /// A hard enumeration budget would be exceeded.
    #[error("enumeration budget exceeded: {what} requires 2^{needed} but the limit is 2^{limit}")]
    Budget {
        what: &'static str,
        needed: usize,
        limit: usize,
    },

    /// An index or argument is outside its valid range.
    #[error("out of range: {context} ({value} not in {allowed})")]
    Range {
        context: &'static str,
        value: usize,
        allowed: String,
    },

    /// The minimum distance of a one-word code is undefined.
    #[error("minimum distance undefined: code has a single codeword")]
    UndefinedDistance,

    /// A spin seed was the zero vector.
    #[error("degenerate seed: the zero vector spans no submodule")]
    DegenerateSeed,

    /// A construction was asked for parameters outside its supported set.
    #[error("unsupported parameters for {family}: {constraint}")]
    UnsupportedParameters { family: String, constraint: String },

    /// A required data file is not present.
    #[error("missing data file: {path} ({hint})")]
    MissingData { path: String, hint: String },

    /// A code, group, or report file failed to parse.
    #[error("parse error in {path} line {line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },

    /// A lemma-hypothesis precondition does not hold for the given input.
    #[error("hypothesis violation: {0}")]
    Hypothesis(String),

    /// A weight layer that was expected to be nonempty is empty.
    #[error("empty layer: no codewords of weight {weight}")]
    EmptyLayer { weight: usize },

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
