use thiserror::Error;

use crate::exact_fields::Field;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus not prime: {0}")]
    NotPrime(u64),

    #[error("division by zero")]
    DivisionByZero,

    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: Field, right: Field },

    #[error("matrix is not invertible")]
    NotInvertible,

    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("unsupported field {field} for {operation}")]
    UnsupportedField {
        field: Field,
        operation: &'static str,
    },

    #[error("wrong number of parameters for {family}: expected {expected}, got {got}")]
    Arity {
        family: String,
        expected: usize,
        got: usize,
    },

    #[error("characteristic mismatch: {0}")]
    Characteristic(String),

    #[error("inadmissible parameters for {family}: requires {constraint}")]
    Inadmissible { family: String, constraint: String },

    #[error("unknown family {0}")]
    UnknownFamily(String),

    #[error("no tabulated {side} unit for {family}")]
    NoFormula { family: String, side: &'static str },

    #[error("witness search exhausted: {0}")]
    SearchExhausted(String),

    #[error("solution set is not a point or a line: {0}")]
    InvalidSolutionSet(String),

    #[error("census inconsistency: {0}")]
    Census(String),
}
