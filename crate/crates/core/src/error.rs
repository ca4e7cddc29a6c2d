use thiserror::Error;

use crate::exact::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot parse {0:?} as a rational (expected \"p\" or \"p/q\")")]
    ParseRational(String),

    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix shape {rows}x{cols} does not match {len} entries")]
    Shape {
        rows: usize,
        cols: usize,
        len: usize,
    },

    #[error("degenerate triple: the target bundle has rank 0")]
    DegenerateTriple,

    #[error("invalid pair invariants: {0}")]
    InvalidPair(String),

    #[error("sigma = {sigma} lies outside [0, {d}]; there are no sigma-semistable pairs there")]
    SigmaOutOfRange { sigma: Rational, d: i64 },

    #[error("the pair is sigma-semistable, it has no Harder-Narasimhan destabilizer")]
    NotUnstable,

    #[error("sigma = {sigma} is a critical value (a wall), not inside a chamber")]
    OnWall { sigma: Rational },

    #[error("{c} is not a critical value for d = {d}")]
    NotCritical { c: i64, d: i64 },

    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },

    #[error("log canonical threshold undefined for d = {d}, k = {k}: {reason}")]
    ThresholdUndefined {
        d: i64,
        k: i64,
        reason: &'static str,
    },

    #[error("secant witness repeats the curve parameter {0}")]
    DuplicateParameter(Rational),

    #[error("invalid secant witness: {0}")]
    InvalidWitness(String),

    #[error("the zero vector is not a projective point")]
    ZeroPoint,

    #[error("invalid column multi-index: {0}")]
    InvalidMultiIndex(String),
}

impl Error {
    pub(crate) fn out_of_range(what: &'static str, detail: impl Into<String>) -> Self {
        Error::OutOfRange {
            what,
            detail: detail.into(),
        }
    }
}
