use std::fmt;

/// Errors surfaced by construction and solver entry points.
///
/// Internal invariant violations (composing maps with mismatched middle
/// object, indexing outside a matrix) panic instead; they indicate bugs,
/// not bad input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    DimensionMismatch(String),
    NotPrime(u64),
    NonAdmissibleRelation(String),
    DimensionOverflow { total: usize, cap: usize },
    UnknownVertex(String),
    UnknownArrow(String),
    AlgebraMismatch(String),
    NotProjective(String),
    UnsupportedDecomposition(String),
    DecompositionFailed(String),
    EnumerationScope(String),
    InconsistentActions(String),
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch(m) => write!(f, "dimension mismatch: {m}"),
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::NonAdmissibleRelation(m) => write!(f, "non-admissible relation: {m}"),
            Error::DimensionOverflow { total, cap } => {
                write!(f, "total dimension {total} exceeds cap {cap}")
            }
            Error::UnknownVertex(v) => write!(f, "unknown vertex: {v}"),
            Error::UnknownArrow(a) => write!(f, "unknown arrow: {a}"),
            Error::AlgebraMismatch(m) => write!(f, "algebra mismatch: {m}"),
            Error::NotProjective(m) => write!(f, "not projective: {m}"),
            Error::UnsupportedDecomposition(m) => write!(f, "unsupported decomposition: {m}"),
            Error::DecompositionFailed(m) => write!(f, "decomposition failed: {m}"),
            Error::EnumerationScope(m) => write!(f, "enumeration scope: {m}"),
            Error::InconsistentActions(m) => write!(f, "inconsistent actions: {m}"),
            Error::Parse(m) => write!(f, "parse error: {m}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
