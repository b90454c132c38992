use thiserror::Error;

/// Errors raised by grid, matrix, Hilbert-function and closure operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a grid needs at least one coordinate")]
    EmptyArities,

    #[error("arity {arity} at coordinate {coordinate} is smaller than two")]
    AritySmallerThanTwo { coordinate: usize, arity: usize },

    #[error("weight {weight} is outside [0, {max}]")]
    WeightOutOfRange { weight: usize, max: usize },

    #[error("degree {degree} is outside [0, {max}]")]
    DegreeOutOfRange { degree: usize, max: usize },

    #[error("point {point} does not lie in the grid")]
    PointNotInGrid { point: String },

    #[error("length mismatch: expected {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("column order is not a permutation of 0..{columns}")]
    BadPermutation { columns: usize },

    #[error("weight set has {size} members, at least {needed} required")]
    SetTooSmall { size: usize, needed: usize },

    #[error("assignment repeats the value {value}")]
    DuplicateEntries { value: usize },

    #[error("the empty multiset has no last coordinate")]
    EmptyMultiset,

    #[error("duplicate {axis} label {label}")]
    DuplicateLabel { axis: &'static str, label: String },

    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable variant name, used when errors are surfaced on the command line.
    pub fn name(&self) -> &'static str {
        match self {
            Error::EmptyArities => "EmptyArities",
            Error::AritySmallerThanTwo { .. } => "AritySmallerThanTwo",
            Error::WeightOutOfRange { .. } => "WeightOutOfRange",
            Error::DegreeOutOfRange { .. } => "DegreeOutOfRange",
            Error::PointNotInGrid { .. } => "PointNotInGrid",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::BadPermutation { .. } => "BadPermutation",
            Error::SetTooSmall { .. } => "SetTooSmall",
            Error::DuplicateEntries { .. } => "DuplicateEntries",
            Error::EmptyMultiset => "EmptyMultiset",
            Error::DuplicateLabel { .. } => "DuplicateLabel",
            Error::UnknownSuite(_) => "UnknownSuite",
            Error::Parse(_) => "ParseError",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
